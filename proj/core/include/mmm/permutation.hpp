#pragma once

// Permutations of {1..n} and the transitions between driving lists of
// adjacent atoms.
//
// Atom j is read as the permutation pi_j taking a position in increasing
// order (1-based) to the trajectory index found there, i.e. its driving list.
// The transition sigma_j satisfies pi_{j+1} = pi_j o sigma_j (the product
// sigma_j pi_j read left to right) and moves positions: a swap of the last
// two entries of the chain is the transposition (L-1, L), and the 3-cycle
// (k, k+1, k+2) sends the entry at position k to position k+2.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace mmm {

struct Atom;
class DrivingList;

class Permutation {
  public:
    /// image[i] is where i + 1 goes (1-based values). Throws
    /// std::invalid_argument unless it is a bijection on {1..n}.
    explicit Permutation(std::vector<std::uint32_t> image);

    static Permutation identity(std::size_t n);

    std::size_t size() const { return image_.size(); }
    /// 1-based application.
    std::uint32_t operator()(std::uint32_t i) const { return image_[i - 1]; }
    const std::vector<std::uint32_t>& image() const { return image_; }

    Permutation inverse() const;
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<std::uint32_t> image_;
};

/// (p o q)(i) = p(q(i)). Throws std::invalid_argument on size mismatch.
Permutation compose(const Permutation& p, const Permutation& q);

/// Canonical disjoint cycles: fixed points dropped, each cycle starts at its
/// smallest element, cycles sorted by that element.
struct CycleForm {
    std::vector<std::vector<std::uint32_t>> cycles;

    bool empty() const { return cycles.empty(); }
    friend bool operator==(const CycleForm&, const CycleForm&) = default;
};

CycleForm cycle_decomposition(const Permutation& p);

/// Rebuilds the permutation of {1..n} with the given cycles. Cycles are
/// normalized on the way, so any rotation/order is accepted.
Permutation from_cycles(const CycleForm& c, std::size_t n);

/// Rotates each cycle to its smallest element and sorts.
CycleForm normalized(CycleForm c);

/// The driving list read as position -> index.
Permutation driving_permutation(const DrivingList& d);

/// sigma with p1 o sigma = p2, i.e. p1^-1 o p2.
Permutation sigma_between(const Permutation& p1, const Permutation& p2);

/// Cycle forms of the transitions between consecutive atoms, which must all
/// share one length.
std::vector<CycleForm> sigma_sequence(std::span<const Atom> atoms);

}  // namespace mmm
