#pragma once

// Symbolic replay of the M&m iteration.
//
// Every trajectory entry is carried as an affine form in the unknown x, and
// the relative order of the entries is fixed by a driving list. The resulting
// chain of strict inequalities x_{d(1)} < x_{d(2)} < ... cuts out the open
// interval of starting points that share the driving list.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mmm/affine_form.hpp"
#include "mmm/interval.hpp"

namespace mmm {

/// Trajectory indices (1-based) listed in increasing order of value.
class DrivingList {
  public:
    DrivingList() = default;
    /// Throws std::invalid_argument unless `order` is a permutation of
    /// {1..n}, n >= 3, with 1 before 2 before 3.
    explicit DrivingList(std::vector<std::uint32_t> order);

    std::size_t size() const { return order_.size(); }
    const std::vector<std::uint32_t>& order() const { return order_; }
    std::uint32_t operator[](std::size_t pos) const { return order_[pos]; }

    /// 0-based rank of each index: rank()[i - 1] is the position of index i.
    std::vector<std::uint32_t> ranks() const;

    friend bool operator==(const DrivingList&, const DrivingList&) = default;

  private:
    std::vector<std::uint32_t> order_;
};

struct ChainEntry {
    AffineForm form;
    std::uint32_t source = 0;  // trajectory index, 1-based

    friend bool operator==(const ChainEntry&, const ChainEntry&) = default;
};

/// Entries in prescribed increasing order.
using Chain = std::vector<ChainEntry>;

struct SymbolicRun {
    Chain chain;
    /// x_4 .. x_L as forms in x.
    std::vector<AffineForm> step_forms;
    /// Median in force when x_n was produced, n = 4 .. L.
    std::vector<AffineForm> step_medians;
    AffineForm m_form;
    std::size_t length = 0;
};

class EmptyIntervalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class UnboundedIntervalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Seed chain 0 < x < 1 with sources 1, 2, 3.
Chain seed_chain();

AffineForm symbolic_median(const Chain& chain);

/// Replays the iteration symbolically, inserting x_n where `driving` puts it.
SymbolicRun replay_driving_list(const DrivingList& driving);

/// Drops entries structurally equal to their predecessor.
Chain dedupe_chain(Chain chain);

/// Open interval of x satisfying f(x) > 0 for every given form.
/// Throws EmptyIntervalError or UnboundedIntervalError.
RInterval reduce_constraints(std::span<const AffineForm> positive);

/// Open interval on which every adjacent pair of the chain is strictly
/// increasing. Expects a deduped chain.
RInterval reduce_chain(const Chain& chain);

}  // namespace mmm
