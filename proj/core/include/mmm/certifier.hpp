#pragma once

// Interval certification for the mean-median map.
//
// An atom is a maximal interval of starting points that share one driving
// list. On an atom the sequence length L is constant and the limit m(x) is a
// single affine form, both certified by symbolic replay. A sweep produces
// adjacent atoms one after another, starting at a seed and moving left or
// right; aggregation then groups atoms into runs of constant L
// (subintervals) and runs of constant m-form (segments), whose boundaries are
// the corners of m.

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>
#include <vector>

#include "mmm/affine_form.hpp"
#include "mmm/interval.hpp"
#include "mmm/symbolic_chain.hpp"
#include "mmm/trajectory.hpp"

namespace mmm {

enum class Side { left, right };

const char* to_string(Side side);
Side side_from_string(std::string_view text);

struct Atom {
    RInterval interval;
    std::size_t length;
    AffineForm m_form;
    DrivingList driving;

    friend bool operator==(const Atom&, const Atom&) = default;
};

/// A point that belongs to neither neighbouring atom.
struct SingletonPiece {
    Rational point;
    std::size_t length;
    Rational m;

    friend bool operator==(const SingletonPiece&, const SingletonPiece&) = default;
};

using Piece = std::variant<Atom, SingletonPiece>;

/// Sorted values, ties broken by index; returns the 1-based indices.
DrivingList driving_list_of(const Trajectory& t);

/// The probe landed in an atom whose closure misses x0, or on a point where
/// the probe's own ordering has accidental ties.
struct EpsTooLarge {
    Rational probe;
    std::optional<RInterval> found;
};

using CertifyOutcome = std::variant<Atom, EpsTooLarge>;

/// Certifies the atom adjacent to x0 on `side`, probing at x0 +/- eps.
/// Finite endpoints are closed when the concrete run there has the atom's L
/// and m. Throws NotTerminatedError if the probe does not stabilize.
CertifyOutcome certify_atom(const Rational& x0, const Rational& eps, const RunLimit& limit, Side side);

class OracleMismatchError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Runs concrete trajectories at `samples` interior points (midpoint, then
/// quartiles, then further dyadic points) and throws OracleMismatchError
/// unless each has the atom's L, driving list and m.
void check_atom(const Atom& atom, std::size_t samples, const RunLimit& limit);

struct StopRule {
    std::optional<std::size_t> max_atoms;
    /// Stop once the frontier reaches or passes this point.
    std::optional<Rational> target;
    /// Stop as soon as this many distinct consecutive m-forms have been seen.
    std::optional<std::size_t> max_segments;

    bool any() const { return max_atoms || target || max_segments; }
};

/// Where eps starts for the next atom. `reset` starts every atom at eps0;
/// `carry` starts one shrink step above the eps that certified the previous
/// atom, capped at eps0. Both produce the same pieces.
enum class EpsRestart { reset, carry };

const char* to_string(EpsRestart r);
EpsRestart eps_restart_from_string(std::string_view text);

struct SweepConfig {
    Rational seed;
    Side direction = Side::right;
    Rational eps0{1, 100000};
    unsigned eps_shrink = 10;
    Rational eps_floor = pow10_inverse(60);
    EpsRestart eps_restart = EpsRestart::reset;
    RunLimit limit;
    StopRule stop;
    /// Interior oracle samples per atom; 0 disables.
    std::size_t oracle_samples = 3;

    /// Throws std::invalid_argument.
    void validate() const;
};

/// Everything needed to continue a sweep where it left off.
struct SweepState {
    Rational frontier;
    Rational eps;
    std::size_t atoms = 0;
    std::size_t pieces = 0;
    std::size_t segments = 0;
    /// The last emitted piece contains the frontier point.
    bool frontier_claimed = false;
    std::optional<AffineForm> last_form;
    bool finished = false;

    friend bool operator==(const SweepState&, const SweepState&) = default;
};

class EpsUnderflowError : public std::runtime_error {
  public:
    EpsUnderflowError(Rational frontier, Rational eps);
    const Rational& frontier() const { return frontier_; }
    const Rational& eps() const { return eps_; }

  private:
    Rational frontier_;
    Rational eps_;
};

/// Incremental sweep. Each call to step() certifies one more atom and returns
/// the pieces it emits (the atom, preceded by a singleton when the shared
/// endpoint belongs to neither side). A probe that overshoots, or whose run
/// does not stabilize, is retried closer to the frontier; below eps_floor the
/// last failure is thrown (EpsUnderflowError or NotTerminatedError).
class Sweeper {
  public:
    explicit Sweeper(SweepConfig cfg);
    Sweeper(SweepConfig cfg, SweepState resume_from);

    bool done() const { return state_.finished; }
    std::vector<Piece> step();

    const SweepState& state() const { return state_; }
    const SweepConfig& config() const { return cfg_; }

  private:
    bool stop_reached() const;

    SweepConfig cfg_;
    SweepState state_;
};

/// Runs a sweep to its stop condition.
std::vector<Piece> sweep(const SweepConfig& cfg);

/// Independent sweeps on worker threads; results in input order.
std::vector<std::vector<Piece>> sweep_concurrently(std::span<const SweepConfig> configs);

/// Sweep output reordered by increasing x.
std::vector<Piece> ascending(std::vector<Piece> pieces, Side direction);

struct Subinterval {
    RInterval interval;
    std::size_t length;
    std::vector<Atom> atoms;
    std::vector<SingletonPiece> singletons;
};

struct Segment {
    RInterval interval;
    AffineForm m_form;
    /// Indices into Aggregate::subintervals.
    std::vector<std::size_t> subintervals;
};

struct Aggregate {
    std::vector<Subinterval> subintervals;
    std::vector<Segment> segments;
    std::vector<Rational> corners;
};

class DiscontinuityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Groups contiguous pieces (ascending in x) into subintervals and segments,
/// validating every corner as the intersection of the adjacent m-forms.
/// Throws DiscontinuityError when adjacent forms do not meet at the boundary.
Aggregate aggregate(std::span<const Piece> pieces);

Rational piece_lo(const Piece& p);
Rational piece_hi(const Piece& p);
std::size_t piece_length(const Piece& p);

}  // namespace mmm
