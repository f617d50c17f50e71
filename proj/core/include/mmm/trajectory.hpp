#pragma once

// Concrete M&m sequences.
//
// Starting from the multiset {0, x, 1}, each new point x_n is the unique value
// making the mean of x_1..x_n equal to the median of x_1..x_{n-1}:
//
//     x_n = n * med(x_1..x_{n-1}) - (x_1 + ... + x_{n-1}).
//
// The run stops at the first n where x_n equals that median. From then on the
// sequence is constant, so L = n and m = x_n.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "mmm/rational.hpp"

namespace mmm {

inline constexpr std::size_t kDefaultThreshold = 10000;

/// Largest index the iteration may reach.
class RunLimit {
  public:
    RunLimit() = default;
    explicit RunLimit(std::size_t threshold);
    std::size_t threshold() const { return threshold_; }

  private:
    std::size_t threshold_ = kDefaultThreshold;
};

struct Trajectory {
    Rational x;
    /// x_1 = 0, x_2 = x, x_3 = 1, x_4, ... (0-based storage).
    std::vector<Rational> points;
    /// m_3 = x, m_4, ...; medians[k] is the median of the first k + 3 points.
    std::vector<Rational> medians;
    /// 1-based indices of points in increasing order, ties by index.
    std::vector<std::uint32_t> order;
    bool terminated = false;
    /// Valid only when terminated.
    std::size_t length = 0;
    Rational limit;
};

class NotTerminatedError : public std::runtime_error {
  public:
    explicit NotTerminatedError(Trajectory partial);
    const Trajectory& partial() const { return partial_; }

  private:
    Trajectory partial_;
};

/// Median of an unordered list; throws std::invalid_argument when empty.
Rational median_of(std::span<const Rational> values);

/// Runs the iteration for 0 < x < 1. A run that reaches the threshold without
/// stabilizing comes back with terminated == false.
Trajectory run_trajectory(const Rational& x, const RunLimit& limit = RunLimit{});

/// As run_trajectory, but throws NotTerminatedError instead of returning a
/// partial trajectory.
Trajectory run_terminating(const Rational& x, const RunLimit& limit = RunLimit{});

/// Image of b under the increasing affine map sending a -> 0 and c -> 1.
Rational normalize_triple(const Rational& a, const Rational& b, const Rational& c);

/// Continues a terminated trajectory for `extra_steps` indices and checks
/// that every new point and every new median equals the limit.
bool verify_stability(const Trajectory& t, std::size_t extra_steps);

/// True if the medians never change direction.
bool medians_monotone(std::span<const Rational> medians);

}  // namespace mmm
