#include "mmm/trajectory.hpp"

#include <algorithm>

#include "kernel.hpp"

namespace mmm {

namespace {

// Median of an already sorted range.
Rational sorted_median(const std::vector<Rational>& sorted) {
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return sorted[n / 2];
    return midpoint(sorted[n / 2 - 1], sorted[n / 2]);
}

void insert_sorted(std::vector<Rational>& sorted, const Rational& v) {
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), v), v);
}

}  // namespace

RunLimit::RunLimit(std::size_t threshold) : threshold_(threshold) {
    if (threshold < 4) throw std::invalid_argument("RunLimit: threshold must be at least 4");
}

NotTerminatedError::NotTerminatedError(Trajectory partial)
    : std::runtime_error("trajectory of " + partial.x.str() + " did not stabilize within " +
                         std::to_string(partial.points.size()) + " points"),
      partial_(std::move(partial)) {}

Rational median_of(std::span<const Rational> values) {
    if (values.empty()) throw std::invalid_argument("median_of: empty list");
    std::vector<Rational> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    return sorted_median(sorted);
}

Trajectory run_trajectory(const Rational& x, const RunLimit& limit) {
    if (!(Rational(0) < x && x < Rational(1)))
        throw std::invalid_argument("run_trajectory: x must lie in (0, 1), got " + x.str());

    detail::ScaledRun r = detail::scaled_trajectory(x, limit, true);
    Trajectory t;
    t.x = x;
    t.points.reserve(r.points.size());
    for (const auto& v : r.points) t.points.push_back(r.value(v));
    t.medians.reserve(r.medians.size());
    for (const auto& v : r.medians) t.medians.push_back(r.value(v));
    t.order = std::move(r.order);
    t.terminated = r.terminated;
    if (r.terminated) {
        t.length = r.length;
        t.limit = r.value(r.limit);
    }
    return t;
}

Trajectory run_terminating(const Rational& x, const RunLimit& limit) {
    Trajectory t = run_trajectory(x, limit);
    if (!t.terminated) throw NotTerminatedError(std::move(t));
    return t;
}

Rational normalize_triple(const Rational& a, const Rational& b, const Rational& c) {
    if (!(a < b && b < c)) throw std::invalid_argument("normalize_triple: need a < b < c");
    return (b - a) / (c - a);
}

bool verify_stability(const Trajectory& t, std::size_t extra_steps) {
    if (!t.terminated) throw std::invalid_argument("verify_stability: trajectory did not terminate");

    std::vector<Rational> sorted = t.points;
    std::sort(sorted.begin(), sorted.end());
    Rational sum;
    for (const auto& p : t.points) sum += p;

    for (std::size_t k = 1; k <= extra_steps; ++k) {
        const Rational median = sorted_median(sorted);
        if (median != t.limit) return false;
        const std::size_t n = t.length + k;
        Rational next = Rational(static_cast<long>(n)) * median - sum;
        if (next != t.limit) return false;
        sum += next;
        insert_sorted(sorted, next);
    }
    return sorted_median(sorted) == t.limit;
}

bool medians_monotone(std::span<const Rational> medians) {
    int direction = 0;
    for (std::size_t i = 1; i < medians.size(); ++i) {
        const auto c = medians[i] <=> medians[i - 1];
        const int step = c < 0 ? -1 : (c > 0 ? 1 : 0);
        if (step == 0) continue;
        if (direction == 0)
            direction = step;
        else if (step != direction)
            return false;
    }
    return true;
}

}  // namespace mmm
