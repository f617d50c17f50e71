#pragma once

#include <ostream>
#include <string>

#include "mmm/rational.hpp"

namespace mmm {

/// An interval of rationals with per-endpoint closure.
///
/// lo <= hi always holds; lo == hi is only valid as a closed singleton.
class RInterval {
  public:
    /// Throws std::invalid_argument for an empty or inverted interval.
    RInterval(Rational lo, Rational hi, bool lo_closed, bool hi_closed);

    static RInterval open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), false, false}; }
    static RInterval closed(Rational lo, Rational hi) { return {std::move(lo), std::move(hi), true, true}; }
    static RInterval point(const Rational& p) { return {p, p, true, true}; }

    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }
    bool is_point() const { return lo_ == hi_; }

    bool contains(const Rational& x) const;
    bool interior_contains(const Rational& x) const { return lo_ < x && x < hi_; }
    bool closure_contains(const Rational& x) const { return lo_ <= x && x <= hi_; }

    /// Midpoint and the two quartile points; all strictly interior for a
    /// non-degenerate interval.
    Rational at_fraction(long num, long den) const;

    RInterval with_lo_closed(bool c) const { return {lo_, hi_, c, hi_closed_}; }
    RInterval with_hi_closed(bool c) const { return {lo_, hi_, lo_closed_, c}; }

    friend bool operator==(const RInterval&, const RInterval&) = default;

  private:
    Rational lo_;
    Rational hi_;
    bool lo_closed_;
    bool hi_closed_;
};

std::ostream& operator<<(std::ostream& os, const RInterval& iv);
std::string to_string(const RInterval& iv);

}  // namespace mmm
