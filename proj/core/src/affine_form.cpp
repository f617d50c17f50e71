#include "mmm/affine_form.hpp"

#include <sstream>
#include <stdexcept>

#include "mmm/interval.hpp"

namespace mmm {

std::optional<Rational> affine_intersection(const AffineForm& f, const AffineForm& g) {
    if (f.slope == g.slope) return std::nullopt;
    return (g.intercept - f.intercept) / (f.slope - g.slope);
}

std::ostream& operator<<(std::ostream& os, const AffineForm& f) {
    return os << f.slope << "*x + " << f.intercept;
}

RInterval::RInterval(Rational lo, Rational hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (hi_ < lo_) throw std::invalid_argument("RInterval: lo > hi");
    if (lo_ == hi_ && !(lo_closed_ && hi_closed_))
        throw std::invalid_argument("RInterval: empty interval");
}

bool RInterval::contains(const Rational& x) const {
    const bool above = lo_closed_ ? lo_ <= x : lo_ < x;
    const bool below = hi_closed_ ? x <= hi_ : x < hi_;
    return above && below;
}

Rational RInterval::at_fraction(long num, long den) const {
    const Rational t(num, den);
    return lo_ + (hi_ - lo_) * t;
}

std::ostream& operator<<(std::ostream& os, const RInterval& iv) {
    if (iv.is_point()) return os << '{' << iv.lo() << '}';
    return os << (iv.lo_closed() ? '[' : '(') << iv.lo() << ", " << iv.hi()
              << (iv.hi_closed() ? ']' : ')');
}

std::string to_string(const RInterval& iv) {
    std::ostringstream os;
    os << iv;
    return os.str();
}

}  // namespace mmm
