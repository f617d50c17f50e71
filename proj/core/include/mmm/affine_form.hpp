#pragma once

#include <optional>
#include <ostream>

#include "mmm/rational.hpp"

namespace mmm {

/// The function x -> slope * x + intercept.
struct AffineForm {
    Rational slope;
    Rational intercept;

    static AffineForm variable() { return {Rational(1), Rational(0)}; }
    static AffineForm constant(Rational c) { return {Rational(0), std::move(c)}; }

    Rational operator()(const Rational& x) const { return slope * x + intercept; }

    bool is_constant() const { return slope.is_zero(); }

    AffineForm& operator+=(const AffineForm& o) {
        slope += o.slope;
        intercept += o.intercept;
        return *this;
    }
    AffineForm& operator-=(const AffineForm& o) {
        slope -= o.slope;
        intercept -= o.intercept;
        return *this;
    }
    AffineForm& operator*=(const Rational& k) {
        slope *= k;
        intercept *= k;
        return *this;
    }

    AffineForm& mul_int(long k) {
        slope.mul_int(k);
        intercept.mul_int(k);
        return *this;
    }
    AffineForm& halve() {
        slope.halve();
        intercept.halve();
        return *this;
    }

    friend AffineForm operator+(AffineForm f, const AffineForm& g) { return f += g; }
    friend AffineForm operator-(AffineForm f, const AffineForm& g) { return f -= g; }
    friend AffineForm operator*(const Rational& k, AffineForm f) { return f *= k; }
    friend AffineForm operator-(const AffineForm& f) { return {-f.slope, -f.intercept}; }

    friend bool operator==(const AffineForm&, const AffineForm&) = default;
};

inline Rational affine_eval(const AffineForm& f, const Rational& x) { return f(x); }

/// The x where f(x) == g(x); nullopt when the slopes coincide.
std::optional<Rational> affine_intersection(const AffineForm& f, const AffineForm& g);

/// Human-readable "a*x + b".
std::ostream& operator<<(std::ostream& os, const AffineForm& f);

}  // namespace mmm
