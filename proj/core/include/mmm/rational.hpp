#pragma once

// Exact rational numbers backed by GMP.
//
// Values are always canonical: the denominator is positive and coprime to the
// numerator, zero is 0/1. There is no conversion to floating point beyond the
// formatting-only `approx()` helper.

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace mmm {

class Rational {
  public:
    Rational() = default;
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(const mpz_class& value) : v_(value) {}
    Rational(const mpz_class& num, const mpz_class& den);
    explicit Rational(mpq_class value);

    /// Parses `-?[0-9]+(/[1-9][0-9]*)?`. Unreduced input is accepted and
    /// reduced. Throws std::invalid_argument on anything else.
    static Rational parse(std::string_view text);

    /// Canonical text: "p/q", or "p" when q == 1.
    std::string str() const;

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Display only.
    double approx() const { return v_.get_d(); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);
    /// In-place shortcuts for the hot loops: multiply by a machine integer,
    /// divide by two.
    Rational& mul_int(long k);
    Rational& halve() {
        mpq_div_2exp(v_.get_mpq_t(), v_.get_mpq_t(), 1);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

  private:
    mpq_class v_;
};

/// (a + b) / 2
Rational midpoint(const Rational& a, const Rational& b);

/// 10^-k
Rational pow10_inverse(unsigned k);

}  // namespace mmm

template <>
struct std::hash<mmm::Rational> {
    std::size_t operator()(const mmm::Rational& r) const noexcept;
};
