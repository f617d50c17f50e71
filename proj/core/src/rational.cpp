#include "mmm/rational.hpp"

#include <stdexcept>

namespace mmm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, 1);
    v_ /= den;
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class value) : v_(std::move(value)) { v_.canonicalize(); }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num_part = body.substr(0, slash);
    const std::string_view den_part =
        slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!all_digits(num_part) || (slash != std::string_view::npos &&
                                  (!all_digits(den_part) || den_part.front() == '0')))
        throw std::invalid_argument("not a rational: '" + std::string(text) + "'");

    mpz_class num(std::string(num_part), 10);
    mpz_class den = den_part.empty() ? mpz_class(1) : mpz_class(std::string(den_part), 10);
    if (negative) num = -num;
    return Rational(num, den);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::mul_int(long k) {
    if (k == 0) {
        v_ = 0;
        return *this;
    }
    mpz_ptr num = v_.get_num_mpz_t();
    mpz_ptr den = v_.get_den_mpz_t();
    const unsigned long mag = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
    // Cancel against the denominator first so the result stays canonical.
    const unsigned long g = mpz_gcd_ui(nullptr, den, mag);
    if (g > 1) mpz_divexact_ui(den, den, g);
    mpz_mul_ui(num, num, mag / g);
    if (k < 0) mpz_neg(num, num);
    return *this;
}

Rational midpoint(const Rational& a, const Rational& b) {
    Rational r = a + b;
    return r.halve();
}

Rational pow10_inverse(unsigned k) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, k);
    return Rational(mpz_class(1), den);
}

}  // namespace mmm

std::size_t std::hash<mmm::Rational>::operator()(const mmm::Rational& r) const noexcept {
    const std::size_t h1 = mpz_get_ui(r.value().get_num_mpz_t());
    const std::size_t h2 = mpz_get_ui(r.value().get_den_mpz_t());
    return h1 * 0x9e3779b97f4a7c15ULL ^ (h2 + static_cast<std::size_t>(mpz_sgn(r.value().get_num_mpz_t())));
}
