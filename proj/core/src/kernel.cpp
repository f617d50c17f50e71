#include "kernel.hpp"

#include <algorithm>
#include <stdexcept>

namespace mmm::detail {

namespace {

void double_all(std::vector<mpz_class>& values) {
    for (auto& v : values) mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), 1);
}

void double_form(ScaledForm& f) {
    mpz_mul_2exp(f.a.get_mpz_t(), f.a.get_mpz_t(), 1);
    mpz_mul_2exp(f.b.get_mpz_t(), f.b.get_mpz_t(), 1);
}

Rational over_power_of_two(const mpz_class& num, unsigned shift) {
    mpq_class q(num);
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), shift);  // keeps q canonical
    return Rational(std::move(q));
}

// A fraction n/d with d > 0, compared without reduction.
struct Bound {
    mpz_class num;
    mpz_class den;
};

bool less(const Bound& x, const Bound& y, mpz_class& t1, mpz_class& t2) {
    mpz_mul(t1.get_mpz_t(), x.num.get_mpz_t(), y.den.get_mpz_t());
    mpz_mul(t2.get_mpz_t(), y.num.get_mpz_t(), x.den.get_mpz_t());
    return mpz_cmp(t1.get_mpz_t(), t2.get_mpz_t()) < 0;
}

}  // namespace

Rational ScaledRun::value(const mpz_class& numerator) const {
    mpz_class den = q;
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), shift);
    return Rational(numerator, den);
}

ScaledRun scaled_trajectory(const Rational& x, const RunLimit& limit, bool keep_medians) {
    ScaledRun r;
    r.q = x.den();
    const std::size_t cap = std::min<std::size_t>(limit.threshold(), 4096);
    r.points.reserve(cap);
    r.order.reserve(cap);
    r.points = {mpz_class(0), x.num(), r.q};
    r.order = {1, 2, 3};

    mpz_class sum = r.points[1] + r.points[2];
    mpz_class median = r.points[1];
    if (keep_medians) r.medians.push_back(median);
    mpz_class pair;

    for (std::size_t n = 4; n <= limit.threshold(); ++n) {
        mpz_class next;
        mpz_mul_ui(next.get_mpz_t(), median.get_mpz_t(), n);
        mpz_sub(next.get_mpz_t(), next.get_mpz_t(), sum.get_mpz_t());
        mpz_add(sum.get_mpz_t(), sum.get_mpz_t(), next.get_mpz_t());
        r.points.push_back(std::move(next));

        // After every entry whose value is <= the new one.
        const mpz_class& v = r.points.back();
        auto pos = std::upper_bound(r.order.begin(), r.order.end(), v, [&](const mpz_class& value, std::uint32_t idx) {
            return mpz_cmp(value.get_mpz_t(), r.points[idx - 1].get_mpz_t()) < 0;
        });
        r.order.insert(pos, static_cast<std::uint32_t>(n));

        if (mpz_cmp(v.get_mpz_t(), median.get_mpz_t()) == 0) {
            r.terminated = true;
            r.length = n;
            r.limit = median;
            return r;
        }

        const std::size_t size = r.order.size();
        if (size % 2 == 1) {
            median = r.points[r.order[size / 2] - 1];
        } else {
            mpz_add(pair.get_mpz_t(), r.points[r.order[size / 2 - 1] - 1].get_mpz_t(),
                    r.points[r.order[size / 2] - 1].get_mpz_t());
            if (mpz_odd_p(pair.get_mpz_t())) {
                // Halving needs one more factor of two in the shared scale.
                double_all(r.points);
                double_all(r.medians);
                mpz_mul_2exp(sum.get_mpz_t(), sum.get_mpz_t(), 1);
                ++r.shift;
                median = pair;
            } else {
                mpz_fdiv_q_2exp(median.get_mpz_t(), pair.get_mpz_t(), 1);
            }
        }
        if (keep_medians) r.medians.push_back(median);
    }
    return r;
}

AffineForm ScaledReplay::form(const ScaledForm& f) const {
    return {over_power_of_two(f.a, shift), over_power_of_two(f.b, shift)};
}

ScaledReplay scaled_replay(const DrivingList& driving) {
    const std::size_t length = driving.size();
    if (length < 4) throw std::invalid_argument("replay_driving_list: driving list shorter than 4");
    const auto ranks = driving.ranks();

    ScaledReplay r;
    r.length = length;
    r.forms.reserve(length);
    r.medians.reserve(length - 3);
    r.forms = {{0, 0}, {1, 0}, {0, 1}};  // 0, x, 1
    r.order = {1, 2, 3};
    r.order.reserve(length);

    ScaledForm sum{1, 1};  // 0 + x + 1
    ScaledForm pair;
    for (std::size_t n = 4; n <= length; ++n) {
        const std::size_t size = r.order.size();
        ScaledForm median;
        if (size % 2 == 1) {
            median = r.forms[r.order[size / 2] - 1];
        } else {
            const ScaledForm& lo = r.forms[r.order[size / 2 - 1] - 1];
            const ScaledForm& hi = r.forms[r.order[size / 2] - 1];
            mpz_add(pair.a.get_mpz_t(), lo.a.get_mpz_t(), hi.a.get_mpz_t());
            mpz_add(pair.b.get_mpz_t(), lo.b.get_mpz_t(), hi.b.get_mpz_t());
            if (mpz_odd_p(pair.a.get_mpz_t()) || mpz_odd_p(pair.b.get_mpz_t())) {
                for (auto& f : r.forms) double_form(f);
                for (auto& f : r.medians) double_form(f);
                double_form(sum);
                ++r.shift;
                median = pair;
            } else {
                mpz_fdiv_q_2exp(median.a.get_mpz_t(), pair.a.get_mpz_t(), 1);
                mpz_fdiv_q_2exp(median.b.get_mpz_t(), pair.b.get_mpz_t(), 1);
            }
        }

        ScaledForm next;
        mpz_mul_ui(next.a.get_mpz_t(), median.a.get_mpz_t(), n);
        mpz_mul_ui(next.b.get_mpz_t(), median.b.get_mpz_t(), n);
        mpz_sub(next.a.get_mpz_t(), next.a.get_mpz_t(), sum.a.get_mpz_t());
        mpz_sub(next.b.get_mpz_t(), next.b.get_mpz_t(), sum.b.get_mpz_t());
        mpz_add(sum.a.get_mpz_t(), sum.a.get_mpz_t(), next.a.get_mpz_t());
        mpz_add(sum.b.get_mpz_t(), sum.b.get_mpz_t(), next.b.get_mpz_t());

        // Entries already placed that precede n in the driving list.
        std::size_t pos = 0;
        for (std::size_t k = 1; k < n; ++k)
            if (ranks[k - 1] < ranks[n - 1]) ++pos;

        r.forms.push_back(std::move(next));
        r.medians.push_back(std::move(median));
        r.order.insert(r.order.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<std::uint32_t>(n));
    }
    return r;
}

std::optional<RInterval> certified_interval(const ScaledReplay& r, const Rational& probe) {
    // The final point must coincide with the median as a form, not only at the probe.
    if (!(r.forms.back() == r.m_form())) return std::nullopt;

    std::optional<Bound> lower;
    std::optional<Bound> upper;
    Bound cand;
    mpz_class t1, t2;
    // Adds the constraint a x + b > 0; false when it can never hold.
    const auto add = [&](const mpz_class& a, const mpz_class& b) {
        const int s = sgn(a);
        if (s == 0) return sgn(b) > 0;
        if (s > 0) {
            mpz_neg(cand.num.get_mpz_t(), b.get_mpz_t());  // x > -b/a
            cand.den = a;
            if (!lower || less(*lower, cand, t1, t2)) lower = cand;
        } else {
            cand.num = b;  // x < b/(-a)
            mpz_neg(cand.den.get_mpz_t(), a.get_mpz_t());
            if (!upper || less(cand, *upper, t1, t2)) upper = cand;
        }
        return true;
    };

    // Adjacent chain entries with structural duplicates skipped.
    mpz_class da, db;
    const ScaledForm* prev = &r.forms[r.order.front() - 1];
    for (std::size_t i = 1; i < r.order.size(); ++i) {
        const ScaledForm& cur = r.forms[r.order[i] - 1];
        if (cur == *prev) continue;
        mpz_sub(da.get_mpz_t(), cur.a.get_mpz_t(), prev->a.get_mpz_t());
        mpz_sub(db.get_mpz_t(), cur.b.get_mpz_t(), prev->b.get_mpz_t());
        if (!add(da, db)) return std::nullopt;
        prev = &cur;
    }

    // x_n must stay off the running median for every n < L, otherwise the
    // run would stop early somewhere inside the chain's interval. The sign of
    // each gap is the one it has at the probe p/q: sign(a p + b q).
    const mpz_class p = probe.num();
    const mpz_class q = probe.den();
    mpz_class at;
    for (std::size_t n = 4; n < r.length; ++n) {
        const ScaledForm& x = r.forms[n - 1];
        const ScaledForm& m = r.medians[n - 4];
        mpz_sub(da.get_mpz_t(), x.a.get_mpz_t(), m.a.get_mpz_t());
        mpz_sub(db.get_mpz_t(), x.b.get_mpz_t(), m.b.get_mpz_t());
        mpz_mul(at.get_mpz_t(), da.get_mpz_t(), p.get_mpz_t());
        mpz_addmul(at.get_mpz_t(), db.get_mpz_t(), q.get_mpz_t());
        const int s = sgn(at);
        if (s == 0) return std::nullopt;
        if (s < 0) {
            mpz_neg(da.get_mpz_t(), da.get_mpz_t());
            mpz_neg(db.get_mpz_t(), db.get_mpz_t());
        }
        if (!add(da, db)) return std::nullopt;
    }

    if (!lower || !upper) throw UnboundedIntervalError("constraint set does not bound x");
    Rational lo(lower->num, lower->den);
    Rational hi(upper->num, upper->den);
    if (!(lo < hi)) return std::nullopt;
    RInterval iv = RInterval::open(std::move(lo), std::move(hi));
    if (!iv.interior_contains(probe)) return std::nullopt;
    return iv;
}

}  // namespace mmm::detail
