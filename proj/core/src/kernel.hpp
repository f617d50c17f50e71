#pragma once

// Integer kernels behind run_trajectory and the certifier.
//
// Every value in a run from x = p/q has the form N / (q * 2^K), and every
// symbolic entry has the form (A x + B) / 2^K. Keeping one shared scale turns
// each step into a few mpz operations with no gcd work. The scale doubles
// (all stored numerators shift left) only when a median average is odd.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "mmm/affine_form.hpp"
#include "mmm/interval.hpp"
#include "mmm/symbolic_chain.hpp"
#include "mmm/trajectory.hpp"

namespace mmm::detail {

struct ScaledRun {
    mpz_class q;         // denominator of x
    unsigned shift = 0;  // K
    std::vector<mpz_class> points;
    std::vector<mpz_class> medians;  // kept only on request
    std::vector<std::uint32_t> order;
    bool terminated = false;
    std::size_t length = 0;
    mpz_class limit;  // numerator of m

    Rational value(const mpz_class& numerator) const;
};

ScaledRun scaled_trajectory(const Rational& x, const RunLimit& limit, bool keep_medians);

/// A symbolic form (A x + B) / 2^K with the scale held by the owner.
struct ScaledForm {
    mpz_class a;
    mpz_class b;
    friend bool operator==(const ScaledForm&, const ScaledForm&) = default;
};

struct ScaledReplay {
    unsigned shift = 0;
    std::vector<ScaledForm> forms;    // by source index - 1, seeds included
    std::vector<ScaledForm> medians;  // median in force before x_n, n = 4..L
    std::vector<std::uint32_t> order; // final chain as source indices
    std::size_t length = 0;

    AffineForm form(const ScaledForm& f) const;
    const ScaledForm& m_form() const { return medians.back(); }
};

ScaledReplay scaled_replay(const DrivingList& driving);

/// Open interval on which the replayed ordering and termination pattern hold,
/// given a probe inside it; nullopt when empty or when the probe is not an
/// interior point.
std::optional<RInterval> certified_interval(const ScaledReplay& r, const Rational& probe);

}  // namespace mmm::detail
