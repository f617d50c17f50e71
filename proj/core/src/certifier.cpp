#include "mmm/certifier.hpp"

#include "kernel.hpp"

#include <algorithm>
#include <future>
#include <numeric>
#include <string>

namespace mmm {

const char* to_string(Side side) { return side == Side::left ? "left" : "right"; }

Side side_from_string(std::string_view text) {
    if (text == "left") return Side::left;
    if (text == "right") return Side::right;
    throw std::invalid_argument("direction must be 'left' or 'right', got '" + std::string(text) + "'");
}

const char* to_string(EpsRestart r) { return r == EpsRestart::reset ? "reset" : "carry"; }

EpsRestart eps_restart_from_string(std::string_view text) {
    if (text == "reset") return EpsRestart::reset;
    if (text == "carry") return EpsRestart::carry;
    throw std::invalid_argument("eps restart must be 'reset' or 'carry', got '" + std::string(text) + "'");
}

DrivingList driving_list_of(const Trajectory& t) {
    std::vector<std::uint32_t> order(t.points.size());
    std::iota(order.begin(), order.end(), 1U);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::uint32_t a, std::uint32_t b) { return t.points[a - 1] < t.points[b - 1]; });
    return DrivingList(std::move(order));
}

namespace {

bool in_unit_interval(const Rational& x) { return Rational(0) < x && x < Rational(1); }

bool endpoint_matches(const Rational& e, std::size_t length, const AffineForm& m_form, const RunLimit& limit) {
    if (!in_unit_interval(e)) return false;
    const detail::ScaledRun t = detail::scaled_trajectory(e, limit, false);
    return t.terminated && t.length == length && t.value(t.limit) == m_form(e);
}

}  // namespace

CertifyOutcome certify_atom(const Rational& x0, const Rational& eps, const RunLimit& limit, Side side) {
    if (eps.sign() <= 0) throw std::invalid_argument("certify_atom: eps must be positive");
    Rational probe = side == Side::right ? x0 + eps : x0 - eps;
    if (!in_unit_interval(probe)) return EpsTooLarge{std::move(probe), std::nullopt};

    detail::ScaledRun t = detail::scaled_trajectory(probe, limit, false);
    if (!t.terminated) run_terminating(probe, limit);  // throws with the full partial run
    const DrivingList driving(std::move(t.order));
    const detail::ScaledReplay replayed = detail::scaled_replay(driving);

    std::optional<RInterval> iv = detail::certified_interval(replayed, probe);
    if (!iv || !iv->closure_contains(x0)) return EpsTooLarge{std::move(probe), std::move(iv)};

    AffineForm m_form = replayed.form(replayed.m_form());
    const bool lo_closed = endpoint_matches(iv->lo(), replayed.length, m_form, limit);
    const bool hi_closed = endpoint_matches(iv->hi(), replayed.length, m_form, limit);
    return Atom{RInterval(iv->lo(), iv->hi(), lo_closed, hi_closed), replayed.length, std::move(m_form), driving};
}

void check_atom(const Atom& atom, std::size_t samples, const RunLimit& limit) {
    // 1/2, 1/4, 3/4, 1/8, 3/8, ...
    long num = 1;
    long den = 2;
    for (std::size_t i = 0; i < samples; ++i) {
        const Rational s = atom.interval.at_fraction(num, den);
        const detail::ScaledRun t = detail::scaled_trajectory(s, limit, false);
        if (!t.terminated || t.length != atom.length || t.value(t.limit) != atom.m_form(s) ||
            t.order != atom.driving.order())
            throw OracleMismatchError("atom " + to_string(atom.interval) +
                                      " disagrees with the concrete run at " + s.str());
        num += 2;
        if (num > den) {
            den *= 2;
            num = 1;
        }
    }
}

void SweepConfig::validate() const {
    if (!in_unit_interval(seed)) throw std::invalid_argument("sweep seed must lie in (0, 1)");
    if (!(eps_floor.sign() > 0 && eps_floor < eps0))
        throw std::invalid_argument("sweep needs eps0 > eps_floor > 0");
    if (eps_shrink < 2) throw std::invalid_argument("eps shrink factor must be at least 2");
    if (!stop.any()) throw std::invalid_argument("sweep needs a stop rule");
}

EpsUnderflowError::EpsUnderflowError(Rational frontier, Rational eps)
    : std::runtime_error("eps fell below the floor at frontier " + frontier.str()),
      frontier_(std::move(frontier)),
      eps_(std::move(eps)) {}

Sweeper::Sweeper(SweepConfig cfg) : cfg_(std::move(cfg)) {
    cfg_.validate();
    state_.frontier = cfg_.seed;
    state_.eps = cfg_.eps0;
}

Sweeper::Sweeper(SweepConfig cfg, SweepState resume_from) : cfg_(std::move(cfg)), state_(std::move(resume_from)) {
    cfg_.validate();
}

bool Sweeper::stop_reached() const {
    const auto& s = state_;
    if (!in_unit_interval(s.frontier)) return true;
    if (cfg_.stop.max_atoms && s.atoms >= *cfg_.stop.max_atoms) return true;
    if (cfg_.stop.max_segments && s.segments >= *cfg_.stop.max_segments) return true;
    if (cfg_.stop.target) {
        const auto& t = *cfg_.stop.target;
        if (cfg_.direction == Side::right ? s.frontier >= t : s.frontier <= t) return true;
    }
    return false;
}

std::vector<Piece> Sweeper::step() {
    std::vector<Piece> out;
    if (state_.finished) return out;
    if (stop_reached()) {
        state_.finished = true;
        return out;
    }

    const bool right = cfg_.direction == Side::right;
    const Rational shrink(static_cast<long>(cfg_.eps_shrink));
    for (;;) {
        std::optional<CertifyOutcome> attempt;
        try {
            attempt = certify_atom(state_.frontier, state_.eps, cfg_.limit, cfg_.direction);
        } catch (const NotTerminatedError&) {
            // A long run at the probe says nothing about the atom next to the
            // frontier unless the probe is already as close as allowed.
            state_.eps /= shrink;
            if (state_.eps < cfg_.eps_floor) throw;
            continue;
        }
        CertifyOutcome& outcome = *attempt;
        if (auto* atom = std::get_if<Atom>(&outcome)) {
            const Rational near = right ? atom->interval.lo() : atom->interval.hi();
            const bool near_closed = right ? atom->interval.lo_closed() : atom->interval.hi_closed();
            const bool first = state_.pieces == 0;

            if (near == state_.frontier) {
                if (state_.frontier_claimed) {
                    // The shared endpoint already belongs to the previous piece.
                    atom->interval = right ? atom->interval.with_lo_closed(false)
                                           : atom->interval.with_hi_closed(false);
                } else if (!near_closed) {
                    const Trajectory t = run_terminating(state_.frontier, cfg_.limit);
                    out.emplace_back(SingletonPiece{state_.frontier, t.length, t.limit});
                }
            } else if (!first) {
                throw std::logic_error("sweep: atom " + near.str() + " does not start at frontier " +
                                       state_.frontier.str());
            }

            if (cfg_.oracle_samples > 0) check_atom(*atom, cfg_.oracle_samples, cfg_.limit);

            const Rational& far = right ? atom->interval.hi() : atom->interval.lo();
            state_.frontier = far;
            state_.frontier_claimed = right ? atom->interval.hi_closed() : atom->interval.lo_closed();
            if (cfg_.eps_restart == EpsRestart::carry) {
                state_.eps *= Rational(static_cast<long>(cfg_.eps_shrink));
                if (cfg_.eps0 < state_.eps) state_.eps = cfg_.eps0;
            } else {
                state_.eps = cfg_.eps0;
            }
            ++state_.atoms;
            if (!state_.last_form || *state_.last_form != atom->m_form) {
                ++state_.segments;
                state_.last_form = atom->m_form;
            }
            out.emplace_back(std::move(*atom));
            state_.pieces += out.size();
            if (stop_reached()) state_.finished = true;
            return out;
        }

        // A probe inside the failed probe's certified interval would replay the
        // same driving list and fail the same way, so those eps are skipped.
        const auto& failed = std::get<EpsTooLarge>(outcome);
        do {
            state_.eps /= shrink;
            if (state_.eps < cfg_.eps_floor) throw EpsUnderflowError(state_.frontier, state_.eps);
        } while (failed.found &&
                 failed.found->closure_contains(right ? state_.frontier + state_.eps : state_.frontier - state_.eps));
    }
}

std::vector<Piece> sweep(const SweepConfig& cfg) {
    Sweeper sweeper(cfg);
    std::vector<Piece> pieces;
    while (!sweeper.done()) {
        auto batch = sweeper.step();
        std::move(batch.begin(), batch.end(), std::back_inserter(pieces));
    }
    return pieces;
}

std::vector<std::vector<Piece>> sweep_concurrently(std::span<const SweepConfig> configs) {
    std::vector<std::future<std::vector<Piece>>> jobs;
    jobs.reserve(configs.size());
    for (const auto& cfg : configs) jobs.push_back(std::async(std::launch::async, [cfg] { return sweep(cfg); }));
    std::vector<std::vector<Piece>> results;
    results.reserve(jobs.size());
    for (auto& job : jobs) results.push_back(job.get());
    return results;
}

std::vector<Piece> ascending(std::vector<Piece> pieces, Side direction) {
    if (direction == Side::left) std::reverse(pieces.begin(), pieces.end());
    return pieces;
}

Rational piece_lo(const Piece& p) {
    if (const auto* a = std::get_if<Atom>(&p)) return a->interval.lo();
    return std::get<SingletonPiece>(p).point;
}

Rational piece_hi(const Piece& p) {
    if (const auto* a = std::get_if<Atom>(&p)) return a->interval.hi();
    return std::get<SingletonPiece>(p).point;
}

std::size_t piece_length(const Piece& p) {
    if (const auto* a = std::get_if<Atom>(&p)) return a->length;
    return std::get<SingletonPiece>(p).length;
}

}  // namespace mmm
