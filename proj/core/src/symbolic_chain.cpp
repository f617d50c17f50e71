#include "mmm/symbolic_chain.hpp"

#include "kernel.hpp"

#include <optional>
#include <string>

namespace mmm {

DrivingList::DrivingList(std::vector<std::uint32_t> order) : order_(std::move(order)) {
    const std::size_t n = order_.size();
    if (n < 3) throw std::invalid_argument("DrivingList: need at least 3 entries");
    std::vector<bool> seen(n + 1, false);
    for (auto v : order_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("DrivingList: not a permutation of 1.." + std::to_string(n));
        seen[v] = true;
    }
    const auto r = ranks();
    if (!(r[0] < r[1] && r[1] < r[2]))
        throw std::invalid_argument("DrivingList: seeds must appear in order 1, 2, 3");
}

std::vector<std::uint32_t> DrivingList::ranks() const {
    std::vector<std::uint32_t> r(order_.size());
    for (std::size_t pos = 0; pos < order_.size(); ++pos) r[order_[pos] - 1] = static_cast<std::uint32_t>(pos);
    return r;
}

Chain seed_chain() {
    return {{AffineForm::constant(Rational(0)), 1},
            {AffineForm::variable(), 2},
            {AffineForm::constant(Rational(1)), 3}};
}

AffineForm symbolic_median(const Chain& chain) {
    if (chain.empty()) throw std::invalid_argument("symbolic_median: empty chain");
    const std::size_t n = chain.size();
    if (n % 2 == 1) return chain[n / 2].form;
    AffineForm sum = chain[n / 2 - 1].form + chain[n / 2].form;
    return Rational(1, 2) * std::move(sum);
}

SymbolicRun replay_driving_list(const DrivingList& driving) {
    const detail::ScaledReplay r = detail::scaled_replay(driving);
    SymbolicRun run;
    run.length = r.length;
    run.step_forms.reserve(r.length - 3);
    for (std::size_t i = 3; i < r.forms.size(); ++i) run.step_forms.push_back(r.form(r.forms[i]));
    run.step_medians.reserve(r.medians.size());
    for (const auto& m : r.medians) run.step_medians.push_back(r.form(m));
    run.m_form = run.step_medians.back();
    run.chain.reserve(r.order.size());
    for (auto src : r.order) run.chain.push_back(ChainEntry{r.form(r.forms[src - 1]), src});
    return run;
}

Chain dedupe_chain(Chain chain) {
    if (chain.empty()) return chain;
    Chain out;
    out.reserve(chain.size());
    out.push_back(std::move(chain.front()));
    for (std::size_t i = 1; i < chain.size(); ++i) {
        if (chain[i].form == out.back().form) continue;
        out.push_back(std::move(chain[i]));
    }
    return out;
}

RInterval reduce_constraints(std::span<const AffineForm> positive) {
    std::optional<Rational> lower;
    std::optional<Rational> upper;
    for (const auto& f : positive) {
        if (f.slope.is_zero()) {
            if (f.intercept.sign() <= 0)
                throw EmptyIntervalError("contradictory constant constraint " + f.intercept.str() + " > 0");
            continue;
        }
        // slope * x + intercept > 0  <=>  x > -intercept / slope when slope > 0.
        Rational root = -f.intercept / f.slope;
        if (f.slope.sign() > 0) {
            if (!lower || *lower < root) lower = std::move(root);
        } else {
            if (!upper || root < *upper) upper = std::move(root);
        }
    }
    if (!lower || !upper) throw UnboundedIntervalError("constraint set does not bound x");
    if (!(*lower < *upper))
        throw EmptyIntervalError("no x satisfies the constraints: " + lower->str() + " >= " + upper->str());
    return RInterval::open(std::move(*lower), std::move(*upper));
}

RInterval reduce_chain(const Chain& chain) {
    std::vector<AffineForm> constraints;
    constraints.reserve(chain.size());
    for (std::size_t i = 1; i < chain.size(); ++i) constraints.push_back(chain[i].form - chain[i - 1].form);
    return reduce_constraints(constraints);
}

}  // namespace mmm
