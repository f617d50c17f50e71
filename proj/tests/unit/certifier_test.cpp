#include <gtest/gtest.h>

#include "mmm/certifier.hpp"

using namespace mmm;

namespace {

AffineForm form(const char* a, const char* b) { return {Rational::parse(a), Rational::parse(b)}; }

Atom certify_with_shrinking_eps(const Rational& x0, Side side) {
    for (Rational eps(1, 100000); eps > pow10_inverse(40); eps /= Rational(10)) {
        auto outcome = certify_atom(x0, eps, RunLimit{}, side);
        if (auto* atom = std::get_if<Atom>(&outcome)) return *atom;
    }
    throw std::runtime_error("no atom found");
}

SweepConfig right_from(const Rational& seed, std::size_t atoms) {
    SweepConfig cfg;
    cfg.seed = seed;
    cfg.stop.max_atoms = atoms;
    return cfg;
}

std::vector<Atom> atoms_of(const std::vector<Piece>& pieces) {
    std::vector<Atom> out;
    for (const auto& p : pieces)
        if (auto* a = std::get_if<Atom>(&p)) out.push_back(*a);
    return out;
}

}  // namespace

TEST(DrivingListOf, TiesBrokenByIndex) {
    EXPECT_EQ(driving_list_of(run_trajectory(Rational(7, 12))).order(),
              (std::vector<std::uint32_t>{1, 2, 4, 3, 5, 9, 6, 7, 8}));
    EXPECT_EQ(driving_list_of(run_trajectory(Rational(1, 2))).order(), (std::vector<std::uint32_t>{1, 2, 4, 3}));
    const auto t = run_trajectory(Rational(1, 2) + Rational(1, 100000));
    EXPECT_EQ(driving_list_of(t).order(), t.order);
}

TEST(CertifyAtom, FirstAtomRightOfOneHalf) {
    const auto outcome = certify_atom(Rational(1, 2), Rational(1, 100000), RunLimit{}, Side::right);
    const auto* atom = std::get_if<Atom>(&outcome);
    ASSERT_NE(atom, nullptr);
    EXPECT_EQ(atom->interval, RInterval(Rational(1, 2), Rational(1897, 3762), false, true));
    EXPECT_EQ(atom->length, 73u);
    EXPECT_EQ(atom->m_form, form("333/8", "-325/16"));
    EXPECT_EQ(atom->driving.size(), 73u);
}

TEST(CertifyAtom, FirstAtomOfTheLength75Subinterval) {
    const Atom atom = certify_with_shrinking_eps(Rational(341, 666), Side::right);
    EXPECT_EQ(atom.interval.lo(), Rational(341, 666));
    EXPECT_FALSE(atom.interval.lo_closed());  // 341/666 itself has L = 73
    EXPECT_EQ(atom.length, 75u);
    EXPECT_EQ(atom.m_form, form("333/8", "-325/16"));
}

TEST(CertifyAtom, LeftOfTwoThirds) {
    const Atom atom = certify_with_shrinking_eps(Rational(2, 3), Side::left);
    EXPECT_EQ(atom.interval.hi(), Rational(2, 3));
    EXPECT_EQ(atom.m_form, form("-225/2", "76"));
    EXPECT_EQ(atom.m_form(Rational(2, 3)), Rational(1));
}

TEST(CertifyAtom, OversizedEpsIsReported) {
    const auto outcome = certify_atom(Rational(1897, 3762), Rational(1, 2), RunLimit{}, Side::right);
    ASSERT_TRUE(std::holds_alternative<EpsTooLarge>(outcome));
    EXPECT_EQ(std::get<EpsTooLarge>(outcome).probe, Rational(1897, 3762) + Rational(1, 2));

    // In range, but the probe's atom does not reach back to x0.
    const auto far = certify_atom(Rational(1, 2), Rational(1, 100), RunLimit{}, Side::right);
    ASSERT_TRUE(std::holds_alternative<EpsTooLarge>(far));
    const auto& found = std::get<EpsTooLarge>(far).found;
    if (found) {
        EXPECT_FALSE(found->closure_contains(Rational(1, 2)));
    }
    EXPECT_THROW(certify_atom(Rational(1, 2), Rational(0), RunLimit{}, Side::right), std::invalid_argument);
}

TEST(CertifyAtom, ProbeThatDoesNotStabilizeThrows) {
    EXPECT_THROW(certify_atom(Rational(1, 2), Rational(1, 100000), RunLimit(30), Side::right), NotTerminatedError);
}

TEST(CheckAtom, AcceptsCertifiedAtomAndRejectsTampered) {
    const auto outcome = certify_atom(Rational(1, 2), Rational(1, 100000), RunLimit{}, Side::right);
    Atom atom = std::get<Atom>(outcome);
    EXPECT_NO_THROW(check_atom(atom, 7, RunLimit{}));
    atom.m_form = form("333/8", "-324/16");
    EXPECT_THROW(check_atom(atom, 1, RunLimit{}), OracleMismatchError);
}

TEST(SweepConfig, Validation) {
    SweepConfig cfg;
    cfg.seed = Rational(1, 2);
    EXPECT_THROW(cfg.validate(), std::invalid_argument);  // no stop rule
    cfg.stop.max_atoms = 1;
    EXPECT_NO_THROW(cfg.validate());
    cfg.seed = Rational(1);
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.seed = Rational(1, 2);
    cfg.eps_floor = cfg.eps0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg.eps_floor = pow10_inverse(60);
    cfg.eps_shrink = 1;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_EQ(eps_restart_from_string("carry"), EpsRestart::carry);
    EXPECT_EQ(std::string(to_string(EpsRestart::reset)), "reset");
    EXPECT_THROW(eps_restart_from_string("sometimes"), std::invalid_argument);
    EXPECT_EQ(side_from_string("left"), Side::left);
    EXPECT_THROW(side_from_string("up"), std::invalid_argument);
}

TEST(Sweep, TilesWithoutGapsOrOverlap) {
    const auto pieces = sweep(right_from(Rational(1, 2), 60));
    ASSERT_FALSE(pieces.empty());
    ASSERT_TRUE(std::holds_alternative<SingletonPiece>(pieces.front()));
    EXPECT_EQ(std::get<SingletonPiece>(pieces.front()).point, Rational(1, 2));
    EXPECT_EQ(std::get<SingletonPiece>(pieces.front()).length, 4u);
    EXPECT_EQ(atoms_of(pieces).size(), 60u);

    // Each boundary point is owned by exactly one side.
    for (std::size_t i = 1; i < pieces.size(); ++i) {
        ASSERT_EQ(piece_hi(pieces[i - 1]), piece_lo(pieces[i]));
        const Rational& b = piece_lo(pieces[i]);
        const auto owns = [&](const Piece& p) {
            if (auto* s = std::get_if<SingletonPiece>(&p)) return s->point == b;
            return std::get<Atom>(p).interval.contains(b);
        };
        EXPECT_NE(owns(pieces[i - 1]), owns(pieces[i])) << b;
    }
}

TEST(Sweep, AtomsAgreeWithConcreteRunsAtEndpoints) {
    // A closed endpoint must match the atom. An open endpoint may match only
    // when the neighbouring piece already owns it.
    const auto pieces = sweep(right_from(Rational(1, 2), 40));
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto* atom = std::get_if<Atom>(&pieces[i]);
        if (!atom) continue;
        for (const bool lo : {true, false}) {
            const Rational& e = lo ? atom->interval.lo() : atom->interval.hi();
            const auto t = run_trajectory(e);
            const bool same = t.terminated && t.length == atom->length && t.limit == atom->m_form(e);
            if (atom->interval.contains(e)) {
                EXPECT_TRUE(same) << to_string(atom->interval);
                continue;
            }
            if (!same) continue;
            const std::size_t j = lo ? i - 1 : i + 1;
            ASSERT_TRUE(lo ? i > 0 : j < pieces.size()) << to_string(atom->interval);
            const auto* other = std::get_if<Atom>(&pieces[j]);
            ASSERT_NE(other, nullptr) << to_string(atom->interval);
            EXPECT_TRUE(other->interval.contains(e)) << to_string(atom->interval);
        }
    }
}

TEST(Sweep, StopRules) {
    SweepConfig cfg;
    cfg.seed = Rational(1, 2);
    cfg.stop.target = Rational(341, 666);
    const auto to_target = sweep(cfg);
    EXPECT_EQ(piece_hi(to_target.back()), Rational(341, 666));
    EXPECT_EQ(atoms_of(to_target).size(), 35u);

    SweepConfig seg;
    seg.seed = Rational(2, 3);
    seg.direction = Side::left;
    seg.stop.max_segments = 1;
    const auto one_segment = atoms_of(sweep(seg));
    ASSERT_FALSE(one_segment.empty());
    for (const auto& a : one_segment) EXPECT_EQ(a.m_form, form("-225/2", "76"));
}

TEST(Sweep, EpsUnderflowIsReported) {
    SweepConfig cfg = right_from(Rational(1, 2), 3);
    // Probes at 1/2 + 1/10 and 1/2 + 1/100 overshoot; 1/1000 is below the floor.
    cfg.eps0 = Rational(1, 10);
    cfg.eps_floor = Rational(1, 500);
    try {
        sweep(cfg);
        FAIL() << "expected EpsUnderflowError";
    } catch (const EpsUnderflowError& e) {
        EXPECT_EQ(e.frontier(), Rational(1, 2));
        EXPECT_LT(e.eps(), cfg.eps_floor);
    }
}

TEST(Sweep, EpsRestartPoliciesAgree) {
    SweepConfig reset = right_from(Rational(1, 2), 150);
    SweepConfig carry = reset;
    carry.eps_restart = EpsRestart::carry;
    EXPECT_EQ(sweep(reset), sweep(carry));

    SweepConfig left_reset = right_from(Rational(2, 3), 40);
    left_reset.direction = Side::left;
    SweepConfig left_carry = left_reset;
    left_carry.eps_restart = EpsRestart::carry;
    EXPECT_EQ(sweep(left_reset), sweep(left_carry));
}

TEST(Sweeper, ResumedStateContinuesIdentically) {
    const SweepConfig cfg = right_from(Rational(1, 2), 50);
    const auto whole = sweep(cfg);

    Sweeper first(cfg);
    std::vector<Piece> pieces;
    while (first.state().atoms < 20) {
        auto batch = first.step();
        pieces.insert(pieces.end(), batch.begin(), batch.end());
    }
    Sweeper second(cfg, first.state());
    while (!second.done()) {
        auto batch = second.step();
        pieces.insert(pieces.end(), batch.begin(), batch.end());
    }
    EXPECT_EQ(pieces, whole);
    EXPECT_TRUE(second.step().empty());
}

TEST(Sweep, ConcurrentMatchesSequential) {
    SweepConfig right = right_from(Rational(7, 12), 8);
    SweepConfig left = right;
    left.direction = Side::left;
    const std::vector<SweepConfig> cfgs{right, left};
    const auto both = sweep_concurrently(cfgs);
    ASSERT_EQ(both.size(), 2u);
    EXPECT_EQ(both[0], sweep(right));
    EXPECT_EQ(both[1], sweep(left));
}

TEST(Sweep, LeftSweepReversesIntoAscendingOrder) {
    SweepConfig cfg = right_from(Rational(2, 3), 6);
    cfg.direction = Side::left;
    const auto pieces = ascending(sweep(cfg), Side::left);
    for (std::size_t i = 1; i < pieces.size(); ++i) EXPECT_EQ(piece_hi(pieces[i - 1]), piece_lo(pieces[i]));
    EXPECT_EQ(piece_hi(pieces.back()), Rational(2, 3));
}
