#include <gtest/gtest.h>

#include <random>

#include "mmm/certifier.hpp"
#include "mmm/permutation.hpp"

using namespace mmm;

namespace {

using Cycles = std::vector<std::vector<std::uint32_t>>;

std::vector<Atom> atoms_between(const Rational& seed, const Rational& target) {
    SweepConfig cfg;
    cfg.seed = seed;
    cfg.stop.target = target;
    cfg.eps_restart = EpsRestart::carry;
    std::vector<Atom> out;
    for (const auto& p : sweep(cfg))
        if (auto* a = std::get_if<Atom>(&p)) out.push_back(*a);
    return out;
}

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 1U);
    std::shuffle(image.begin(), image.end(), rng);
    return Permutation(image);
}

}  // namespace

TEST(Permutation, RejectsNonBijections) {
    EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({0, 1}), std::invalid_argument);
    EXPECT_THROW(Permutation({1, 3}), std::invalid_argument);
    EXPECT_TRUE(Permutation::identity(4).is_identity());
    EXPECT_TRUE(Permutation(std::vector<std::uint32_t>{}).is_identity());
}

TEST(Permutation, ComposeAndInverse) {
    const Permutation p({2, 3, 1});  // 1->2->3->1
    const Permutation q({2, 1, 3});
    EXPECT_EQ(compose(p, q).image(), (std::vector<std::uint32_t>{3, 2, 1}));
    EXPECT_TRUE(compose(p, p.inverse()).is_identity());
    EXPECT_TRUE(compose(p.inverse(), p).is_identity());
    EXPECT_THROW(compose(p, Permutation::identity(4)), std::invalid_argument);
}

TEST(CycleDecomposition, CanonicalForm) {
    EXPECT_TRUE(cycle_decomposition(Permutation::identity(5)).empty());
    EXPECT_EQ(cycle_decomposition(Permutation({2, 3, 1})).cycles, (Cycles{{1, 2, 3}}));
    EXPECT_EQ(cycle_decomposition(Permutation({3, 1, 2})).cycles, (Cycles{{1, 3, 2}}));
    EXPECT_EQ(cycle_decomposition(Permutation({1, 4, 5, 2, 3})).cycles, (Cycles{{2, 4}, {3, 5}}));
    EXPECT_EQ(normalized(CycleForm{{{5, 3}, {4, 2, 7}}}).cycles, (Cycles{{2, 7, 4}, {3, 5}}));
}

TEST(CycleDecomposition, RoundTripsThroughFromCycles) {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 200; ++i) {
        const Permutation p = random_permutation(1 + rng() % 40, rng);
        EXPECT_EQ(from_cycles(cycle_decomposition(p), p.size()), p);
    }
    EXPECT_EQ(from_cycles(CycleForm{{{3, 5}, {4, 2}}}, 5), Permutation({1, 4, 5, 2, 3}));
    EXPECT_THROW(from_cycles(CycleForm{{{1, 2}, {2, 3}}}, 3), std::invalid_argument);
    EXPECT_THROW(from_cycles(CycleForm{{{1, 9}}}, 3), std::invalid_argument);
    EXPECT_THROW(from_cycles(CycleForm{{{1}}}, 3), std::invalid_argument);
}

TEST(SigmaBetween, SwapOfTheLastTwoChainEntries) {
    std::vector<std::uint32_t> before(73);
    std::iota(before.begin(), before.end(), 1U);
    // ... 56, 44, 3 at the top of the chain, then 3 and 44 trade places.
    before.erase(std::find(before.begin(), before.end(), 3U));
    before.erase(std::find(before.begin(), before.end(), 44U));
    before.erase(std::find(before.begin(), before.end(), 56U));
    std::vector<std::uint32_t> after = before;
    for (std::uint32_t v : {56U, 44U, 3U}) before.push_back(v);
    for (std::uint32_t v : {56U, 3U, 44U}) after.push_back(v);

    const Permutation p1(before), p2(after);
    EXPECT_EQ(cycle_decomposition(sigma_between(p1, p2)).cycles, (Cycles{{72, 73}}));
    EXPECT_TRUE(sigma_between(p1, p1).is_identity());
    EXPECT_THROW(sigma_between(Permutation::identity(73), Permutation::identity(75)), std::invalid_argument);
}

TEST(SigmaBetween, ReconstructsTheNextPermutation) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 2 + rng() % 30;
        const Permutation p1 = random_permutation(n, rng);
        const Permutation p2 = random_permutation(n, rng);
        EXPECT_EQ(compose(p1, sigma_between(p1, p2)), p2);
    }
}

TEST(SigmaSequence, ThirtyFourTranspositionsRightOfOneHalf) {
    const auto atoms = atoms_between(Rational(1, 2), Rational(341, 666));
    ASSERT_EQ(atoms.size(), 35u);
    const auto sigmas = sigma_sequence(atoms);
    ASSERT_EQ(sigmas.size(), 34u);
    for (std::uint32_t j = 0; j < 34; ++j)
        EXPECT_EQ(sigmas[j].cycles, (Cycles{{72 - j, 73 - j}})) << "sigma " << j + 1;

    // Composing the transitions onto the first atom recovers every later one.
    Permutation pi = driving_permutation(atoms.front().driving);
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
        pi = compose(pi, from_cycles(sigmas[j], pi.size()));
        EXPECT_EQ(pi, driving_permutation(atoms[j + 1].driving));
    }
}

TEST(SigmaSequence, ThreeCyclesAppear) {
    const auto atoms = atoms_between(Rational(706817, 1380274), Rational(1413973, 2761210));
    ASSERT_EQ(atoms.size(), 20u);
    for (const auto& a : atoms) EXPECT_EQ(a.length, 253u);
    const auto sigmas = sigma_sequence(atoms);
    const std::vector<Cycles> expected{
        {{130, 131}}, {{129, 130}}, {{131, 132}}, {{130, 131}}, {{132, 133}}, {{131, 132}}, {{133, 134}},
        {{132, 133}}, {{134, 135}}, {{133, 134}}, {{135, 136}}, {{134, 135}}, {{136, 137}}, {{135, 136}},
        {{137, 138, 139}}, {{136, 137, 138}}, {{139, 140}}, {{138, 139}}, {{140, 141}}};
    ASSERT_EQ(sigmas.size(), expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) EXPECT_EQ(sigmas[j].cycles, expected[j]) << "sigma " << j + 1;
}

TEST(SigmaSequence, DisjointProductsAppear) {
    const Rational corner(2911001, 5684610);
    SweepConfig cfg;
    cfg.seed = corner;
    cfg.stop.max_atoms = 5;
    std::vector<Atom> atoms;
    for (const auto& p : sweep(cfg)) atoms.push_back(std::get<Atom>(p));
    ASSERT_EQ(atoms.front().interval.lo(), corner);
    EXPECT_TRUE(atoms.front().interval.lo_closed());
    EXPECT_EQ(atoms.front().length, 271u);
    const auto sigmas = sigma_sequence(atoms);
    ASSERT_GE(sigmas.size(), 4u);
    EXPECT_EQ(sigmas[0].cycles, (Cycles{{138, 140, 139}}));
    EXPECT_EQ(sigmas[1].cycles, (Cycles{{139, 141}, {140, 142}}));
    EXPECT_EQ(sigmas[2].cycles, (Cycles{{141, 143, 142}}));
    EXPECT_EQ(sigmas[3].cycles, (Cycles{{226, 227}}));
}

TEST(SigmaSequence, EdgeCases) {
    const auto atoms = atoms_between(Rational(1, 2), Rational(1897, 3762));
    ASSERT_EQ(atoms.size(), 1u);
    EXPECT_TRUE(sigma_sequence(atoms).empty());
    EXPECT_TRUE(sigma_sequence(std::span<const Atom>{}).empty());

    // Atoms from subintervals of different L are not comparable.
    auto across = atoms_between(Rational(1, 2), Rational(341, 666));
    across.push_back(atoms_between(Rational(341, 666), Rational(24889, 48610)).front());
    EXPECT_THROW(sigma_sequence(across), std::invalid_argument);
}
