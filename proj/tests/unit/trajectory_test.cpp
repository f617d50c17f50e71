#include <gtest/gtest.h>

#include "mmm/trajectory.hpp"

using mmm::Rational;
using mmm::RunLimit;

namespace {
std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
    std::vector<Rational> out;
    for (const char* t : texts) out.push_back(Rational::parse(t));
    return out;
}
}  // namespace

TEST(MedianOf, Examples) {
    EXPECT_EQ(mmm::median_of(rationals({"0", "7/12", "1"})), Rational(7, 12));
    EXPECT_EQ(mmm::median_of(rationals({"0", "2/3", "1", "1"})), Rational(5, 6));
    EXPECT_EQ(mmm::median_of(rationals({"1", "0", "2/3", "1"})), Rational(5, 6));  // unordered input
    EXPECT_EQ(mmm::median_of(rationals({"-3/7"})), Rational(-3, 7));
    EXPECT_THROW(mmm::median_of(std::vector<Rational>{}), std::invalid_argument);
}

TEST(RunTrajectory, SevenTwelfths) {
    const auto t = mmm::run_trajectory(Rational(7, 12));
    ASSERT_TRUE(t.terminated);
    EXPECT_EQ(t.length, 9u);
    EXPECT_EQ(t.limit, Rational(1));
    EXPECT_EQ(t.points, rationals({"0", "7/12", "1", "3/4", "1", "7/6", "13/8", "15/8", "1"}));
    EXPECT_EQ(t.medians, rationals({"7/12", "2/3", "3/4", "7/8", "1", "1"}));
    EXPECT_EQ(t.order, (std::vector<std::uint32_t>{1, 2, 4, 3, 5, 9, 6, 7, 8}));
}

TEST(RunTrajectory, OneHalfStopsAtOnce) {
    const auto t = mmm::run_trajectory(Rational(1, 2));
    ASSERT_TRUE(t.terminated);
    EXPECT_EQ(t.length, 4u);
    EXPECT_EQ(t.limit, Rational(1, 2));
    EXPECT_EQ(t.order, (std::vector<std::uint32_t>{1, 2, 4, 3}));
}

TEST(RunTrajectory, TenNineteenths) {
    const auto t = mmm::run_trajectory(Rational(10, 19));
    ASSERT_TRUE(t.terminated);
    EXPECT_EQ(t.length, 47u);
    EXPECT_EQ(t.limit, Rational(141, 4) * Rational(10, 19) - Rational(137, 8));
    EXPECT_EQ(t.limit, Rational(217, 152));
}

TEST(RunTrajectory, TwoThirds) {
    const auto t = mmm::run_trajectory(Rational(2, 3));
    ASSERT_TRUE(t.terminated);
    EXPECT_EQ(t.length, 7u);
    EXPECT_EQ(t.limit, Rational(1));
    EXPECT_EQ(t.points, rationals({"0", "2/3", "1", "1", "3/2", "11/6", "1"}));
}

TEST(RunTrajectory, RejectsStartsOutsideUnitInterval) {
    for (const char* x : {"0", "1", "3/2", "-1/2"})
        EXPECT_THROW(mmm::run_trajectory(Rational::parse(x)), std::invalid_argument) << x;
}

TEST(RunTrajectory, ThresholdCutsRunShort) {
    const auto t = mmm::run_trajectory(Rational(10, 19), RunLimit(20));
    EXPECT_FALSE(t.terminated);
    EXPECT_EQ(t.points.size(), 20u);
    EXPECT_EQ(t.order.size(), 20u);

    try {
        mmm::run_terminating(Rational(10, 19), RunLimit(20));
        FAIL() << "expected NotTerminatedError";
    } catch (const mmm::NotTerminatedError& e) {
        EXPECT_EQ(e.partial().points.size(), 20u);
        EXPECT_EQ(e.partial().x, Rational(10, 19));
    }
    EXPECT_THROW(RunLimit(3), std::invalid_argument);
}

TEST(RunTrajectory, PartialRunIsPrefixOfFullRun) {
    const auto full = mmm::run_trajectory(Rational(10, 19));
    const auto part = mmm::run_trajectory(Rational(10, 19), RunLimit(30));
    ASSERT_EQ(part.points.size(), 30u);
    EXPECT_TRUE(std::equal(part.points.begin(), part.points.end(), full.points.begin()));
}

TEST(NormalizeTriple, Examples) {
    const Rational x(5, 13);
    EXPECT_EQ(mmm::normalize_triple(Rational(0), x, Rational(1)), x);
    EXPECT_EQ(mmm::normalize_triple(Rational(1), Rational(3), Rational(5)), Rational(1, 2));
    EXPECT_EQ(mmm::normalize_triple(Rational(0), Rational(7), Rational(12)), Rational(7, 12));
    EXPECT_THROW(mmm::normalize_triple(Rational(1), Rational(1), Rational(2)), std::invalid_argument);
    EXPECT_THROW(mmm::normalize_triple(Rational(3), Rational(2), Rational(1)), std::invalid_argument);
}

TEST(VerifyStability, Examples) {
    EXPECT_TRUE(mmm::verify_stability(mmm::run_trajectory(Rational(7, 12)), 10));
    EXPECT_TRUE(mmm::verify_stability(mmm::run_trajectory(Rational(1, 2)), 5));
    EXPECT_TRUE(mmm::verify_stability(mmm::run_trajectory(Rational(10, 19)), 20));
    EXPECT_THROW(mmm::verify_stability(mmm::run_trajectory(Rational(10, 19), RunLimit(20)), 5),
                 std::invalid_argument);
}

TEST(MediansMonotone, DetectsDirectionChange) {
    EXPECT_TRUE(mmm::medians_monotone(rationals({"7/12", "2/3", "3/4", "7/8", "1", "1"})));
    EXPECT_TRUE(mmm::medians_monotone(rationals({"1", "1/2", "1/2", "0"})));
    EXPECT_FALSE(mmm::medians_monotone(rationals({"1/2", "2/3", "3/5"})));
    EXPECT_TRUE(mmm::medians_monotone(std::vector<Rational>{}));
}
