#pragma once

// Paper fixtures and the verify-paper runner.
//
// The fixture file holds one JSON object per line ('#' lines are comments).
// Four kinds exist:
//   trajectory  a concrete run with known L and m (and optionally points)
//   piece       an affine form for m on an interval, checked by sampling
//   corner      two pieces whose forms must meet at a given point
//   sweep       a certification sweep whose segment corners and forms are
//               compared with the listed ones

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <mmm/certifier.hpp>
#include <mmm/json_io.hpp>

namespace mmm::app {

enum class Tier { quick, long_ };

struct TrajectoryFixture {
    std::string id;
    Rational x;
    std::size_t length;
    Rational m;
    std::vector<Rational> points;  // empty when not listed
    Tier tier = Tier::quick;
};

struct PieceFixture {
    std::string id;
    Rational anchor;
    std::string side;  // left | right | interval
    RInterval interval;
    AffineForm m_form;
    std::optional<std::size_t> length;
    Tier tier = Tier::quick;
    bool derived = false;
};

struct CornerFixture {
    std::string id;
    Rational point;
    std::string between[2];
    std::string exclusive_group;  // empty when standalone
    bool corollary = false;
};

struct SweepFixture {
    std::string id;
    Rational seed;
    Side direction = Side::right;
    std::size_t max_segments = 2;
    std::vector<Rational> corners;   // leading corners in sweep order
    std::vector<std::string> forms;  // piece ids whose forms the segments carry, in sweep order
    std::string resolves;            // exclusive group decided by this sweep
    Tier tier = Tier::quick;
};

struct FixtureSet {
    std::vector<TrajectoryFixture> trajectories;
    std::vector<PieceFixture> pieces;
    std::vector<CornerFixture> corners;
    std::vector<SweepFixture> sweeps;

    const PieceFixture& piece(const std::string& id) const;
};

class FixtureError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Throws FixtureError with the offending line number.
FixtureSet parse_fixtures(std::istream& in);
FixtureSet load_fixtures(const std::filesystem::path& path);

struct VerifyOptions {
    bool full = false;  // include long-tier fixtures
    /// Sample points per piece: midpoint, then both quartiles.
    std::size_t samples = 3;
    RunLimit limit;
    EpsRestart eps_restart = EpsRestart::reset;
};

struct VerifySummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    /// Exclusive group -> id of the alternative that held.
    std::vector<std::pair<std::string, std::string>> supported;
};

/// Runs every fixture and writes one report line per fixture, followed by a
/// summary line.
VerifySummary verify_fixtures(const FixtureSet& set, const VerifyOptions& opts, std::ostream& report);

/// Sample points used for a piece: midpoint first, then quartiles.
std::vector<Rational> piece_samples(const RInterval& iv, std::size_t count);

}  // namespace mmm::app
