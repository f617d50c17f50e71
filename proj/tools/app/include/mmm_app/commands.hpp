#pragma once

// Subcommands of the mmm tool. Each returns a process exit code and writes
// structured lines to `out`; diagnostics go to `err`.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <mmm/certifier.hpp>

namespace mmm::app {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,  // I/O or other unexpected runtime failure
    kUsage = 2,
    kNotTerminated = 3,
    kEpsUnderflow = 4,
    kFixtureFailure = 5,
};

struct TrajOptions {
    std::string x;
    RunLimit limit;
    bool points = false;
};

int cmd_traj(const TrajOptions& opts, std::ostream& out, std::ostream& err);

struct SweepOptions {
    std::string seed;
    std::string direction = "right";  // corners also accepts "both"
    std::string eps0 = "1/100000";
    std::string eps_restart = "reset";
    std::optional<std::size_t> max_atoms;
    std::optional<std::string> target;
    std::optional<std::size_t> max_segments;
    std::size_t oracle_samples = 3;
    RunLimit limit;
    std::optional<std::filesystem::path> out;
    bool resume = false;
    bool with_driving = false;
    /// Testing hook: terminate abruptly once this many pieces are in the file.
    std::optional<std::size_t> abort_after;
};

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err);
/// Sweep plus summary; direction "both" runs the two sides concurrently and
/// merges them around the seed.
int cmd_corners(const SweepOptions& opts, std::ostream& out, std::ostream& err);

struct SigmaOptions {
    std::filesystem::path in;
    std::size_t subinterval = 1;  // 1-based, in increasing x
    bool table = false;
};

int cmd_sigma(const SigmaOptions& opts, std::ostream& out, std::ostream& err);

struct VerifyPaperOptions {
    std::filesystem::path fixtures;
    bool full = false;
    std::size_t samples = 3;
    RunLimit limit;
    std::string eps_restart = "reset";
    std::optional<std::filesystem::path> report;
};

int cmd_verify_paper(const VerifyPaperOptions& opts, std::ostream& out, std::ostream& err);

/// Reads a piece stream (one JSON object per line).
std::vector<Piece> read_pieces(const std::filesystem::path& path);

/// Joins a left sweep (ascending order) and a right sweep from the same seed
/// so the seed point is covered exactly once.
std::vector<Piece> merge_sides(std::vector<Piece> left_ascending, std::vector<Piece> right);

/// Subinterval, segment and corner lines for pieces in increasing x.
void write_summary(std::ostream& out, std::span<const Piece> ascending_pieces);

}  // namespace mmm::app
