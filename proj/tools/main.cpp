// mmm: mean-median map trajectories, interval certification and reference checks.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI/CLI.hpp>

#include "mmm_app/commands.hpp"

#ifndef MMM_DEFAULT_FIXTURES
#define MMM_DEFAULT_FIXTURES "data/paper_fixtures.jsonl"
#endif

namespace {

// MMM_THRESHOLD replaces the built-in default; --threshold replaces both.
std::size_t default_threshold() {
    if (const char* env = std::getenv("MMM_THRESHOLD")) {
        try {
            return std::stoul(env);
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring MMM_THRESHOLD='" << env << "'\n";
        }
    }
    return mmm::kDefaultThreshold;
}

void add_sweep_flags(CLI::App* cmd, mmm::app::SweepOptions& o, std::optional<std::size_t>& max_atoms,
                     std::optional<std::string>& target, std::optional<std::size_t>& max_segments,
                     std::optional<std::size_t>& abort_after, bool allow_both) {
    cmd->add_option("--seed", o.seed, "Starting point, a rational in (0, 1)")->required();
    cmd->add_option("--direction", o.direction, allow_both ? "left, right or both" : "left or right")
        ->check(CLI::IsMember(allow_both ? std::vector<std::string>{"left", "right", "both"}
                                         : std::vector<std::string>{"left", "right"}));
    cmd->add_option("--eps0", o.eps0, "Initial probe offset");
    cmd->add_option("--eps-restart", o.eps_restart, "Probe offset for each new atom: reset (eps0) or carry")
        ->check(CLI::IsMember({"reset", "carry"}));
    cmd->add_option("--max-atoms", max_atoms, "Stop after this many atoms");
    cmd->add_option("--target", target, "Stop once the frontier reaches this point");
    cmd->add_option("--max-segments", max_segments, "Stop once this many m-forms have appeared");
    cmd->add_option("--oracle-samples", o.oracle_samples, "Concrete runs checked inside each atom");
    cmd->add_option("--out", o.out, "Piece stream file (one JSON object per line)");
    cmd->add_flag("--with-driving", o.with_driving, "Include each atom's driving list");
    cmd->add_option("--abort-after", abort_after)->group("");  // crash simulation for tests
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mean-median map: trajectories, certified intervals, corners"};
    app.require_subcommand(1);

    std::size_t threshold = default_threshold();
    app.add_option("--threshold", threshold, "Largest index a run may reach (env MMM_THRESHOLD)")
        ->check(CLI::Range(std::size_t{4}, std::size_t{100000000}));

    mmm::app::TrajOptions traj;
    auto* traj_cmd = app.add_subcommand("traj", "Run one trajectory and print L and m");
    traj_cmd->add_option("x", traj.x, "Starting point, e.g. 7/12")->required();
    traj_cmd->add_flag("--points", traj.points, "Also print points and medians");

    mmm::app::SweepOptions sweep;
    std::optional<std::size_t> max_atoms, max_segments, abort_after;
    std::optional<std::string> target;
    auto* sweep_cmd = app.add_subcommand("sweep", "Certify adjacent atoms starting at a seed");
    add_sweep_flags(sweep_cmd, sweep, max_atoms, target, max_segments, abort_after, false);
    sweep_cmd->add_flag("--resume", sweep.resume, "Continue from the journal next to --out");

    mmm::app::SweepOptions corners;
    std::optional<std::size_t> c_max_atoms, c_max_segments, c_abort_after;
    std::optional<std::string> c_target;
    auto* corners_cmd = app.add_subcommand("corners", "Sweep and report subintervals, segments and corners");
    add_sweep_flags(corners_cmd, corners, c_max_atoms, c_target, c_max_segments, c_abort_after, true);

    mmm::app::SigmaOptions sigma;
    auto* sigma_cmd = app.add_subcommand("sigma", "Transitions between driving lists inside one subinterval");
    sigma_cmd->add_option("--in", sigma.in, "Piece file recorded with --with-driving")->required();
    sigma_cmd->add_option("--subinterval", sigma.subinterval, "1-based index in increasing x");
    sigma_cmd->add_flag("--table", sigma.table, "Tab-separated table instead of JSON lines");

    mmm::app::VerifyPaperOptions verify;
    verify.fixtures = MMM_DEFAULT_FIXTURES;
    std::string tier = "quick";
    auto* verify_cmd = app.add_subcommand("verify-paper", "Check the paper's formulas, corners and runs");
    verify_cmd->add_option("--tier", tier, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    verify_cmd->add_option("--fixtures", verify.fixtures, "Fixture file");
    verify_cmd->add_option("--samples", verify.samples, "Sample points per piece (1 to 3)")
        ->check(CLI::Range(1, 3));
    verify_cmd->add_option("--eps-restart", verify.eps_restart, "Eps policy for sweep fixtures")
        ->check(CLI::IsMember({"reset", "carry"}));
    verify_cmd->add_option("--report", verify.report, "Also write the report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : mmm::app::kUsage;
    }

    const mmm::RunLimit limit(threshold);
    if (*traj_cmd) {
        traj.limit = limit;
        return mmm::app::cmd_traj(traj, std::cout, std::cerr);
    }
    if (*sweep_cmd) {
        sweep.limit = limit;
        sweep.max_atoms = max_atoms;
        sweep.max_segments = max_segments;
        sweep.target = target;
        sweep.abort_after = abort_after;
        return mmm::app::cmd_sweep(sweep, std::cout, std::cerr);
    }
    if (*corners_cmd) {
        corners.limit = limit;
        corners.max_atoms = c_max_atoms;
        corners.max_segments = c_max_segments;
        corners.target = c_target;
        corners.abort_after = c_abort_after;
        return mmm::app::cmd_corners(corners, std::cout, std::cerr);
    }
    if (*sigma_cmd) return mmm::app::cmd_sigma(sigma, std::cout, std::cerr);
    verify.limit = limit;
    verify.full = tier == "full";
    return mmm::app::cmd_verify_paper(verify, std::cout, std::cerr);
}
