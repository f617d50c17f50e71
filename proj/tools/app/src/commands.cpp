#include "mmm_app/commands.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <streambuf>

#include <mmm/json_io.hpp>
#include <mmm/permutation.hpp>

#include "mmm_app/fixtures.hpp"
#include "mmm_app/journal.hpp"

namespace mmm::app {

namespace {

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

Rational parse_arg(const std::string& text, const char* what) {
    try {
        return Rational::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(std::string(what) + ": " + e.what());
    }
}

SweepConfig make_config(const SweepOptions& opts, Side direction) {
    SweepConfig cfg;
    cfg.seed = parse_arg(opts.seed, "--seed");
    cfg.direction = direction;
    cfg.eps0 = parse_arg(opts.eps0, "--eps0");
    cfg.limit = opts.limit;
    cfg.oracle_samples = opts.oracle_samples;
    cfg.stop.max_atoms = opts.max_atoms;
    cfg.stop.max_segments = opts.max_segments;
    if (opts.target) cfg.stop.target = parse_arg(*opts.target, "--target");
    try {
        cfg.eps_restart = eps_restart_from_string(opts.eps_restart);
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

Side parse_side(const std::string& text) {
    try {
        return side_from_string(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

bool piece_before(const Piece& a, const Piece& b) {
    const Rational lo_a = piece_lo(a);
    const Rational lo_b = piece_lo(b);
    if (lo_a != lo_b) return lo_a < lo_b;
    // A singleton {p} precedes an atom that opens at p.
    return std::holds_alternative<SingletonPiece>(a) && !std::holds_alternative<SingletonPiece>(b);
}

// Copies everything written to two stream buffers; the second may be null.
struct TeeBuf : std::streambuf {
    std::streambuf* a = nullptr;
    std::streambuf* b = nullptr;

    int overflow(int c) override {
        if (c == EOF) return 0;
        if (a->sputc(static_cast<char>(c)) == EOF) return EOF;
        if (b && b->sputc(static_cast<char>(c)) == EOF) return EOF;
        return c;
    }
    int sync() override {
        const int r = a->pubsync();
        return (b && b->pubsync() != 0) ? -1 : r;
    }
};

// Runs the error-mapping shared by all commands.
template <class F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const NotTerminatedError& e) {
        err << "error: " << e.what() << '\n';
        return kNotTerminated;
    } catch (const EpsUnderflowError& e) {
        err << "error: " << e.what() << " (eps " << e.eps().str() << ")\n";
        return kEpsUnderflow;
    } catch (const FixtureError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kFailure;
    }
}

}  // namespace

std::vector<Piece> read_pieces(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open piece file " + path.string());
    std::vector<Piece> pieces;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            pieces.push_back(piece_from_json(Json::parse(line)));
        } catch (const std::exception& e) {
            throw UsageError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return pieces;
}

std::vector<Piece> merge_sides(std::vector<Piece> left, std::vector<Piece> right) {
    if (left.empty()) return right;
    if (right.empty()) return left;
    const auto contains_end = [](const Piece& p, bool at_hi) {
        if (std::holds_alternative<SingletonPiece>(p)) return true;
        const auto& iv = std::get<Atom>(p).interval;
        return at_hi ? iv.hi_closed() : iv.lo_closed();
    };
    const bool left_single = std::holds_alternative<SingletonPiece>(left.back());
    const bool right_single = std::holds_alternative<SingletonPiece>(right.front());
    if (right_single && contains_end(left.back(), true)) {
        right.erase(right.begin());
    } else if (left_single && contains_end(right.front(), false)) {
        left.pop_back();
    } else if (!left_single && !right_single && contains_end(left.back(), true) && contains_end(right.front(), false)) {
        auto& atom = std::get<Atom>(right.front());
        atom.interval = atom.interval.with_lo_closed(false);
    }
    std::move(right.begin(), right.end(), std::back_inserter(left));
    return left;
}

void write_summary(std::ostream& out, std::span<const Piece> pieces) {
    const Aggregate agg = aggregate(pieces);
    std::size_t atoms = 0;
    for (const auto& p : pieces) atoms += std::holds_alternative<Atom>(p) ? 1 : 0;
    for (std::size_t i = 0; i < agg.subintervals.size(); ++i) {
        const auto& s = agg.subintervals[i];
        out << Json{{"subinterval", i + 1},
                    {"interval", to_json(s.interval)},
                    {"L", s.length},
                    {"atoms", s.atoms.size()}}
                   .dump()
            << '\n';
    }
    for (std::size_t i = 0; i < agg.segments.size(); ++i) {
        const auto& s = agg.segments[i];
        out << Json{{"segment", i + 1}, {"interval", to_json(s.interval)}, {"m", to_json(s.m_form)}}.dump() << '\n';
    }
    for (const auto& c : agg.corners) out << Json{{"corner", c.str()}}.dump() << '\n';
    out << Json{{"pieces", pieces.size()}, {"atoms", atoms}, {"subintervals", agg.subintervals.size()},
                {"segments", agg.segments.size()}, {"corners", agg.corners.size()}}
               .dump()
        << '\n';
}

int cmd_traj(const TrajOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const Rational x = parse_arg(opts.x, "x");
        if (!(Rational(0) < x && x < Rational(1))) throw UsageError("x must lie strictly between 0 and 1");
        const Trajectory t = run_trajectory(x, opts.limit);
        Json j;
        j["L"] = t.terminated ? Json(t.length) : Json(nullptr);
        j["m"] = t.terminated ? Json(t.limit.str()) : Json(nullptr);
        if (opts.points) {
            const Json full = to_json(t);
            j["points"] = full["points"];
            j["medians"] = full["medians"];
        }
        out << j.dump() << '\n';
        if (!t.terminated) {
            err << "error: no stabilization within " << opts.limit.threshold() << " points\n";
            return int(kNotTerminated);
        }
        return int(kOk);
    });
}

int cmd_sweep(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const SweepConfig cfg = make_config(opts, parse_side(opts.direction));
        if (opts.resume && !opts.out) throw UsageError("--resume needs --out");

        std::vector<Piece> pieces;
        std::optional<Sweeper> sweeper;
        std::ofstream file;
        std::filesystem::path journal;
        const std::string hash = config_hash(cfg);

        if (opts.out) {
            journal = journal_path_for(*opts.out);
            if (opts.resume) {
                const auto rec = read_journal(journal);
                if (!rec) throw UsageError("no journal at " + journal.string());
                if (rec->config_hash != hash)
                    throw UsageError("journal " + journal.string() + " belongs to a different sweep configuration");
                if (!std::filesystem::exists(*opts.out) || std::filesystem::file_size(*opts.out) < rec->offset)
                    throw UsageError("piece file " + opts.out->string() + " is shorter than the journal records");
                // Anything past the journaled offset was written after the last checkpoint.
                std::filesystem::resize_file(*opts.out, rec->offset);
                pieces = read_pieces(*opts.out);
                SweepState state = rec->state;
                state.finished = false;  // stop rules may have changed
                sweeper.emplace(cfg, std::move(state));
                file.open(*opts.out, std::ios::app | std::ios::binary);
            } else {
                file.open(*opts.out, std::ios::trunc | std::ios::binary);
                sweeper.emplace(cfg);
                write_journal(journal, {hash, sweeper->state(), 0});
            }
            if (!file) throw UsageError("cannot write " + opts.out->string());
        } else {
            sweeper.emplace(cfg);
        }

        while (!sweeper->done()) {
            auto batch = sweeper->step();
            if (file.is_open()) {
                for (const auto& p : batch) file << to_json(p, opts.with_driving).dump() << '\n';
                file.flush();
                if (!file) throw std::runtime_error("write to " + opts.out->string() + " failed");
            }
            std::move(batch.begin(), batch.end(), std::back_inserter(pieces));
            if (opts.abort_after && pieces.size() >= *opts.abort_after) std::_Exit(86);
            if (file.is_open())
                write_journal(journal, {hash, sweeper->state(), static_cast<std::uint64_t>(file.tellp())});
        }

        write_summary(out, ascending(std::move(pieces), cfg.direction));
        return int(kOk);
    });
}

int cmd_corners(const SweepOptions& opts, std::ostream& out, std::ostream& err) {
    if (opts.direction != "both") return cmd_sweep(opts, out, err);
    return guarded(err, [&] {
        if (opts.resume) throw UsageError("--resume is not supported with --direction both");
        const SweepConfig configs[] = {make_config(opts, Side::left), make_config(opts, Side::right)};
        auto results = sweep_concurrently(configs);
        std::vector<Piece> merged =
            merge_sides(ascending(std::move(results[0]), Side::left), std::move(results[1]));
        if (opts.out) {
            std::ofstream file(*opts.out, std::ios::trunc | std::ios::binary);
            for (const auto& p : merged) file << to_json(p, opts.with_driving).dump() << '\n';
            if (!file) throw UsageError("cannot write " + opts.out->string());
        }
        write_summary(out, merged);
        return int(kOk);
    });
}

int cmd_sigma(const SigmaOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        std::vector<Piece> pieces = read_pieces(opts.in);
        for (const auto& p : pieces)
            if (const auto* a = std::get_if<Atom>(&p); a && a->driving.size() == 0)
                throw UsageError(opts.in.string() + " has no driving lists (record the sweep with --with-driving)");
        std::sort(pieces.begin(), pieces.end(), piece_before);
        const Aggregate agg = aggregate(pieces);
        if (opts.subinterval < 1 || opts.subinterval > agg.subintervals.size())
            throw UsageError("subinterval index must lie in 1.." + std::to_string(agg.subintervals.size()));
        const auto& atoms = agg.subintervals[opts.subinterval - 1].atoms;
        const auto sigmas = sigma_sequence(atoms);
        if (opts.table) out << "j\tcycles\n";
        for (std::size_t j = 0; j < sigmas.size(); ++j) {
            if (opts.table) {
                out << j + 1 << '\t';
                for (const auto& cycle : sigmas[j].cycles) {
                    out << '(';
                    for (std::size_t k = 0; k < cycle.size(); ++k) out << (k ? "," : "") << cycle[k];
                    out << ')';
                }
                out << '\n';
            } else {
                out << Json{{"j", j + 1}, {"cycles", to_json(sigmas[j])}}.dump() << '\n';
            }
        }
        return int(kOk);
    });
}

int cmd_verify_paper(const VerifyPaperOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        const FixtureSet set = load_fixtures(opts.fixtures);
        VerifyOptions vo;
        vo.full = opts.full;
        vo.samples = opts.samples;
        vo.limit = opts.limit;
        try {
            vo.eps_restart = eps_restart_from_string(opts.eps_restart);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }

        std::ofstream report_file;
        if (opts.report) {
            report_file.open(*opts.report, std::ios::trunc);
            if (!report_file) throw UsageError("cannot write " + opts.report->string());
        }
        TeeBuf tee;
        tee.a = out.rdbuf();
        tee.b = opts.report ? report_file.rdbuf() : nullptr;
        std::ostream report(&tee);

        const VerifySummary summary = verify_fixtures(set, vo, report);
        report.flush();
        if (summary.failed > 0) {
            err << summary.failed << " fixture(s) failed\n";
            return int(kFixtureFailure);
        }
        return int(kOk);
    });
}

}  // namespace mmm::app
