#include "mmm_app/fixtures.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

namespace mmm::app {

namespace {

Tier tier_of(const Json& j) {
    const std::string t = j.value("tier", std::string("quick"));
    if (t == "quick") return Tier::quick;
    if (t == "long") return Tier::long_;
    throw std::invalid_argument("unknown tier '" + t + "'");
}

std::vector<Rational> rationals(const Json& arr) {
    std::vector<Rational> out;
    for (const auto& v : arr) out.push_back(rational_from_json(v));
    return out;
}

Json rational_array(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

const PieceFixture& FixtureSet::piece(const std::string& id) const {
    for (const auto& p : pieces)
        if (p.id == id) return p;
    throw FixtureError("no piece fixture with id '" + id + "'");
}

FixtureSet parse_fixtures(std::istream& in) {
    FixtureSet set;
    std::set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        try {
            const Json j = Json::parse(line);
            const std::string kind = j.at("kind").get<std::string>();
            const std::string id = j.at("id").get<std::string>();
            if (!ids.insert(id).second) throw std::invalid_argument("duplicate id '" + id + "'");

            if (kind == "trajectory") {
                TrajectoryFixture f{id, rational_from_json(j.at("x")), j.at("L").get<std::size_t>(),
                                    rational_from_json(j.at("m")), {}, tier_of(j)};
                if (j.contains("points")) f.points = rationals(j.at("points"));
                set.trajectories.push_back(std::move(f));
            } else if (kind == "piece") {
                PieceFixture f{id,
                               rational_from_json(j.at("anchor")),
                               j.at("side").get<std::string>(),
                               interval_from_json(j.at("interval")),
                               affine_from_json(j.at("m")),
                               std::nullopt,
                               tier_of(j),
                               j.value("derived", false)};
                if (j.contains("L")) f.length = j.at("L").get<std::size_t>();
                set.pieces.push_back(std::move(f));
            } else if (kind == "corner") {
                CornerFixture f;
                f.id = id;
                f.point = rational_from_json(j.at("point"));
                const auto& between = j.at("between");
                if (!between.is_array() || between.size() != 2)
                    throw std::invalid_argument("'between' must list two piece ids");
                f.between[0] = between[0].get<std::string>();
                f.between[1] = between[1].get<std::string>();
                f.exclusive_group = j.value("exclusive_group", std::string());
                f.corollary = j.value("corollary", false);
                set.corners.push_back(std::move(f));
            } else if (kind == "sweep") {
                SweepFixture f;
                f.id = id;
                f.seed = rational_from_json(j.at("seed"));
                f.direction = side_from_string(j.at("direction").get<std::string>());
                f.max_segments = j.at("max_segments").get<std::size_t>();
                f.corners = rationals(j.at("corners"));
                f.forms = j.at("forms").get<std::vector<std::string>>();
                f.resolves = j.value("resolves", std::string());
                f.tier = tier_of(j);
                set.sweeps.push_back(std::move(f));
            } else {
                throw std::invalid_argument("unknown kind '" + kind + "'");
            }
        } catch (const std::exception& e) {
            throw FixtureError("fixture line " + std::to_string(lineno) + ": " + e.what());
        }
    }

    // Cross references must resolve before anything runs.
    for (const auto& c : set.corners) {
        set.piece(c.between[0]);
        set.piece(c.between[1]);
    }
    for (const auto& s : set.sweeps)
        for (const auto& id : s.forms) set.piece(id);
    return set;
}

FixtureSet load_fixtures(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture file " + path.string());
    return parse_fixtures(in);
}

std::vector<Rational> piece_samples(const RInterval& iv, std::size_t count) {
    if (iv.is_point()) return {iv.lo()};
    std::vector<Rational> out;
    const long fractions[][2] = {{1, 2}, {1, 4}, {3, 4}};
    for (std::size_t i = 0; i < std::min<std::size_t>(count, 3); ++i)
        out.push_back(iv.at_fraction(fractions[i][0], fractions[i][1]));
    return out;
}

VerifySummary verify_fixtures(const FixtureSet& set, const VerifyOptions& opts, std::ostream& report) {
    VerifySummary summary;
    const auto emit = [&](Json line) {
        const std::string status = line.at("status").get<std::string>();
        if (status == "pass") ++summary.passed;
        else if (status == "fail") ++summary.failed;
        else if (status == "skipped") ++summary.skipped;
        report << line.dump() << '\n' << std::flush;
    };
    const auto skipped = [&](const std::string& id, const char* kind) {
        emit(Json{{"id", id}, {"kind", kind}, {"status", "skipped"}, {"reason", "long tier"}});
    };
    const auto runnable = [&](Tier t) { return opts.full || t == Tier::quick; };

    for (const auto& f : set.trajectories) {
        if (!runnable(f.tier)) {
            skipped(f.id, "trajectory");
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        const Trajectory t = run_trajectory(f.x, opts.limit);
        bool ok = t.terminated && t.length == f.length && t.limit == f.m;
        if (!f.points.empty()) ok = ok && t.points == f.points;
        Json line{{"id", f.id}, {"kind", "trajectory"}, {"status", ok ? "pass" : "fail"},
                  {"x", f.x.str()},
                  {"L", t.terminated ? Json(t.length) : Json(nullptr)},
                  {"m", t.terminated ? Json(t.limit.str()) : Json(nullptr)},
                  {"expected_L", f.length}, {"expected_m", f.m.str()}};
        line["seconds"] = seconds_since(t0);
        emit(std::move(line));
    }

    for (const auto& f : set.pieces) {
        if (!runnable(f.tier)) {
            skipped(f.id, "piece");
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        bool ok = true;
        Json samples = Json::array();
        for (const auto& s : piece_samples(f.interval, opts.samples)) {
            const auto ts = std::chrono::steady_clock::now();
            const Trajectory t = run_trajectory(s, opts.limit);
            const Rational expected = f.m_form(s);
            const bool good = t.terminated && t.limit == expected && (!f.length || t.length == *f.length);
            ok = ok && good;
            samples.push_back(Json{{"x", s.str()},
                                   {"L", t.terminated ? Json(t.length) : Json(nullptr)},
                                   {"m", t.terminated ? Json(t.limit.str()) : Json(nullptr)},
                                   {"expected_m", expected.str()},
                                   {"ok", good},
                                   {"seconds", seconds_since(ts)}});
        }
        Json line{{"id", f.id}, {"kind", "piece"}, {"status", ok ? "pass" : "fail"}, {"samples", std::move(samples)}};
        line["seconds"] = seconds_since(t0);
        emit(std::move(line));
    }

    // Corners are exact algebra, so every tier runs them.
    std::map<std::string, std::vector<std::string>> holds_in_group;
    std::map<std::string, std::size_t> group_size;
    std::size_t corollary_total = 0;
    std::size_t corollary_ok = 0;
    for (const auto& c : set.corners) {
        const auto& f = set.piece(c.between[0]).m_form;
        const auto& g = set.piece(c.between[1]).m_form;
        const auto meet = affine_intersection(f, g);
        const bool ok = meet && *meet == c.point;
        Json line{{"id", c.id}, {"kind", "corner"}, {"point", c.point.str()},
                  {"intersection", meet ? Json(meet->str()) : Json(nullptr)}};
        if (c.exclusive_group.empty()) {
            line["status"] = ok ? "pass" : "fail";
        } else {
            ++group_size[c.exclusive_group];
            if (ok) holds_in_group[c.exclusive_group].push_back(c.id);
            line["status"] = ok ? "pass" : "rejected";
            line["exclusive_group"] = c.exclusive_group;
        }
        if (c.corollary) {
            ++corollary_total;
            if (ok) ++corollary_ok;
        }
        emit(std::move(line));
    }
    for (const auto& [group, size] : group_size) {
        const auto& holders = holds_in_group[group];
        Json line{{"id", group}, {"kind", "exclusive-group"}, {"alternatives", size}};
        if (holders.size() == 1) {
            line["status"] = "pass";
            line["supported"] = holders.front();
            summary.supported.emplace_back(group, holders.front());
        } else {
            line["status"] = "fail";
            line["holding"] = holders;
        }
        emit(std::move(line));
    }
    if (corollary_total > 0) {
        emit(Json{{"id", "corollary-corners"}, {"kind", "corner-set"},
                  {"status", corollary_ok == corollary_total ? "pass" : "fail"},
                  {"confirmed", corollary_ok}, {"listed", corollary_total}});
    }

    for (const auto& f : set.sweeps) {
        if (!runnable(f.tier)) {
            skipped(f.id, "sweep");
            continue;
        }
        const auto t0 = std::chrono::steady_clock::now();
        SweepConfig cfg;
        cfg.seed = f.seed;
        cfg.direction = f.direction;
        cfg.limit = opts.limit;
        cfg.eps_restart = opts.eps_restart;
        cfg.stop.max_segments = f.max_segments;
        const Aggregate agg = aggregate(ascending(sweep(cfg), f.direction));

        // Sweep order: a left sweep meets corners from right to left.
        std::vector<Rational> corners = agg.corners;
        std::vector<AffineForm> forms;
        for (const auto& s : agg.segments) forms.push_back(s.m_form);
        if (f.direction == Side::left) {
            std::reverse(corners.begin(), corners.end());
            std::reverse(forms.begin(), forms.end());
        }

        bool ok = corners.size() >= f.corners.size() &&
                  std::equal(f.corners.begin(), f.corners.end(), corners.begin()) && forms.size() == f.forms.size();
        for (std::size_t i = 0; ok && i < forms.size(); ++i) ok = forms[i] == set.piece(f.forms[i]).m_form;

        Json forms_json = Json::array();
        for (const auto& m : forms) forms_json.push_back(to_json(m));
        Json line{{"id", f.id}, {"kind", "sweep"}, {"corners", rational_array(corners)}, {"forms", forms_json}};
        if (!f.resolves.empty()) {
            std::vector<std::string> seen;
            for (const auto& c : set.corners)
                if (c.exclusive_group == f.resolves && std::find(corners.begin(), corners.end(), c.point) != corners.end())
                    seen.push_back(c.id);
            line["resolves"] = f.resolves;
            if (seen.size() == 1) line["supported"] = seen.front();
            else ok = false;
        }
        line["status"] = ok ? "pass" : "fail";
        line["seconds"] = seconds_since(t0);
        emit(std::move(line));
    }

    report << Json{{"passed", summary.passed}, {"failed", summary.failed}, {"skipped", summary.skipped}}.dump()
           << '\n';
    return summary;
}

}  // namespace mmm::app
