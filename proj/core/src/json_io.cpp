#include "mmm/json_io.hpp"

#include <stdexcept>

namespace mmm {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
    if (!j.is_string()) throw std::invalid_argument("expected a rational as a string, got " + j.dump());
    return Rational::parse(j.get<std::string>());
}

Json to_json(const AffineForm& f) { return Json{{"a", to_json(f.slope)}, {"b", to_json(f.intercept)}}; }

AffineForm affine_from_json(const Json& j) {
    return {rational_from_json(j.at("a")), rational_from_json(j.at("b"))};
}

Json to_json(const RInterval& iv) {
    return Json{{"lo", to_json(iv.lo())},
                {"hi", to_json(iv.hi())},
                {"lo_closed", iv.lo_closed()},
                {"hi_closed", iv.hi_closed()}};
}

RInterval interval_from_json(const Json& j) {
    return {rational_from_json(j.at("lo")), rational_from_json(j.at("hi")), j.at("lo_closed").get<bool>(),
            j.at("hi_closed").get<bool>()};
}

namespace {

Json rational_list(const std::vector<Rational>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(v.str());
    return arr;
}

}  // namespace

Json to_json(const Trajectory& t) {
    Json j;
    j["x"] = to_json(t.x);
    j["L"] = t.terminated ? Json(t.length) : Json(nullptr);
    j["m"] = t.terminated ? to_json(t.limit) : Json(nullptr);
    j["points"] = rational_list(t.points);
    j["medians"] = rational_list(t.medians);
    return j;
}

Json to_json(const Piece& p, bool with_driving) {
    Json j;
    if (const auto* a = std::get_if<Atom>(&p)) {
        j["kind"] = "atom";
        j["interval"] = to_json(a->interval);
        j["L"] = a->length;
        j["m"] = to_json(a->m_form);
        j["driving_len"] = a->driving.size();
        if (with_driving) j["driving"] = a->driving.order();
    } else {
        const auto& s = std::get<SingletonPiece>(p);
        j["kind"] = "singleton";
        j["interval"] = to_json(RInterval::point(s.point));
        j["L"] = s.length;
        // A single point pins m to a constant.
        j["m"] = to_json(AffineForm::constant(s.m));
        j["driving_len"] = s.length;
    }
    return j;
}

Piece piece_from_json(const Json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const RInterval iv = interval_from_json(j.at("interval"));
    const std::size_t length = j.at("L").get<std::size_t>();
    const AffineForm m = affine_from_json(j.at("m"));
    if (kind == "singleton") {
        if (!iv.is_point()) throw std::invalid_argument("singleton record with a non-point interval");
        return SingletonPiece{iv.lo(), length, m(iv.lo())};
    }
    if (kind != "atom") throw std::invalid_argument("unknown piece kind '" + kind + "'");
    DrivingList driving;
    if (j.contains("driving")) driving = DrivingList(j.at("driving").get<std::vector<std::uint32_t>>());
    return Atom{iv, length, m, std::move(driving)};
}

Json to_json(const SymbolicRun& run, const RInterval& reduced) {
    return Json{{"L", run.length}, {"m", to_json(run.m_form)}, {"interval", to_json(reduced)}};
}

Json chain_to_json(const Chain& chain) {
    Json arr = Json::array();
    for (const auto& e : chain) arr.push_back(Json{{"source", e.source}, {"form", to_json(e.form)}});
    return arr;
}

Json to_json(const CycleForm& c) {
    Json arr = Json::array();
    for (const auto& cycle : c.cycles) arr.push_back(cycle);
    return arr;
}

Json to_json(const SweepState& s) {
    return Json{{"frontier", to_json(s.frontier)},
                {"eps", to_json(s.eps)},
                {"atoms", s.atoms},
                {"pieces", s.pieces},
                {"segments", s.segments},
                {"frontier_claimed", s.frontier_claimed},
                {"last_form", s.last_form ? to_json(*s.last_form) : Json(nullptr)},
                {"finished", s.finished}};
}

SweepState sweep_state_from_json(const Json& j) {
    SweepState s;
    s.frontier = rational_from_json(j.at("frontier"));
    s.eps = rational_from_json(j.at("eps"));
    s.atoms = j.at("atoms").get<std::size_t>();
    s.pieces = j.at("pieces").get<std::size_t>();
    s.segments = j.at("segments").get<std::size_t>();
    s.frontier_claimed = j.at("frontier_claimed").get<bool>();
    if (!j.at("last_form").is_null()) s.last_form = affine_from_json(j.at("last_form"));
    s.finished = j.at("finished").get<bool>();
    return s;
}

}  // namespace mmm
