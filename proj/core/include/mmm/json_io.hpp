#pragma once

// Text encodings of the core types.
//
// Rationals travel as strings ("-325/16"), never as JSON numbers. Objects use
// ordered_json so key order, and therefore output bytes, are fixed.

#include <nlohmann/json.hpp>

#include "mmm/affine_form.hpp"
#include "mmm/certifier.hpp"
#include "mmm/interval.hpp"
#include "mmm/permutation.hpp"
#include "mmm/rational.hpp"
#include "mmm/trajectory.hpp"

namespace mmm {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const AffineForm& f);
AffineForm affine_from_json(const Json& j);

Json to_json(const RInterval& iv);
RInterval interval_from_json(const Json& j);

/// {"x", "L", "m", "points", "medians"}; L and m are null when the run did
/// not stabilize.
Json to_json(const Trajectory& t);

/// One piece-stream record.
Json to_json(const Piece& p, bool with_driving);
/// Inverse of to_json(Piece). Atoms read without a "driving" array get an
/// empty driving list.
Piece piece_from_json(const Json& j);

Json to_json(const SymbolicRun& run, const RInterval& reduced);
/// Debug dump: [{"source": n, "form": {...}}, ...]
Json chain_to_json(const Chain& chain);

Json to_json(const CycleForm& c);

Json to_json(const SweepState& s);
SweepState sweep_state_from_json(const Json& j);

}  // namespace mmm
