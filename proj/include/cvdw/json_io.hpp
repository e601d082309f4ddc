#pragma once

// JSON forms of the library's value types. Residue sets serialize as
// {"modulus": N, "elements": [...]}.

#include "cvdw/coloring.hpp"
#include "cvdw/construction.hpp"
#include "cvdw/progressions.hpp"
#include "cvdw/search.hpp"

#include "json.hpp"

namespace cvdw {

using Json = nlohmann::json;

void to_json(Json& j, const ResidueSet& s);
void from_json(const Json& j, ResidueSet& s);

void to_json(Json& j, const CyclicProgression& p);
CyclicProgression progression_from_json(const Json& j);

void to_json(Json& j, const DifferenceSet& d);
void from_json(const Json& j, DifferenceSet& d);

void to_json(Json& j, const ConjectureReport& r);
void from_json(const Json& j, ConjectureReport& r);

/// Blocks are emitted individually as "F_0", "F_1", ... plus "union".
void to_json(Json& j, const ForbiddenSet& f);
void from_json(const Json& j, ForbiddenSet& f);

void to_json(Json& j, const BoundsReport& b);
void from_json(const Json& j, BoundsReport& b);

void to_json(Json& j, const IndependenceResult& r);
void from_json(const Json& j, IndependenceResult& r);

/// The coloring is an array of color indices of length N.
void to_json(Json& j, const ColoringResult& r);
void from_json(const Json& j, ColoringResult& r);

/// {"modulus": N, "k": k, "m": m, "regime": ..., "gamma": g,
///  "parts": [{"label": "B", "elements": [...]}, ...]}
void to_json(Json& j, const PartitionPlan& p);
void from_json(const Json& j, PartitionPlan& p);

void to_json(Json& j, const WcBoundRow& r);
void from_json(const Json& j, WcBoundRow& r);

}  // namespace cvdw
