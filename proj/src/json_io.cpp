#include "cvdw/json_io.hpp"

#include "cvdw/errors.hpp"

#include <string>

namespace cvdw {

void to_json(Json& j, const ResidueSet& s) {
    j = Json{{"modulus", s.modulus()}, {"elements", s.values()}};
}

void from_json(const Json& j, ResidueSet& s) {
    s = ResidueSet(j.at("modulus").get<Residue>(), j.at("elements").get<std::vector<Residue>>());
}

void to_json(Json& j, const CyclicProgression& p) {
    j = Json{{"modulus", p.modulus()},
             {"elements", p.elements().values()},
             {"base", p.base()},
             {"diff", p.diff()}};
}

CyclicProgression progression_from_json(const Json& j) {
    const auto elements = j.get<ResidueSet>();
    auto p = make_progression(elements.modulus(), j.at("base").get<Residue>(),
                              j.at("diff").get<Residue>(),
                              static_cast<std::int64_t>(elements.size()));
    if (p.elements() != elements) throw InvalidArgument("(base, diff) does not generate elements");
    return p;
}

void to_json(Json& j, const DifferenceSet& d) {
    j = Json{{"modulus", d.modulus},
             {"k", d.length},
             {"values", d.values},
             {"method", std::string(to_string(d.method))}};
}

void from_json(const Json& j, DifferenceSet& d) {
    d.modulus = j.at("modulus").get<std::int64_t>();
    d.length = j.at("k").get<std::int64_t>();
    d.values = j.at("values").get<std::vector<std::int64_t>>();
    d.method = diff_method_from_string(j.at("method").get<std::string>());
}

void to_json(Json& j, const ConjectureReport& r) {
    j = Json{{"m", r.m},
             {"n", r.n},
             {"k", r.k},
             {"conjectured", r.conjectured},
             {"brute_force", r.brute_force},
             {"agrees", r.agrees},
             {"only_conjectured", r.only_conjectured},
             {"only_brute_force", r.only_brute_force}};
}

void from_json(const Json& j, ConjectureReport& r) {
    r.m = j.at("m").get<std::int64_t>();
    r.n = j.at("n").get<std::int64_t>();
    r.k = j.at("k").get<std::int64_t>();
    r.conjectured = j.at("conjectured").get<DifferenceSet>();
    r.brute_force = j.at("brute_force").get<DifferenceSet>();
    r.agrees = j.at("agrees").get<bool>();
    r.only_conjectured = j.at("only_conjectured").get<std::vector<std::int64_t>>();
    r.only_brute_force = j.at("only_brute_force").get<std::vector<std::int64_t>>();
}

void to_json(Json& j, const ForbiddenSet& f) {
    j = Json{{"m", f.m}, {"k", f.k}, {"modulus", f.modulus()}, {"diffs", f.diffs}};
    for (std::size_t i = 0; i < f.blocks.size(); ++i)
        j["F_" + std::to_string(i)] = f.blocks[i].values();
    j["block_count"] = f.blocks.size();
    j["union"] = f.members.values();
}

void from_json(const Json& j, ForbiddenSet& f) {
    f.m = j.at("m").get<std::int64_t>();
    f.k = j.at("k").get<std::int64_t>();
    const auto n = j.at("modulus").get<std::int64_t>();
    f.diffs = j.at("diffs").get<std::vector<std::int64_t>>();
    f.blocks.clear();
    const auto count = j.at("block_count").get<std::size_t>();
    for (std::size_t i = 0; i < count; ++i)
        f.blocks.emplace_back(n, j.at("F_" + std::to_string(i)).get<std::vector<Residue>>());
    f.members = ResidueSet(n, j.at("union").get<std::vector<Residue>>());
}

void to_json(Json& j, const BoundsReport& b) {
    j = Json{{"m", b.m},
             {"k", b.k},
             {"modulus", b.m * b.k},
             {"lower", b.lower},
             {"upper", b.upper},
             {"exact", b.exact ? Json(*b.exact) : Json(nullptr)},
             {"exactness_reason", std::string(to_string(b.reason))}};
}

void from_json(const Json& j, BoundsReport& b) {
    b.m = j.at("m").get<std::int64_t>();
    b.k = j.at("k").get<std::int64_t>();
    b.lower = j.at("lower").get<std::int64_t>();
    b.upper = j.at("upper").get<std::int64_t>();
    const auto& exact = j.at("exact");
    b.exact = exact.is_null() ? std::nullopt : std::optional<std::int64_t>(exact.get<std::int64_t>());
    b.reason = exactness_reason_from_string(j.at("exactness_reason").get<std::string>());
}

void to_json(Json& j, const IndependenceResult& r) {
    j = Json{{"modulus", r.modulus},
             {"k", r.length},
             {"value", r.value},
             {"witness", r.witness},
             {"status", std::string(to_string(r.status))},
             {"nodes_explored", r.nodes_explored},
             {"elapsed_us", r.elapsed.count()}};
}

void from_json(const Json& j, IndependenceResult& r) {
    r.modulus = j.at("modulus").get<std::int64_t>();
    r.length = j.at("k").get<std::int64_t>();
    r.value = j.at("value").get<std::int64_t>();
    r.witness = j.at("witness").get<ResidueSet>();
    r.status = search_status_from_string(j.at("status").get<std::string>());
    r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
    r.elapsed = std::chrono::microseconds(j.at("elapsed_us").get<std::int64_t>());
}

void to_json(Json& j, const ColoringResult& r) {
    j = Json{{"modulus", r.modulus},
             {"k", r.length},
             {"value", r.value},
             {"coloring", r.coloring},
             {"status", std::string(to_string(r.status))},
             {"nodes_explored", r.nodes_explored}};
}

void from_json(const Json& j, ColoringResult& r) {
    r.modulus = j.at("modulus").get<std::int64_t>();
    r.length = j.at("k").get<std::int64_t>();
    r.value = j.at("value").get<std::int64_t>();
    r.coloring = j.at("coloring").get<std::vector<std::int64_t>>();
    r.status = search_status_from_string(j.at("status").get<std::string>());
    r.nodes_explored = j.at("nodes_explored").get<std::uint64_t>();
}

void to_json(Json& j, const PartitionPlan& p) {
    Json parts = Json::array();
    for (const auto& part : p.parts)
        parts.push_back(Json{{"label", part.label}, {"elements", part.elements.values()}});
    j = Json{{"modulus", p.modulus()},
             {"k", p.k},
             {"m", p.m},
             {"regime", std::string(to_string(p.regime))},
             {"gamma", p.gamma},
             {"parts", parts}};
}

void from_json(const Json& j, PartitionPlan& p) {
    p.m = j.at("m").get<std::int64_t>();
    p.k = j.at("k").get<std::int64_t>();
    const auto n = j.at("modulus").get<std::int64_t>();
    if (n != p.m * p.k) throw InvalidArgument("partition modulus must equal m * k");
    p.regime = regime_from_string(j.at("regime").get<std::string>());
    p.gamma = j.at("gamma").get<std::int64_t>();
    p.parts.clear();
    for (const auto& part : j.at("parts"))
        p.parts.push_back({part.at("label").get<std::string>(),
                           ResidueSet(n, part.at("elements").get<std::vector<Residue>>())});
}

void to_json(Json& j, const WcBoundRow& r) {
    j = Json{{"k", r.k},
             {"r", r.r},
             {"strict_lower", r.strict_lower},
             {"m", r.m},
             {"provenance", std::string(to_string(r.provenance))}};
}

void from_json(const Json& j, WcBoundRow& r) {
    r.k = j.at("k").get<std::int64_t>();
    r.r = j.at("r").get<std::int64_t>();
    r.strict_lower = j.at("strict_lower").get<std::int64_t>();
    r.m = j.at("m").get<std::int64_t>();
    r.provenance = wc_provenance_from_string(j.at("provenance").get<std::string>());
}

}  // namespace cvdw
