#include "cvdw/cli.hpp"

#include "cvdw/cache.hpp"
#include "cvdw/coloring.hpp"
#include "cvdw/construction.hpp"
#include "cvdw/errors.hpp"
#include "cvdw/json_io.hpp"
#include "cvdw/progressions.hpp"
#include "cvdw/search.hpp"

#include "CLI11.hpp"

#include <fmt/format.h>

#include <charconv>
#include <fstream>
#include <functional>
#include <ostream>

namespace cvdw::cli {

namespace {

struct Context {
    RunConfig config;
    std::ostream& out;
    std::ostream& err;
    std::optional<ResultCache> cache;

    OutputFormat format_or(OutputFormat fallback) const {
        return config.output_format.value_or(fallback);
    }

    SearchBudget budget() const {
        return {config.node_budget, std::chrono::milliseconds(config.time_budget_seconds * 1000)};
    }

    // Only exact records are served; bound-only ones are recomputed.
    std::optional<CacheRecord> cached(const Json& key) {
        if (!cache) return std::nullopt;
        auto hit = cache->lookup(key);
        if (!hit || !hit->is_exact()) return std::nullopt;
        err << "cache hit: " << key.dump() << '\n';
        return hit;
    }

    void remember(const Json& key, const Json& value, std::string status) {
        if (!cache) return;
        cache->store({key, value, std::move(status), std::string(kToolVersion), utc_timestamp()});
    }
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    return quoted + '"';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << '\n';
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string braced(const std::vector<std::int64_t>& v) { return format_braced(v); }
std::string joined(const std::vector<std::int64_t>& v) { return format_residues(v); }

// A table is rendered the same way for every sweep: CSV with a header, a
// JSON array of row objects, or aligned text columns.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<Json> json_rows;

    void render(std::ostream& out, OutputFormat format) const {
        switch (format) {
            case OutputFormat::csv:
                write_csv_row(out, header);
                for (const auto& row : rows) write_csv_row(out, row);
                break;
            case OutputFormat::json:
                write_json(out, Json(json_rows));
                break;
            case OutputFormat::text: {
                std::vector<std::size_t> width(header.size());
                for (std::size_t c = 0; c < header.size(); ++c) {
                    width[c] = header[c].size();
                    for (const auto& row : rows) width[c] = std::max(width[c], row[c].size());
                }
                const auto line = [&](const std::vector<std::string>& cells) {
                    std::string s;
                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        if (c) s += "  ";
                        s += fmt::format("{:<{}}", cells[c], width[c]);
                    }
                    while (!s.empty() && s.back() == ' ') s.pop_back();
                    out << s << '\n';
                };
                line(header);
                for (const auto& row : rows) line(row);
                break;
            }
        }
    }
};

// ---- diffs ---------------------------------------------------------------

int cmd_diffs(Context& ctx, std::int64_t n, std::int64_t k, const std::string& method) {
    const auto format = ctx.format_or(OutputFormat::text);
    if (method == "both") {
        const auto brute = difference_gcd_set(n, k, DiffMethod::brute_force);
        const auto closed = difference_gcd_set(n, k, DiffMethod::closed_form);
        const bool agree = brute.values == closed.values;
        switch (format) {
            case OutputFormat::text:
                if (agree)
                    ctx.out << braced(brute.values) << " agree=true\n";
                else
                    ctx.out << "brute_force=" << braced(brute.values)
                            << " closed_form=" << braced(closed.values) << " agree=false\n";
                break;
            case OutputFormat::json:
                write_json(ctx.out, {{"brute_force", brute}, {"closed_form", closed}, {"agree", agree}});
                break;
            case OutputFormat::csv:
                write_csv_row(ctx.out, {"modulus", "k", "brute_force", "closed_form", "agree"});
                write_csv_row(ctx.out, {std::to_string(n), std::to_string(k), joined(brute.values),
                                        joined(closed.values), agree ? "true" : "false"});
                break;
        }
        return kExitOk;
    }
    const auto d = difference_gcd_set(n, k, diff_method_from_string(method));
    switch (format) {
        case OutputFormat::text:
            ctx.out << braced(d.values) << " method=" << to_string(d.method) << '\n';
            break;
        case OutputFormat::json:
            write_json(ctx.out, d);
            break;
        case OutputFormat::csv:
            write_csv_row(ctx.out, {"modulus", "k", "method", "values"});
            write_csv_row(ctx.out, {std::to_string(n), std::to_string(k),
                                    std::string(to_string(d.method)), joined(d.values)});
            break;
    }
    return kExitOk;
}

// ---- construct -----------------------------------------------------------

int cmd_construct(Context& ctx, std::int64_t m, std::int64_t k, bool verify) {
    const auto forbidden = build_forbidden(m, k);
    const auto bounds = theorem_bounds(m, k);
    std::optional<CyclicProgression> violation;
    if (verify) violation = find_contained_progression(forbidden.members.complement(), k);
    const std::string verdict = !verify ? "" : violation ? "fail" : "pass";
    const std::string exact = bounds.exact ? std::to_string(*bounds.exact) : "none";

    switch (ctx.format_or(OutputFormat::text)) {
        case OutputFormat::text:
            ctx.out << fmt::format("m={} k={} N={}\n", m, k, m * k);
            ctx.out << "D=" << braced(forbidden.diffs) << '\n';
            for (std::size_t i = 0; i < forbidden.blocks.size(); ++i)
                ctx.out << "F_" << i << '=' << format_residues(forbidden.blocks[i]) << '\n';
            ctx.out << "F=" << format_residues(forbidden.members) << '\n';
            ctx.out << "|F|=" << forbidden.members.size() << '\n';
            ctx.out << fmt::format("bounds=[{},{}]\n", bounds.lower, bounds.upper);
            ctx.out << "exact=" << exact;
            if (bounds.exact) ctx.out << " reason=" << to_string(bounds.reason);
            ctx.out << '\n';
            if (verify) {
                ctx.out << "verify=" << verdict;
                if (violation) ctx.out << " witness=" << format_braced(violation->elements().elements());
                ctx.out << '\n';
            }
            break;
        case OutputFormat::json: {
            Json j{{"forbidden", forbidden}, {"bounds", bounds}};
            if (verify) j["verify"] = verdict;
            write_json(ctx.out, j);
            break;
        }
        case OutputFormat::csv:
            write_csv_row(ctx.out, {"m", "k", "modulus", "forbidden", "forbidden_size", "lower",
                                    "upper", "exact", "verify"});
            write_csv_row(ctx.out, {std::to_string(m), std::to_string(k), std::to_string(m * k),
                                    format_residues(forbidden.members),
                                    std::to_string(forbidden.members.size()),
                                    std::to_string(bounds.lower), std::to_string(bounds.upper),
                                    exact, verdict});
            break;
    }
    if (violation) {
        ctx.err << "error: the complement of F contains a " << k << "-term progression\n";
        return kExitInternal;
    }
    return kExitOk;
}

// ---- exact ---------------------------------------------------------------

Json exact_key(const std::string& what, std::int64_t n, std::int64_t k) {
    return {{"op", "exact"}, {"what", what}, {"n", n}, {"k", k}};
}

void render_exact(Context& ctx, const std::string& what, const Json& value) {
    const auto n = value.at("modulus").get<std::int64_t>();
    const auto k = value.at("k").get<std::int64_t>();
    const auto v = value.at("value").get<std::int64_t>();
    const auto status = value.at("status").get<std::string>();
    const auto nodes = value.at("nodes_explored").get<std::uint64_t>();
    switch (ctx.format_or(OutputFormat::text)) {
        case OutputFormat::text:
            if (what == "b") {
                const auto witness = value.at("witness").get<ResidueSet>();
                ctx.out << fmt::format("b({},{})={} status={} nodes={}\n", n, k, v, status, nodes);
                ctx.out << "witness=" << format_braced(witness.elements()) << '\n';
            } else {
                ctx.out << fmt::format("chi({},{})={} status={} nodes={}\n", n, k, v, status, nodes);
                ctx.out << "coloring="
                        << format_residues(value.at("coloring").get<std::vector<std::int64_t>>())
                        << '\n';
            }
            break;
        case OutputFormat::json:
            write_json(ctx.out, value);
            break;
        case OutputFormat::csv:
            write_csv_row(ctx.out, {"what", "modulus", "k", "value", "status", "nodes_explored",
                                    what == "b" ? "witness" : "coloring"});
            write_csv_row(
                ctx.out,
                {what, std::to_string(n), std::to_string(k), std::to_string(v), status,
                 std::to_string(nodes),
                 what == "b" ? format_residues(value.at("witness").get<ResidueSet>())
                             : joined(value.at("coloring").get<std::vector<std::int64_t>>())});
            break;
    }
}

int cmd_exact(Context& ctx, std::int64_t n, std::int64_t k, const std::string& what, bool force) {
    if (k < 3) throw InvalidArgument("k must be >= 3");
    if (n < 1) throw InvalidArgument("N must be positive");
    if (n > ctx.config.max_exact_N && !force)
        throw InvalidArgument(fmt::format("N={} exceeds the exact-search cap {}; pass --force", n,
                                          ctx.config.max_exact_N));

    const auto key = exact_key(what, n, k);
    if (auto hit = ctx.cached(key)) {
        render_exact(ctx, what, hit->value);
        return kExitOk;
    }

    Json value;
    std::string status;
    if (what == "b") {
        const auto r = independence_number(n, k, ctx.budget());
        value = r;
        status = to_string(r.status);
    } else {
        const auto r = chromatic_number(n, k, ctx.budget());
        if (!is_proper_coloring(n, k, r.coloring))
            throw InternalInconsistency("search returned an improper coloring");
        value = r;
        status = to_string(r.status);
    }
    ctx.remember(key, value, status);
    render_exact(ctx, what, value);
    return kExitOk;
}

// ---- partition -----------------------------------------------------------

std::int64_t color_allowance(const PartitionPlan& plan) {
    switch (plan.regime) {
        case Regime::k_gt_m: return 2;
        case Regime::k_eq_m: return 3;
        case Regime::k_lt_m: return 3 + plan.gamma;
    }
    return 0;
}

int cmd_partition(Context& ctx, std::int64_t m, std::int64_t k) {
    const auto plan = build_partition(m, k);
    const auto violation = verify_partition(plan);
    switch (ctx.format_or(OutputFormat::text)) {
        case OutputFormat::text:
            ctx.out << fmt::format("m={} k={} N={} regime={} parts={} gamma={}\n", m, k, m * k,
                                   to_string(plan.regime), plan.parts.size(), plan.gamma);
            for (const auto& part : plan.parts)
                ctx.out << part.label << '=' << format_residues(part.elements) << '\n';
            ctx.out << "verify=" << (violation ? "fail" : "pass") << '\n';
            break;
        case OutputFormat::json:
            write_json(ctx.out, plan);
            break;
        case OutputFormat::csv:
            write_csv_row(ctx.out, {"label", "size", "elements"});
            for (const auto& part : plan.parts)
                write_csv_row(ctx.out, {part.label, std::to_string(part.elements.size()),
                                        format_residues(part.elements)});
            break;
    }
    if (violation) {
        ctx.err << "error: part " << violation->part_label << " contains "
                << format_braced(violation->witness.elements().elements()) << '\n';
        return kExitInternal;
    }
    return kExitOk;
}

// ---- sweep ---------------------------------------------------------------

Table sweep_bounds(Context& ctx, std::pair<std::int64_t, std::int64_t> ks,
                   std::pair<std::int64_t, std::int64_t> ms) {
    Table t;
    t.header = {"k", "m", "modulus", "lower", "upper", "exact", "exactness_reason", "error"};
    for (auto k = ks.first; k <= ks.second; ++k)
        for (auto m = ms.first; m <= ms.second; ++m) {
            std::vector<std::string> row{std::to_string(k), std::to_string(m),
                                         std::to_string(m * k)};
            Json j{{"k", k}, {"m", m}, {"modulus", m * k}};
            try {
                auto bounds = theorem_bounds(m, k);
                if (!bounds.exact && ctx.cache) {
                    // A search-exact b(mk, k) already in the cache pins the value.
                    const auto hit = ctx.cache->lookup(exact_key("b", m * k, k));
                    if (hit && hit->is_exact())
                        bounds = bounds.with_search_value(hit->value.at("value").get<std::int64_t>());
                }
                row.insert(row.end(), {std::to_string(bounds.lower), std::to_string(bounds.upper),
                                       bounds.exact ? std::to_string(*bounds.exact) : "",
                                       std::string(to_string(bounds.reason)), ""});
                j["bounds"] = bounds;
            } catch (const std::exception& e) {
                row.insert(row.end(), {"", "", "", "", e.what()});
                j["error"] = e.what();
            }
            t.rows.push_back(std::move(row));
            t.json_rows.push_back(std::move(j));
        }
    return t;
}

Table sweep_partition(std::pair<std::int64_t, std::int64_t> ks,
                      std::pair<std::int64_t, std::int64_t> ms) {
    Table t;
    t.header = {"k", "m", "modulus", "regime", "part_count", "color_allowance", "verified",
                "error"};
    for (auto k = ks.first; k <= ks.second; ++k)
        for (auto m = ms.first; m <= ms.second; ++m) {
            std::vector<std::string> row{std::to_string(k), std::to_string(m),
                                         std::to_string(m * k)};
            Json j{{"k", k}, {"m", m}, {"modulus", m * k}};
            try {
                const auto plan = build_partition(m, k);
                const bool ok = !verify_partition(plan) &&
                                static_cast<std::int64_t>(plan.parts.size()) <= color_allowance(plan);
                row.insert(row.end(), {std::string(to_string(plan.regime)),
                                       std::to_string(plan.parts.size()),
                                       std::to_string(color_allowance(plan)),
                                       ok ? "true" : "false", ""});
                j["regime"] = to_string(plan.regime);
                j["part_count"] = plan.parts.size();
                j["color_allowance"] = color_allowance(plan);
                j["verified"] = ok;
            } catch (const std::exception& e) {
                row.insert(row.end(), {"", "", "", "false", e.what()});
                j["error"] = e.what();
            }
            t.rows.push_back(std::move(row));
            t.json_rows.push_back(std::move(j));
        }
    return t;
}

Table sweep_wc(std::pair<std::int64_t, std::int64_t> ks, std::pair<std::int64_t, std::int64_t> ms) {
    Table t;
    t.header = {"k", "r", "strict_lower", "provenance"};
    for (auto k = ks.first; k <= ks.second; ++k) {
        for (const auto& row : wc_lower_bounds(k, std::max(k, ms.second))) {
            if (row.m < ms.first || row.m > ms.second) continue;
            t.rows.push_back({std::to_string(row.k), std::to_string(row.r),
                              std::to_string(row.strict_lower), std::string(to_string(row.provenance))});
            t.json_rows.emplace_back(row);
        }
    }
    return t;
}

int cmd_sweep(Context& ctx, const std::string& k_range, const std::string& m_range,
              const std::string& what) {
    const auto ks = parse_range(k_range);
    const auto ms = parse_range(m_range);
    if (ks.first < 3) throw InvalidArgument("sweep needs every k >= 3");
    if (ms.first < 1) throw InvalidArgument("sweep needs every m >= 1");
    Table t;
    if (what == "bounds")
        t = sweep_bounds(ctx, ks, ms);
    else if (what == "partition")
        t = sweep_partition(ks, ms);
    else
        t = sweep_wc(ks, ms);
    t.render(ctx.out, ctx.format_or(OutputFormat::csv));
    return kExitOk;
}

// ---- conjecture ----------------------------------------------------------

int cmd_conjecture(Context& ctx, const std::string& m_range, const std::string& n_range,
                   const std::string& k_range, std::int64_t cap) {
    const auto ms = parse_range(m_range);
    const auto ns = parse_range(n_range);
    const auto ks = parse_range(k_range);
    const auto format = ctx.format_or(OutputFormat::text);

    struct Counts { int agree = 0, disagree = 0, rejected = 0, budget = 0; } counts;
    Json json_rows = Json::array();
    if (format == OutputFormat::csv)
        write_csv_row(ctx.out, {"m", "n", "k", "modulus", "status", "conjectured", "brute_force",
                                "only_conjectured", "only_brute_force", "reason"});

    for (auto k = ks.first; k <= ks.second; ++k)
        for (auto m = ms.first; m <= ms.second; ++m)
            for (auto n = ns.first; n <= ns.second; ++n) {
                std::string status, reason;
                std::optional<ConjectureReport> report;
                if (n < 1 || k < 1)
                    reason = "n and k must be positive";
                else if (m <= n)
                    reason = "m<=n";
                else if (n * k < 3)
                    reason = "nk<3";
                else if (m * k > cap)
                    reason = fmt::format("mk>{}", cap);

                if (!reason.empty()) {
                    status = "rejected";
                    ++counts.rejected;
                } else {
                    const Json key{{"op", "conjecture"}, {"m", m}, {"n", n}, {"k", k}};
                    try {
                        if (auto hit = ctx.cached(key))
                            report = hit->value.get<ConjectureReport>();
                        else {
                            report = check_conjecture(m, n, k, cap);
                            ctx.remember(key, *report, "exact");
                        }
                        status = report->agrees ? "agree" : "disagree";
                        ++(report->agrees ? counts.agree : counts.disagree);
                    } catch (const BudgetExceeded& e) {
                        status = "budget";
                        reason = e.what();
                        ++counts.budget;
                    }
                }

                switch (format) {
                    case OutputFormat::text:
                        ctx.out << fmt::format("m={} n={} k={} N={} status={}", m, n, k, m * k, status);
                        if (report) {
                            ctx.out << " conjectured=" << braced(report->conjectured.values);
                            if (!report->agrees)
                                ctx.out << " brute_force=" << braced(report->brute_force.values)
                                        << " only_conjectured=" << braced(report->only_conjectured)
                                        << " only_brute_force=" << braced(report->only_brute_force);
                        }
                        if (!reason.empty()) ctx.out << " reason=" << reason;
                        ctx.out << '\n';
                        break;
                    case OutputFormat::json: {
                        Json row = report ? Json(*report) : Json{{"m", m}, {"n", n}, {"k", k}};
                        row["status"] = status;
                        if (!reason.empty()) row["reason"] = reason;
                        json_rows.push_back(std::move(row));
                        break;
                    }
                    case OutputFormat::csv:
                        write_csv_row(
                            ctx.out,
                            {std::to_string(m), std::to_string(n), std::to_string(k),
                             std::to_string(m * k), status,
                             report ? joined(report->conjectured.values) : "",
                             report ? joined(report->brute_force.values) : "",
                             report ? joined(report->only_conjectured) : "",
                             report ? joined(report->only_brute_force) : "", reason});
                        break;
                }
            }

    const auto summary = fmt::format("summary: agree={} disagree={} rejected={} budget={}",
                                     counts.agree, counts.disagree, counts.rejected, counts.budget);
    switch (format) {
        case OutputFormat::text:
            ctx.out << summary << '\n';
            break;
        case OutputFormat::json:
            write_json(ctx.out, {{"rows", json_rows},
                                 {"summary",
                                  {{"agree", counts.agree},
                                   {"disagree", counts.disagree},
                                   {"rejected", counts.rejected},
                                   {"budget", counts.budget}}}});
            break;
        case OutputFormat::csv:
            ctx.err << summary << '\n';
            break;
    }
    return kExitOk;
}

// ---- verify-file ---------------------------------------------------------

int cmd_verify_file(Context& ctx, const std::string& file, std::int64_t n, std::int64_t k) {
    if (k < 1) throw InvalidArgument("k must be positive");
    std::ifstream in(file);
    if (!in) throw InvalidArgument("cannot read " + file);
    const auto format = ctx.format_or(OutputFormat::text);
    if (format == OutputFormat::csv) write_csv_row(ctx.out, {"line", "set", "status", "witness"});
    Json json_rows = Json::array();

    bool any_found = false;
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        std::string_view text = line;
        text = text.substr(0, text.find('#'));
        if (text.find_first_not_of(" \t\r") == std::string_view::npos) continue;
        ResidueSet set;
        try {
            set = parse_residues(text, n);
        } catch (const InvalidArgument& e) {
            throw InvalidArgument(fmt::format("{}:{}: {}", file, line_no, e.what()));
        }
        const auto witness = find_contained_progression(set, k);
        any_found = any_found || witness.has_value();
        const std::string status = witness ? "contains" : "free";
        switch (format) {
            case OutputFormat::text:
                ctx.out << "line " << line_no << ": " << status;
                if (witness)
                    ctx.out << ' ' << format_braced(witness->elements().elements())
                            << fmt::format(" base={} diff={}", witness->base(), witness->diff());
                ctx.out << '\n';
                break;
            case OutputFormat::json: {
                Json row{{"line", line_no}, {"set", set}, {"status", status}};
                row["witness"] = witness ? Json(*witness) : Json(nullptr);
                json_rows.push_back(std::move(row));
                break;
            }
            case OutputFormat::csv:
                write_csv_row(ctx.out, {std::to_string(line_no), format_residues(set), status,
                                        witness ? format_residues(witness->elements()) : ""});
                break;
        }
    }
    if (format == OutputFormat::json) write_json(ctx.out, json_rows);
    return any_found ? kExitFound : kExitOk;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
    const auto number = [&](std::string_view s) {
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw InvalidArgument("malformed range '" + std::string(text) + "'");
        return v;
    };
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        const auto v = number(text);
        return {v, v};
    }
    const auto lo = number(text.substr(0, dots));
    const auto hi = number(text.substr(dots + 2));
    if (lo > hi) throw InvalidArgument("empty range '" + std::string(text) + "'");
    return {lo, hi};
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cyclic progressions, forbidden sets and cyclic van der Waerden bounds"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    std::string format_name, cache_file;
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--cache", cache_file, "Results cache file (JSON lines)");
    app.add_option("--budget-nodes", config.node_budget, "Search node budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget-seconds", config.time_budget_seconds, "Search time budget")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-exact-n", config.max_exact_N, "Largest N for exact without --force")
        ->check(CLI::PositiveNumber);

    std::int64_t n = 0, k = 0, m = 0, cap = 200;
    std::string method = "brute", what, k_range, m_range, n_range, file;
    bool verify = false, force = false;
    std::function<int(Context&)> action;

    auto* diffs = app.add_subcommand("diffs", "Difference-gcd set D(N,k)");
    diffs->add_option("--n", n)->required();
    diffs->add_option("--k", k)->required();
    diffs->add_option("--method", method)
        ->check(CLI::IsMember({"brute", "closed", "both", "brute_force", "closed_form"}));
    diffs->callback([&] { action = [&](Context& c) { return cmd_diffs(c, n, k, method); }; });

    auto* construct = app.add_subcommand("construct", "Forbidden set and bounds on b(mk,k)");
    construct->add_option("--m", m)->required();
    construct->add_option("--k", k)->required();
    construct->add_flag("--verify", verify, "Check the complement is progression-free");
    construct->callback([&] { action = [&](Context& c) { return cmd_construct(c, m, k, verify); }; });

    auto* exact = app.add_subcommand("exact", "Exact b(N,k) or chi(N,k) by search");
    exact->add_option("--n", n)->required();
    exact->add_option("--k", k)->required();
    exact->add_option("--what", what)->required()->check(CLI::IsMember({"b", "chi"}));
    exact->add_flag("--force", force, "Allow N above the exact-search cap");
    exact->callback([&] { action = [&](Context& c) { return cmd_exact(c, n, k, what, force); }; });

    auto* partition = app.add_subcommand("partition", "Proper coloring of Z_mk by regime");
    partition->add_option("--m", m)->required();
    partition->add_option("--k", k)->required();
    partition->callback([&] { action = [&](Context& c) { return cmd_partition(c, m, k); }; });

    auto* sweep = app.add_subcommand("sweep", "Tables over (k, m) grids");
    sweep->add_option("--k", k_range)->required();
    sweep->add_option("--m", m_range)->required();
    sweep->add_option("--what", what)->required()->check(
        CLI::IsMember({"bounds", "partition", "wc"}));
    sweep->callback([&] { action = [&](Context& c) { return cmd_sweep(c, k_range, m_range, what); }; });

    auto* conjecture = app.add_subcommand("conjecture", "Compare D(mk,nk) with {g <= m : g | nk}");
    conjecture->add_option("--m", m_range)->required();
    conjecture->add_option("--n", n_range)->required();
    conjecture->add_option("--k", k_range)->required();
    conjecture->add_option("--cap", cap, "Largest mk checked")->check(CLI::PositiveNumber);
    conjecture->callback([&] {
        action = [&](Context& c) { return cmd_conjecture(c, m_range, n_range, k_range, cap); };
    });

    auto* verify_file = app.add_subcommand("verify-file", "Check residue sets for progressions");
    verify_file->add_option("file", file)->required();
    verify_file->add_option("--n", n)->required();
    verify_file->add_option("--k", k)->required();
    verify_file->callback([&] { action = [&](Context& c) { return cmd_verify_file(c, file, n, k); }; });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (!format_name.empty())
        config.output_format = format_name == "json" ? OutputFormat::json
                               : format_name == "csv" ? OutputFormat::csv
                                                      : OutputFormat::text;
    Context ctx{config, out, err, std::nullopt};
    if (!cache_file.empty()) {
        ctx.config.cache_path = cache_file;
        if (std::ofstream probe(cache_file, std::ios::app); probe)
            ctx.cache.emplace(cache_file);
        else
            err << "warning: cache " << cache_file << " is not writable; caching disabled\n";
    }

    try {
        return action(ctx);
    } catch (const InternalInconsistency& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}

}  // namespace cvdw::cli
