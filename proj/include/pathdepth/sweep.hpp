#pragma once

#include <chrono>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathdepth/cache.hpp"
#include "pathdepth/checks.hpp"
#include "pathdepth/version.hpp"

// Parameter sweeps over the path-ideal powers: per cell, engine values
// against the closed forms, optional Stanley depths against their
// bounds, all statuses recorded per row. Cells run in a worker pool;
// rows land in index-addressed slots so the report is deterministic,
// and a cell that fails or times out is recorded, never fatal.

namespace pathdepth {

enum class sdepth_scope { none, quotient, both };

struct sweep_options {
    int n_min = 1, n_max = 1;
    int m_min = 1, m_max = 0;    // m_max = 0 means "up to n"
    int t_min = 1, t_max = 1;
    sdepth_scope scope = sdepth_scope::none;
    betti_options betti;
    std::chrono::milliseconds timeout{60'000};
    std::uint64_t max_poset = default_max_poset;
    unsigned jobs = 1;
    bool paranoid = false;
    const result_cache* cache = nullptr;
};

struct sweep_row {
    int n = 0, m = 0, t = 0;
    std::optional<long long> depth, pd;
    long long depth_formula_value = 0;
    formula_branch branch = formula_branch::general;
    long long pd_formula_value = 0;
    std::optional<long long> sdepth_quotient, sdepth_ideal;
    sdepth_bounds bounds{0, 0, 0};
    std::vector<check_result> checks;
    long long runtime_ms = 0;
};

struct sweep_report {
    nlohmann::json metadata;
    std::vector<sweep_row> rows;

    /// True when no recorded check failed (skips do not fail a run).
    bool all_required_passed() const {
        for (const auto& row : rows)
            for (const auto& c : row.checks)
                if (c.status == check_status::fail) return false;
        return true;
    }
};

namespace detail {

inline std::string cache_key(const std::string& kind, const monomial_ideal& I,
                             const betti_options& betti) {
    std::string key = "pathdepth/";
    key += version_string;
    key += "|";
    key += kind;
    key += "|field=";
    key += betti.field == coeff_field::gf2 ? "char2" : "char0";
    key += "|";
    key += ideal_to_text(I);
    return key;
}

inline std::optional<std::pair<int, int>> cached_depth(const sweep_options& opts,
                                                       const monomial_ideal& I) {
    if (!opts.cache) return std::nullopt;
    auto hit = opts.cache->load(cache_key("depth", I, opts.betti));
    if (!hit || !hit->contains("depth") || !hit->contains("pd")) return std::nullopt;
    return std::make_pair((*hit)["depth"].get<int>(), (*hit)["pd"].get<int>());
}

inline std::optional<int> cached_sdepth(const sweep_options& opts, const monomial_ideal& I,
                                        poset_mode mode) {
    if (!opts.cache) return std::nullopt;
    std::string kind = std::string("sdepth-") + to_string(mode);
    auto hit = opts.cache->load(cache_key(kind, I, opts.betti));
    if (!hit || !hit->contains("value")) return std::nullopt;
    if (opts.paranoid) {
        if (!hit->contains("certificate")) return std::nullopt;
        if (!verify_certificate((*hit)["certificate"], I, nullptr, opts.max_poset).ok)
            return std::nullopt; // corrupt entry: recompute
    }
    return (*hit)["value"].get<int>();
}

/// One engine run for a sweep cell's sdepth; nullopt marks a timeout.
inline std::optional<int> sweep_sdepth(const sweep_options& opts, const monomial_ideal& I,
                                       poset_mode mode, int hint, std::string& skip_reason) {
    if (auto hit = cached_sdepth(opts, I, mode)) return hit;
    sdepth_options so;
    so.lower_hint = hint;
    so.timeout = opts.timeout;
    so.poset.max_size = opts.max_poset;
    try {
        char_poset poset = build_poset(I, mode, so.poset);
        sdepth_result r = stanley_depth_of_poset(poset, so);
        if (opts.cache) {
            nlohmann::json value;
            value["value"] = r.value;
            value["certificate"] = certificate_to_json(poset, r.certificate);
            opts.cache->store(cache_key(std::string("sdepth-") + to_string(mode), I, opts.betti),
                              value);
        }
        return r.value;
    } catch (const timeout_error&) {
        skip_reason = "timeout";
    } catch (const resource_limit_error& e) {
        skip_reason = e.what();
    }
    return std::nullopt;
}

} // namespace detail

inline sweep_report run_sweep(const sweep_options& user_opts) {
    sweep_options opts = user_opts;
    if (opts.jobs != 1) opts.betti.jobs = 1; // cells are the parallel unit

    struct cell_params {
        int n, m, t;
    };
    std::vector<cell_params> cells;
    for (int n = opts.n_min; n <= opts.n_max; ++n)
        for (int m = opts.m_min; m <= (opts.m_max == 0 ? n : std::min(opts.m_max, n)); ++m)
            for (int t = opts.t_min; t <= opts.t_max; ++t) cells.push_back({n, m, t});

    sweep_report report;
    report.rows.resize(cells.size());
    report.metadata = {
        {"kind", "pathdepth-sweep"},
        {"version", version_string},
        {"field", opts.betti.field == coeff_field::gf2 ? "char2" : "char0"},
        {"max_generators", opts.betti.max_generators},
        {"max_lattice", opts.betti.max_lattice},
        {"max_poset", opts.max_poset},
        {"timeout_ms", opts.timeout.count()},
        {"sdepth", opts.scope == sdepth_scope::none
                       ? "none"
                       : (opts.scope == sdepth_scope::quotient ? "quotient" : "both")},
    };

    parallel_for(
        cells.size(),
        [&](std::size_t idx) {
            auto started = std::chrono::steady_clock::now();
            const auto [n, m, t] = cells[idx];
            sweep_row row;
            row.n = n;
            row.m = m;
            row.t = t;
            formula_value f = depth_formula(n, m, t);
            row.depth_formula_value = f.value;
            row.branch = f.branch;
            row.pd_formula_value = pd_formula(n, m, t);
            row.bounds = sdepth_upper_bounds(n, m, t);

            monomial_ideal I = power(path_ideal(n, m), t);
            auto push = [&](const char* name, check_status status, std::string detail = {}) {
                row.checks.push_back(check_result{name, "", status, std::move(detail)});
            };

            if (I.generator_count() > opts.betti.max_generators) {
                std::string why = "generator count " + std::to_string(I.generator_count()) +
                                  " over the cap of " +
                                  std::to_string(opts.betti.max_generators);
                push("depth-formula", check_status::skipped, why);
                push("pd-formula", check_status::skipped, why);
            } else {
                if (auto hit = detail::cached_depth(opts, I)) {
                    row.depth = hit->first;
                    row.pd = hit->second;
                } else {
                    try {
                        int pd_value = quotient_pd(I, opts.betti);
                        row.pd = pd_value;
                        row.depth = n - pd_value;
                        if (opts.cache)
                            opts.cache->store(detail::cache_key("depth", I, opts.betti),
                                              {{"depth", n - pd_value}, {"pd", pd_value}});
                    } catch (const resource_limit_error& e) {
                        push("depth-formula", check_status::skipped, e.what());
                        push("pd-formula", check_status::skipped, e.what());
                    }
                }
                if (row.depth) {
                    push("depth-formula",
                         *row.depth == row.depth_formula_value ? check_status::pass
                                                               : check_status::fail,
                         *row.depth == row.depth_formula_value
                             ? ""
                             : "computed " + std::to_string(*row.depth) + ", formula " +
                                   std::to_string(row.depth_formula_value));
                    push("pd-formula",
                         *row.pd == row.pd_formula_value ? check_status::pass
                                                         : check_status::fail,
                         *row.pd == row.pd_formula_value
                             ? ""
                             : "computed " + std::to_string(*row.pd) + ", formula " +
                                   std::to_string(row.pd_formula_value));
                }
            }

            if (opts.scope != sdepth_scope::none) {
                std::string why;
                int hint = static_cast<int>(row.depth.value_or(row.depth_formula_value));
                row.sdepth_quotient =
                    detail::sweep_sdepth(opts, I, poset_mode::quotient, hint, why);
                if (row.sdepth_quotient) {
                    long long sq = *row.sdepth_quotient;
                    push("sandwich-lower",
                         sq >= row.depth_formula_value ? check_status::pass : check_status::fail,
                         "sdepth(S/I^t) vs depth formula");
                    push("sandwich-upper",
                         sq <= sdepth_upper_bounds(n, m, 1).quotient_upper ? check_status::pass
                                                                           : check_status::fail,
                         "sdepth(S/I^t) vs t=1 value");
                    if (row.depth)
                        push("stanley-quotient",
                             sq >= *row.depth ? check_status::pass : check_status::fail);
                } else {
                    push("sandwich-lower", check_status::skipped, why);
                    push("sandwich-upper", check_status::skipped, why);
                }
            }
            if (opts.scope == sdepth_scope::both) {
                std::string why;
                int hint = static_cast<int>(row.depth.value_or(row.depth_formula_value)) + 1;
                row.sdepth_ideal = detail::sweep_sdepth(opts, I, poset_mode::ideal, hint, why);
                if (row.sdepth_ideal) {
                    long long si = *row.sdepth_ideal;
                    push("ideal-lower",
                         si >= row.depth_formula_value + 1 ? check_status::pass
                                                           : check_status::fail,
                         "sdepth(I^t) vs depth formula + 1");
                    push("ideal-upper",
                         si <= row.bounds.ideal_upper ? check_status::pass : check_status::fail,
                         "sdepth(I^t) vs min upper bound");
                } else {
                    push("ideal-lower", check_status::skipped, why);
                    push("ideal-upper", check_status::skipped, why);
                }
            }
            row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
            report.rows[idx] = std::move(row);
        },
        opts.jobs);

    // monotonicity in t needs pairs of finished rows, so it runs post hoc
    if (opts.scope != sdepth_scope::none)
        for (auto& row : report.rows) {
            if (row.t < 2 || !row.sdepth_quotient) continue;
            for (const auto& prev : report.rows)
                if (prev.n == row.n && prev.m == row.m && prev.t == row.t - 1 &&
                    prev.sdepth_quotient)
                    row.checks.push_back(check_result{
                        "monotone-t", "",
                        *row.sdepth_quotient <= *prev.sdepth_quotient ? check_status::pass
                                                                      : check_status::fail,
                        "sdepth(S/I^t) vs sdepth(S/I^(t-1))"});
        }
    return report;
}

// --- rendering ------------------------------------------------------------

namespace detail {

inline std::string opt_str(const std::optional<long long>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

inline std::string checks_summary(const sweep_row& row) {
    std::string out;
    for (const auto& c : row.checks) {
        if (!out.empty()) out += ' ';
        out += c.id;
        out += '=';
        out += to_string(c.status);
    }
    return out;
}

} // namespace detail

inline nlohmann::json row_to_json(const sweep_row& row) {
    nlohmann::json j;
    j["n"] = row.n;
    j["m"] = row.m;
    j["t"] = row.t;
    j["depth"] = row.depth ? nlohmann::json(*row.depth) : nlohmann::json();
    j["depth_formula"] = row.depth_formula_value;
    j["branch"] = to_string(row.branch);
    j["pd"] = row.pd ? nlohmann::json(*row.pd) : nlohmann::json();
    j["pd_formula"] = row.pd_formula_value;
    j["sdepth_quotient"] =
        row.sdepth_quotient ? nlohmann::json(*row.sdepth_quotient) : nlohmann::json();
    j["sdepth_ideal"] = row.sdepth_ideal ? nlohmann::json(*row.sdepth_ideal) : nlohmann::json();
    j["bounds"] = {{"ideal_upper", row.bounds.ideal_upper},
                   {"quotient_upper", row.bounds.quotient_upper},
                   {"remark_upper", row.bounds.remark_upper}};
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : row.checks) {
        nlohmann::json cj;
        cj["name"] = c.id;
        cj["status"] = to_string(c.status);
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    j["runtime_ms"] = row.runtime_ms;
    return j;
}

/// One metadata line, then one JSON object per row. The canonical
/// archival format.
inline std::string render_jsonl(const sweep_report& report) {
    std::ostringstream os;
    os << report.metadata.dump() << '\n';
    for (const auto& row : report.rows) os << row_to_json(row).dump() << '\n';
    return os.str();
}

inline std::string render_csv(const sweep_report& report) {
    std::ostringstream os;
    os << "n,m,t,depth,depth_formula,pd,pd_formula,sdepth_quotient,sdepth_ideal,"
          "ideal_upper,quotient_upper,remark_upper,checks,runtime_ms\n";
    for (const auto& row : report.rows) {
        os << row.n << ',' << row.m << ',' << row.t << ',' << detail::opt_str(row.depth) << ','
           << row.depth_formula_value << ',' << detail::opt_str(row.pd) << ','
           << row.pd_formula_value << ',' << detail::opt_str(row.sdepth_quotient) << ','
           << detail::opt_str(row.sdepth_ideal) << ',' << row.bounds.ideal_upper << ','
           << row.bounds.quotient_upper << ',' << row.bounds.remark_upper << ','
           << detail::checks_summary(row) << ',' << row.runtime_ms << '\n';
    }
    return os.str();
}

inline std::string render_markdown(const sweep_report& report) {
    std::ostringstream os;
    os << "| n | m | t | depth | formula | pd | pd formula | sdepth S/I^t | sdepth I^t | "
          "checks |\n";
    os << "|---|---|---|-------|---------|----|------------|--------------|------------|"
          "--------|\n";
    for (const auto& row : report.rows)
        os << "| " << row.n << " | " << row.m << " | " << row.t << " | "
           << detail::opt_str(row.depth) << " | " << row.depth_formula_value << " | "
           << detail::opt_str(row.pd) << " | " << row.pd_formula_value << " | "
           << detail::opt_str(row.sdepth_quotient) << " | " << detail::opt_str(row.sdepth_ideal)
           << " | " << detail::checks_summary(row) << " |\n";
    return os.str();
}

// --- the exploratory m = 2 table -------------------------------------------

struct stefan_row {
    int n = 0, t = 0;
    std::optional<long long> computed;
    long long formula = 0;
    std::string verdict; // agree | disagree | unknown
};

struct stefan_report {
    std::vector<stefan_row> rows;
};

/// Tabulates computed sdepth(S/I_{n,2}^t) against the conjectured
/// max{ceil((n+t-1)/3), 1}. EXPLORATORY: disagreements are reported,
/// never asserted, and never affect exit codes.
inline stefan_report explore_stefan(int n_min, int n_max, int t_min, int t_max,
                                    const sweep_options& opts = {}) {
    stefan_report report;
    for (int n = std::max(2, n_min); n <= n_max; ++n)
        for (int t = t_min; t <= t_max; ++t) {
            stefan_row row;
            row.n = n;
            row.t = t;
            row.formula = stefan_formula(n, t);
            monomial_ideal I = power(path_ideal(n, 2), t);
            std::string why;
            row.computed = detail::sweep_sdepth(
                opts, I, poset_mode::quotient,
                static_cast<int>(depth_formula(n, 2, t).value), why);
            row.verdict = !row.computed ? "unknown"
                          : (*row.computed == row.formula ? "agree" : "disagree");
            report.rows.push_back(std::move(row));
        }
    return report;
}

inline std::string render_stefan(const stefan_report& report) {
    std::ostringstream os;
    os << "EXPLORATORY: reported, not asserted\n";
    os << "| n | t | computed | formula | verdict |\n|---|---|----------|---------|---------|\n";
    for (const auto& row : report.rows)
        os << "| " << row.n << " | " << row.t << " | " << detail::opt_str(row.computed) << " | "
           << row.formula << " | " << row.verdict << " |\n";
    return os.str();
}

} // namespace pathdepth
