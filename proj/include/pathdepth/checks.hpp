#pragma once

#include <string>
#include <vector>

#include "pathdepth/betti.hpp"
#include "pathdepth/families.hpp"
#include "pathdepth/ideal_io.hpp"
#include "pathdepth/formulas.hpp"
#include "pathdepth/sdepth.hpp"

// Named, parameterized checks behind the CLI's `check` subcommand. Each
// one builds both sides of an identity through independent routes (or
// computes a value and tests it against its bounds) and reports
// pass/fail/skipped; failures carry both canonical forms.

namespace pathdepth {

enum class check_status { pass, fail, skipped };

inline const char* to_string(check_status s) {
    switch (s) {
        case check_status::pass: return "pass";
        case check_status::fail: return "fail";
        default: return "skipped";
    }
}

struct check_result {
    std::string id;
    std::string params;
    check_status status = check_status::fail;
    std::string detail;
};

namespace detail {

inline check_result from_identity(const std::string& id, const identity_pair& pair) {
    check_result out;
    out.id = id;
    out.params = pair.label;
    if (pair.holds()) {
        out.status = check_status::pass;
    } else {
        out.status = check_status::fail;
        out.detail = "lhs:\n" + ideal_to_text(pair.lhs) + "rhs:\n" + ideal_to_text(pair.rhs);
    }
    return out;
}

} // namespace detail

/// (I^t : last generator) == I^(t-1).
inline check_result check_colon_power(int n, int m, int t) {
    return detail::from_identity("colon-power", colon_power_identity(n, m, t));
}

/// Truncated colon identity, 2 <= k <= m.
inline check_result check_truncation(int n, int m, int k, int t) {
    return detail::from_identity("truncation", truncation_identity(n, m, k, t));
}

/// Every rung of the colon/sum reduction ladder.
inline std::vector<check_result> check_ladder(int n, int m, int t) {
    std::vector<check_result> out;
    for (const identity_pair& pair : reduction_ladder(n, m, t))
        out.push_back(detail::from_identity("ladder", pair));
    return out;
}

/// Colon by the combined witness monomial against its closed form.
inline check_result check_colon_witness(int m, int t, int q, int r) {
    return detail::from_identity("colon-w", colon_witness_identity(m, t, q, r));
}

/// v * (I : v) == (v) intersect I, for any monomial v.
inline check_result check_scaled_colon(const monomial_ideal& I, const monomial& v) {
    identity_pair pair{"scaled-colon v=" + v.str(),
                       multiply(monomial_ideal::principal(v), colon(I, v)),
                       intersect(monomial_ideal::principal(v), I)};
    return detail::from_identity("vIv", pair);
}

/// The residue-family suite: exact depth, then computed Stanley depths
/// of the quotient and the ideal against their bounds. Timeouts come
/// back as skipped, never as values.
inline std::vector<check_result> check_residue_suite(int m, int t,
                                                     const betti_options& betti = {},
                                                     const sdepth_options& sdepth_opts = {}) {
    std::vector<check_result> out;
    std::string params = "m=" + std::to_string(m) + " t=" + std::to_string(t);
    monomial_ideal U = residue_ideal(m, t);

    check_result depth_check{"umt-depth", params, check_status::fail, ""};
    long long d = quotient_depth(U, betti);
    if (d == residue_quotient_depth(m, t)) {
        depth_check.status = check_status::pass;
    } else {
        depth_check.detail = "computed depth " + std::to_string(d) + ", expected " +
                             std::to_string(residue_quotient_depth(m, t));
    }
    out.push_back(depth_check);

    auto bounded = [&](const char* id, poset_mode mode, long long lo, long long hi, int hint) {
        check_result c{id, params, check_status::fail, ""};
        sdepth_options opts = sdepth_opts;
        opts.lower_hint = hint;
        try {
            long long v = stanley_depth(U, mode, opts).value;
            if (lo <= v && v <= hi) {
                c.status = check_status::pass;
                c.detail = "value " + std::to_string(v) + " in [" + std::to_string(lo) + ", " +
                           std::to_string(hi) + "]";
            } else {
                c.detail = "value " + std::to_string(v) + " outside [" + std::to_string(lo) +
                           ", " + std::to_string(hi) + "]";
            }
        } catch (const timeout_error&) {
            c.status = check_status::skipped;
            c.detail = "timeout";
        }
        out.push_back(c);
    };
    bounded("umt-quotient-sdepth", poset_mode::quotient, residue_quotient_depth(m, t),
            residue_quotient_sdepth_upper(m, t), m - 1);
    bounded("umt-ideal-sdepth", poset_mode::ideal, residue_ideal_sdepth_lower(m, t),
            residue_ideal_sdepth_upper(m, t), static_cast<int>(residue_ideal_sdepth_lower(m, t)));
    return out;
}

} // namespace pathdepth
