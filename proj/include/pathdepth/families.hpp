#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pathdepth/formulas.hpp"
#include "pathdepth/ideal.hpp"

// Builders for every ideal family and witness monomial the checks and
// sweeps work with, plus the construction of both sides of each
// testable identity. Smaller-ring ideals are always embedded in the
// ambient ring with the same variable indices, so identities can be
// compared as canonical forms in one ring.

namespace pathdepth {

/// The m-path ideal of the path graph on n vertices: generators
/// x_i x_{i+1} ... x_{i+m-1} for 1 <= i <= n-m+1. Exactly n-m+1
/// squarefree generators of degree m.
inline monomial_ideal path_ideal(int n, int m) {
    check_path_params(n, m, 1);
    std::vector<monomial> gens;
    gens.reserve(static_cast<std::size_t>(n - m + 1));
    for (int i = 1; i <= n - m + 1; ++i)
        gens.push_back(monomial::variable_range(n, i, i + m - 1));
    return monomial_ideal::from_generators(n, std::move(gens));
}

/// Path ideal on the first `len` variables of an `ambient`-variable
/// ring, raised to the t-th power; the zero ideal when len < m. The
/// identity builders below need this for their shrinking right-hand
/// sides.
inline monomial_ideal embedded_path_power(int ambient, int len, int m, int t) {
    if (len < m) return monomial_ideal::zero(ambient);
    std::vector<monomial> gens;
    gens.reserve(static_cast<std::size_t>(len - m + 1));
    for (int i = 1; i <= len - m + 1; ++i)
        gens.push_back(monomial::variable_range(ambient, i, i + m - 1));
    return power(monomial_ideal::from_generators(ambient, std::move(gens)), t);
}

/// For m <= n <= 2m-1 every path generator contains the middle block
/// x_{n-m+1} ... x_m; dividing it out leaves this ideal, and
/// path_ideal(n, m) == middle_block * reduced_path_ideal(n, m).
inline monomial_ideal reduced_path_ideal(int n, int m) {
    if (m > n || n > 2 * m - 1)
        throw parameter_error("reduced path ideal requires m <= n <= 2m-1");
    monomial block = monomial::variable_range(n, n - m + 1, m);
    monomial_ideal I = path_ideal(n, m);
    std::vector<monomial> gens;
    for (const monomial& g : I.generators()) gens.push_back(g.divide_by(block));
    return monomial_ideal::from_generators(n, std::move(gens));
}

/// The block every reduced-path generator was divided by.
inline monomial middle_block(int n, int m) {
    return monomial::variable_range(n, n - m + 1, m);
}

/// The k variables x_start, x_{start+step}, ..., in arithmetic
/// progression, as a variable ideal of the ambient ring.
inline monomial_ideal progression_ideal(int ambient, int start, int step, int count) {
    if (count < 1 || step < 1) throw parameter_error("progression ideal: count, step >= 1");
    std::vector<int> vars;
    vars.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        int v = start + i * step;
        if (v < 1 || v > ambient)
            throw parameter_error("progression ideal: index " + std::to_string(v) +
                                  " outside ring of " + std::to_string(ambient) + " variables");
        vars.push_back(v);
    }
    return monomial_ideal::variables(ambient, vars);
}

/// The residue ideal U in the ring of m+t variables: all squarefree
/// products x_{i_1} ... x_{i_m} picking exactly one index from each
/// residue class j mod m (representatives 1..m, so the class of m is
/// the indices divisible by m). Equals the intersection of the
/// progression ideals on those classes; see residue_class_ideals.
inline monomial_ideal residue_ideal(int m, int t) {
    check_residue_params(m, t);
    int nv = m + t;
    // class sizes multiply up; guard against silly parameter choices
    long long count = 1;
    std::vector<std::vector<int>> classes(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        for (int v = j; v <= nv; v += m) classes[static_cast<std::size_t>(j - 1)].push_back(v);
        count *= static_cast<long long>(classes[static_cast<std::size_t>(j - 1)].size());
        if (count > 100000)
            throw resource_limit_error("residue ideal: generator count exceeds 100000");
    }
    std::vector<monomial> gens;
    gens.reserve(static_cast<std::size_t>(count));
    std::vector<std::size_t> pick(static_cast<std::size_t>(m), 0);
    while (true) {
        monomial g(nv);
        for (int j = 0; j < m; ++j)
            g.set_exponent(classes[static_cast<std::size_t>(j)][pick[static_cast<std::size_t>(j)]], 1);
        gens.push_back(std::move(g));
        int j = m - 1;
        while (j >= 0 && ++pick[static_cast<std::size_t>(j)] ==
                             classes[static_cast<std::size_t>(j)].size()) {
            pick[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return monomial_ideal::from_generators(nv, std::move(gens));
}

/// The residue classes of 1..m+t mod m as progression ideals; their
/// intersection is residue_ideal(m, t).
inline std::vector<monomial_ideal> residue_class_ideals(int m, int t) {
    check_residue_params(m, t);
    int nv = m + t;
    std::vector<monomial_ideal> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int j = 1; j <= m; ++j) {
        int count = (nv - j) / m + 1;
        out.push_back(progression_ideal(nv, j, m, count));
    }
    return out;
}

/// Ambient ring size for the witness construction below.
inline int witness_ambient(int m, int t, int q, int r) {
    check_residue_params(m, t);
    if (q < 1 || r < 0 || r > m)
        throw parameter_error("witness parameters require q >= 1 and 0 <= r <= m");
    return (m + 1) * q + t - 1 + r;
}

/// The split n = (m+1)q + t-1 + r with 0 <= r <= m used when deriving
/// (q, r) from an ambient ring size.
struct witness_split {
    int q;
    int r;
};

inline witness_split witness_split_of(int n, int m, int t) {
    check_residue_params(m, t);
    long long q = floor_div(static_cast<long long>(n) - t + 1, m + 1);
    long long r = (static_cast<long long>(n) - t + 1) - q * (m + 1);
    if (q < 1) throw parameter_error("witness split: ring too small for q >= 1");
    return witness_split{static_cast<int>(q), static_cast<int>(r)};
}

/// The witness monomials in n = (m+1)q + t-1 + r variables:
///   head     = (x_2...x_{m+1})(x_3...x_{m+2}) ... (x_t...x_{t+m-1})
///   filler   = product over l = 1..q-1 of x_{t+l(m+1)+1} ... x_{t+l(m+1)+m-1}
///   combined = head * filler
/// head is a minimal generator of the (t-1)-st power of the path ideal;
/// filler is squarefree with (m-1)(q-1) variables (empty when q = 1).
struct witness_monomials_t {
    monomial head;
    monomial filler;
    monomial combined;
};

inline witness_monomials_t witness_monomials(int m, int t, int q, int r) {
    int n = witness_ambient(m, t, q, r);
    monomial head(n);
    for (int i = 2; i <= t; ++i) head = head * monomial::variable_range(n, i, i + m - 1);
    monomial filler(n);
    for (int l = 1; l <= q - 1; ++l)
        filler = filler * monomial::variable_range(n, t + l * (m + 1) + 1, t + l * (m + 1) + m - 1);
    monomial combined = head * filler;
    return witness_monomials_t{std::move(head), std::move(filler), std::move(combined)};
}

/// The separator variables between the filler blocks, as a variable
/// ideal: x_{t+l(m+1)} and x_{t+l(m+1)+m} for l = 1..q-1. Equivalently
/// the variables of {x_{t+m+1}, ..., x_{n-r}} that do not divide the
/// filler. Zero ideal when q = 1.
inline monomial_ideal separator_ideal(int m, int t, int q, int r) {
    int n = witness_ambient(m, t, q, r);
    std::vector<int> vars;
    for (int l = 1; l <= q - 1; ++l) {
        vars.push_back(t + l * (m + 1));
        vars.push_back(t + l * (m + 1) + m);
    }
    if (vars.empty()) return monomial_ideal::zero(n);
    return monomial_ideal::variables(n, vars);
}

/// A named pair of ideals built along two independent routes; the
/// checks assert canonical equality.
struct identity_pair {
    std::string label;
    monomial_ideal lhs;
    monomial_ideal rhs;
    bool holds() const { return lhs == rhs; }
};

/// Colon of the t-th power by the last path generator drops the power
/// by one: (I^t : x_{n-m+1}...x_n) == I^{t-1}.
inline identity_pair colon_power_identity(int n, int m, int t) {
    check_path_params(n, m, t);
    if (t < 2) throw parameter_error("colon-power identity requires t >= 2");
    monomial_ideal I = path_ideal(n, m);
    return identity_pair{
        "colon-power n=" + std::to_string(n) + " m=" + std::to_string(m) +
            " t=" + std::to_string(t),
        colon(power(I, t), monomial::variable_range(n, n - m + 1, n)),
        power(I, t - 1),
    };
}

/// Coloning the power by the last k-1 variables and then adding the
/// truncated block x_{n-m+1}...x_{n-k+1} lands in the path ideal of the
/// first n-k variables: requires 2 <= k <= m and t >= 2.
inline identity_pair truncation_identity(int n, int m, int k, int t) {
    check_path_params(n, m, t);
    if (k < 2 || k > m) throw parameter_error("truncation identity requires 2 <= k <= m");
    if (t < 2) throw parameter_error("truncation identity requires t >= 2");
    monomial block = monomial::variable_range(n, n - m + 1, n - k + 1);
    monomial_ideal lhs =
        add(colon(power(path_ideal(n, m), t), monomial::variable_range(n, n - k + 2, n)), block);
    monomial_ideal rhs = add(embedded_path_power(n, n - k, m, t), block);
    return identity_pair{
        "truncation n=" + std::to_string(n) + " m=" + std::to_string(m) +
            " k=" + std::to_string(k) + " t=" + std::to_string(t),
        std::move(lhs), std::move(rhs),
    };
}

/// The ladder of iterated colon/sum ideals descending from I^t, with
/// each rung's closed form in smaller path ideals. Requires n >= 2m and
/// t >= 2. For each step j = 1..m the ladder emits:
///   step-sum       (colon chain so far, x_{n-m+j})  vs its closed form
///   witness-colon  the step-sum ideal coloned by x_{n-2m+j}...x_{n-m}
///   aside-colon/aside-sum  the chain obtained from the step-sum ideal
///                  by adjoining that witness block and alternately
///                  coloning/adding trailing variables (l = 0..m-j)
/// and finally chain-end: the full colon chain equals I^{t-1}.
inline std::vector<identity_pair> reduction_ladder(int n, int m, int t) {
    check_path_params(n, m, t);
    if (n < 2 * m) throw parameter_error("reduction ladder requires n >= 2m");
    if (t < 2) throw parameter_error("reduction ladder requires t >= 2");
    std::vector<identity_pair> out;
    monomial_ideal I = path_ideal(n, m);
    monomial_ideal chain = power(I, t); // the colon chain, currently L_0
    for (int j = 1; j <= m; ++j) {
        std::string jj = " j=" + std::to_string(j);
        monomial step_var = monomial::variable(n, n - m + j);
        monomial_ideal step_sum = add(chain, step_var);
        out.push_back(identity_pair{
            "step-sum" + jj,
            step_sum,
            add(colon(embedded_path_power(n, n - m + j - 1, m, t),
                      monomial::variable_range(n, n - m + 1, n - m + j - 1)),
                step_var),
        });
        monomial witness = monomial::variable_range(n, n - 2 * m + j, n - m);
        out.push_back(identity_pair{
            "witness-colon" + jj,
            colon(step_sum, witness),
            add(embedded_path_power(n, n - m + j - 1, m, t - 1), step_var),
        });
        monomial_ideal aside = add(step_sum, witness);
        out.push_back(identity_pair{
            "aside-colon" + jj + " l=0",
            aside,
            add(add(embedded_path_power(n, n - m - 1, m, t),
                    monomial::variable_range(n, n - 2 * m + j, n - m)),
                step_var),
        });
        for (int l = 1; l <= m - j; ++l) {
            std::string jl = jj + " l=" + std::to_string(l);
            monomial aside_var = monomial::variable(n, n - m - l + 1);
            out.push_back(identity_pair{
                "aside-sum" + jl,
                add(aside, aside_var),
                add(add(embedded_path_power(n, n - m - l, m, t), aside_var), step_var),
            });
            aside = colon(aside, aside_var);
            out.push_back(identity_pair{
                "aside-colon" + jl,
                aside,
                add(add(embedded_path_power(n, n - m - l - 1, m, t),
                        monomial::variable_range(n, n - 2 * m + j, n - m - l)),
                    step_var),
            });
        }
        chain = colon(chain, step_var);
    }
    out.push_back(identity_pair{"chain-end", chain, power(I, t - 1)});
    return out;
}

/// Colon of I^t by the combined witness monomial, against its closed
/// form: the residue ideal (in the first m+t variables) plus the
/// separator variables, plus the last path generator when r = m.
inline identity_pair colon_witness_identity(int m, int t, int q, int r) {
    int n = witness_ambient(m, t, q, r);
    witness_monomials_t w = witness_monomials(m, t, q, r);
    monomial_ideal lhs = colon(power(path_ideal(n, m), t), w.combined);
    monomial_ideal rhs = add(residue_ideal(m, t).extended(n - (m + t)), separator_ideal(m, t, q, r));
    if (r == m) rhs = add(rhs, monomial::variable_range(n, n - m + 1, n));
    return identity_pair{
        "colon-witness m=" + std::to_string(m) + " t=" + std::to_string(t) +
            " q=" + std::to_string(q) + " r=" + std::to_string(r),
        std::move(lhs), std::move(rhs),
    };
}

} // namespace pathdepth
