#pragma once

#include <algorithm>
#include <string>

#include "pathdepth/errors.hpp"

namespace pathdepth {

inline long long floor_div(long long a, long long b) {
    long long q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline long long ceil_div(long long a, long long b) { return -floor_div(-a, b); }

/// Which case of a piecewise formula fired: `general` for t <= n+1-m,
/// `stable` for the large-power regime t > n+1-m where the value no
/// longer depends on t.
enum class formula_branch { general, stable };

inline const char* to_string(formula_branch b) {
    return b == formula_branch::general ? "general" : "stable";
}

/// A closed-form value together with the branch that produced it and,
/// on the general branch, the Euclidean split n-t+2 = (m+1)q + r with
/// 0 <= r <= m that collapses the floor/ceil pair.
struct formula_value {
    long long value = 0;
    formula_branch branch = formula_branch::general;
    long long q = 0;
    long long r = 0;
};

inline void check_path_params(int n, int m, int t) {
    if (m < 1 || m > n) throw parameter_error("path parameters require 1 <= m <= n");
    if (t < 1) throw parameter_error("path parameters require t >= 1");
}

/// Closed form for depth(S/I^t) of the m-path ideal in n variables:
///   n-t+2 - floor((n-t+2)/(m+1)) - ceil((n-t+2)/(m+1))   if t <= n+1-m
///   m-1                                                   otherwise.
inline formula_value depth_formula(int n, int m, int t) {
    check_path_params(n, m, t);
    formula_value out;
    if (t <= n + 1 - m) {
        long long s = static_cast<long long>(n) - t + 2;
        out.branch = formula_branch::general;
        out.q = floor_div(s, m + 1);
        out.r = s - (m + 1) * out.q;
        out.value = s - out.q - ceil_div(s, m + 1);
    } else {
        out.branch = formula_branch::stable;
        out.value = m - 1;
    }
    return out;
}

/// Projective dimension of the same quotient; always n minus the depth
/// formula.
inline long long pd_formula(int n, int m, int t) {
    check_path_params(n, m, t);
    if (t <= n + 1 - m) {
        long long s = static_cast<long long>(n) - t + 2;
        return t - 2 + floor_div(s, m + 1) + ceil_div(s, m + 1);
    }
    return n - m + 1;
}

/// Closed form for depth of the ideal itself (one more than the
/// quotient's depth).
inline long long ideal_depth_formula(int n, int m, int t) {
    return depth_formula(n, m, t).value + 1;
}

/// The three upper bounds the theory provides for Stanley depth of
/// path-ideal powers.
struct sdepth_bounds {
    long long ideal_upper;    // min{ n+1 - floor((n-t+1)/(m+1)), n - floor((ceil(t/m)+1)/2) }
    long long quotient_upper; // depth_formula(n, m, 1): sdepth(S/I^t) <= sdepth(S/I)
    long long remark_upper;   // depth_formula(n, m, t) + t - ceil(t/m)
};

inline sdepth_bounds sdepth_upper_bounds(int n, int m, int t) {
    check_path_params(n, m, t);
    long long a = n + 1 - floor_div(static_cast<long long>(n) - t + 1, m + 1);
    long long b = n - floor_div(ceil_div(t, m) + 1, 2);
    return sdepth_bounds{
        std::min(a, b),
        depth_formula(n, m, 1).value,
        depth_formula(n, m, t).value + t - ceil_div(t, m),
    };
}

inline void check_residue_params(int m, int t) {
    if (m < 2 || t < 2) throw parameter_error("residue family requires m >= 2 and t >= 2");
}

/// Bounds for the residue ideal U in t+m variables (see
/// families.hpp::residue_ideal). Its quotient has depth exactly m-1.
inline long long residue_quotient_depth(int m, int t) {
    check_residue_params(m, t);
    return m - 1;
}

/// Upper bound for sdepth of the quotient by the residue ideal:
/// t+m-1-ceil(t/m). The matching lower bound is m-1.
inline long long residue_quotient_sdepth_upper(int m, int t) {
    check_residue_params(m, t);
    return static_cast<long long>(t) + m - 1 - ceil_div(t, m);
}

/// Upper bound for sdepth of the residue ideal itself:
/// t+m - floor((ceil(t/m)+1)/2).
inline long long residue_ideal_sdepth_upper(int m, int t) {
    check_residue_params(m, t);
    return static_cast<long long>(t) + m - floor_div(ceil_div(t, m) + 1, 2);
}

/// Matching lower bound, from the split t+m = m*a + b with 1 <= b <= m:
/// t+m - b*floor((a+1)/2) - (m-b)*floor(a/2).
inline long long residue_ideal_sdepth_lower(int m, int t) {
    check_residue_params(m, t);
    long long a = ceil_div(t, m);
    long long b = static_cast<long long>(t) + m - m * a;
    return static_cast<long long>(t) + m - b * floor_div(a + 1, 2) - (m - b) * floor_div(a, 2);
}

/// The exploratory conjecture for m = 2: max{ ceil((n+t-1)/3), 1 }.
/// Reported, never asserted.
inline long long stefan_formula(int n, int t) {
    if (n < 2 || t < 1) throw parameter_error("stefan formula requires n >= 2, t >= 1");
    return std::max<long long>(ceil_div(static_cast<long long>(n) + t - 1, 3), 1);
}

} // namespace pathdepth
