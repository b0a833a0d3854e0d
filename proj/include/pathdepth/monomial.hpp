#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "pathdepth/errors.hpp"

namespace pathdepth {

using exponent_t = std::int32_t;

inline constexpr exponent_t max_exponent = std::numeric_limits<exponent_t>::max();

/// A monomial x_1^{c_1} ... x_n^{c_n} in a fixed ring of n variables,
/// stored as its exponent vector. The same type doubles as a
/// multidegree. Variables are 1-based throughout the library.
///
/// Divisibility of monomials is the componentwise order on exponent
/// vectors; that order is used everywhere.
class monomial {
public:
    monomial() = default;

    /// The unit monomial 1 in a ring of `nvars` variables.
    explicit monomial(int nvars) : exps_(static_cast<std::size_t>(check_nvars(nvars)), 0) {}

    explicit monomial(std::vector<exponent_t> exps) : exps_(std::move(exps)) {
        check_nvars(static_cast<int>(exps_.size()));
        for (exponent_t e : exps_)
            if (e < 0) throw input_error("monomial: negative exponent");
    }

    monomial(std::initializer_list<exponent_t> exps)
        : monomial(std::vector<exponent_t>(exps)) {}

    /// x_var in a ring of `nvars` variables (var is 1-based).
    static monomial variable(int nvars, int var) {
        monomial m(nvars);
        m.set_exponent(var, 1);
        return m;
    }

    /// The squarefree product x_lo x_{lo+1} ... x_hi; lo > hi gives 1.
    static monomial variable_range(int nvars, int lo, int hi) {
        monomial m(nvars);
        for (int v = lo; v <= hi; ++v) m.set_exponent(v, 1);
        return m;
    }

    int nvars() const { return static_cast<int>(exps_.size()); }

    exponent_t exponent(int var) const {
        check_var(var);
        return exps_[static_cast<std::size_t>(var - 1)];
    }

    void set_exponent(int var, exponent_t e) {
        check_var(var);
        if (e < 0) throw input_error("monomial: negative exponent");
        exps_[static_cast<std::size_t>(var - 1)] = e;
    }

    const std::vector<exponent_t>& exponents() const { return exps_; }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(), [](exponent_t e) { return e == 0; });
    }

    long long total_degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0LL);
    }

    /// Variables dividing this monomial (1-based, ascending).
    std::vector<int> support() const {
        std::vector<int> s;
        for (int v = 1; v <= nvars(); ++v)
            if (exps_[static_cast<std::size_t>(v - 1)] > 0) s.push_back(v);
        return s;
    }

    /// this | other, i.e. componentwise <=.
    bool divides(const monomial& other) const {
        match(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    /// Product, with checked 31-bit exponent arithmetic.
    monomial operator*(const monomial& other) const {
        match(other);
        std::vector<exponent_t> out(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            long long s = static_cast<long long>(exps_[i]) + other.exps_[i];
            if (s > max_exponent)
                throw exponent_overflow_error("monomial: exponent exceeds 31-bit range");
            out[i] = static_cast<exponent_t>(s);
        }
        return monomial(std::move(out));
    }

    /// Componentwise max; the least common multiple.
    static monomial lcm(const monomial& a, const monomial& b) {
        a.match(b);
        std::vector<exponent_t> out(a.exps_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::max(a.exps_[i], b.exps_[i]);
        return monomial(std::move(out));
    }

    /// lcm(this, u) / u, the generator contributed by `this` to the
    /// colon ideal (I : u). Componentwise max(c_i - u_i, 0).
    monomial colon_by(const monomial& u) const {
        match(u);
        std::vector<exponent_t> out(exps_.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::max<exponent_t>(exps_[i] - u.exps_[i], 0);
        return monomial(std::move(out));
    }

    /// Exact quotient this / u; requires u | this.
    monomial divide_by(const monomial& u) const {
        match(u);
        std::vector<exponent_t> out(exps_.size());
        for (std::size_t i = 0; i < out.size(); ++i) {
            if (u.exps_[i] > exps_[i])
                throw parameter_error("monomial: divide_by with a non-divisor");
            out[i] = exps_[i] - u.exps_[i];
        }
        return monomial(std::move(out));
    }

    /// Same exponents in a ring with `extra` more variables appended.
    monomial extended(int extra) const {
        if (extra < 0) throw parameter_error("monomial: negative extension");
        std::vector<exponent_t> out = exps_;
        out.resize(out.size() + static_cast<std::size_t>(extra), 0);
        return monomial(std::move(out));
    }

    bool operator==(const monomial&) const = default;

    /// Lexicographic on the exponent sequence; the library's canonical
    /// element order.
    std::strong_ordering operator<=>(const monomial& other) const {
        return std::lexicographical_compare_three_way(
            exps_.begin(), exps_.end(), other.exps_.begin(), other.exps_.end());
    }

    /// Compact text form: "x1^2*x2", or "1" for the unit monomial.
    std::string str() const {
        std::string out;
        for (int v = 1; v <= nvars(); ++v) {
            exponent_t e = exps_[static_cast<std::size_t>(v - 1)];
            if (e == 0) continue;
            if (!out.empty()) out += '*';
            out += 'x';
            out += std::to_string(v);
            if (e > 1) {
                out += '^';
                out += std::to_string(e);
            }
        }
        return out.empty() ? "1" : out;
    }

    void match(const monomial& other) const {
        if (nvars() != other.nvars())
            throw ring_mismatch_error("monomial: mixed rings (" + std::to_string(nvars()) +
                                      " vs " + std::to_string(other.nvars()) + " variables)");
    }

private:
    static int check_nvars(int n) {
        if (n <= 0) throw parameter_error("monomial: variable count must be positive");
        return n;
    }

    void check_var(int var) const {
        if (var < 1 || var > nvars())
            throw parameter_error("monomial: variable index " + std::to_string(var) +
                                  " outside 1.." + std::to_string(nvars()));
    }

    std::vector<exponent_t> exps_;
};

} // namespace pathdepth
