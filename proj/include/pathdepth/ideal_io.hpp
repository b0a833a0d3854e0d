#pragma once

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "pathdepth/ideal.hpp"

// Text format for ideals, shared by the CLI and the tests.
//
//   ring n=<int>
//   x1^2*x2
//   2:1 3:1
//
// One monomial per line after the header, either compact
// ("x1^2*x2", "1" for the unit monomial) or as space-separated
// var:exp pairs. Blank lines and lines starting with '#' are ignored.
// Printing always emits the canonical form (minimal generators in
// lexicographic order, compact style), so parse(print(I)) == I.

namespace pathdepth {

inline void print_ideal(std::ostream& os, const monomial_ideal& I) {
    os << "ring n=" << I.nvars() << '\n';
    for (const monomial& g : I.generators()) os << g.str() << '\n';
}

inline std::string ideal_to_text(const monomial_ideal& I) {
    std::ostringstream os;
    print_ideal(os, I);
    return os.str();
}

namespace detail {

inline input_error parse_fail(std::size_t lineno, const std::string& what) {
    return input_error("ideal text, line " + std::to_string(lineno) + ": " + what);
}

inline bool parse_int(std::string_view s, std::size_t& pos, long long& out) {
    std::size_t start = pos;
    long long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > max_exponent) return false;
        ++pos;
    }
    if (pos == start) return false;
    out = v;
    return true;
}

inline monomial parse_compact(std::string_view s, int nvars, std::size_t lineno) {
    monomial m(nvars);
    std::size_t pos = 0;
    while (true) {
        if (pos >= s.size() || s[pos] != 'x') throw parse_fail(lineno, "expected 'x<var>'");
        ++pos;
        long long var = 0, exp = 1;
        if (!parse_int(s, pos, var)) throw parse_fail(lineno, "expected variable index");
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            if (!parse_int(s, pos, exp)) throw parse_fail(lineno, "expected exponent");
        }
        if (var < 1 || var > nvars)
            throw parse_fail(lineno, "variable x" + std::to_string(var) + " outside ring");
        long long total = m.exponent(static_cast<int>(var)) + exp;
        if (total > max_exponent) throw parse_fail(lineno, "exponent exceeds 31-bit range");
        m.set_exponent(static_cast<int>(var), static_cast<exponent_t>(total));
        if (pos == s.size()) return m;
        if (s[pos] != '*') throw parse_fail(lineno, "expected '*' between factors");
        ++pos;
    }
}

inline monomial parse_pairs(std::string_view s, int nvars, std::size_t lineno) {
    monomial m(nvars);
    std::size_t pos = 0;
    bool any = false;
    while (pos < s.size()) {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == s.size()) break;
        long long var = 0, exp = 0;
        if (!parse_int(s, pos, var)) throw parse_fail(lineno, "expected variable index");
        if (pos >= s.size() || s[pos] != ':') throw parse_fail(lineno, "expected ':'");
        ++pos;
        if (!parse_int(s, pos, exp)) throw parse_fail(lineno, "expected exponent");
        if (var < 1 || var > nvars)
            throw parse_fail(lineno, "variable " + std::to_string(var) + " outside ring");
        long long total = m.exponent(static_cast<int>(var)) + exp;
        if (total > max_exponent) throw parse_fail(lineno, "exponent exceeds 31-bit range");
        m.set_exponent(static_cast<int>(var), static_cast<exponent_t>(total));
        any = true;
    }
    if (!any) throw parse_fail(lineno, "empty monomial");
    return m;
}

} // namespace detail

inline monomial_ideal parse_ideal(std::istream& is) {
    std::string line;
    std::size_t lineno = 0;
    int nvars = -1;
    std::vector<monomial> gens;
    while (std::getline(is, line)) {
        ++lineno;
        // strip trailing CR and surrounding whitespace
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t\r");
        std::string_view body(line.data() + b, e - b + 1);
        if (body[0] == '#') continue;
        if (nvars < 0) {
            if (!body.starts_with("ring n="))
                throw detail::parse_fail(lineno, "expected header 'ring n=<int>'");
            std::size_t pos = 7;
            long long n = 0;
            if (!detail::parse_int(body, pos, n) || pos != body.size() || n < 1)
                throw detail::parse_fail(lineno, "bad variable count in header");
            nvars = static_cast<int>(n);
            continue;
        }
        if (body == "1")
            gens.emplace_back(nvars);
        else if (body[0] == 'x')
            gens.push_back(detail::parse_compact(body, nvars, lineno));
        else
            gens.push_back(detail::parse_pairs(body, nvars, lineno));
    }
    if (nvars < 0) throw input_error("ideal text: missing 'ring n=<int>' header");
    return monomial_ideal::from_generators(nvars, std::move(gens));
}

inline monomial_ideal parse_ideal_text(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse_ideal(is);
}

/// Parse a single monomial in compact form ("x1^2*x2", "1") against a
/// given ring size. Used for CLI flags.
inline monomial parse_monomial_text(std::string_view text, int nvars) {
    if (text == "1") return monomial(nvars);
    return detail::parse_compact(text, nvars, 1);
}

} // namespace pathdepth
