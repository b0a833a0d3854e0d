#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pathdepth/ideal.hpp"

namespace pathdepth {

inline constexpr std::uint64_t default_max_poset = 2'000'000;

/// What the poset elements are measured against: monomials outside I
/// (the quotient S/I), inside I (the ideal itself), or inside I but
/// outside J (the subquotient given by a pair J inside I).
enum class poset_mode { quotient, ideal, pair };

inline const char* to_string(poset_mode m) {
    switch (m) {
        case poset_mode::quotient: return "quotient";
        case poset_mode::ideal: return "ideal";
        default: return "pair";
    }
}

inline std::optional<poset_mode> poset_mode_of(std::string_view s) {
    if (s == "quotient") return poset_mode::quotient;
    if (s == "ideal") return poset_mode::ideal;
    if (s == "pair") return poset_mode::pair;
    return std::nullopt;
}

struct poset_options {
    std::optional<monomial> bound_override; // must dominate every generator
    std::uint64_t max_size = default_max_poset;
};

/// The finite poset of exponent vectors c <= g whose monomials pass the
/// mode's membership test, in lexicographic order. Every question about
/// Stanley depth of I, S/I or I/J reduces to interval partitions of
/// this object.
struct char_poset {
    int nvars = 0;
    monomial bound;
    poset_mode mode = poset_mode::quotient;
    std::vector<monomial> elements;

    std::size_t size() const { return elements.size(); }
};

namespace detail {

inline monomial poset_bound(const monomial_ideal& I, const monomial_ideal* J,
                            const poset_options& opts) {
    monomial bound = I.exponent_bound();
    if (J) bound = monomial::lcm(bound, J->exponent_bound());
    if (opts.bound_override) {
        const monomial& o = *opts.bound_override;
        if (!bound.divides(o))
            throw parameter_error("poset bound must dominate every generator exponent");
        bound = o;
    }
    return bound;
}

template <class Member>
char_poset enumerate_poset(int nvars, monomial bound, poset_mode mode, std::uint64_t cap,
                           Member&& member) {
    std::uint64_t box = 1;
    for (int v = 1; v <= nvars; ++v) {
        box *= static_cast<std::uint64_t>(bound.exponent(v)) + 1;
        if (box > cap)
            throw resource_limit_error("characteristic poset: box of " + std::to_string(box) +
                                       "+ elements exceeds the cap of " + std::to_string(cap));
    }
    char_poset p;
    p.nvars = nvars;
    p.bound = bound;
    p.mode = mode;
    // odometer over the box, ascending lexicographically
    std::vector<exponent_t> cur(static_cast<std::size_t>(nvars), 0);
    for (;;) {
        monomial c(cur);
        if (member(c)) p.elements.push_back(std::move(c));
        int v = nvars - 1;
        while (v >= 0 && cur[static_cast<std::size_t>(v)] == bound.exponent(v + 1)) {
            cur[static_cast<std::size_t>(v)] = 0;
            --v;
        }
        if (v < 0) break;
        ++cur[static_cast<std::size_t>(v)];
    }
    return p;
}

} // namespace detail

/// Characteristic poset of I in quotient or ideal mode.
inline char_poset build_poset(const monomial_ideal& I, poset_mode mode,
                              const poset_options& opts = {}) {
    if (mode == poset_mode::pair)
        throw parameter_error("pair mode needs the two-ideal overload of build_poset");
    monomial bound = detail::poset_bound(I, nullptr, opts);
    return detail::enumerate_poset(I.nvars(), bound, mode, opts.max_size,
                                   [&](const monomial& c) {
                                       return mode == poset_mode::quotient ? !I.contains(c)
                                                                           : I.contains(c);
                                   });
}

/// Characteristic poset of the pair J inside I (elements of I \ J).
inline char_poset build_poset(const monomial_ideal& I, const monomial_ideal& J,
                              const poset_options& opts = {}) {
    if (I.nvars() != J.nvars()) throw ring_mismatch_error("pair poset across rings");
    if (!I.contains(J)) throw domain_error("pair poset requires J contained in I");
    monomial bound = detail::poset_bound(I, &J, opts);
    return detail::enumerate_poset(I.nvars(), bound, poset_mode::pair, opts.max_size,
                                   [&](const monomial& c) {
                                       return I.contains(c) && !J.contains(c);
                                   });
}

} // namespace pathdepth
