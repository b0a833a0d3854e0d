#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pathdepth/monomial.hpp"

namespace pathdepth {

inline constexpr std::size_t default_max_generators = 22;
inline constexpr std::size_t default_max_lattice = 200000;

/// A monomial ideal in canonical form: the unique minimal generating
/// set G(I), stored as a divisibility antichain sorted lexicographically
/// on exponent sequences. Two ideals are equal iff their canonical
/// forms are equal, which makes every identity in this library a
/// decidable structural test.
///
/// The zero ideal has an empty generator list; the unit ideal is the
/// single all-zeros vector.
class monomial_ideal {
public:
    monomial_ideal() = default;

    static monomial_ideal zero(int nvars) {
        monomial_ideal I;
        I.nvars_ = checked(nvars);
        return I;
    }

    static monomial_ideal unit(int nvars) { return principal(monomial(nvars)); }

    static monomial_ideal principal(monomial m) {
        monomial_ideal I;
        I.nvars_ = m.nvars();
        I.gens_.push_back(std::move(m));
        return I;
    }

    /// The ideal generated by the listed variables (1-based).
    static monomial_ideal variables(int nvars, const std::vector<int>& vars) {
        std::vector<monomial> gens;
        gens.reserve(vars.size());
        for (int v : vars) gens.push_back(monomial::variable(nvars, v));
        return from_generators(nvars, std::move(gens));
    }

    /// Canonicalize an arbitrary generating set: drop every monomial
    /// that another one divides, deduplicate, sort lexicographically.
    /// Idempotent and insensitive to the input order.
    static monomial_ideal from_generators(int nvars, std::vector<monomial> raw) {
        checked(nvars);
        for (const monomial& g : raw)
            if (g.nvars() != nvars)
                throw ring_mismatch_error("ideal: generator has " + std::to_string(g.nvars()) +
                                          " variables, ring has " + std::to_string(nvars));
        // Sorting by total degree first means a kept generator can never
        // be divisible by a later candidate, so one forward pass suffices.
        // A strict divisor also has strictly smaller degree (equal degree
        // plus divisibility means equality, which dedup already removed),
        // so each candidate is only tested against the smaller-degree
        // prefix of the kept list.
        std::sort(raw.begin(), raw.end(), [](const monomial& a, const monomial& b) {
            long long da = a.total_degree(), db = b.total_degree();
            return da != db ? da < db : a < b;
        });
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        std::vector<monomial> kept;
        std::vector<long long> kept_deg;
        for (monomial& cand : raw) {
            long long deg = cand.total_degree();
            bool redundant = false;
            for (std::size_t i = 0; i < kept.size() && kept_deg[i] < deg; ++i)
                if (kept[i].divides(cand)) {
                    redundant = true;
                    break;
                }
            if (!redundant) {
                kept_deg.push_back(deg);
                kept.push_back(std::move(cand));
            }
        }
        std::sort(kept.begin(), kept.end());
        monomial_ideal I;
        I.nvars_ = nvars;
        I.gens_ = std::move(kept);
        return I;
    }

    int nvars() const { return nvars_; }
    const std::vector<monomial>& generators() const { return gens_; }
    std::size_t generator_count() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

    /// Membership: some minimal generator divides u.
    bool contains(const monomial& u) const {
        if (u.nvars() != nvars_)
            throw ring_mismatch_error("ideal: membership test across rings");
        for (const monomial& g : gens_)
            if (g.divides(u)) return true;
        return false;
    }

    bool contains(const monomial_ideal& other) const {
        if (other.nvars() != nvars_)
            throw ring_mismatch_error("ideal: containment test across rings");
        for (const monomial& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    /// Componentwise max over the generators; the default bound g for
    /// characteristic posets. Zero ideal gives the all-zeros vector.
    monomial exponent_bound() const {
        monomial b(nvars_);
        for (const monomial& g : gens_) b = monomial::lcm(b, g);
        return b;
    }

    /// Same generators in a ring with `extra` unused variables appended.
    monomial_ideal extended(int extra) const {
        std::vector<monomial> gens;
        gens.reserve(gens_.size());
        for (const monomial& g : gens_) gens.push_back(g.extended(extra));
        monomial_ideal I;
        I.nvars_ = nvars_ + extra;
        I.gens_ = std::move(gens);
        return I;
    }

    bool operator==(const monomial_ideal&) const = default;

private:
    static int checked(int n) {
        if (n <= 0) throw parameter_error("ideal: variable count must be positive");
        return n;
    }

    int nvars_ = 0;
    std::vector<monomial> gens_;
};

inline monomial_ideal minimalize(int nvars, std::vector<monomial> raw) {
    return monomial_ideal::from_generators(nvars, std::move(raw));
}

/// Sum I + J: union of the generating sets, canonicalized.
inline monomial_ideal add(const monomial_ideal& I, const monomial_ideal& J) {
    if (I.nvars() != J.nvars()) throw ring_mismatch_error("ideal: add across rings");
    std::vector<monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return monomial_ideal::from_generators(I.nvars(), std::move(gens));
}

inline monomial_ideal add(const monomial_ideal& I, const monomial& m) {
    return add(I, monomial_ideal::principal(m));
}

/// Product I*J: all pairwise products, canonicalized.
inline monomial_ideal multiply(const monomial_ideal& I, const monomial_ideal& J) {
    if (I.nvars() != J.nvars()) throw ring_mismatch_error("ideal: multiply across rings");
    std::vector<monomial> gens;
    gens.reserve(I.generator_count() * J.generator_count());
    for (const monomial& g : I.generators())
        for (const monomial& h : J.generators()) gens.push_back(g * h);
    return monomial_ideal::from_generators(I.nvars(), std::move(gens));
}

/// I^t for t >= 1. t = 0 is rejected: the unit-ideal convention is
/// deliberately avoided.
inline monomial_ideal power(const monomial_ideal& I, int t) {
    if (t < 1) throw parameter_error("ideal: power requires t >= 1");
    monomial_ideal out = I;
    for (int i = 1; i < t; ++i) out = multiply(out, I);
    return out;
}

/// Colon ideal (I : u) = { v : v*u in I }, computed generator by
/// generator as lcm(g, u)/u and canonicalized.
inline monomial_ideal colon(const monomial_ideal& I, const monomial& u) {
    if (I.nvars() != u.nvars()) throw ring_mismatch_error("ideal: colon across rings");
    std::vector<monomial> gens;
    gens.reserve(I.generator_count());
    for (const monomial& g : I.generators()) gens.push_back(g.colon_by(u));
    return monomial_ideal::from_generators(I.nvars(), std::move(gens));
}

/// Intersection via pairwise lcms. Quadratic generator blowup, which is
/// fine at the generator counts this library works with.
inline monomial_ideal intersect(const monomial_ideal& I, const monomial_ideal& J) {
    if (I.nvars() != J.nvars()) throw ring_mismatch_error("ideal: intersect across rings");
    std::vector<monomial> gens;
    gens.reserve(I.generator_count() * J.generator_count());
    for (const monomial& g : I.generators())
        for (const monomial& h : J.generators()) gens.push_back(monomial::lcm(g, h));
    return monomial_ideal::from_generators(I.nvars(), std::move(gens));
}

/// The lcm lattice of I minus its bottom: every join (componentwise
/// max) of a nonempty subset of G(I), deduplicated and sorted
/// lexicographically. Computed as the closure of G(I) under binary
/// joins. These are the only multidegrees where Betti numbers can live.
inline std::vector<monomial> lcm_lattice(const monomial_ideal& I,
                                         std::size_t max_generators = default_max_generators,
                                         std::size_t max_lattice = default_max_lattice) {
    if (I.generator_count() > max_generators)
        throw resource_limit_error("lcm lattice: " + std::to_string(I.generator_count()) +
                                   " generators exceed the cap of " +
                                   std::to_string(max_generators));
    std::set<monomial> seen(I.generators().begin(), I.generators().end());
    std::vector<monomial> work(seen.begin(), seen.end());
    while (!work.empty()) {
        monomial v = std::move(work.back());
        work.pop_back();
        for (const monomial& g : I.generators()) {
            monomial j = monomial::lcm(v, g);
            if (seen.insert(j).second) {
                if (seen.size() > max_lattice)
                    throw resource_limit_error("lcm lattice: size exceeds the cap of " +
                                               std::to_string(max_lattice));
                work.push_back(std::move(j));
            }
        }
    }
    return std::vector<monomial>(seen.begin(), seen.end());
}

} // namespace pathdepth
