#pragma once

#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "pathdepth/ideal.hpp"
#include "pathdepth/parallel.hpp"
#include "pathdepth/simplicial.hpp"

// Multigraded Betti numbers of S/I for a monomial ideal I, computed as
// reduced homology of upper Koszul complexes, scanned over the lcm
// lattice only (they vanish at every other multidegree; that pruning is
// a correctness-bearing assumption of the method). Projective dimension
// and depth then fall out of the table.

namespace pathdepth {

struct betti_options {
    coeff_field field = coeff_field::rationals;
    std::size_t max_generators = default_max_generators;
    std::size_t max_lattice = default_max_lattice;
    int max_vertices = default_max_vertices;
    unsigned jobs = 1;
};

/// The upper Koszul complex of I at multidegree a: vertex set supp(a),
/// a subset T of the support is a face exactly when x^(a-T) lies in I.
/// Downward closed because membership is monotone under divisibility.
inline simplicial_complex upper_koszul(const monomial_ideal& I, const monomial& deg) {
    if (I.nvars() != deg.nvars())
        throw ring_mismatch_error("upper Koszul: degree from a different ring");
    simplicial_complex c;
    c.vertices = deg.support();
    const int nv = static_cast<int>(c.vertices.size());
    if (nv > 31) throw resource_limit_error("upper Koszul: support too large");
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << nv); ++mask) {
        monomial shifted = deg;
        for (int b = 0; b < nv; ++b)
            if (mask & (std::uint32_t{1} << b)) {
                int var = c.vertices[static_cast<std::size_t>(b)];
                shifted.set_exponent(var, shifted.exponent(var) - 1);
            }
        if (I.contains(shifted)) c.faces.push_back(mask);
    }
    return c;
}

/// Nonzero multigraded Betti numbers of S/I, keyed by (homological
/// index i, multidegree); the implicit beta_{0,0} = 1 is not stored.
/// Rows are kept sorted by (i, lex degree) so serialization is
/// deterministic.
class betti_table {
public:
    struct entry {
        int index;
        monomial degree;
        long long rank;
    };

    betti_table() = default;
    betti_table(int nvars, std::vector<entry> entries)
        : nvars_(nvars), entries_(std::move(entries)) {
        std::sort(entries_.begin(), entries_.end(), [](const entry& a, const entry& b) {
            return a.index != b.index ? a.index < b.index : a.degree < b.degree;
        });
    }

    int nvars() const { return nvars_; }
    const std::vector<entry>& entries() const { return entries_; }

    int max_index() const {
        int top = 0;
        for (const auto& e : entries_) top = std::max(top, e.index);
        return top;
    }

    long long total(int index) const {
        long long sum = 0;
        for (const auto& e : entries_)
            if (e.index == index) sum += e.rank;
        return sum;
    }

    std::string to_text() const {
        std::ostringstream os;
        os << "i\tdegree\trank\n";
        for (const auto& e : entries_) os << e.index << '\t' << e.degree.str() << '\t' << e.rank << '\n';
        return os.str();
    }

private:
    int nvars_ = 0;
    std::vector<entry> entries_;
};

/// Scan the lcm lattice and assemble the Betti table of S/I. Lattice
/// degrees are independent, so they may be evaluated concurrently;
/// results land in index-addressed slots and are merged in order.
inline betti_table betti_table_of_quotient(const monomial_ideal& I,
                                           const betti_options& opts = {}) {
    std::vector<monomial> lattice = lcm_lattice(I, opts.max_generators, opts.max_lattice);
    std::vector<std::vector<betti_table::entry>> slots(lattice.size());
    parallel_for(
        lattice.size(),
        [&](std::size_t idx) {
            simplicial_complex c = upper_koszul(I, lattice[idx]);
            auto ranks = reduced_homology_ranks(c, opts.field, opts.max_vertices);
            for (std::size_t k = 0; k < ranks.size(); ++k)
                if (ranks[k] > 0)
                    slots[idx].push_back(betti_table::entry{static_cast<int>(k) + 1,
                                                            lattice[idx], ranks[k]});
        },
        opts.jobs);
    std::vector<betti_table::entry> entries;
    for (auto& s : slots) entries.insert(entries.end(), s.begin(), s.end());
    return betti_table(I.nvars(), std::move(entries));
}

inline void require_proper_nonzero(const monomial_ideal& I, const char* who) {
    if (I.is_zero()) throw domain_error(std::string(who) + ": zero ideal");
    if (I.is_unit()) throw domain_error(std::string(who) + ": unit ideal");
}

/// pd(S/I): the largest homological index carrying a nonzero Betti
/// number.
inline int quotient_pd(const monomial_ideal& I, const betti_options& opts = {}) {
    require_proper_nonzero(I, "projective dimension");
    return betti_table_of_quotient(I, opts).max_index();
}

/// depth(S/I) = n - pd(S/I) (Auslander-Buchsbaum).
inline int quotient_depth(const monomial_ideal& I, const betti_options& opts = {}) {
    return I.nvars() - quotient_pd(I, opts);
}

/// depth of the ideal itself: one more than the quotient's depth.
inline int ideal_depth(const monomial_ideal& I, const betti_options& opts = {}) {
    return quotient_depth(I, opts) + 1;
}

} // namespace pathdepth
