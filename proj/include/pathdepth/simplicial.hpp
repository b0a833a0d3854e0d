#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pathdepth/errors.hpp"

// Small simplicial complexes on at most 32 labelled vertices, and exact
// reduced homology ranks over the rationals (fraction-free integer
// elimination) or over the field with two elements (bitset
// elimination). The empty face is a face of every nonempty complex and
// carries reduced homology in degree -1.

namespace pathdepth {

inline constexpr int default_max_vertices = 20;

struct simplicial_complex {
    std::vector<int> vertices;          // ambient labels, ascending
    std::vector<std::uint32_t> faces;   // bitmasks over vertex positions, sorted

    bool is_void() const { return faces.empty(); }
    std::size_t face_count() const { return faces.size(); }

    bool has_face(std::uint32_t mask) const {
        return std::binary_search(faces.begin(), faces.end(), mask);
    }

    /// Downward closure of a facet list; the usual way tests build
    /// complexes by hand. Facets are given as vertex-position masks.
    static simplicial_complex from_facets(std::vector<int> vertices,
                                          const std::vector<std::uint32_t>& facets) {
        simplicial_complex c;
        c.vertices = std::move(vertices);
        std::vector<std::uint32_t> all;
        for (std::uint32_t f : facets) {
            // enumerate submasks, including 0
            std::uint32_t s = f;
            for (;;) {
                all.push_back(s);
                if (s == 0) break;
                s = (s - 1) & f;
            }
        }
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        c.faces = std::move(all);
        return c;
    }
};

enum class coeff_field { rationals, gf2 };

namespace detail {

/// Rank by Bareiss fraction-free elimination. Intermediates are minors
/// of the input, computed in 128-bit and required to fit 64 bits;
/// boundary matrices keep them tiny in practice.
inline std::size_t integer_rank(std::vector<std::vector<long long>>& M) {
    if (M.empty() || M[0].empty()) return 0;
    const std::size_t rows = M.size(), cols = M[0].size();
    std::size_t rank = 0, pr = 0;
    long long prev = 1;
    for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
        std::size_t pivot = pr;
        while (pivot < rows && M[pivot][pc] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(M[pr], M[pivot]);
        for (std::size_t r = pr + 1; r < rows; ++r) {
            if (M[r][pc] == 0 && M[pr][pc] == 1 && prev == 1) continue;
            for (std::size_t c = pc + 1; c < cols; ++c) {
                __int128 num = static_cast<__int128>(M[r][c]) * M[pr][pc] -
                               static_cast<__int128>(M[r][pc]) * M[pr][c];
                __int128 q = num / prev; // exact by Bareiss
                if (q > INT64_MAX || q < INT64_MIN)
                    throw resource_limit_error(
                        "homology: exact elimination left 64-bit range");
                M[r][c] = static_cast<long long>(q);
            }
            M[r][pc] = 0;
        }
        prev = M[pr][pc];
        ++pr;
        ++rank;
    }
    return rank;
}

inline std::size_t gf2_rank(std::vector<std::vector<std::uint64_t>>& rows, std::size_t cols) {
    std::size_t rank = 0, pr = 0;
    for (std::size_t pc = 0; pc < cols && pr < rows.size(); ++pc) {
        const std::size_t word = pc >> 6;
        const std::uint64_t bit = std::uint64_t{1} << (pc & 63);
        std::size_t pivot = pr;
        while (pivot < rows.size() && !(rows[pivot][word] & bit)) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[pr], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != pr && (rows[r][word] & bit))
                for (std::size_t w = 0; w < rows[r].size(); ++w) rows[r][w] ^= rows[pr][w];
        ++pr;
        ++rank;
    }
    return rank;
}

} // namespace detail

/// Ranks of the reduced simplicial homology groups, indexed so that
/// out[k] is the rank in dimension k-1 (out[0] is the rank at the empty
/// face). The void complex returns an empty vector. Exact in both
/// coefficient modes.
inline std::vector<long long> reduced_homology_ranks(const simplicial_complex& complex,
                                                     coeff_field field = coeff_field::rationals,
                                                     int max_vertices = default_max_vertices) {
    if (static_cast<int>(complex.vertices.size()) > max_vertices)
        throw resource_limit_error("homology: " + std::to_string(complex.vertices.size()) +
                                   " vertices exceed the cap of " + std::to_string(max_vertices));
    if (complex.is_void()) return {};

    const int nv = static_cast<int>(complex.vertices.size());
    // faces grouped by level k = popcount = dim + 1
    std::vector<std::vector<std::uint32_t>> level(static_cast<std::size_t>(nv) + 1);
    std::unordered_map<std::uint32_t, std::size_t> index;
    index.reserve(complex.faces.size());
    for (std::uint32_t f : complex.faces)
        level[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    int top = nv;
    while (top > 0 && level[static_cast<std::size_t>(top)].empty()) --top;

    // boundary ranks: r[k] = rank of the map from level k to level k-1
    std::vector<std::size_t> r(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) {
        const auto& src = level[static_cast<std::size_t>(k)];
        const auto& dst = level[static_cast<std::size_t>(k - 1)];
        if (src.empty() || dst.empty()) continue;
        index.clear();
        for (std::size_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
        if (field == coeff_field::rationals) {
            std::vector<std::vector<long long>> M(dst.size(),
                                                  std::vector<long long>(src.size(), 0));
            for (std::size_t c = 0; c < src.size(); ++c) {
                std::uint32_t face = src[c];
                int sign = 1;
                for (std::uint32_t rest = face; rest;) {
                    std::uint32_t low = rest & (~rest + 1);
                    auto it = index.find(face ^ low);
                    if (it == index.end())
                        throw error("homology: complex is not downward closed");
                    M[it->second][c] = sign;
                    sign = -sign;
                    rest ^= low;
                }
            }
            r[static_cast<std::size_t>(k)] = detail::integer_rank(M);
        } else {
            const std::size_t words = (src.size() + 63) / 64;
            std::vector<std::vector<std::uint64_t>> M(
                dst.size(), std::vector<std::uint64_t>(words, 0));
            for (std::size_t c = 0; c < src.size(); ++c) {
                std::uint32_t face = src[c];
                for (std::uint32_t rest = face; rest;) {
                    std::uint32_t low = rest & (~rest + 1);
                    auto it = index.find(face ^ low);
                    if (it == index.end())
                        throw error("homology: complex is not downward closed");
                    M[it->second][c >> 6] |= std::uint64_t{1} << (c & 63);
                    rest ^= low;
                }
            }
            r[static_cast<std::size_t>(k)] = detail::gf2_rank(M, src.size());
        }
    }

    std::vector<long long> ranks(static_cast<std::size_t>(top) + 1, 0);
    for (int k = 0; k <= top; ++k)
        ranks[static_cast<std::size_t>(k)] =
            static_cast<long long>(level[static_cast<std::size_t>(k)].size()) -
            static_cast<long long>(r[static_cast<std::size_t>(k)]) -
            static_cast<long long>(r[static_cast<std::size_t>(k) + 1]);
    return ranks;
}

/// The reduced Euler characteristic both ways: from face counts and
/// from homology ranks. They must agree exactly; callers use this as a
/// per-complex audit.
struct euler_audit_result {
    long long from_faces;
    long long from_homology;
    bool consistent() const { return from_faces == from_homology; }
};

inline euler_audit_result euler_audit(const simplicial_complex& complex,
                                      coeff_field field = coeff_field::rationals,
                                      int max_vertices = default_max_vertices) {
    euler_audit_result out{0, 0};
    for (std::uint32_t f : complex.faces)
        out.from_faces += (std::popcount(f) % 2 == 0) ? -1 : 1; // (-1)^{dim} = (-1)^{popcount-1}
    auto ranks = reduced_homology_ranks(complex, field, max_vertices);
    for (std::size_t k = 0; k < ranks.size(); ++k)
        out.from_homology += (k % 2 == 0 ? -1 : 1) * ranks[k];
    return out;
}

} // namespace pathdepth
