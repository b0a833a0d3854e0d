#pragma once

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "pathdepth/charposet.hpp"

// Exact Stanley depth via interval partitions of the characteristic
// poset. partition_with_min_rho decides, for a given k, whether the
// poset splits into intervals [c, d] whose tops touch the bound in at
// least k coordinates; stanley_depth scans k and returns the best value
// together with a certificate that the independent checker
// verify_partition accepts.

namespace pathdepth {

struct poset_interval {
    monomial low;
    monomial high;
};

struct interval_partition {
    std::vector<poset_interval> intervals;
    int min_rho = 0; // claimed: every interval top has rho >= this
};

using search_deadline = std::optional<std::chrono::steady_clock::time_point>;

namespace detail {

/// Fixed-size bitset over poset indices, flat storage.
struct bitrows {
    std::size_t words;
    std::vector<std::uint64_t> data;
    bitrows(std::size_t rows, std::size_t cols)
        : words((cols + 63) / 64), data(rows * words, 0) {}
    std::uint64_t* row(std::size_t r) { return data.data() + r * words; }
    const std::uint64_t* row(std::size_t r) const { return data.data() + r * words; }
    void set(std::size_t r, std::size_t c) { row(r)[c >> 6] |= std::uint64_t{1} << (c & 63); }
};

inline int rho_of(const monomial& d, const monomial& bound) {
    int rho = 0;
    for (int v = 1; v <= bound.nvars(); ++v)
        if (d.exponent(v) == bound.exponent(v)) ++rho;
    return rho;
}

inline std::uint64_t box_cardinality(const monomial& low, const monomial& high) {
    std::uint64_t size = 1;
    for (int v = 1; v <= low.nvars(); ++v)
        size *= static_cast<std::uint64_t>(high.exponent(v) - low.exponent(v)) + 1;
    return size;
}

struct search_stats {
    std::uint64_t nodes = 0;
    bool rank_refuted = false;
};

/// Necessary condition for a partition with tops of rank >= minb to
/// exist when the bound is squarefree: the poset's rank counts F must
/// split as a nonnegative combination of interval rank polynomials
/// z^a (1+z)^(b-a) with b >= minb, tops at rank b limited to the F[b]
/// distinct elements available. Returns false only on a proven
/// infeasibility; `budget` caps the enumeration so the check can never
/// dominate the real search.
class rank_relaxation {
public:
    rank_relaxation(std::vector<long long> ranks, int minb) : f_(std::move(ranks)), minb_(minb) {
        while (!f_.empty() && f_.back() == 0) f_.pop_back();
        top_.assign(f_.size(), 0);
        binom_.assign(f_.size(), std::vector<long long>(f_.size(), 0));
        for (std::size_t i = 0; i < f_.size(); ++i) {
            binom_[i][0] = 1;
            for (std::size_t j = 1; j <= i; ++j)
                binom_[i][j] = binom_[i - 1][j - 1] + (j < i ? binom_[i - 1][j] : 0);
        }
    }

    bool feasible(std::uint64_t budget = 200000) {
        if (f_.empty()) return true;
        if (minb_ > static_cast<int>(f_.size()) - 1) return false;
        budget_ = budget;
        counts_.assign(f_.size(), std::vector<long long>(f_.size(), 0));
        return place_rank(0);
    }

private:
    bool spent() {
        if (exhausted_) return true;
        if (budget_ == 0) {
            exhausted_ = true; // give up: advisory check reports feasible
            return true;
        }
        --budget_;
        return false;
    }

    // residual at rank r given all intervals opened at ranks < r
    long long residual(std::size_t r) const {
        long long res = f_[r];
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a; b < f_.size(); ++b)
                if (counts_[a][b]) res -= counts_[a][b] * binom_[b - a][r - a];
        return res;
    }

    bool place_rank(std::size_t r) {
        if (spent()) return true;
        if (r == f_.size()) return true;
        long long need = residual(r);
        if (need < 0) return false;
        std::size_t lo = std::max(r, static_cast<std::size_t>(std::max(minb_, 0)));
        return split(r, f_.size() - 1, lo, need);
    }

    // distribute `need` interval bottoms at rank r among top ranks
    // lo..b, trying the largest share for the largest top rank first
    bool split(std::size_t r, std::size_t b, std::size_t lo, long long need) {
        if (spent()) return true;
        long long cap = std::min<long long>(need, f_[b] - top_[b]);
        if (cap < 0) cap = 0;
        long long min_take = b == lo ? need : 0;
        for (long long take = cap; take >= min_take; --take) {
            counts_[r][b] = take;
            top_[b] += take;
            bool ok = b == lo ? place_rank(r + 1) : split(r, b - 1, lo, need - take);
            top_[b] -= take;
            counts_[r][b] = 0;
            if (ok || exhausted_) return true;
        }
        return false;
    }

    std::vector<long long> f_;
    int minb_;
    std::vector<long long> top_;
    std::vector<std::vector<long long>> binom_;
    std::vector<std::vector<long long>> counts_;
    std::uint64_t budget_ = 0;
    bool exhausted_ = false;
};

class partition_search {
public:
    partition_search(const char_poset& poset, int k, search_deadline deadline)
        : p_(poset), k_(k), deadline_(deadline), n_(poset.size()),
          words_((n_ + 63) / 64), up_(n_, n_), down_(n_, n_), tops_(n_, n_), rho_(n_) {
        for (std::size_t i = 0; i < n_; ++i)
            rho_[i] = rho_of(p_.elements[i], p_.bound);
        // elements are lex sorted and componentwise <= implies lex <=,
        // so only pairs i <= j need a comparison
        for (std::size_t i = 0; i < n_; ++i) {
            up_.set(i, i);
            down_.set(i, i);
            for (std::size_t j = i + 1; j < n_; ++j)
                if (p_.elements[i].divides(p_.elements[j])) {
                    up_.set(i, j);
                    down_.set(j, i);
                }
            // potential interval tops above i
            for (std::size_t w = 0; w < words_; ++w) tops_.row(i)[w] = up_.row(i)[w];
        }
        for (std::size_t j = 0; j < n_; ++j)
            if (rho_[j] < k_)
                for (std::size_t i = 0; i <= j; ++i)
                    tops_.row(i)[j >> 6] &= ~(std::uint64_t{1} << (j & 63));
    }

    std::optional<interval_partition> run() {
        // an element with nothing of rho >= k above it can never be
        // covered; detect that before any branching
        for (std::size_t i = 0; i < n_; ++i) {
            bool has_top = false;
            const std::uint64_t* tops = tops_.row(i);
            for (std::size_t w = 0; w < words_ && !has_top; ++w) has_top = tops[w] != 0;
            if (!has_top) return std::nullopt;
        }
        std::vector<std::uint64_t> uncov(words_, ~std::uint64_t{0});
        if (n_ % 64) uncov[words_ - 1] = (std::uint64_t{1} << (n_ % 64)) - 1;
        std::vector<std::pair<std::size_t, std::size_t>> picks;
        if (!solve(uncov, picks)) return std::nullopt;
        interval_partition part;
        part.min_rho = static_cast<int>(p_.bound.nvars());
        for (auto [c, d] : picks) {
            part.intervals.push_back(poset_interval{p_.elements[c], p_.elements[d]});
            part.min_rho = std::min(part.min_rho, rho_[d]);
        }
        if (picks.empty()) part.min_rho = std::max(k_, 0);
        return part;
    }

private:
    static bool none(const std::vector<std::uint64_t>& bits) {
        for (std::uint64_t w : bits)
            if (w) return false;
        return true;
    }

    /// Valid interval tops for `bottom` within `uncov`: box inside the
    /// poset and fully uncovered, rho >= k. Stops early once `cap`
    /// candidates are found; candidates come out in (-rho, lex) order.
    std::vector<std::size_t> candidates_for(std::size_t bottom,
                                            const std::vector<std::uint64_t>& uncov,
                                            std::size_t cap) {
        std::vector<std::tuple<int, long long, std::size_t>> found;
        const std::uint64_t* up = up_.row(bottom);
        const std::uint64_t* tops = tops_.row(bottom);
        std::vector<std::uint64_t> box(words_);
        for (std::size_t j = bottom; j < n_ && found.size() < cap; ++j) {
            if (!(tops[j >> 6] >> (j & 63) & 1)) continue;
            const std::uint64_t* down = down_.row(j);
            std::uint64_t inside = 0;
            bool clean = true;
            for (std::size_t w = 0; w < words_; ++w) {
                box[w] = up[w] & down[w];
                if (box[w] & ~uncov[w]) {
                    clean = false;
                    break;
                }
                inside += static_cast<std::uint64_t>(std::popcount(box[w]));
            }
            if (clean && inside == box_cardinality(p_.elements[bottom], p_.elements[j]))
                found.emplace_back(-rho_[j], -static_cast<long long>(inside), j);
        }
        std::sort(found.begin(), found.end());
        std::vector<std::size_t> out;
        out.reserve(found.size());
        for (auto& [neg_rho, neg_inside, j] : found) out.push_back(j);
        return out;
    }

    /// Valid interval bottoms for a forced `top` within `uncov`;
    /// larger boxes first, then lex.
    std::vector<std::size_t> candidates_below(std::size_t top,
                                              const std::vector<std::uint64_t>& uncov,
                                              std::size_t cap) {
        std::vector<std::tuple<long long, std::size_t>> found;
        const std::uint64_t* down = down_.row(top);
        std::vector<std::uint64_t> box(words_);
        for (std::size_t j = 0; j <= top && found.size() < cap; ++j) {
            if (!(down[j >> 6] >> (j & 63) & 1)) continue;
            const std::uint64_t* up = up_.row(j);
            std::uint64_t inside = 0;
            bool clean = true;
            for (std::size_t w = 0; w < words_; ++w) {
                box[w] = up[w] & down[w];
                if (box[w] & ~uncov[w]) {
                    clean = false;
                    break;
                }
                inside += static_cast<std::uint64_t>(std::popcount(box[w]));
            }
            if (clean && inside == box_cardinality(p_.elements[j], p_.elements[top]))
                found.emplace_back(-static_cast<long long>(inside), j);
        }
        std::sort(found.begin(), found.end());
        std::vector<std::size_t> out;
        out.reserve(found.size());
        for (auto& [neg_inside, j] : found) out.push_back(j);
        return out;
    }

    void apply_box(std::vector<std::uint64_t>& uncov, std::size_t bottom, std::size_t top) {
        const std::uint64_t* up = up_.row(bottom);
        const std::uint64_t* down = down_.row(top);
        for (std::size_t w = 0; w < words_; ++w) uncov[w] &= ~(up[w] & down[w]);
    }

    bool solve(std::vector<std::uint64_t> uncov,
               std::vector<std::pair<std::size_t, std::size_t>>& picks) {
        const std::size_t mark = picks.size();
        std::vector<std::size_t> branch_cands;
        std::size_t branch_bottom = n_;
        bool branch_is_top = false;

        // unit propagation loop: forced intervals are applied without
        // branching until a real choice (or a contradiction) shows up
        for (;;) {
            if (none(uncov)) return true;
            if (++nodes_ % 64 == 0 && deadline_ &&
                std::chrono::steady_clock::now() > *deadline_)
                throw timeout_error("interval partition search: wall-clock budget exhausted");

            // One pass over the uncovered elements does two jobs.
            // Forward check: an element with no uncovered potential top
            // left kills the branch (a maximal uncovered element must
            // top its own interval, so this covers the rho test for
            // maximal elements too). Selection: collect the minimal
            // uncovered elements, any of which is forced to be an
            // interval bottom.
            std::vector<std::pair<std::size_t, std::size_t>> minimals; // (alive, index)
            std::vector<std::size_t> maximals;
            bool dead = false;
            for (std::size_t i = 0; i < n_ && !dead; ++i) {
                if (!(uncov[i >> 6] >> (i & 63) & 1)) continue;
                const std::uint64_t* tops = tops_.row(i);
                std::size_t alive = 0;
                for (std::size_t w = i >> 6; w < words_; ++w)
                    alive += static_cast<std::size_t>(std::popcount(tops[w] & uncov[w]));
                if (alive == 0) {
                    dead = true;
                    break;
                }
                const std::uint64_t* down = down_.row(i);
                bool minimal = true;
                for (std::size_t w = 0; w <= (i >> 6) && minimal; ++w) {
                    std::uint64_t below = down[w] & uncov[w];
                    if (w == (i >> 6)) below &= ~(std::uint64_t{1} << (i & 63));
                    minimal = below == 0;
                }
                if (minimal) minimals.emplace_back(alive, i);
                const std::uint64_t* up = up_.row(i);
                bool maximal = true;
                for (std::size_t w = i >> 6; w < words_ && maximal; ++w) {
                    std::uint64_t above = up[w] & uncov[w];
                    if (w == (i >> 6)) above &= ~(std::uint64_t{1} << (i & 63));
                    maximal = above == 0;
                }
                if (maximal) maximals.push_back(i);
            }
            if (dead) {
                picks.resize(mark);
                return false;
            }

            // dual fail-first: a minimal uncovered element must bottom
            // its own interval, a maximal one must top its own. Examine
            // minimals with the fewest alive tops first, then the
            // maximal elements, keeping the shortest exact candidate
            // list found; cut each enumeration at the best size so far.
            std::sort(minimals.begin(), minimals.end());
            branch_bottom = n_;
            branch_is_top = false;
            branch_cands.clear();
            std::size_t best_count = n_ + 1;
            bool forced = false;
            for (auto [alive, i] : minimals) {
                if (alive >= best_count && best_count >= 2) break; // can't beat it
                auto cands = candidates_for(i, uncov, std::min(best_count, alive));
                if (cands.empty()) {
                    picks.resize(mark);
                    return false;
                }
                if (cands.size() < best_count) {
                    best_count = cands.size();
                    branch_bottom = i;
                    branch_cands = std::move(cands);
                    if (best_count == 1) break;
                }
            }
            if (best_count > 1)
                for (std::size_t i : maximals) {
                    auto cands = candidates_below(i, uncov, best_count);
                    if (cands.empty()) {
                        picks.resize(mark);
                        return false;
                    }
                    if (cands.size() < best_count) {
                        best_count = cands.size();
                        branch_bottom = i;
                        branch_is_top = true;
                        branch_cands = std::move(cands);
                        if (best_count == 1) break;
                    }
                }
            forced = best_count == 1;
            if (!forced) break;
            if (branch_is_top) {
                picks.emplace_back(branch_cands[0], branch_bottom);
                apply_box(uncov, branch_cands[0], branch_bottom);
            } else {
                picks.emplace_back(branch_bottom, branch_cands[0]);
                apply_box(uncov, branch_bottom, branch_cands[0]);
            }
        }

        // No interval can span incomparable elements, so the
        // comparability component of the branch bottom can be solved on
        // its own; fragments left behind by earlier boxes split off
        // this way all the time.
        std::vector<std::uint64_t> comp(words_, 0), frontier(words_, 0);
        comp[branch_bottom >> 6] = std::uint64_t{1} << (branch_bottom & 63);
        frontier = comp;
        for (;;) {
            std::vector<std::uint64_t> grown = comp;
            bool changed = false;
            for (std::size_t i = 0; i < n_; ++i) {
                if (!(frontier[i >> 6] >> (i & 63) & 1)) continue;
                const std::uint64_t* up = up_.row(i);
                const std::uint64_t* down = down_.row(i);
                for (std::size_t w = 0; w < words_; ++w) {
                    std::uint64_t add = (up[w] | down[w]) & uncov[w] & ~grown[w];
                    if (add) {
                        grown[w] |= add;
                        changed = true;
                    }
                }
            }
            if (!changed) break;
            for (std::size_t w = 0; w < words_; ++w) frontier[w] = grown[w] & ~comp[w];
            comp = std::move(grown);
        }
        bool split = false;
        for (std::size_t w = 0; w < words_ && !split; ++w) split = (uncov[w] & ~comp[w]) != 0;
        if (split) {
            std::vector<std::uint64_t> rest(words_);
            for (std::size_t w = 0; w < words_; ++w) rest[w] = uncov[w] & ~comp[w];
            if (solve(std::move(comp), picks) && solve(std::move(rest), picks)) return true;
            picks.resize(mark);
            return false;
        }

        for (std::size_t other : branch_cands) {
            std::size_t lo = branch_is_top ? other : branch_bottom;
            std::size_t hi = branch_is_top ? branch_bottom : other;
            std::vector<std::uint64_t> next = uncov;
            apply_box(next, lo, hi);
            picks.emplace_back(lo, hi);
            if (solve(std::move(next), picks)) return true;
            picks.pop_back();
        }
        picks.resize(mark);
        return false;
    }

    const char_poset& p_;
    int k_;
    search_deadline deadline_;
    std::size_t n_;
    std::size_t words_;
    bitrows up_, down_, tops_;
    std::vector<int> rho_;
public:
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/// Decide whether the poset admits an interval partition whose tops all
/// have rho >= k; returns one if so. Deterministic for a fixed element
/// order. k <= 0 always succeeds (singletons).
inline std::optional<interval_partition> partition_with_min_rho(const char_poset& poset, int k,
                                                                search_deadline deadline = {},
                                                                detail::search_stats* stats = nullptr) {
    if (poset.elements.empty()) {
        interval_partition part;
        part.min_rho = std::max(k, 0);
        return part;
    }
    if (k <= 0) {
        interval_partition part;
        part.min_rho = poset.bound.nvars();
        for (const monomial& e : poset.elements) {
            part.intervals.push_back(poset_interval{e, e});
            part.min_rho = std::min(part.min_rho, detail::rho_of(e, poset.bound));
        }
        return part;
    }
    bool squarefree_bound = true;
    int free_coords = 0;
    for (int v = 1; v <= poset.nvars; ++v) {
        squarefree_bound &= poset.bound.exponent(v) <= 1;
        free_coords += poset.bound.exponent(v) == 0;
    }
    if (squarefree_bound && k - free_coords > 0) {
        std::vector<long long> ranks(static_cast<std::size_t>(poset.nvars) + 1, 0);
        for (const monomial& e : poset.elements)
            ++ranks[static_cast<std::size_t>(e.total_degree())];
        detail::rank_relaxation relax(std::move(ranks), k - free_coords);
        if (!relax.feasible()) {
            if (stats) stats->rank_refuted = true;
            return std::nullopt;
        }
    }
    detail::partition_search search(poset, k, deadline);
    try {
        auto out = search.run();
        if (stats) stats->nodes += search.nodes_;
        return out;
    } catch (...) {
        if (stats) stats->nodes += search.nodes_;
        throw;
    }
}

struct sdepth_options {
    std::optional<int> lower_hint;               // known lower bound, e.g. the depth
    std::chrono::milliseconds timeout{60'000};   // zero disables the deadline
    poset_options poset;
};

struct sdepth_result {
    int value = 0;
    interval_partition certificate;
    std::size_t poset_size = 0;
};

/// Largest k admitting a partition, plus the certificate found there.
/// Scans upward from the hint when one is given (the theory's depth
/// lower bound makes that the best start), otherwise binary search on
/// [0, n]; both rely on the decision being monotone in k.
inline sdepth_result stanley_depth_of_poset(const char_poset& poset,
                                            const sdepth_options& opts = {}) {
    search_deadline deadline;
    if (opts.timeout.count() > 0)
        deadline = std::chrono::steady_clock::now() + opts.timeout;
    const int n = poset.nvars;
    sdepth_result out;
    out.poset_size = poset.size();
    if (poset.elements.empty()) {
        out.value = n;
        out.certificate.min_rho = n;
        return out;
    }
    auto attempt = [&](int k) { return partition_with_min_rho(poset, k, deadline); };
    int k = std::clamp(opts.lower_hint.value_or(-1), 0, n);
    std::optional<interval_partition> best;
    if (opts.lower_hint) {
        best = attempt(k);
        while (!best && k > 0) best = attempt(--k); // unsound hint: walk down
        for (int next = k + 1; best && next <= n; ++next) {
            auto more = attempt(next);
            if (!more) break;
            best = std::move(more);
            k = next;
        }
    } else {
        int lo = 0, hi = n;
        best = attempt(0);
        while (lo < hi) {
            int mid = (lo + hi + 1) / 2;
            auto part = attempt(mid);
            if (part) {
                best = std::move(part);
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        k = lo;
    }
    out.value = k;
    out.certificate = std::move(*best);
    return out;
}

inline sdepth_result stanley_depth(const monomial_ideal& I, poset_mode mode,
                                   const sdepth_options& opts = {}) {
    return stanley_depth_of_poset(build_poset(I, mode, opts.poset), opts);
}

inline sdepth_result stanley_depth(const monomial_ideal& I, const monomial_ideal& J,
                                   const sdepth_options& opts = {}) {
    return stanley_depth_of_poset(build_poset(I, J, opts.poset), opts);
}

struct verify_report {
    bool ok = true;
    std::vector<std::string> reasons;

    void fail(std::string why) {
        ok = false;
        reasons.push_back(std::move(why));
    }
};

/// Independent certificate checker: re-derives everything from the
/// poset's element set and raw interval endpoints, sharing no state
/// with the search. Accepts iff the intervals are inside the poset,
/// pairwise disjoint, cover it exactly, and every top has
/// rho >= claimed min_rho >= k.
inline verify_report verify_partition(const char_poset& poset, const interval_partition& part,
                                      int k) {
    verify_report report;
    if (part.min_rho < k) {
        report.fail("claimed min rho " + std::to_string(part.min_rho) + " is below the target " +
                    std::to_string(k));
        return report;
    }
    std::set<monomial> members(poset.elements.begin(), poset.elements.end());
    std::set<monomial> seen;
    for (std::size_t idx = 0; idx < part.intervals.size(); ++idx) {
        const auto& iv = part.intervals[idx];
        const std::string tag = "interval " + std::to_string(idx);
        if (iv.low.nvars() != poset.nvars || iv.high.nvars() != poset.nvars) {
            report.fail(tag + ": wrong ring");
            return report;
        }
        if (!iv.low.divides(iv.high) || !iv.high.divides(poset.bound)) {
            report.fail(tag + ": endpoints violate low <= high <= bound");
            continue;
        }
        if (detail::rho_of(iv.high, poset.bound) < part.min_rho)
            report.fail(tag + ": top has rho below the claimed minimum");
        // walk the box [low, high]
        std::vector<exponent_t> cur(iv.low.exponents());
        for (;;) {
            monomial e(cur);
            if (!members.count(e)) {
                report.fail(tag + ": element " + e.str() + " is not in the poset");
                break;
            }
            if (!seen.insert(e).second) {
                report.fail(tag + ": overlap at " + e.str());
                break;
            }
            int v = poset.nvars - 1;
            while (v >= 0 && cur[static_cast<std::size_t>(v)] == iv.high.exponent(v + 1)) {
                cur[static_cast<std::size_t>(v)] = iv.low.exponent(v + 1);
                --v;
            }
            if (v < 0) break;
            ++cur[static_cast<std::size_t>(v)];
        }
    }
    if (report.ok && seen.size() != members.size())
        report.fail("union covers " + std::to_string(seen.size()) + " of " +
                    std::to_string(members.size()) + " poset elements");
    return report;
}

// --- certificate serialization ------------------------------------------

inline nlohmann::json certificate_to_json(const char_poset& poset,
                                          const interval_partition& part) {
    nlohmann::json out;
    out["format"] = "pathdepth-certificate/1";
    out["n"] = poset.nvars;
    out["mode"] = to_string(poset.mode);
    out["bound"] = poset.bound.exponents();
    out["min_rho"] = part.min_rho;
    nlohmann::json intervals = nlohmann::json::array();
    for (const auto& iv : part.intervals)
        intervals.push_back({{"low", iv.low.exponents()}, {"high", iv.high.exponents()}});
    out["intervals"] = std::move(intervals);
    return out;
}

struct parsed_certificate {
    int nvars = 0;
    poset_mode mode = poset_mode::quotient;
    monomial bound;
    interval_partition partition;
};

inline parsed_certificate certificate_from_json(const nlohmann::json& j) {
    try {
        parsed_certificate out;
        if (j.at("format").get<std::string>() != "pathdepth-certificate/1")
            throw input_error("certificate: unknown format tag");
        out.nvars = j.at("n").get<int>();
        auto mode = poset_mode_of(j.at("mode").get<std::string>());
        if (!mode) throw input_error("certificate: unknown mode");
        out.mode = *mode;
        out.bound = monomial(j.at("bound").get<std::vector<exponent_t>>());
        out.partition.min_rho = j.at("min_rho").get<int>();
        for (const auto& iv : j.at("intervals"))
            out.partition.intervals.push_back(
                poset_interval{monomial(iv.at("low").get<std::vector<exponent_t>>()),
                               monomial(iv.at("high").get<std::vector<exponent_t>>())});
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("certificate: ") + e.what());
    }
}

/// Re-validate a serialized certificate against the ideal alone: the
/// poset is rebuilt from the recorded bound and mode, then handed to
/// the independent checker.
inline verify_report verify_certificate(const nlohmann::json& j, const monomial_ideal& I,
                                        const monomial_ideal* J = nullptr,
                                        std::uint64_t max_poset = default_max_poset) {
    parsed_certificate cert = certificate_from_json(j);
    verify_report report;
    if (cert.nvars != I.nvars()) {
        report.fail("certificate ring differs from the ideal's");
        return report;
    }
    poset_options opts;
    opts.bound_override = cert.bound;
    opts.max_size = max_poset;
    char_poset poset = (cert.mode == poset_mode::pair)
                           ? build_poset(I, J ? *J : monomial_ideal::zero(I.nvars()), opts)
                           : build_poset(I, cert.mode, opts);
    return verify_partition(poset, cert.partition, cert.partition.min_rho);
}

} // namespace pathdepth
