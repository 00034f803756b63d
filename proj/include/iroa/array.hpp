#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "iroa/code.hpp"
#include "iroa/errors.hpp"
#include "iroa/field.hpp"
#include "iroa/limits.hpp"
#include "iroa/matrix.hpp"

namespace iroa {

namespace detail {

// C(n, k), saturated to cap + 1 so callers can compare against work caps
// without overflow concerns.
inline unsigned long long binom_capped(int n, int k, unsigned long long cap) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > cap) return cap + 1;
    }
    return static_cast<unsigned long long>(r);
}

// Exact C(n, k) for n <= 64 (always fits in 64 bits).
inline unsigned long long binom64(int n, int k) {
    return binom_capped(n, k, ~0ull - 1);
}

// The lexicographically `rank`-th k-subset of {0..n-1}.
inline std::vector<int> unrank_combination(int n, int k, unsigned long long rank) {
    std::vector<int> c(k);
    int v = 0;
    for (int i = 0; i < k; ++i) {
        for (;; ++v) {
            const unsigned long long below = binom64(n - 1 - v, k - 1 - i);
            if (rank < below) break;
            rank -= below;
        }
        c[i] = v++;
    }
    return c;
}

inline bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform draw from [0, bound) off a counter-based generator; deterministic
// across platforms and thread counts.
struct DeterministicRng {
    uint64_t state;
    explicit DeterministicRng(uint64_t seed) : state(seed) {}
    uint64_t next() { return splitmix64(state++); }
    uint64_t below(uint64_t bound) {
        const uint64_t limit = ~0ull - ~0ull % bound;
        for (;;) {
            const uint64_t v = next();
            if (v < limit) return v % bound;
        }
    }
};

// Sorted, deduplicated sample of subset ranks for sampled-mode scans.
inline std::vector<unsigned long long> sample_ranks(unsigned long long universe,
                                                    unsigned long long want, uint64_t seed) {
    DeterministicRng rng(seed);
    std::vector<unsigned long long> ranks;
    ranks.reserve(want);
    for (unsigned long long i = 0; i < want; ++i) ranks.push_back(rng.below(universe));
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    return ranks;
}

// Open-addressing set keyed by 64-bit projections, with epoch-stamped slots
// so it can be cleared in O(1) between column subsets.
struct ProbeSet {
    std::vector<uint64_t> key;
    std::vector<uint32_t> stamp;
    std::vector<uint32_t> value;
    uint32_t epoch = 0;
    uint64_t mask = 0;

    void init(std::size_t capacity) {
        std::size_t size = 16;
        while (size < capacity * 2) size <<= 1;
        key.assign(size, 0);
        stamp.assign(size, 0);
        value.assign(size, 0);
        mask = size - 1;
        epoch = 0;
    }
    void clear() { ++epoch; }
    // Inserts k; returns the previously stored value if k was present.
    std::optional<uint32_t> insert(uint64_t k, uint32_t v) {
        uint64_t h = splitmix64(k) & mask;
        for (;;) {
            if (stamp[h] != epoch) {
                stamp[h] = epoch;
                key[h] = k;
                value[h] = v;
                return std::nullopt;
            }
            if (key[h] == k) return value[h];
            h = (h + 1) & mask;
        }
    }
};

}  // namespace detail

// Hamming-ball volumes. The two variants differ in the length parameter of
// the binomial: the strength form sums C(t, i) (q-1)^i, the ambient form the
// usual C(n, i) (q-1)^i. Checkers evaluate both side by side.
enum class BallVariant { strength_form, ambient_form };

struct BallVolume {
    BallVariant variant;
    int length_param;  // t for the strength form, n for the ambient form
    int radius;
    long long q;
    unsigned long long value;
};

inline BallVolume ball_volume(BallVariant variant, int length_param, int radius, long long q) {
    if (radius < 0 || radius > length_param)
        throw PreconditionError(errc::param_out_of_range,
                                "ball radius must lie in [0, length parameter]");
    unsigned __int128 sum = 0;
    for (int i = 0; i <= radius; ++i) {
        unsigned __int128 term = detail::binom64(length_param, i);
        for (int j = 0; j < i; ++j) {
            term *= static_cast<unsigned long long>(q - 1);
            if (term > ~0ull)
                throw PreconditionError(errc::param_out_of_range,
                                        "ball volume exceeds 64-bit range");
        }
        sum += term;
        if (sum > ~0ull)
            throw PreconditionError(errc::param_out_of_range,
                                    "ball volume exceeds 64-bit range");
    }
    return {variant, length_param, radius, q, static_cast<unsigned long long>(sum)};
}

struct Witness {
    std::vector<int> columns;
    std::optional<std::pair<unsigned long long, unsigned long long>> rows;
};

struct StrengthResult {
    int t = 0;
    unsigned long long lambda = 0;
    bool exhaustive = true;  // false if any level was only sampled
};

struct IrredundancyResult {
    bool irredundant = false;
    bool exhaustive = true;
    std::optional<Witness> witness;
};

struct CoveringRadiusResult {
    int rho = 0;
    std::string method;  // "exhaustive" or "syndrome"
    bool exhaustive = true;
};

// An M x n symbol matrix over an alphabet of size q, treated as a set
// (duplicate rows are rejected). May remember the linear code it came from,
// which unlocks exact shortcuts for distance and covering radius.
class OrthogonalArray {
public:
    static OrthogonalArray from_rows(const Field& alphabet, int n,
                                     const std::vector<std::vector<int>>& rows) {
        OrthogonalArray a(alphabet, n, rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(rows[i].size()) != n)
                throw PreconditionError(errc::dimension_mismatch, "ragged array row");
            for (int j = 0; j < n; ++j) {
                if (rows[i][j] < 0 || rows[i][j] >= alphabet.q())
                    throw PreconditionError(errc::param_out_of_range,
                                            "array symbol out of alphabet range");
                a.data_[i * n + j] = static_cast<uint16_t>(rows[i][j]);
            }
        }
        a.check_distinct_rows();
        return a;
    }

    // All q^k codewords, one per row, in lexicographic message order (first
    // message coordinate most significant, canonical element order).
    static OrthogonalArray from_code(const LinearCode& c, const Limits& lim = {}) {
        if (c.k() >= c.n())
            throw PreconditionError(errc::degenerate_dual,
                                    "array from the full-space code " + c.params_string() +
                                        " has no dual structure");
        const unsigned long long total = detail::require_enumerable(c.field(), c.k(), lim);
        OrthogonalArray a(c.field(), c.n(), total);
        materialize_rows(c.generator(), total, a.data_);
        a.origin_ = c;
        const int dperp = dual_distance(c, lim);
        a.t_ = dperp - 1;
        a.strength_exhaustive_ = true;
        unsigned long long lambda = 1;
        for (int i = 0; i < c.k() - (dperp - 1); ++i) lambda *= c.field().q();
        a.lambda_ = lambda;
        return a;
    }

    const Field& alphabet() const { return field_; }
    int n() const { return n_; }
    unsigned long long rows() const { return m_; }
    int symbol(unsigned long long r, int c) const { return data_[r * n_ + c]; }
    std::span<const uint16_t> row(unsigned long long r) const {
        return {data_.data() + r * n_, static_cast<std::size_t>(n_)};
    }
    const std::optional<LinearCode>& origin() const { return origin_; }

    bool strength_known() const { return t_.has_value(); }
    int t() const {
        if (!t_)
            throw PreconditionError(errc::param_out_of_range,
                                    "array strength has not been computed yet");
        return *t_;
    }
    unsigned long long lambda() const {
        if (!lambda_)
            throw PreconditionError(errc::param_out_of_range, "array index not computed");
        return *lambda_;
    }
    bool strength_exhaustive() const { return strength_exhaustive_; }

    void set_strength(int t, unsigned long long lambda, bool exhaustive) const {
        t_ = t;
        lambda_ = lambda;
        strength_exhaustive_ = exhaustive;
    }
    std::optional<int> cached_min_distance() const { return dmin_; }
    void store_min_distance(int d) const { dmin_ = d; }

    // Packed binary rows (bit j = column j); only for q = 2, n <= 64.
    std::vector<unsigned long long> packed_rows() const {
        std::vector<unsigned long long> out(m_);
        for (unsigned long long r = 0; r < m_; ++r) {
            unsigned long long w = 0;
            for (int j = 0; j < n_; ++j)
                if (data_[r * n_ + j]) w |= 1ull << j;
            out[r] = w;
        }
        return out;
    }

private:
    OrthogonalArray(Field field, int n, unsigned long long m)
        : field_(std::move(field)), n_(n), m_(m),
          data_(static_cast<std::size_t>(m) * n, 0) {
        if (n < 1 || m < 1)
            throw PreconditionError(errc::param_out_of_range, "array needs rows and columns");
    }

    static void materialize_rows(const Matrix& gen, unsigned long long total,
                                 std::vector<uint16_t>& out) {
        const Field& f = gen.field();
        const int k = gen.rows(), n = gen.cols();
        const long long q = f.q();
        std::vector<int> digits(k, 0);
        std::vector<uint16_t> cw(n, 0);
        for (unsigned long long index = 0;;) {
            std::copy(cw.begin(), cw.end(), out.begin() + index * n);
            if (++index == total) break;
            int j = k - 1;
            for (;;) {
                for (int c = 0; c < n; ++c)
                    if (gen.at(j, c) != 0)
                        cw[c] = static_cast<uint16_t>(f.add(cw[c], gen.at(j, c)));
                if (++digits[j] < q) break;
                digits[j] = 0;
                --j;
            }
        }
    }

    void check_distinct_rows() const {
        std::vector<unsigned long long> idx(m_);
        for (unsigned long long i = 0; i < m_; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](unsigned long long a, unsigned long long b) {
            const auto ra = row(a), rb = row(b);
            return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
        });
        for (unsigned long long i = 1; i < m_; ++i) {
            const auto ra = row(idx[i - 1]), rb = row(idx[i]);
            if (std::equal(ra.begin(), ra.end(), rb.begin())) {
                const auto lo = std::min(idx[i - 1], idx[i]);
                const auto hi = std::max(idx[i - 1], idx[i]);
                throw PreconditionError(errc::duplicate_rows,
                                        "rows " + std::to_string(lo) + " and " +
                                            std::to_string(hi) +
                                            " are equal; arrays are treated as sets");
            }
        }
    }

    Field field_;
    int n_;
    unsigned long long m_;
    std::vector<uint16_t> data_;
    std::optional<LinearCode> origin_;
    mutable std::optional<int> t_;
    mutable std::optional<unsigned long long> lambda_;
    mutable bool strength_exhaustive_ = false;
    mutable std::optional<int> dmin_;
};

namespace detail {

struct LevelScan {
    bool balanced = true;
    bool exhaustive = true;
    std::optional<Witness> witness;  // first unbalanced subset, lex order
};

// Checks whether every t-column projection of the array contains each
// t-tuple exactly M/q^t times. Subsets are visited in lexicographic order;
// above the subset cap a seeded deterministic sample is scanned instead and
// the result is flagged non-exhaustive. Counting stops early as soon as a
// bucket exceeds lambda, which is sound because the bucket total is fixed.
inline LevelScan scan_balance_level(const OrthogonalArray& a, int t, const Limits& lim) {
    const int n = a.n();
    if (n > 64)
        throw PreconditionError(errc::param_out_of_range,
                                "projection scans support at most 64 columns");
    const unsigned long long m = a.rows();
    const long long q = a.alphabet().q();
    const auto qt = checked_pow(static_cast<unsigned long long>(q), t);
    LevelScan result;
    if (!qt || m % *qt != 0) {
        // Divisibility alone rules the level out; the first subset witnesses.
        result.balanced = false;
        result.witness = Witness{unrank_combination(n, t, 0), std::nullopt};
        return result;
    }
    const unsigned long long lambda = m / *qt;
    const unsigned long long universe = binom64(n, t);

    std::vector<unsigned long long> ranks;
    bool sampled = false;
    if (universe > lim.subsets) {
        sampled = true;
        ranks = sample_ranks(universe, lim.samples,
                             lim.seed ^ splitmix64(0x5CA1Eull ^ (uint64_t(n) << 16) ^ t));
    }
    const unsigned long long total = sampled ? ranks.size() : universe;

    // One shared counting buffer per worker.
    const bool binary = q == 2 && n <= 64;
    std::vector<unsigned long long> packed;
    if (binary) packed = a.packed_rows();

    struct Hit {
        unsigned long long rank;
        Witness witness;
    };
    const int workers = std::max(lim.threads, 1);
    std::vector<std::optional<Hit>> hits(workers);

    parallel_ranges(0, total, lim.threads, [&](int slot, unsigned long long lo,
                                               unsigned long long hi) {
        std::vector<uint32_t> counts(static_cast<std::size_t>(*qt), 0);
        std::vector<int> cols =
            unrank_combination(n, t, sampled ? ranks[lo] : lo);
        for (unsigned long long pos = lo; pos < hi; ++pos) {
            if (pos != lo) {
                if (sampled)
                    cols = unrank_combination(n, t, ranks[pos]);
                else
                    next_combination(cols, n);
            }
            std::fill(counts.begin(), counts.end(), 0u);
            bool bad = false;
            if (binary) {
                for (unsigned long long r = 0; r < m && !bad; ++r) {
                    const unsigned long long w = packed[r];
                    unsigned long long key = 0;
                    for (int i = 0; i < t; ++i) key |= (w >> cols[i] & 1) << i;
                    bad = ++counts[key] > lambda;
                }
            } else {
                for (unsigned long long r = 0; r < m && !bad; ++r) {
                    unsigned long long key = 0;
                    for (int i = 0; i < t; ++i)
                        key = key * q + a.symbol(r, cols[i]);
                    bad = ++counts[key] > lambda;
                }
            }
            if (bad) {
                hits[slot] = Hit{sampled ? ranks[pos] : pos, Witness{cols, std::nullopt}};
                return;
            }
        }
    });

    std::optional<Hit> first;
    for (const auto& h : hits)
        if (h && (!first || h->rank < first->rank)) first = h;
    result.exhaustive = !sampled;
    if (first) {
        result.balanced = false;
        result.exhaustive = true;  // a found imbalance is conclusive
        result.witness = first->witness;
    }
    return result;
}

}  // namespace detail

// Maximal strength by direct projection scans. When the array came from a
// linear code its strength is already known exactly (dual distance minus
// one); the scan then corroborates that level and, when reachable, exhibits
// the imbalance one level up. For arrays without provenance the levels are
// scanned downward from the largest t with q^t | M.
inline StrengthResult strength(const OrthogonalArray& a, const Limits& lim = {}) {
    const long long q = a.alphabet().q();
    const unsigned long long m = a.rows();
    int t_cap = 0;
    {
        unsigned long long v = 1;
        while (t_cap < a.n() && v <= m / q && m % (v * q) == 0) {
            v *= q;
            ++t_cap;
        }
    }

    if (a.strength_known()) {
        const int t0 = a.t();
        bool exhaustive = true;
        if (t0 >= 1) {
            const auto level = detail::scan_balance_level(a, t0, lim);
            if (!level.balanced)
                throw VerificationFailure(
                    "projection scan contradicts the dual-distance strength at t=" +
                    std::to_string(t0));
            exhaustive = level.exhaustive;
        }
        if (t0 < t_cap) {
            const auto above = detail::scan_balance_level(a, t0 + 1, lim);
            if (above.balanced && above.exhaustive)
                throw VerificationFailure("strength is not maximal at t=" + std::to_string(t0));
            if (above.balanced) exhaustive = false;  // sample missed the imbalance
        }
        return {t0, a.lambda(), exhaustive};
    }

    bool exhaustive = true;
    for (int t = t_cap; t >= 1; --t) {
        const auto level = detail::scan_balance_level(a, t, lim);
        if (level.balanced) {
            unsigned long long qt = 1;
            for (int i = 0; i < t; ++i) qt *= q;
            const StrengthResult res{t, m / qt, exhaustive && level.exhaustive};
            a.set_strength(res.t, res.lambda, res.exhaustive);
            return res;
        }
        exhaustive = exhaustive && level.exhaustive;
        if (t == 1) {
            const int col = level.witness ? level.witness->columns.front() : 0;
            throw PreconditionError(errc::not_an_oa,
                                    "column " + std::to_string(col) +
                                        " is not balanced; the input is not an orthogonal array");
        }
    }
    // Only reachable when q does not divide M at all.
    throw PreconditionError(errc::not_an_oa, "row count is not divisible by q");
}

// Direct Definition-style irredundancy: every (n - t)-column projection must
// keep all M rows distinct. Returns a witness (column set plus row pair) on
// failure. Above the subset cap a deterministic sample is scanned and the
// result is flagged non-exhaustive.
inline IrredundancyResult is_irredundant_direct(const OrthogonalArray& a, const Limits& lim = {}) {
    if (!a.strength_known()) strength(a, lim);
    const int n = a.n(), t = a.t();
    const int w = n - t;
    if (w <= 0)
        throw PreconditionError(errc::param_out_of_range,
                                "irredundancy is undefined at full strength (n - t = 0)");
    if (n > 64)
        throw PreconditionError(errc::param_out_of_range,
                                "projection scans support at most 64 columns");
    const unsigned long long m = a.rows();
    const long long q = a.alphabet().q();

    int bits = 1;
    while ((1ll << bits) < q) ++bits;
    const bool packable = bits * w <= 64;

    const unsigned long long universe = detail::binom64(n, w);
    std::vector<unsigned long long> ranks;
    bool sampled = false;
    if (universe > lim.subsets) {
        sampled = true;
        ranks = detail::sample_ranks(universe, lim.samples,
                                     lim.seed ^ detail::splitmix64(0xD15C7ull ^ w));
    }
    const unsigned long long total = sampled ? ranks.size() : universe;

    struct Hit {
        unsigned long long rank;
        Witness witness;
    };
    const int workers = std::max(lim.threads, 1);
    std::vector<std::optional<Hit>> hits(workers);

    detail::parallel_ranges(0, total, lim.threads, [&](int slot, unsigned long long lo,
                                                       unsigned long long hi) {
        detail::ProbeSet seen;
        seen.init(m);
        std::vector<std::vector<uint16_t>> sorted;  // fallback buffer
        std::vector<int> cols = detail::unrank_combination(n, w, sampled ? ranks[lo] : lo);
        for (unsigned long long pos = lo; pos < hi; ++pos) {
            if (pos != lo) {
                if (sampled)
                    cols = detail::unrank_combination(n, w, ranks[pos]);
                else
                    detail::next_combination(cols, n);
            }
            std::optional<std::pair<unsigned long long, unsigned long long>> dup;
            if (packable) {
                seen.clear();
                for (unsigned long long r = 0; r < m; ++r) {
                    unsigned long long key = 0;
                    for (int i = 0; i < w; ++i)
                        key = key << bits | static_cast<unsigned long long>(a.symbol(r, cols[i]));
                    if (auto prev = seen.insert(key, static_cast<uint32_t>(r))) {
                        dup = {static_cast<unsigned long long>(*prev), r};
                        break;
                    }
                }
            } else {
                // Wide projections: sort projected rows and compare neighbours.
                sorted.assign(m, {});
                std::vector<unsigned long long> order(m);
                for (unsigned long long r = 0; r < m; ++r) {
                    order[r] = r;
                    sorted[r].resize(w);
                    for (int i = 0; i < w; ++i)
                        sorted[r][i] = static_cast<uint16_t>(a.symbol(r, cols[i]));
                }
                std::sort(order.begin(), order.end(),
                          [&](unsigned long long x, unsigned long long y) {
                              if (sorted[x] != sorted[y]) return sorted[x] < sorted[y];
                              return x < y;
                          });
                for (unsigned long long i = 1; i < m; ++i)
                    if (sorted[order[i - 1]] == sorted[order[i]]) {
                        dup = {order[i - 1], order[i]};
                        break;
                    }
            }
            if (dup) {
                hits[slot] = Hit{sampled ? ranks[pos] : pos, Witness{cols, dup}};
                return;
            }
        }
    });

    std::optional<Hit> first;
    for (const auto& h : hits)
        if (h && (!first || h->rank < first->rank)) first = h;

    IrredundancyResult res;
    res.exhaustive = !sampled;
    if (first) {
        res.irredundant = false;
        res.exhaustive = true;  // a found witness is conclusive
        res.witness = first->witness;
    } else {
        res.irredundant = true;
    }
    return res;
}

// Exact minimum pairwise Hamming distance. Uses the linear-code weight scan
// when provenance is known, otherwise all M(M-1)/2 pairs under the pair cap.
inline int min_distance_array(const OrthogonalArray& a, const Limits& lim = {}) {
    if (auto d = a.cached_min_distance()) return *d;
    int d;
    if (a.origin()) {
        d = min_distance(*a.origin(), lim);
    } else {
        const unsigned long long m = a.rows();
        if (m < 2)
            throw PreconditionError(errc::param_out_of_range,
                                    "pairwise distance needs at least two rows");
        const unsigned long long pairs = m * (m - 1) / 2;
        if (pairs > lim.pairs)
            throw CapExceeded(errc::pair_cap,
                              "pairwise distance scan needs " + std::to_string(pairs) +
                                  " pairs, cap is " + std::to_string(lim.pairs));
        const int workers = std::max(lim.threads, 1);
        std::vector<int> best(workers, 1 << 30);
        detail::parallel_ranges(0, m, lim.threads,
                                [&](int slot, unsigned long long lo, unsigned long long hi) {
                                    int local = 1 << 30;
                                    for (unsigned long long i = lo; i < hi; ++i)
                                        for (unsigned long long j = i + 1; j < m; ++j) {
                                            int dist = 0;
                                            for (int c = 0; c < a.n(); ++c)
                                                dist += a.symbol(i, c) != a.symbol(j, c);
                                            local = std::min(local, dist);
                                        }
                                    best[slot] = local;
                                });
        d = 1 << 30;
        for (int b : best) d = std::min(d, b);
    }
    a.store_min_distance(d);
    return d;
}

// The distance characterization of irredundancy: d >= t + 1.
inline bool is_irredundant_via_distance(const OrthogonalArray& a, const Limits& lim = {}) {
    if (!a.strength_known()) strength(a, lim);
    if (a.n() - a.t() <= 0)
        throw PreconditionError(errc::param_out_of_range,
                                "irredundancy is undefined at full strength (n - t = 0)");
    return min_distance_array(a, lim) >= a.t() + 1;
}

enum class CoveringMethod { automatic, exhaustive, syndrome };

// Exact covering radius: max over the ambient space of the distance to the
// nearest row. The syndrome method walks coset-leader weights by breadth-
// first search over the q^(n-k) syndromes of the origin code; the exhaustive
// method scans all q^n vectors. Both are exact and must agree.
inline CoveringRadiusResult covering_radius(const OrthogonalArray& a, const Limits& lim = {},
                                            CoveringMethod method = CoveringMethod::automatic) {
    const int n = a.n();
    const long long q = a.alphabet().q();
    const Field& f = a.alphabet();

    if (method == CoveringMethod::automatic) {
        if (a.origin()) {
            const int codim = n - a.origin()->k();
            const auto space = detail::checked_pow(static_cast<unsigned long long>(q), codim);
            method = (space && *space <= lim.space) ? CoveringMethod::syndrome
                                                    : CoveringMethod::exhaustive;
        } else {
            method = CoveringMethod::exhaustive;
        }
    }

    if (method == CoveringMethod::syndrome) {
        if (!a.origin())
            throw PreconditionError(errc::param_out_of_range,
                                    "syndrome method needs a linear-code origin");
        const LinearCode& c = *a.origin();
        const Matrix h = dual(c).generator();  // (n-k) x n parity-check matrix
        const int s = h.rows();
        const auto space = detail::checked_pow(static_cast<unsigned long long>(q), s);
        if (!space || *space > lim.space)
            throw CapExceeded(errc::space_cap,
                              "syndrome space q^" + std::to_string(s) + " exceeds cap " +
                                  std::to_string(lim.space));
        const unsigned long long count = *space;
        // dist[idx] = coset leader weight; BFS layers over syndrome sums.
        std::vector<uint8_t> dist(count, 0xFF);
        std::vector<unsigned long long> frontier{0}, next;
        dist[0] = 0;
        unsigned long long visited = 1;
        int rho = 0;
        std::vector<int> digits(s);
        while (visited < count) {
            ++rho;
            next.clear();
            for (const auto idx : frontier) {
                unsigned long long v = idx;
                for (int i = 0; i < s; ++i) {
                    digits[i] = static_cast<int>(v % q);
                    v /= q;
                }
                for (int col = 0; col < n; ++col)
                    for (int alpha = 1; alpha < q; ++alpha) {
                        unsigned long long to = 0;
                        for (int i = s - 1; i >= 0; --i)
                            to = to * q + f.add(digits[i], f.mul(alpha, h.at(i, col)));
                        if (dist[to] == 0xFF) {
                            dist[to] = static_cast<uint8_t>(rho);
                            next.push_back(to);
                            ++visited;
                        }
                    }
            }
            if (next.empty())
                throw VerificationFailure("syndrome BFS stalled before covering all cosets");
            frontier.swap(next);
        }
        return {rho, "syndrome", true};
    }

    const auto space = detail::checked_pow(static_cast<unsigned long long>(q), n);
    if (!space || *space > lim.space)
        throw CapExceeded(errc::space_cap, "ambient space q^" + std::to_string(n) +
                                               " exceeds cap " + std::to_string(lim.space));
    const unsigned long long count = *space;
    const unsigned long long m = a.rows();
    const int workers = std::max(lim.threads, 1);
    std::vector<int> worst(workers, 0);
    detail::parallel_ranges(0, count, lim.threads,
                            [&](int slot, unsigned long long lo, unsigned long long hi) {
                                std::vector<int> x(n);
                                int local = 0;
                                for (unsigned long long idx = lo; idx < hi; ++idx) {
                                    unsigned long long v = idx;
                                    for (int i = n - 1; i >= 0; --i) {
                                        x[i] = static_cast<int>(v % q);
                                        v /= q;
                                    }
                                    int nearest = 1 << 30;
                                    for (unsigned long long r = 0; r < m; ++r) {
                                        int dist = 0;
                                        for (int c = 0; c < n; ++c)
                                            dist += x[c] != a.symbol(r, c);
                                        nearest = std::min(nearest, dist);
                                        if (nearest == 0) break;
                                    }
                                    local = std::max(local, nearest);
                                }
                                worst[slot] = local;
                            });
    int rho = 0;
    for (int w : worst) rho = std::max(rho, w);
    return {rho, "exhaustive", true};
}

}  // namespace iroa
