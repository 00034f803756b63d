#pragma once

#include <atomic>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "iroa/errors.hpp"
#include "iroa/field.hpp"
#include "iroa/limits.hpp"
#include "iroa/matrix.hpp"

namespace iroa {

namespace detail {

// base^exp if it fits in uint64, nullopt otherwise.
inline std::optional<unsigned long long> checked_pow(unsigned long long base, int exp) {
    unsigned long long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && v > ~0ull / base) return std::nullopt;
        v *= base;
    }
    return v;
}

inline unsigned long long require_enumerable(const Field& f, int k, const Limits& lim) {
    auto total = checked_pow(static_cast<unsigned long long>(f.q()), k);
    if (!total || *total > lim.enumeration)
        throw CapExceeded(errc::enumeration_cap,
                          "enumeration needs " + std::to_string(f.q()) + "^" + std::to_string(k) +
                              " messages, cap is " + std::to_string(lim.enumeration));
    return *total;
}

// Splits [begin, end) into at most `threads` contiguous chunks and runs
// body(chunk_index, lo, hi) on each. Chunk boundaries depend only on the
// range and thread count given; callers must reduce associatively so the
// final result is independent of the split.
template <typename Body>
void parallel_ranges(unsigned long long begin, unsigned long long end, int threads,
                     const Body& body) {
    const unsigned long long total = end - begin;
    if (threads <= 1 || total < 1ull << 16) {
        body(0, begin, end);
        return;
    }
    const int t = static_cast<int>(
        std::min<unsigned long long>(static_cast<unsigned long long>(threads), total));
    std::vector<std::thread> pool;
    pool.reserve(t);
    for (int i = 0; i < t; ++i) {
        const unsigned long long lo = begin + total * i / t;
        const unsigned long long hi = begin + total * (i + 1) / t;
        pool.emplace_back([&body, i, lo, hi] { body(i, lo, hi); });
    }
    for (auto& th : pool) th.join();
}

// Weight scan over all nonzero codewords of a binary code with n <= 64.
// Messages are walked in Gray-code order so each step is one row XOR; the
// codeword set (hence the minimum and the histogram) does not depend on the
// walk order.
struct BinaryScan {
    std::vector<unsigned long long> rows;  // packed generator rows, bit j = column j

    explicit BinaryScan(const Matrix& gen) {
        rows.resize(gen.rows());
        for (int i = 0; i < gen.rows(); ++i) {
            unsigned long long w = 0;
            for (int j = 0; j < gen.cols(); ++j)
                if (gen.at(i, j)) w |= 1ull << j;
            rows[i] = w;
        }
    }

    unsigned long long word_at(unsigned long long message_index) const {
        const unsigned long long gray = message_index ^ (message_index >> 1);
        unsigned long long w = 0;
        for (int b = 0; b < static_cast<int>(rows.size()); ++b)
            if (gray >> b & 1) w ^= rows[b];
        return w;
    }

    int min_weight(unsigned long long total, int threads) const {
        std::vector<int> best(static_cast<std::size_t>(std::max(threads, 1)), 1 << 30);
        std::atomic<bool> stop{false};
        parallel_ranges(1, total, threads, [&](int slot, unsigned long long lo,
                                               unsigned long long hi) {
            unsigned long long w = word_at(lo);
            int local = std::popcount(w);
            for (unsigned long long i = lo + 1; i < hi; ++i) {
                w ^= rows[std::countr_zero(i)];
                const int c = std::popcount(w);
                if (c < local) {
                    local = c;
                    if (local <= 1) break;  // nothing below weight 1 exists
                }
                if ((i & 0xFFFFF) == 0 && stop.load(std::memory_order_relaxed)) break;
            }
            if (local <= 1) stop.store(true, std::memory_order_relaxed);
            best[slot] = local;
        });
        int result = 1 << 30;
        for (int b : best) result = std::min(result, b);
        return result;
    }

    std::vector<unsigned long long> histogram(unsigned long long total, int n,
                                              int threads) const {
        const int slots = std::max(threads, 1);
        std::vector<std::vector<unsigned long long>> parts(
            slots, std::vector<unsigned long long>(n + 1, 0));
        parallel_ranges(1, total, threads,
                        [&](int slot, unsigned long long lo, unsigned long long hi) {
                            unsigned long long w = word_at(lo);
                            auto& h = parts[slot];
                            ++h[std::popcount(w)];
                            for (unsigned long long i = lo + 1; i < hi; ++i) {
                                w ^= rows[std::countr_zero(i)];
                                ++h[std::popcount(w)];
                            }
                        });
        std::vector<unsigned long long> h(n + 1, 0);
        h[0] = 1;  // the zero codeword
        for (const auto& part : parts)
            for (int w = 0; w <= n; ++w) h[w] += part[w];
        return h;
    }
};

// Weight scan for general alphabets. Messages are walked as a base-q
// odometer (last coordinate fastest); bumping coordinate j by one adds
// generator row j once, so the codeword and its weight update incrementally
// over the row's support.
struct GeneralScan {
    const Field field;
    int n, k;
    long long q;
    std::vector<std::vector<std::pair<int, const uint16_t*>>> support;
    // support[j] = (column, add-by-value table row); table rows point into
    // the field's add table so the inner loop is a single indexed load.
    std::vector<std::vector<int>> support_plain;  // (column, value) fallback
    std::vector<std::vector<uint16_t>> addrows;   // storage for table rows

    explicit GeneralScan(const Matrix& gen)
        : field(gen.field()), n(gen.cols()), k(gen.rows()), q(gen.field().q()) {
        support.resize(k);
        addrows.reserve(static_cast<std::size_t>(k) * n);
        for (int j = 0; j < k; ++j) {
            for (int c = 0; c < n; ++c) {
                const int v = gen.at(j, c);
                if (v == 0) continue;
                auto& row = addrows.emplace_back(static_cast<std::size_t>(q));
                for (long long a = 0; a < q; ++a)
                    row[a] = static_cast<uint16_t>(field.add(static_cast<int>(a), v));
                support[j].emplace_back(c, row.data());
            }
        }
    }

    // Codeword and weight for a given message index; O(k n) setup per chunk.
    void decode_at(unsigned long long index, std::vector<int>& digits,
                   std::vector<uint16_t>& cw, int& weight) const {
        digits.assign(k, 0);
        for (int j = k - 1; j >= 0; --j) {
            digits[j] = static_cast<int>(index % q);
            index /= q;
        }
        cw.assign(n, 0);
        for (int j = 0; j < k; ++j) {
            if (digits[j] == 0) continue;
            for (const auto& [c, tab] : support[j]) {
                // add digits[j] * row value by repeated addition; q is small
                int acc = cw[c];
                for (int rep = 0; rep < digits[j]; ++rep) acc = tab[acc];
                cw[c] = static_cast<uint16_t>(acc);
            }
        }
        weight = 0;
        for (int c = 0; c < n; ++c) weight += cw[c] != 0;
    }

    template <typename Record>
    void scan_chunk(unsigned long long lo, unsigned long long hi, const Record& record) const {
        std::vector<int> digits;
        std::vector<uint16_t> cw;
        int weight = 0;
        decode_at(lo, digits, cw, weight);
        for (unsigned long long i = lo;;) {
            if (i != 0)
                if (!record(weight)) return;
            if (++i == hi) return;
            int j = k - 1;
            for (;;) {
                for (const auto& [c, tab] : support[j]) {
                    const int old = cw[c];
                    const int now = tab[old];
                    weight += (now != 0) - (old != 0);
                    cw[c] = static_cast<uint16_t>(now);
                }
                if (++digits[j] < q) break;
                digits[j] = 0;
                --j;
            }
        }
    }

    int min_weight(unsigned long long total, int threads) const {
        std::vector<int> best(static_cast<std::size_t>(std::max(threads, 1)), 1 << 30);
        std::atomic<bool> stop{false};
        parallel_ranges(0, total, threads,
                        [&](int slot, unsigned long long lo, unsigned long long hi) {
                            int local = 1 << 30;
                            unsigned long long ticks = 0;
                            scan_chunk(lo, hi, [&](int w) {
                                if (w < local) {
                                    local = w;
                                    if (local <= 1) return false;
                                }
                                if ((++ticks & 0xFFFFF) == 0 &&
                                    stop.load(std::memory_order_relaxed))
                                    return false;
                                return true;
                            });
                            if (local <= 1) stop.store(true, std::memory_order_relaxed);
                            best[slot] = local;
                        });
        int result = 1 << 30;
        for (int b : best) result = std::min(result, b);
        return result;
    }

    std::vector<unsigned long long> histogram(unsigned long long total, int threads) const {
        const int slots = std::max(threads, 1);
        std::vector<std::vector<unsigned long long>> parts(
            slots, std::vector<unsigned long long>(n + 1, 0));
        parallel_ranges(0, total, threads,
                        [&](int slot, unsigned long long lo, unsigned long long hi) {
                            auto& h = parts[slot];
                            scan_chunk(lo, hi, [&](int w) {
                                ++h[w];
                                return true;
                            });
                        });
        std::vector<unsigned long long> h(n + 1, 0);
        h[0] = 1;
        for (const auto& part : parts)
            for (int w = 0; w <= n; ++w) h[w] += part[w];
        return h;
    }
};

}  // namespace detail

// Full weight enumerator of a code: counts[w] = number of codewords of
// Hamming weight w.
struct WeightDistribution {
    std::vector<unsigned long long> counts;

    int min_nonzero_weight() const {
        for (std::size_t w = 1; w < counts.size(); ++w)
            if (counts[w] > 0) return static_cast<int>(w);
        return 0;
    }
    unsigned long long total() const {
        unsigned long long s = 0;
        for (auto c : counts) s += c;
        return s;
    }
};

// A linear [n, k]_q code held in canonical form: the unique RREF generator
// matrix. Minimum distances are computed by brute-force enumeration and
// cached; the caches are single-assignment (every writer stores the same
// deterministic value).
class LinearCode {
public:
    static LinearCode from_generator(const Matrix& m) {
        if (m.is_zero())
            throw PreconditionError(errc::zero_matrix, "generator matrix has no nonzero rows");
        RrefResult rr = rref(m);
        Matrix gen(m.field(), rr.rank, m.cols());
        for (int i = 0; i < rr.rank; ++i)
            for (int j = 0; j < m.cols(); ++j) gen.set(i, j, rr.reduced.at(i, j));
        return LinearCode(std::move(gen));
    }

    const Field& field() const { return gen_.field(); }
    int n() const { return gen_.cols(); }
    int k() const { return gen_.rows(); }
    const Matrix& generator() const { return gen_; }

    LinearCode(const LinearCode& o) : gen_(o.gen_) {
        d_cache_.store(o.d_cache_.load());
        dperp_cache_.store(o.dperp_cache_.load());
    }
    LinearCode& operator=(const LinearCode& o) {
        gen_ = o.gen_;
        d_cache_.store(o.d_cache_.load());
        dperp_cache_.store(o.dperp_cache_.load());
        return *this;
    }

    std::optional<int> cached_distance() const {
        const int d = d_cache_.load();
        return d < 0 ? std::nullopt : std::optional<int>(d);
    }
    std::optional<int> cached_dual_distance() const {
        const int d = dperp_cache_.load();
        return d < 0 ? std::nullopt : std::optional<int>(d);
    }
    void store_distance(int d) const { d_cache_.store(d); }
    void store_dual_distance(int d) const { dperp_cache_.store(d); }

    std::string params_string() const {
        return "[" + std::to_string(n()) + "," + std::to_string(k()) + "]_" +
               std::to_string(field().q());
    }

    friend bool operator==(const LinearCode& a, const LinearCode& b) {
        return a.gen_ == b.gen_;  // RREF generators are canonical
    }

private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}

    Matrix gen_;
    mutable std::atomic<int> d_cache_{-1};
    mutable std::atomic<int> dperp_cache_{-1};
};

// C-perp: all vectors orthogonal to every codeword. Dimension n - k; the
// dual of a full-space code would be zero-dimensional and is rejected.
inline LinearCode dual(const LinearCode& c) {
    if (c.k() == c.n())
        throw PreconditionError(errc::degenerate_dual,
                                "dual of the full-space code " + c.params_string() +
                                    " is zero-dimensional");
    return LinearCode::from_generator(nullspace(c.generator()));
}

// Exact minimum Hamming weight over all q^k - 1 nonzero codewords.
inline int min_distance(const LinearCode& c, const Limits& lim = {}) {
    if (auto d = c.cached_distance()) return *d;
    const unsigned long long total = detail::require_enumerable(c.field(), c.k(), lim);
    int d;
    if (c.field().q() == 2 && c.n() <= 64)
        d = detail::BinaryScan(c.generator()).min_weight(total, lim.threads);
    else
        d = detail::GeneralScan(c.generator()).min_weight(total, lim.threads);
    c.store_distance(d);
    return d;
}

inline WeightDistribution weight_distribution(const LinearCode& c, const Limits& lim = {}) {
    const unsigned long long total = detail::require_enumerable(c.field(), c.k(), lim);
    WeightDistribution wd;
    if (c.field().q() == 2 && c.n() <= 64)
        wd.counts = detail::BinaryScan(c.generator()).histogram(total, c.n(), lim.threads);
    else
        wd.counts = detail::GeneralScan(c.generator()).histogram(total, lim.threads);
    if (auto d = c.cached_distance()) {
        if (wd.min_nonzero_weight() != *d)
            throw VerificationFailure("weight distribution disagrees with cached distance for " +
                                      c.params_string());
    } else {
        c.store_distance(wd.min_nonzero_weight());
    }
    return wd;
}

// Minimum distance of the dual, cached on the primal code.
inline int dual_distance(const LinearCode& c, const Limits& lim = {}) {
    if (auto d = c.cached_dual_distance()) return *d;
    const int d = min_distance(dual(c), lim);
    c.store_dual_distance(d);
    return d;
}

inline bool is_self_orthogonal(const LinearCode& c) {
    const Matrix gram = c.generator() * transpose(c.generator());
    return gram.is_zero();
}

// C = C-perp. Equivalent to n = 2k together with G G^T = 0.
inline bool is_self_dual(const LinearCode& c) {
    return c.n() == 2 * c.k() && is_self_orthogonal(c);
}

// Meets the Singleton bound d = n - k + 1.
inline bool is_mds(const LinearCode& c, const Limits& lim = {}) {
    return min_distance(c, lim) == c.n() - c.k() + 1;
}

}  // namespace iroa
