#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "iroa/code.hpp"
#include "iroa/errors.hpp"
#include "iroa/field.hpp"
#include "iroa/limits.hpp"
#include "iroa/matrix.hpp"

namespace iroa {

// Generator matrix of the binary Reed-Muller code R(r, m), built by the
// 2x2 block recursion
//     G(r, m) = [ G(r, m-1)  G(r, m-1) ]
//               [     0      G(r-1, m-1) ]
// with G(0, m) the all-ones row and G(m, m) the identity. The layout is
// reproduced exactly, not just up to row space.
inline Matrix rm_generator(int r, int m) {
    if (r < 0 || m < 0 || r > m)
        throw PreconditionError(errc::param_out_of_range,
                                "rm generator needs 0 <= r <= m, got r=" + std::to_string(r) +
                                    " m=" + std::to_string(m));
    const Field f2 = Field::create(2, 1);
    const int n = 1 << m;
    if (r == 0) {
        Matrix g(f2, 1, n);
        for (int j = 0; j < n; ++j) g.set(0, j, 1);
        return g;
    }
    if (r == m) return Matrix::identity(f2, n);
    const Matrix top = rm_generator(r, m - 1);
    const Matrix bottom = rm_generator(r - 1, m - 1);
    Matrix g(f2, top.rows() + bottom.rows(), n);
    const int half = n / 2;
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < half; ++j) {
            g.set(i, j, top.at(i, j));
            g.set(i, half + j, top.at(i, j));
        }
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < half; ++j) g.set(top.rows() + i, half + j, bottom.at(i, j));
    return g;
}

inline LinearCode rm_code(int r, int m) { return LinearCode::from_generator(rm_generator(r, m)); }

// Closed-form parameters of the generalized Reed-Muller code R_q(r, m).
// a, b are the unique integers with r = a(q-1) + b, 0 <= b < q-1; the primed
// values describe the dual, whose order is r' = m(q-1) - 1 - r.
struct GrmParams {
    long long q = 0;
    int r = 0, m = 0;
    int a = 0, b = 0;
    int r_dual = 0;
    int a_dual = 0, b_dual = 0;
    unsigned long long n = 0;
    unsigned long long k = 0;
    unsigned long long d = 0;
    unsigned long long d_dual = 0;
};

namespace detail {

// Signed binomial with the zero convention for negative arguments; the
// alternating dimension sum needs it to terminate correctly.
inline long long binom_signed(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    return static_cast<long long>(binom64(static_cast<int>(n), static_cast<int>(k)));
}

inline unsigned long long pow_u64(long long base, int exp) {
    unsigned long long v = 1;
    for (int i = 0; i < exp; ++i) v *= static_cast<unsigned long long>(base);
    return v;
}

}  // namespace detail

inline GrmParams grm_params(long long q, int r, int m) {
    if (q < 2 || m < 1 || r < 0 || r > m * (q - 1))
        throw PreconditionError(errc::param_out_of_range,
                                "grm parameters need 0 <= r <= m(q-1) and m >= 1");
    GrmParams p;
    p.q = q;
    p.r = r;
    p.m = m;
    p.a = r / static_cast<int>(q - 1);
    p.b = r % static_cast<int>(q - 1);
    p.r_dual = m * static_cast<int>(q - 1) - 1 - r;
    p.a_dual = m - p.a - 1;
    p.b_dual = static_cast<int>(q) - p.b - 2;
    p.n = detail::pow_u64(q, m);

    long long k = 0;
    long long sign = 1;
    for (int i = 0; i <= m; ++i) {
        k += sign * detail::binom_signed(m, i) *
             detail::binom_signed(m + r - static_cast<long long>(i) * q,
                                  r - static_cast<long long>(i) * q);
        sign = -sign;
    }
    p.k = static_cast<unsigned long long>(k);

    // d = (q - b) q^(m-a-1); the exponent is -1 only for the full space
    // (a = m, b = 0), where d = 1.
    p.d = (p.a == m) ? 1 : (q - p.b) * detail::pow_u64(q, m - p.a - 1);
    p.d_dual = (p.b + 2) * detail::pow_u64(q, p.a);
    return p;
}

// The monomial basis of R_q(r, m): exponent vectors (e_1..e_m) with each
// e_i < q and total degree <= r, ordered by total degree then
// lexicographically. The ordering is fixed so generator matrices are
// reproducible.
inline std::vector<std::vector<int>> grm_monomials(long long q, int r, int m) {
    std::vector<std::vector<int>> exps;
    std::vector<int> cur(m, 0);
    for (;;) {
        int deg = 0;
        for (int e : cur) deg += e;
        if (deg <= r) exps.push_back(cur);
        int i = m - 1;
        while (i >= 0 && cur[i] == q - 1) cur[i--] = 0;
        if (i < 0) break;
        ++cur[i];
    }
    std::stable_sort(exps.begin(), exps.end(),
                     [](const std::vector<int>& x, const std::vector<int>& y) {
                         int dx = 0, dy = 0;
                         for (int e : x) dx += e;
                         for (int e : y) dy += e;
                         if (dx != dy) return dx < dy;
                         return x < y;
                     });
    return exps;
}

// Evaluation matrix of the monomial basis at all q^m affine points, points
// in lexicographic order (first coordinate most significant) under the
// canonical element order. Rows are linearly independent, so this is a
// generator matrix of R_q(r, m).
inline Matrix grm_generator(long long q, int r, int m, const Limits& lim = {}) {
    const GrmParams p = grm_params(q, r, m);
    if (p.n > lim.enumeration)
        throw CapExceeded(errc::enumeration_cap,
                          "grm evaluation needs q^m = " + std::to_string(p.n) +
                              " points, cap is " + std::to_string(lim.enumeration));
    const Field f = Field::of_order(q);
    const auto monomials = grm_monomials(q, r, m);
    const int n = static_cast<int>(p.n);

    // power table: pow_tab[x][e] = x^e for e < q
    std::vector<std::vector<int>> pow_tab(q, std::vector<int>(q, 1));
    for (int x = 0; x < q; ++x)
        for (int e = 1; e < q; ++e) pow_tab[x][e] = f.mul(pow_tab[x][e - 1], x);

    Matrix g(f, static_cast<int>(monomials.size()), n);
    std::vector<int> point(m, 0);
    for (int col = 0; col < n; ++col) {
        for (std::size_t row = 0; row < monomials.size(); ++row) {
            int v = 1;
            for (int i = 0; i < m && v != 0; ++i)
                v = f.mul(v, pow_tab[point[i]][monomials[row][i]]);
            g.set(static_cast<int>(row), col, v);
        }
        int i = m - 1;
        while (i >= 0 && point[i] == q - 1) point[i--] = 0;
        if (i >= 0) ++point[i];
    }
    return g;
}

inline LinearCode grm_code(long long q, int r, int m, const Limits& lim = {}) {
    return LinearCode::from_generator(grm_generator(q, r, m, lim));
}

// A generalized Reed-Solomon code: evaluations of polynomials of degree < k
// at distinct points alpha_j, column j scaled by the nonzero multiplier v_j.
struct GrsSpec {
    Field field;
    std::vector<int> points;      // distinct
    std::vector<int> multipliers; // nonzero
    int k = 0;

    int n() const { return static_cast<int>(points.size()); }

    void validate() const {
        const int len = n();
        if (len < 1 || len > field.q())
            throw PreconditionError(errc::param_out_of_range,
                                    "grs length must satisfy 1 <= n <= q");
        if (k < 1 || k > len)
            throw PreconditionError(errc::param_out_of_range,
                                    "grs dimension must satisfy 1 <= k <= n");
        if (static_cast<int>(multipliers.size()) != len)
            throw PreconditionError(errc::dimension_mismatch,
                                    "grs needs one multiplier per point");
        for (std::size_t i = 0; i < points.size(); ++i) {
            if (points[i] < 0 || points[i] >= field.q())
                throw PreconditionError(errc::param_out_of_range, "grs point out of field");
            if (multipliers[i] <= 0 || multipliers[i] >= field.q())
                throw PreconditionError(errc::zero_multiplier,
                                        "grs multipliers must be nonzero field elements");
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i] == points[j])
                    throw PreconditionError(errc::duplicate_points,
                                            "grs evaluation points must be distinct");
        }
    }

    // The first n field elements with unit multipliers.
    static GrsSpec standard(const Field& field, int n, int k) {
        GrsSpec s{field, {}, {}, k};
        for (int i = 0; i < n; ++i) {
            s.points.push_back(i);
            s.multipliers.push_back(1);
        }
        return s;
    }
};

// Canonical generator: entry (i, j) = v_j * alpha_j^i for 0 <= i < k, with
// the exponent applied to column j's own point throughout.
inline Matrix grs_generator(const GrsSpec& spec) {
    spec.validate();
    const Field& f = spec.field;
    Matrix g(f, spec.k, spec.n());
    for (int j = 0; j < spec.n(); ++j) {
        int p = spec.multipliers[j];
        for (int i = 0; i < spec.k; ++i) {
            g.set(i, j, p);
            p = f.mul(p, spec.points[j]);
        }
    }
    return g;
}

inline LinearCode grs_code(const GrsSpec& spec) {
    return LinearCode::from_generator(grs_generator(spec));
}

struct SelfDualGrsResult {
    GrsSpec spec;
    LinearCode code;
};

// Exhaustive search for a self-dual GRS code of even length n over the
// given field: points fixed to the first n field elements, multiplier
// vectors tried in lexicographic order under the canonical element order.
// Any hit is verified self-dual and MDS before being returned; finding
// nothing is a legitimate outcome.
inline std::optional<SelfDualGrsResult> search_self_dual_grs(const Field& field, int n,
                                                             const Limits& lim = {}) {
    if (n < 2 || n % 2 != 0)
        throw PreconditionError(errc::param_out_of_range, "self-dual search needs even n >= 2");
    if (n > field.q())
        throw PreconditionError(errc::param_out_of_range,
                                "self-dual search needs n <= q for distinct points");
    const long long q = field.q();
    const auto candidates = detail::checked_pow(static_cast<unsigned long long>(q - 1), n);
    if (!candidates || *candidates > lim.search)
        throw CapExceeded(errc::search_cap,
                          "multiplier search needs (q-1)^" + std::to_string(n) +
                              " candidates, cap is " + std::to_string(lim.search));
    const int k = n / 2;

    // Gram condition: G G^T = 0 iff sum_j v_j^2 alpha_j^s = 0 for all
    // s = 0..n-2, since entry (i, i') of the Gram matrix is that sum at
    // s = i + i'.
    std::vector<std::vector<int>> alpha_pow(n, std::vector<int>(n - 1, 1));
    for (int j = 0; j < n; ++j)
        for (int s = 1; s < n - 1; ++s) alpha_pow[j][s] = field.mul(alpha_pow[j][s - 1], j);

    std::vector<int> v(n, 1);
    for (unsigned long long iter = 0;; ++iter) {
        std::vector<int> vsq(n);
        for (int j = 0; j < n; ++j) vsq[j] = field.mul(v[j], v[j]);
        bool ok = true;
        for (int s = 0; s < n - 1 && ok; ++s) {
            int sum = 0;
            for (int j = 0; j < n; ++j) sum = field.add(sum, field.mul(vsq[j], alpha_pow[j][s]));
            ok = sum == 0;
        }
        if (ok) {
            GrsSpec spec{field, {}, v, k};
            for (int j = 0; j < n; ++j) spec.points.push_back(j);
            LinearCode code = grs_code(spec);
            if (!is_self_dual(code))
                throw VerificationFailure("gram-condition hit failed the self-dual check");
            if (!is_mds(code, lim))
                throw VerificationFailure("self-dual search produced a non-MDS code");
            return SelfDualGrsResult{std::move(spec), std::move(code)};
        }
        // next multiplier vector in lexicographic order, entries in 1..q-1
        int j = n - 1;
        while (j >= 0 && v[j] == q - 1) v[j--] = 1;
        if (j < 0) return std::nullopt;
        ++v[j];
    }
}

}  // namespace iroa
