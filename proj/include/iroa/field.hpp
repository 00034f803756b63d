#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "iroa/errors.hpp"

namespace iroa {

namespace detail {

// Polynomials over F_p as coefficient vectors, constant term first.
inline void poly_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<int>((c[i + j] + static_cast<long long>(a[i]) * b[j]) % p);
    }
    poly_trim(c);
    return c;
}

// Remainder of a modulo monic b.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b, int p) {
    poly_trim(a);
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const int lead = a.back();
        for (int i = 0; i <= db; ++i) {
            long long v = a[shift + i] - static_cast<long long>(lead) * b[i];
            a[shift + i] = static_cast<int>(((v % p) + p) % p);
        }
        poly_trim(a);
    }
    return a;
}

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Default irreducible moduli for the extension fields of order <= 64,
// constant term first. Prime fields take the trivial modulus x. Every entry
// is re-verified by the irreducibility check at construction time.
inline std::optional<std::vector<int>> default_modulus(long long q) {
    switch (q) {
        case 4:  return std::vector<int>{1, 1, 1};           // x^2+x+1
        case 8:  return std::vector<int>{1, 1, 0, 1};        // x^3+x+1
        case 9:  return std::vector<int>{1, 0, 1};           // x^2+1
        case 16: return std::vector<int>{1, 1, 0, 0, 1};     // x^4+x+1
        case 25: return std::vector<int>{2, 0, 1};           // x^2+2
        case 27: return std::vector<int>{1, 2, 0, 1};        // x^3+2x+1
        case 32: return std::vector<int>{1, 0, 1, 0, 0, 1};  // x^5+x^2+1
        case 49: return std::vector<int>{1, 0, 1};           // x^2+1
        case 64: return std::vector<int>{1, 1, 0, 0, 0, 0, 1};  // x^6+x+1
        default: return std::nullopt;
    }
}

}  // namespace detail

class Element;

// A finite field F_q, q = p^e, with elements encoded as integers in [0, q).
// The base-p digits of the encoding are the polynomial coefficients of the
// element, least significant digit = constant term. Cheap to copy (shared
// immutable state); all operations are pure and thread-safe.
class Field {
    struct Impl {
        int p = 0;
        int e = 0;
        long long q = 0;
        std::vector<int> modulus;  // length e+1, monic
        // q x q operation tables, built for small fields only.
        bool has_tables = false;
        std::vector<uint16_t> add_tab, mul_tab;
        std::vector<uint16_t> neg_tab, inv_tab;
    };

public:
    static constexpr long long kTableLimit = 256;
    static constexpr long long kMaxOrder = 1LL << 16;
    static constexpr long long kDefaultModulusLimit = 64;

    static Field create(int p, int e, std::optional<std::vector<int>> modulus = std::nullopt) {
        if (!detail::is_prime(p))
            throw PreconditionError(errc::not_prime,
                                    "field characteristic " + std::to_string(p) + " is not prime");
        if (e < 1)
            throw PreconditionError(errc::param_out_of_range, "extension degree must be >= 1");
        long long q = 1;
        for (int i = 0; i < e; ++i) {
            q *= p;
            if (q > kMaxOrder)
                throw PreconditionError(errc::unsupported_order,
                                        "field order exceeds 2^16");
        }
        auto impl = std::make_shared<Impl>();
        impl->p = p;
        impl->e = e;
        impl->q = q;
        if (modulus) {
            impl->modulus = std::move(*modulus);
        } else if (e == 1) {
            impl->modulus = {0, 1};  // x
        } else if (auto m = detail::default_modulus(q)) {
            impl->modulus = std::move(*m);
        } else {
            throw PreconditionError(errc::unsupported_order,
                                    "no built-in modulus for q=" + std::to_string(q) +
                                        " (orders above 64 need an explicit modulus)");
        }
        validate_modulus(*impl);
        if (q <= kTableLimit) build_tables(*impl);
        return Field(std::move(impl));
    }

    // Accepts any prime power q <= 64 (or a prime up to the order limit).
    static Field of_order(long long q) {
        if (q < 2)
            throw PreconditionError(errc::unsupported_order, "field order must be >= 2");
        long long p = 2;
        while (q % p != 0) {
            ++p;
            if (p * p > q) {
                p = q;
                break;
            }
        }
        int e = 0;
        long long rest = q;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        if (rest != 1)
            throw PreconditionError(errc::not_prime,
                                    std::to_string(q) + " is not a prime power");
        return create(static_cast<int>(p), e);
    }

    int p() const { return impl_->p; }
    int e() const { return impl_->e; }
    long long q() const { return impl_->q; }
    const std::vector<int>& modulus() const { return impl_->modulus; }

    bool operator==(const Field& o) const {
        if (impl_ == o.impl_) return true;
        return impl_->p == o.impl_->p && impl_->e == o.impl_->e &&
               impl_->modulus == o.impl_->modulus;
    }
    bool operator!=(const Field& o) const { return !(*this == o); }

    int add(int a, int b) const {
        if (impl_->has_tables) return impl_->add_tab[static_cast<std::size_t>(a) * impl_->q + b];
        return add_slow(a, b);
    }
    int neg(int a) const {
        if (impl_->has_tables) return impl_->neg_tab[a];
        return neg_slow(a);
    }
    int sub(int a, int b) const { return add(a, neg(b)); }
    int mul(int a, int b) const {
        if (impl_->has_tables) return impl_->mul_tab[static_cast<std::size_t>(a) * impl_->q + b];
        return mul_slow(a, b);
    }
    int inv(int a) const {
        if (a == 0)
            throw PreconditionError(errc::division_by_zero, "inverse of zero");
        if (impl_->has_tables) return impl_->inv_tab[a];
        return pow(a, impl_->q - 2);
    }
    int pow(int a, long long n) const {
        if (n == 0) return 1;
        if (a == 0) return 0;
        int result = 1, base = a;
        while (n > 0) {
            if (n & 1) result = mul(result, base);
            base = mul(base, base);
            n >>= 1;
        }
        return result;
    }

    Element element(int value) const;
    std::vector<Element> elements() const;

    std::string describe() const {
        std::ostringstream os;
        os << "F_" << impl_->q;
        return os.str();
    }

private:
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

    static void validate_modulus(const Impl& f) {
        const auto& m = f.modulus;
        if (static_cast<int>(m.size()) != f.e + 1 || m.back() != 1)
            throw PreconditionError(errc::reducible_modulus,
                                    "modulus must be monic of degree e");
        for (int c : m)
            if (c < 0 || c >= f.p)
                throw PreconditionError(errc::reducible_modulus,
                                        "modulus coefficients must lie in [0, p)");
        if (f.e == 1) return;
        // Trial division by every monic polynomial of degree 1..e/2.
        for (int d = 1; 2 * d <= f.e; ++d) {
            long long count = 1;
            for (int i = 0; i < d; ++i) count *= f.p;
            for (long long code = 0; code < count; ++code) {
                std::vector<int> divisor(d + 1, 0);
                long long c = code;
                for (int i = 0; i < d; ++i) {
                    divisor[i] = static_cast<int>(c % f.p);
                    c /= f.p;
                }
                divisor[d] = 1;
                if (detail::poly_mod(m, divisor, f.p).empty())
                    throw PreconditionError(errc::reducible_modulus,
                                            "modulus is reducible over F_p");
            }
        }
    }

    std::vector<int> digits(int a) const {
        std::vector<int> d(impl_->e, 0);
        for (int i = 0; i < impl_->e; ++i) {
            d[i] = a % impl_->p;
            a /= impl_->p;
        }
        return d;
    }
    int undigits(const std::vector<int>& d) const {
        long long v = 0;
        for (int i = impl_->e - 1; i >= 0; --i)
            v = v * impl_->p + (i < static_cast<int>(d.size()) ? d[i] : 0);
        return static_cast<int>(v);
    }

    int add_slow(int a, int b) const {
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < impl_->e; ++i) da[i] = (da[i] + db[i]) % impl_->p;
        return undigits(da);
    }
    int neg_slow(int a) const {
        auto d = digits(a);
        for (auto& c : d) c = (impl_->p - c) % impl_->p;
        return undigits(d);
    }
    int mul_slow(int a, int b) const {
        auto prod = detail::poly_mul(digits(a), digits(b), impl_->p);
        prod = detail::poly_mod(std::move(prod), impl_->modulus, impl_->p);
        return undigits(prod);
    }

    static void build_tables(Impl& f) {
        const auto q = static_cast<std::size_t>(f.q);
        f.add_tab.resize(q * q);
        f.mul_tab.resize(q * q);
        f.neg_tab.resize(q);
        f.inv_tab.assign(q, 0);
        Impl plain = f;  // table-free copy for the slow routines
        plain.has_tables = false;
        Field slow(std::make_shared<Impl>(plain));
        for (std::size_t a = 0; a < q; ++a) {
            f.neg_tab[a] = static_cast<uint16_t>(slow.neg_slow(static_cast<int>(a)));
            for (std::size_t b = 0; b < q; ++b) {
                f.add_tab[a * q + b] =
                    static_cast<uint16_t>(slow.add_slow(static_cast<int>(a), static_cast<int>(b)));
                const int prod = slow.mul_slow(static_cast<int>(a), static_cast<int>(b));
                f.mul_tab[a * q + b] = static_cast<uint16_t>(prod);
                if (prod == 1) f.inv_tab[a] = static_cast<uint16_t>(b);
            }
        }
        f.has_tables = true;
    }

    std::shared_ptr<const Impl> impl_;
};

// A single field element: an integer value tied to its field. The checked
// operator layer for user-facing code; hot loops use Field::add/mul on raw
// ints instead.
class Element {
public:
    Element(Field field, int value) : field_(std::move(field)), value_(value) {
        if (value_ < 0 || value_ >= field_.q())
            throw PreconditionError(errc::param_out_of_range,
                                    "element value out of range for " + field_.describe());
    }

    int value() const { return value_; }
    const Field& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }

    friend Element operator+(const Element& a, const Element& b) {
        check_same(a, b);
        return Element(a.field_, a.field_.add(a.value_, b.value_), unchecked{});
    }
    friend Element operator-(const Element& a, const Element& b) {
        check_same(a, b);
        return Element(a.field_, a.field_.sub(a.value_, b.value_), unchecked{});
    }
    friend Element operator*(const Element& a, const Element& b) {
        check_same(a, b);
        return Element(a.field_, a.field_.mul(a.value_, b.value_), unchecked{});
    }
    friend Element operator/(const Element& a, const Element& b) {
        check_same(a, b);
        return Element(a.field_, a.field_.mul(a.value_, b.field_.inv(b.value_)), unchecked{});
    }
    Element operator-() const { return Element(field_, field_.neg(value_), unchecked{}); }
    Element inverse() const { return Element(field_, field_.inv(value_), unchecked{}); }
    Element pow(long long n) const { return Element(field_, field_.pow(value_, n), unchecked{}); }

    friend bool operator==(const Element& a, const Element& b) {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
    struct unchecked {};
    Element(Field field, int value, unchecked) : field_(std::move(field)), value_(value) {}

    static void check_same(const Element& a, const Element& b) {
        if (a.field_ != b.field_)
            throw PreconditionError(errc::field_mismatch,
                                    "operands belong to different fields");
    }

    Field field_;
    int value_;
};

inline Element Field::element(int value) const { return Element(*this, value); }

// The canonical element order 0, 1, ..., q-1. This order is used everywhere
// downstream: evaluation points, message enumeration, exports.
inline std::vector<Element> Field::elements() const {
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(impl_->q));
    for (long long v = 0; v < impl_->q; ++v) out.push_back(element(static_cast<int>(v)));
    return out;
}

}  // namespace iroa
