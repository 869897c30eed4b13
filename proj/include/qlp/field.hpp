#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qlp {

/// Polynomial / element coefficients over Z_p, constant term first.
using Coeffs = std::vector<std::int64_t>;

namespace detail {

inline std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

inline bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
inline std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> out;
    for (std::uint64_t d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d) continue;
        int e = 0;
        while (n % d == 0) n /= d, ++e;
        out.emplace_back(d, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

/// n = p^k for prime p, k >= 1, if such a decomposition exists.
inline std::optional<std::pair<std::int64_t, int>> prime_power_split(std::int64_t n) {
    if (n < 2) return std::nullopt;
    std::int64_t p = n;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            p = d;
            break;
        }
    int k = 0;
    std::int64_t m = n;
    while (m % p == 0) m /= p, ++k;
    if (m != 1) return std::nullopt;
    return std::make_pair(p, k);
}

inline int poly_deg(const Coeffs& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[static_cast<std::size_t>(i)] != 0) return i;
    return -1;
}

inline void poly_trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    poly_trim(c);
    return c;
}

/// Remainder of a by the monic polynomial f, in place.
inline void poly_rem_inplace(Coeffs& a, const Coeffs& f, std::int64_t p) {
    const int df = poly_deg(f);
    for (int i = poly_deg(a); i >= df; --i) {
        const std::int64_t lead = a[static_cast<std::size_t>(i)];
        if (lead == 0) continue;
        for (int j = 0; j <= df; ++j) {
            auto& c = a[static_cast<std::size_t>(i - df + j)];
            c = mod_norm(c - lead * f[static_cast<std::size_t>(j)], p);
        }
    }
    poly_trim(a);
}

inline Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, std::int64_t p) {
    Coeffs c = poly_mul(a, b, p);
    poly_rem_inplace(c, f, p);
    return c;
}

inline Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& f, std::int64_t p) {
    poly_rem_inplace(base, f, p);
    Coeffs r{1};
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

inline Coeffs poly_sub(const Coeffs& a, const Coeffs& b, std::int64_t p) {
    Coeffs c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        std::int64_t v = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        c[i] = mod_norm(v, p);
    }
    poly_trim(c);
    return c;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
    // Fermat; p prime.
    std::int64_t r = 1, b = mod_norm(a, p);
    for (std::int64_t e = p - 2; e; e >>= 1) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
    }
    return r;
}

inline Coeffs poly_gcd(Coeffs a, Coeffs b, std::int64_t p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        const std::int64_t lead = b.back();
        if (lead != 1) {
            const std::int64_t li = inv_mod(lead, p);
            for (auto& c : b) c = c * li % p;
        }
        poly_rem_inplace(a, b, p);
        std::swap(a, b);
    }
    return a;
}

inline std::int64_t poly_eval(const Coeffs& a, std::int64_t x, std::int64_t p) {
    std::int64_t v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = mod_norm(v * x + *it, p);
    return v;
}

/// Irreducibility of a monic polynomial over Z_p. Root trial suffices up to
/// degree 3; beyond that the Frobenius criterion is used: x^(p^n) = x mod f
/// and gcd(x^(p^(n/r)) - x, f) = 1 for every prime r dividing n.
inline bool poly_is_irreducible(const Coeffs& f, std::int64_t p) {
    const int n = poly_deg(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    if (f[0] == 0) return false;  // root at 0
    if (n <= 3) {
        for (std::int64_t x = 0; x < p; ++x)
            if (poly_eval(f, x, p) == 0) return false;
        return true;
    }
    const Coeffs x{0, 1};
    auto pow_p_k = [&](int k) {
        std::uint64_t e = 1;
        for (int i = 0; i < k; ++i) e *= static_cast<std::uint64_t>(p);
        return poly_powmod(x, e, f, p);
    };
    if (poly_sub(pow_p_k(n), x, p) != Coeffs{}) return false;
    for (const auto& [r, e] : factorize(static_cast<std::uint64_t>(n))) {
        (void)e;
        Coeffs h = poly_sub(pow_p_k(n / static_cast<int>(r)), x, p);
        Coeffs g = poly_gcd(f, h, p);
        if (poly_deg(g) > 0) return false;
    }
    return true;
}

}  // namespace detail

/// Element of GF(p^n): coordinate vector in the power basis of the field
/// modulus, each coordinate in [0, p).
struct FieldElement {
    Coeffs c;
    bool operator==(const FieldElement&) const = default;
};

/// A concrete realization of GF(p^n) as Z_p[t]/(modulus), together with a
/// designated primitive element. Immutable after construction; all
/// operations are pure, so a Field may be shared freely across threads.
class Field {
  public:
    /// Builds GF(p^n). A supplied modulus must be monic of degree n and is
    /// verified irreducible; a supplied generator is verified to have order
    /// exactly q-1. Missing pieces are filled canonically: the
    /// lexicographically least monic irreducible polynomial (coefficients
    /// compared constant term first) and the lexicographically least
    /// primitive element.
    static Field make(std::int64_t p, int n, std::optional<Coeffs> modulus = std::nullopt,
                      std::optional<Coeffs> generator = std::nullopt) {
        if (!detail::is_prime(p) || p == 2) throw std::invalid_argument("field characteristic must be an odd prime");
        if (n < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (int i = 0; i < n; ++i) {
            q *= static_cast<std::uint64_t>(p);
            if (q > (std::uint64_t(1) << 31)) throw std::invalid_argument("field size exceeds the 2^31 support bound");
        }
        Field F;
        F.p_ = p;
        F.n_ = n;
        F.q_ = q;
        F.q1_factors_ = detail::factorize(q - 1);

        if (modulus) {
            Coeffs f = *modulus;
            for (auto& v : f) v = detail::mod_norm(v, p);
            detail::poly_trim(f);
            if (detail::poly_deg(f) != n || f.back() != 1)
                throw std::invalid_argument("modulus must be monic of degree n");
            if (!detail::poly_is_irreducible(f, p)) throw std::invalid_argument("modulus is reducible");
            F.modulus_ = f;
        } else {
            F.modulus_ = canonical_modulus(p, n);
        }

        if (generator) {
            FieldElement g = F.element(*generator);
            if (F.is_zero(g)) throw std::invalid_argument("generator must be nonzero");
            if (!F.is_primitive(g)) throw std::invalid_argument("supplied generator is not primitive");
            F.g_ = g;
        } else {
            F.g_ = F.canonical_generator();
        }
        return F;
    }

    std::int64_t p() const { return p_; }
    int degree() const { return n_; }
    std::uint64_t q() const { return q_; }
    const Coeffs& modulus() const { return modulus_; }
    const FieldElement& generator() const { return g_; }

    FieldElement zero() const { return FieldElement{Coeffs(static_cast<std::size_t>(n_), 0)}; }
    FieldElement one() const { return from_integer(1); }

    FieldElement from_integer(std::int64_t v) const {
        Coeffs c(static_cast<std::size_t>(n_), 0);
        c[0] = detail::mod_norm(v, p_);
        return FieldElement{c};
    }

    /// Reduces an arbitrary coefficient vector (any length, any residues)
    /// into a field element.
    FieldElement element(Coeffs raw) const {
        for (auto& v : raw) v = detail::mod_norm(v, p_);
        detail::poly_rem_inplace(raw, modulus_, p_);
        raw.resize(static_cast<std::size_t>(n_), 0);
        return FieldElement{raw};
    }

    bool is_zero(const FieldElement& x) const {
        return std::all_of(x.c.begin(), x.c.end(), [](std::int64_t v) { return v == 0; });
    }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        FieldElement r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            r.c[i] += b.c[i];
            if (r.c[i] >= p_) r.c[i] -= p_;
        }
        return r;
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        FieldElement r = a;
        for (std::size_t i = 0; i < r.c.size(); ++i) {
            r.c[i] -= b.c[i];
            if (r.c[i] < 0) r.c[i] += p_;
        }
        return r;
    }

    FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        Coeffs c = detail::poly_mul(a.c, b.c, p_);
        detail::poly_rem_inplace(c, modulus_, p_);
        c.resize(static_cast<std::size_t>(n_), 0);
        return FieldElement{c};
    }

    FieldElement inv(const FieldElement& a) const {
        if (is_zero(a)) throw std::domain_error("inversion of zero");
        return pow_unsigned(a, q_ - 2);
    }

    /// x^e for any integer exponent; negative exponents go through inv.
    FieldElement pow(const FieldElement& a, std::int64_t e) const {
        if (e >= 0) {
            if (is_zero(a)) return e == 0 ? one() : zero();
            return pow_unsigned(a, static_cast<std::uint64_t>(e));
        }
        return pow_unsigned(inv(a), static_cast<std::uint64_t>(-(e + 1)) + 1);
    }

    /// Least k >= 1 with x^k = 1; always divides q-1.
    std::uint64_t element_order(const FieldElement& x) const {
        if (is_zero(x)) throw std::domain_error("zero has no multiplicative order");
        std::uint64_t o = q_ - 1;
        for (const auto& [r, e] : q1_factors_) {
            (void)e;
            while (o % r == 0 && pow_unsigned(x, o / r) == one()) o /= r;
        }
        return o;
    }

    /// Extended quadratic character: 0 at zero, +1 on nonzero squares,
    /// -1 on non-squares. Computed as x^((q-1)/2).
    int chi(const FieldElement& x) const {
        if (is_zero(x)) return 0;
        FieldElement t = pow_unsigned(x, (q_ - 1) / 2);
        if (t == one()) return 1;
        if (t == neg(one())) return -1;
        throw std::logic_error("chi: x^((q-1)/2) is not a square root of 1");
    }

    /// Quadratic character of the subfield GF(sub_q), applied to an element
    /// that lies in it: x^((sub_q-1)/2) read as +-1. (Relative to the full
    /// field every nonzero subfield element is a square, so the plain chi
    /// would be identically 1 there.)
    int chi(const FieldElement& x, std::uint64_t sub_q) const {
        if (is_zero(x)) return 0;
        FieldElement t = pow_unsigned(x, (sub_q - 1) / 2);
        if (t == one()) return 1;
        if (t == neg(one())) return -1;
        throw std::domain_error("chi: element does not lie in the requested subfield");
    }

    /// True iff x lies in the subfield of the given cardinality (x^s = x).
    bool in_subfield(const FieldElement& x, std::uint64_t s) const { return pow_unsigned(x, s) == x; }

    /// Dense index, sum of c_i p^i; inverse of element_at.
    std::uint64_t index_of(const FieldElement& x) const {
        std::uint64_t idx = 0, w = 1;
        for (std::size_t i = 0; i < x.c.size(); ++i) {
            idx += static_cast<std::uint64_t>(x.c[i]) * w;
            w *= static_cast<std::uint64_t>(p_);
        }
        return idx;
    }

    FieldElement element_at(std::uint64_t idx) const {
        Coeffs c(static_cast<std::size_t>(n_), 0);
        for (int i = 0; i < n_; ++i) {
            c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(idx % static_cast<std::uint64_t>(p_));
            idx /= static_cast<std::uint64_t>(p_);
        }
        return FieldElement{c};
    }

  private:
    Field() = default;

    FieldElement pow_unsigned(const FieldElement& a, std::uint64_t e) const {
        FieldElement r = one(), b = a;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }

    bool is_primitive(const FieldElement& g) const {
        for (const auto& [r, e] : q1_factors_) {
            (void)e;
            if (pow_unsigned(g, (q_ - 1) / r) == one()) return false;
        }
        return true;
    }

    static Coeffs canonical_modulus(std::int64_t p, int n) {
        if (n == 1) return Coeffs{0, 1};  // t itself: GF(p) = Z_p[t]/(t)
        std::uint64_t total = 1;
        for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
        // Lexicographic scan of the non-leading coefficients, constant term
        // most significant, so the first irreducible hit is the least one.
        for (std::uint64_t counter = 0; counter < total; ++counter) {
            Coeffs f(static_cast<std::size_t>(n) + 1, 0);
            f[static_cast<std::size_t>(n)] = 1;
            std::uint64_t rest = counter;
            for (int i = n - 1; i >= 0; --i) {
                f[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p));
                rest /= static_cast<std::uint64_t>(p);
            }
            if (detail::poly_is_irreducible(f, p)) return f;
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable
    }

    FieldElement canonical_generator() const {
        for (std::uint64_t counter = 1; counter < q_; ++counter) {
            Coeffs c(static_cast<std::size_t>(n_), 0);
            std::uint64_t rest = counter;
            for (int i = n_ - 1; i >= 0; --i) {
                c[static_cast<std::size_t>(i)] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(p_));
                rest /= static_cast<std::uint64_t>(p_);
            }
            FieldElement g{c};
            if (!is_zero(g) && is_primitive(g)) return g;
        }
        throw std::logic_error("no primitive element found");  // unreachable
    }

    std::int64_t p_ = 0;
    int n_ = 0;
    std::uint64_t q_ = 0;
    Coeffs modulus_;
    FieldElement g_;
    std::vector<std::pair<std::uint64_t, int>> q1_factors_;
};

/// Convenience matching the library's external naming.
inline Field make_field(std::int64_t p, int n, std::optional<Coeffs> modulus = std::nullopt,
                        std::optional<Coeffs> generator = std::nullopt) {
    return Field::make(p, n, std::move(modulus), std::move(generator));
}

/// Comma-separated coefficient list, constant term first ("2,4,4,0,1").
inline std::string format_poly(const Coeffs& c) {
    std::string s;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(c[i]);
    }
    return s;
}

inline Coeffs parse_poly(const std::string& text) {
    Coeffs out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        std::int64_t v = std::stoll(tok, &pos);
        while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos != tok.size()) throw std::invalid_argument("bad coefficient '" + tok + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty coefficient list");
    return out;
}

}  // namespace qlp
