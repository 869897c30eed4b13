#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qlp/field.hpp"
#include "qlp/sequence.hpp"

namespace qlp {

struct Vec2 {
    FieldElement x, y;
    bool operator==(const Vec2&) const = default;
};

/// 2x2 matrix over a field, row-major [[a, b], [c, d]].
struct Matrix2 {
    FieldElement a, b, c, d;
    bool operator==(const Matrix2&) const = default;
};

inline Matrix2 mat_identity(const Field& F) { return {F.one(), F.zero(), F.zero(), F.one()}; }

inline Matrix2 mat_mul(const Field& F, const Matrix2& A, const Matrix2& B) {
    return {F.add(F.mul(A.a, B.a), F.mul(A.b, B.c)), F.add(F.mul(A.a, B.b), F.mul(A.b, B.d)),
            F.add(F.mul(A.c, B.a), F.mul(A.d, B.c)), F.add(F.mul(A.c, B.b), F.mul(A.d, B.d))};
}

inline Matrix2 mat_neg(const Field& F, const Matrix2& A) {
    return {F.neg(A.a), F.neg(A.b), F.neg(A.c), F.neg(A.d)};
}

inline Vec2 mat_apply(const Field& F, const Matrix2& A, const Vec2& v) {
    return {F.add(F.mul(A.a, v.x), F.mul(A.b, v.y)), F.add(F.mul(A.c, v.x), F.mul(A.d, v.y))};
}

/// Determinant of the matrix whose columns are u and v.
inline FieldElement det_cols(const Field& F, const Vec2& u, const Vec2& v) {
    return F.sub(F.mul(u.x, v.y), F.mul(u.y, v.x));
}

namespace detail {

inline void require_quarter_one(std::uint64_t q) {
    if (q % 4 != 1)
        throw std::invalid_argument(
            "construction requires q = 1 (mod 4): for q = 3 (mod 4) the orbit contains two "
            "proportional vectors and the sequence pair degenerates");
}

inline Field default_extension_field(std::uint64_t q) {
    auto pk = prime_power_split(static_cast<std::int64_t>(q));
    if (!pk) throw std::invalid_argument("q must be a prime power");
    return Field::make(pk->first, 2 * pk->second);
}

inline void require_extension_of(const Field& ext, std::uint64_t q) {
    if (ext.q() != q * q) throw std::invalid_argument("field does not realize GF(q^2) for the requested q");
}

}  // namespace detail

struct GsMatrices {
    Matrix2 V, W;
};

/// The two commuting invertible maps on GF(q^2), viewed as 2x2 matrices over
/// the base field GF(q) with respect to the basis {1, g}:
///
///   V = 1/2 [[ g^(q-1)+g^(1-q),            g^((1+q)/2) (g^(q-1)-g^(1-q)) ]
///            [ g^(-(1+q)/2) (g^(q-1)-g^(1-q)),  g^(q-1)+g^(1-q)          ]]
///   W = [[0, g^(1+q)], [1, 0]]
///
/// Every stated entry is checked to lie in the base field (x^q = x); failure
/// signals a wrong field realization.
inline GsMatrices gs_matrices(const Field& ext, std::uint64_t q) {
    detail::require_quarter_one(q);
    detail::require_extension_of(ext, q);
    const FieldElement& g = ext.generator();
    const auto e = [&](std::int64_t k) { return ext.pow(g, k); };
    const std::int64_t qi = static_cast<std::int64_t>(q);

    const FieldElement half = ext.inv(ext.from_integer(2));
    const FieldElement hsum = ext.add(e(qi - 1), e(1 - qi));
    const FieldElement hdiff = ext.sub(e(qi - 1), e(1 - qi));
    const FieldElement s = e((1 + qi) / 2);

    Matrix2 V{ext.mul(half, hsum), ext.mul(half, ext.mul(s, hdiff)), ext.mul(half, ext.mul(ext.inv(s), hdiff)),
              ext.mul(half, hsum)};
    Matrix2 W{ext.zero(), e(1 + qi), ext.one(), ext.zero()};

    for (const FieldElement* entry : {&V.a, &V.b, &V.c, &W.b})
        if (!ext.in_subfield(*entry, q))
            throw std::invalid_argument("matrix entry falls outside the base field; wrong realization of GF(q^2)");
    return {V, W};
}

/// Closed form for V^k (valid for all integers k).
inline Matrix2 v_power_closed_form(const Field& ext, std::uint64_t q, std::int64_t k) {
    const FieldElement& g = ext.generator();
    const std::int64_t qi = static_cast<std::int64_t>(q);
    const FieldElement half = ext.inv(ext.from_integer(2));
    const FieldElement gk = ext.pow(g, k * (qi - 1));
    const FieldElement gkinv = ext.pow(g, k * (1 - qi));
    const FieldElement su = ext.add(gk, gkinv);
    const FieldElement di = ext.sub(gk, gkinv);
    const FieldElement s = ext.pow(g, (1 + qi) / 2);
    return {ext.mul(half, su), ext.mul(half, ext.mul(s, di)), ext.mul(half, ext.mul(ext.inv(s), di)),
            ext.mul(half, su)};
}

/// Closed form for V^k W.
inline Matrix2 vw_power_closed_form(const Field& ext, std::uint64_t q, std::int64_t k) {
    const FieldElement& g = ext.generator();
    const std::int64_t qi = static_cast<std::int64_t>(q);
    const FieldElement half = ext.inv(ext.from_integer(2));
    const FieldElement gk = ext.pow(g, k * (qi - 1));
    const FieldElement gkinv = ext.pow(g, k * (1 - qi));
    const FieldElement su = ext.add(gk, gkinv);
    const FieldElement di = ext.sub(gk, gkinv);
    const FieldElement s = ext.pow(g, (1 + qi) / 2);
    return {ext.mul(half, ext.mul(s, di)), ext.mul(half, ext.mul(ext.pow(g, 1 + qi), su)), ext.mul(half, su),
            ext.mul(half, ext.mul(s, di))};
}

/// The 1+q orbit vectors x, Vx, ..., V^((q-1)/2) x, Wx, VWx, ..., V^((q-1)/2) W x
/// with x = (1, 0)^T. No two are proportional.
inline std::vector<Vec2> gs_orbit(const Field& ext, std::uint64_t q) {
    auto [V, W] = gs_matrices(ext, q);
    const Vec2 x{ext.one(), ext.zero()};
    std::vector<Vec2> orbit;
    orbit.reserve(q + 1);
    Vec2 v = x;
    for (std::uint64_t k = 0; k <= (q - 1) / 2; ++k) {
        orbit.push_back(v);
        v = mat_apply(ext, V, v);
    }
    Vec2 u = mat_apply(ext, W, x);
    for (std::uint64_t k = 0; k <= (q - 1) / 2; ++k) {
        orbit.push_back(u);
        u = mat_apply(ext, V, u);
    }
    return orbit;
}

/// Symmetric complementary ternary pair of length (1+q)/2 whose only zero is
/// a_0: a_k = chi det(x, V^k x), b_k = chi det(x, V^k W x).
inline std::pair<Sequence, Sequence> gs_pair(std::uint64_t q, const std::optional<Field>& field = std::nullopt) {
    detail::require_quarter_one(q);
    const Field ext = field ? *field : detail::default_extension_field(q);
    detail::require_extension_of(ext, q);
    const std::vector<Vec2> orbit = gs_orbit(ext, q);
    const Vec2 x{ext.one(), ext.zero()};
    const std::size_t half = (q + 1) / 2;
    std::vector<int> av(half), bv(half);
    // The character is that of the base field GF(q); the determinants lie in it.
    for (std::size_t k = 0; k < half; ++k) {
        av[k] = ext.chi(det_cols(ext, x, orbit[k]), q);
        bv[k] = ext.chi(det_cols(ext, x, orbit[half + k]), q);
    }
    return {Sequence::from_ternary(av), Sequence::from_ternary(bv)};
}

/// Character-sequence pair of length (q-1)/2 for an odd prime power q >= 5:
/// a_0 is 1 or i according to q mod 4, a_k = chi(g^2k - 1) otherwise, and
/// b_k = chi(g^(2k+1) - 1). The pair is Legendre; b is always binary.
inline std::pair<Sequence, Sequence> theorem1_pair(std::uint64_t q,
                                                   const std::optional<Field>& field = std::nullopt) {
    auto pk = detail::prime_power_split(static_cast<std::int64_t>(q));
    if (!pk || pk->first == 2) throw std::invalid_argument("q must be an odd prime power");
    if (q == 3) throw std::invalid_argument("q = 3 gives a degenerate length-1 pair; q >= 5 required");
    const Field F = field ? *field : Field::make(pk->first, pk->second);
    if (F.q() != q) throw std::invalid_argument("field does not realize GF(q)");

    const std::size_t len = (q - 1) / 2;
    const FieldElement& g = F.generator();
    const FieldElement g2 = F.mul(g, g);
    const FieldElement one = F.one();
    const auto sign_entry = [](int s) { return s == 1 ? Entry::Plus : Entry::Minus; };

    std::vector<Entry> a(len), b(len);
    a[0] = q % 4 == 1 ? Entry::I : Entry::Plus;
    FieldElement even_pow = one;  // g^(2k)
    for (std::size_t k = 1; k < len; ++k) {
        even_pow = F.mul(even_pow, g2);
        a[k] = sign_entry(F.chi(F.sub(even_pow, one)));
    }
    FieldElement odd_pow = g;  // g^(2k+1)
    for (std::size_t k = 0; k < len; ++k) {
        b[k] = sign_entry(F.chi(F.sub(odd_pow, one)));
        odd_pow = F.mul(odd_pow, g2);
    }
    return {Sequence(q % 4 == 1 ? Alphabet::Quaternary : Alphabet::Binary, std::move(a)),
            Sequence(Alphabet::Binary, std::move(b))};
}

/// Symmetric binary pair of length 2p from the ternary pair over GF((2p-1)^2):
/// w_0 = w_p = 1, w_k = (-1)^k a_(k mod p) otherwise; x_k = (-1)^k b_(k mod p).
/// Summed autocorrelations are 4-4p at shift p and 0 at other nonzero shifts.
inline std::pair<Sequence, Sequence> w1_pair(std::int64_t p, const std::optional<Field>& field = std::nullopt) {
    if (p < 3 || !detail::is_prime(p) || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    const std::int64_t q = 2 * p - 1;
    if (!detail::prime_power_split(q)) throw std::invalid_argument("2p-1 must be a prime power");
    auto [a, b] = gs_pair(static_cast<std::uint64_t>(q), field);

    const auto ternary_val = [](Entry e) { return e == Entry::Plus ? 1 : e == Entry::Minus ? -1 : 0; };
    const std::size_t n = static_cast<std::size_t>(2 * p);
    std::vector<int> w(n), x(n);
    for (std::size_t k = 0; k < n; ++k) {
        const int flip = k % 2 == 0 ? 1 : -1;
        const std::size_t r = k % static_cast<std::size_t>(p);
        w[k] = flip * ternary_val(a[r]);
        x[k] = flip * ternary_val(b[r]);
    }
    w[0] = 1;
    w[static_cast<std::size_t>(p)] = 1;
    return {Sequence::from_signs(w), Sequence::from_signs(x)};
}

/// Binary length-2p sequence from the quadratic character of GF(p):
/// y_0 = 1, y_p = -1, y_k = chi(k mod p) otherwise. Its autocorrelation is
/// 2p-4 at shift p and -2 at every other nonzero shift.
inline Sequence w2_sequence(std::int64_t p) {
    if (p < 3 || !detail::is_prime(p) || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    const Field F = Field::make(p, 1);
    const std::size_t n = static_cast<std::size_t>(2 * p);
    std::vector<int> y(n);
    for (std::size_t k = 0; k < n; ++k) y[k] = F.chi(F.from_integer(static_cast<std::int64_t>(k) % p));
    y[0] = 1;
    y[static_cast<std::size_t>(p)] = -1;
    return Sequence::from_signs(y);
}

/// Quaternary Legendre pair of length 2p, p an odd prime with 2p-1 a prime
/// power: the Gray combination of the w1 pair together with the w2 sequence.
inline std::pair<Sequence, Sequence> theorem2_pair(std::int64_t p, const std::optional<Field>& field = std::nullopt) {
    auto [w, x] = w1_pair(p, field);
    return {gray_combine(w, x), w2_sequence(p)};
}

/// For a length-2p sequence: a_0 + a_p = 1+i and a_k + a_(k+p) = 0 for 0<k<p.
inline bool compression_check(const Sequence& a, std::int64_t p) {
    if (p < 1 || a.size() != static_cast<std::size_t>(2 * p))
        throw std::invalid_argument("compression_check: sequence length must be 2p");
    const std::size_t sp = static_cast<std::size_t>(p);
    if (a.value_at(0) + a.value_at(sp) != GaussianInt{1, 1}) return false;
    for (std::size_t k = 1; k < sp; ++k)
        if (a.value_at(k) + a.value_at(k + sp) != GaussianInt{0, 0}) return false;
    return true;
}

}  // namespace qlp
