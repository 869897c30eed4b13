#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qlp/gaussian.hpp"

namespace qlp {

enum class Alphabet { Binary, Ternary, Quaternary };

inline std::string_view alphabet_name(Alphabet a) {
    switch (a) {
        case Alphabet::Binary: return "binary";
        case Alphabet::Ternary: return "ternary";
        case Alphabet::Quaternary: return "quaternary";
    }
    return "?";
}

/// Sequence entry. Units are stored as the exponent e with value i^e, so
/// conjugation is e -> -e mod 4 and negation is e -> e+2 mod 4; Zero is the
/// extra ternary value.
enum class Entry : std::uint8_t { Plus = 0, I = 1, Minus = 2, J = 3, Zero = 4 };

constexpr bool entry_is_unit(Entry e) { return e != Entry::Zero; }

constexpr Entry entry_conj(Entry e) {
    return entry_is_unit(e) ? static_cast<Entry>((4 - static_cast<unsigned>(e)) & 3) : e;
}

constexpr Entry entry_neg(Entry e) {
    return entry_is_unit(e) ? static_cast<Entry>((static_cast<unsigned>(e) + 2) & 3) : e;
}

constexpr GaussianInt entry_value(Entry e) {
    constexpr std::array<GaussianInt, 5> v{GaussianInt{1, 0}, GaussianInt{0, 1}, GaussianInt{-1, 0},
                                           GaussianInt{0, -1}, GaussianInt{0, 0}};
    return v[static_cast<std::size_t>(e)];
}

constexpr char entry_glyph(Entry e) {
    constexpr std::array<char, 5> g{'+', 'i', '-', 'j', '0'};
    return g[static_cast<std::size_t>(e)];
}

constexpr std::optional<Entry> entry_from_glyph(char c) {
    switch (c) {
        case '+': return Entry::Plus;
        case 'i': return Entry::I;
        case '-': return Entry::Minus;
        case 'j': return Entry::J;
        case '0': return Entry::Zero;
        default: return std::nullopt;
    }
}

constexpr bool entry_fits(Alphabet a, Entry e) {
    switch (a) {
        case Alphabet::Binary: return e == Entry::Plus || e == Entry::Minus;
        case Alphabet::Ternary: return e == Entry::Plus || e == Entry::Minus || e == Entry::Zero;
        case Alphabet::Quaternary: return entry_is_unit(e);
    }
    return false;
}

/// Immutable exact sequence over one of the alphabets {+-}, {+-0}, {+-ij}.
class Sequence {
  public:
    Sequence(Alphabet a, std::vector<Entry> entries) : alphabet_(a), entries_(std::move(entries)) {
        if (entries_.empty()) throw std::invalid_argument("sequence must be nonempty");
        for (Entry e : entries_)
            if (!entry_fits(a, e))
                throw std::invalid_argument(std::string("entry '") + entry_glyph(e) + "' outside " +
                                            std::string(alphabet_name(a)) + " alphabet");
    }

    /// Parses glyphs "+-ij0", inferring the least alphabet that fits.
    static Sequence from_glyphs(std::string_view glyphs) {
        std::vector<Entry> es;
        bool has_zero = false, has_imag = false;
        for (char c : glyphs) {
            auto e = entry_from_glyph(c);
            if (!e) throw std::invalid_argument(std::string("unknown glyph '") + c + "'");
            has_zero |= *e == Entry::Zero;
            has_imag |= *e == Entry::I || *e == Entry::J;
            es.push_back(*e);
        }
        if (has_zero && has_imag) throw std::invalid_argument("sequence mixes 0 with imaginary units");
        Alphabet a = has_imag ? Alphabet::Quaternary : has_zero ? Alphabet::Ternary : Alphabet::Binary;
        return Sequence(a, std::move(es));
    }

    /// Binary sequence from +-1 signs.
    static Sequence from_signs(const std::vector<int>& signs) {
        std::vector<Entry> es;
        es.reserve(signs.size());
        for (int s : signs) {
            if (s != 1 && s != -1) throw std::invalid_argument("sign entries must be +-1");
            es.push_back(s == 1 ? Entry::Plus : Entry::Minus);
        }
        return Sequence(Alphabet::Binary, std::move(es));
    }

    /// Ternary sequence from {-1,0,1} values.
    static Sequence from_ternary(const std::vector<int>& vals) {
        std::vector<Entry> es;
        es.reserve(vals.size());
        for (int v : vals) {
            if (v < -1 || v > 1) throw std::invalid_argument("ternary entries must be in {-1,0,1}");
            es.push_back(v == 1 ? Entry::Plus : v == -1 ? Entry::Minus : Entry::Zero);
        }
        return Sequence(Alphabet::Ternary, std::move(es));
    }

    Alphabet alphabet() const { return alphabet_; }
    std::size_t size() const { return entries_.size(); }
    Entry operator[](std::size_t k) const { return entries_[k]; }
    const std::vector<Entry>& entries() const { return entries_; }
    GaussianInt value_at(std::size_t k) const { return entry_value(entries_[k]); }

    std::string glyphs() const {
        std::string s;
        s.reserve(entries_.size());
        for (Entry e : entries_) s += entry_glyph(e);
        return s;
    }

    /// Value equality: alphabet is a validation tag, not part of identity.
    bool operator==(const Sequence& o) const { return entries_ == o.entries_; }

  private:
    Alphabet alphabet_;
    std::vector<Entry> entries_;
};

inline Sequence cyclic_shift(const Sequence& a, std::size_t s) {
    const std::size_t n = a.size();
    std::vector<Entry> es(n);
    for (std::size_t k = 0; k < n; ++k) es[k] = a[(k + s) % n];
    return Sequence(a.alphabet(), std::move(es));
}

/// Periodic cross-correlation sum_k a_k * conj(b_{k+u mod N}), exact.
inline GaussianInt cross_correlation(const Sequence& a, const Sequence& b, std::size_t u) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("cross_correlation: length mismatch");
    if (u >= n) throw std::invalid_argument("cross_correlation: shift out of range");
    // a_k * conj(b_m) = i^(ea - eb); bucket the exponent differences.
    std::int64_t cnt[4] = {0, 0, 0, 0};
    for (std::size_t k = 0; k < n; ++k) {
        const Entry ea = a[k];
        std::size_t m = k + u;
        if (m >= n) m -= n;
        const Entry eb = b[m];
        if (!entry_is_unit(ea) || !entry_is_unit(eb)) continue;
        ++cnt[(static_cast<unsigned>(ea) + 4 - static_cast<unsigned>(eb)) & 3];
    }
    return {cnt[0] - cnt[2], cnt[1] - cnt[3]};
}

inline GaussianInt autocorrelation(const Sequence& a, std::size_t u) { return cross_correlation(a, a, u); }

/// All periodic autocorrelations, entry u = R_a(u).
inline std::vector<GaussianInt> autocorrelation_spectrum(const Sequence& a) {
    std::vector<GaussianInt> r(a.size());
    for (std::size_t u = 0; u < a.size(); ++u) r[u] = cross_correlation(a, a, u);
    return r;
}

/// a_k = a_{N-k} for all k != 0.
inline bool is_symmetric(const Sequence& a) {
    const std::size_t n = a.size();
    for (std::size_t k = 1; k < n; ++k)
        if (a[k] != a[n - k]) return false;
    return true;
}

/// R_a(u) + R_b(u) = 0 for all u != 0.
inline bool is_complementary(const Sequence& a, const Sequence& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("is_complementary: length mismatch");
    for (std::size_t u = 1; u < n; ++u)
        if (autocorrelation(a, u) + autocorrelation(b, u) != GaussianInt{0, 0}) return false;
    return true;
}

struct LegendreReport {
    bool ok = true;
    std::vector<std::pair<std::size_t, GaussianInt>> violations;  // (shift, R_a+R_b there)
};

/// Checks R_a(u) + R_b(u) = -2 for every u != 0, reporting each failing shift.
inline LegendreReport is_legendre_pair(const Sequence& a, const Sequence& b) {
    const std::size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("is_legendre_pair: length mismatch");
    LegendreReport rep;
    const GaussianInt want{-2, 0};
    for (std::size_t u = 1; u < n; ++u) {
        GaussianInt s = autocorrelation(a, u) + autocorrelation(b, u);
        if (s != want) {
            rep.ok = false;
            rep.violations.emplace_back(u, s);
        }
    }
    return rep;
}

/// R_{w,x}(u) + R_{y,z}(u) = R_{x,w}(u) + R_{z,y}(u) for all u != 0.
inline bool is_amicable_set(const Sequence& w, const Sequence& x, const Sequence& y, const Sequence& z) {
    const std::size_t n = w.size();
    if (x.size() != n || y.size() != n || z.size() != n)
        throw std::invalid_argument("is_amicable_set: length mismatch");
    for (std::size_t u = 1; u < n; ++u) {
        GaussianInt lhs = cross_correlation(w, x, u) + cross_correlation(y, z, u);
        GaussianInt rhs = cross_correlation(x, w, u) + cross_correlation(z, y, u);
        if (lhs != rhs) return false;
    }
    return true;
}

/// Combines two binary sequences into the quaternary sequence
/// (1+i)/2 * w + (1+j)/2 * x; entrywise (+,+)->+, (+,-)->i, (-,-)->-, (-,+)->j.
inline Sequence gray_combine(const Sequence& w, const Sequence& x) {
    if (w.alphabet() != Alphabet::Binary || x.alphabet() != Alphabet::Binary)
        throw std::invalid_argument("gray_combine: inputs must be binary");
    const std::size_t n = w.size();
    if (x.size() != n) throw std::invalid_argument("gray_combine: length mismatch");
    std::vector<Entry> es(n);
    for (std::size_t k = 0; k < n; ++k) {
        const bool wp = w[k] == Entry::Plus, xp = x[k] == Entry::Plus;
        es[k] = wp ? (xp ? Entry::Plus : Entry::I) : (xp ? Entry::J : Entry::Minus);
    }
    return Sequence(Alphabet::Quaternary, std::move(es));
}

/// Inverse of gray_combine: the unique binary pair mapping onto q.
inline std::pair<Sequence, Sequence> gray_split(const Sequence& q) {
    if (q.alphabet() == Alphabet::Ternary) throw std::invalid_argument("gray_split: zero entries have no preimage");
    const std::size_t n = q.size();
    std::vector<Entry> w(n), x(n);
    for (std::size_t k = 0; k < n; ++k) {
        switch (q[k]) {
            case Entry::Plus: w[k] = Entry::Plus, x[k] = Entry::Plus; break;
            case Entry::I: w[k] = Entry::Plus, x[k] = Entry::Minus; break;
            case Entry::Minus: w[k] = Entry::Minus, x[k] = Entry::Minus; break;
            case Entry::J: w[k] = Entry::Minus, x[k] = Entry::Plus; break;
            case Entry::Zero: break;  // excluded above
        }
    }
    return {Sequence(Alphabet::Binary, std::move(w)), Sequence(Alphabet::Binary, std::move(x))};
}

inline GaussianInt sequence_sum(const Sequence& a) {
    GaussianInt s;
    for (std::size_t k = 0; k < a.size(); ++k) s += a.value_at(k);
    return s;
}

inline std::pair<GaussianInt, GaussianInt> pair_sums(const Sequence& a, const Sequence& b) {
    return {sequence_sum(a), sequence_sum(b)};
}

}  // namespace qlp
