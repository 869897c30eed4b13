#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qlp/gaussian.hpp"
#include "qlp/sequence.hpp"

namespace qlp {

/// Square matrix with entries in {1, i, -1, -i}.
class HadamardMatrix {
  public:
    HadamardMatrix(std::size_t order, std::vector<Entry> entries) : order_(order), entries_(std::move(entries)) {
        if (order_ == 0 || entries_.size() != order_ * order_)
            throw std::invalid_argument("entry count must be order^2");
        for (Entry e : entries_)
            if (!entry_is_unit(e)) throw std::invalid_argument("matrix entries must be fourth roots of unity");
    }

    static HadamardMatrix unit() { return HadamardMatrix(1, {Entry::Plus}); }

    std::size_t order() const { return order_; }
    Entry at(std::size_t r, std::size_t c) const { return entries_[r * order_ + c]; }

    bool operator==(const HadamardMatrix&) const = default;

  private:
    std::size_t order_;
    std::vector<Entry> entries_;
};

/// H H* = order * I, in exact Gaussian-integer arithmetic.
inline bool verify_hadamard(const HadamardMatrix& H) {
    const std::size_t m = H.order();
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t s = 0; s < m; ++s) {
            GaussianInt acc;
            for (std::size_t k = 0; k < m; ++k) acc += entry_value(H.at(r, k)) * entry_value(H.at(s, k)).conj();
            const GaussianInt want = r == s ? GaussianInt{static_cast<std::int64_t>(m), 0} : GaussianInt{0, 0};
            if (acc != want) return false;
        }
    return true;
}

/// Kronecker product with [[+,+],[+,-]]: doubles the order, preserving the
/// Hadamard property. The input is re-verified first.
inline HadamardMatrix turyn_double(const HadamardMatrix& H) {
    if (!verify_hadamard(H)) throw std::invalid_argument("turyn_double: input is not a Hadamard matrix");
    const std::size_t m = H.order();
    std::vector<Entry> out(4 * m * m);
    for (std::size_t r = 0; r < 2 * m; ++r)
        for (std::size_t c = 0; c < 2 * m; ++c) {
            Entry e = H.at(r % m, c % m);
            if (r >= m && c >= m) e = entry_neg(e);
            out[r * 2 * m + c] = e;
        }
    return HadamardMatrix(2 * m, std::move(out));
}

/// Row-per-line glyph grid.
inline std::string render(const HadamardMatrix& H) {
    std::string s;
    for (std::size_t r = 0; r < H.order(); ++r) {
        for (std::size_t c = 0; c < H.order(); ++c) s += entry_glyph(H.at(r, c));
        s += '\n';
    }
    return s;
}

}  // namespace qlp
