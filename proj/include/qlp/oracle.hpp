#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "qlp/field.hpp"
#include "qlp/sequence.hpp"

namespace qlp {

struct PrimePower {
    std::int64_t base;
    int exponent;
    bool operator==(const PrimePower&) const = default;
};

inline std::optional<PrimePower> is_prime_power(std::int64_t n) {
    auto pk = detail::prime_power_split(n);
    if (!pk) return std::nullopt;
    return PrimePower{pk->first, pk->second};
}

/// Number of primes p <= limit for which 2p-1 is a prime power.
inline std::int64_t count_partner_primes(std::int64_t limit) {
    if (limit < 2) throw std::invalid_argument("limit must be >= 2");
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::int64_t count = 0;
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        for (std::int64_t m = p * p; m <= limit; m += p) composite[static_cast<std::size_t>(m)] = true;
        if (detail::prime_power_split(2 * p - 1)) ++count;
    }
    return count;
}

// ---------------------------------------------------------------------------
// Exhaustive search over all ordered sequence pairs of a given tiny length.
// The acceptance test is computed straight from the definition with raw
// complex integer arithmetic; it deliberately shares nothing with the
// correlation engine it is used to cross-check.
// ---------------------------------------------------------------------------

/// Codes are unit exponents (value i^code). Accepts iff the summed periodic
/// autocorrelations equal -2 at every nonzero shift.
inline bool direct_legendre_accepts(const std::vector<std::uint8_t>& a, const std::vector<std::uint8_t>& b) {
    static constexpr int RE[4] = {1, 0, -1, 0};
    static constexpr int IM[4] = {0, 1, 0, -1};
    const std::size_t n = a.size();
    for (std::size_t u = 1; u < n; ++u) {
        long re = 0, im = 0;
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t m = k + u;
            if (m >= n) m -= n;
            // z * conj(w), spelled out
            re += RE[a[k]] * RE[a[m]] + IM[a[k]] * IM[a[m]];
            im += IM[a[k]] * RE[a[m]] - RE[a[k]] * IM[a[m]];
            re += RE[b[k]] * RE[b[m]] + IM[b[k]] * IM[b[m]];
            im += IM[b[k]] * RE[b[m]] - RE[b[k]] * IM[b[m]];
        }
        if (re != -2 || im != 0) return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::uint8_t> candidate_codes(std::uint64_t index, std::size_t n, Alphabet alphabet) {
    const std::uint64_t radix = alphabet == Alphabet::Quaternary ? 4 : 2;
    std::vector<std::uint8_t> codes(n);
    for (std::size_t k = n; k-- > 0;) {
        std::uint64_t d = index % radix;
        index /= radix;
        codes[k] = static_cast<std::uint8_t>(alphabet == Alphabet::Quaternary ? d : 2 * d);
    }
    return codes;
}

inline bool candidate_increment(std::vector<std::uint8_t>& codes, Alphabet alphabet) {
    const std::uint8_t top = alphabet == Alphabet::Quaternary ? 3 : 2;
    const std::uint8_t step = alphabet == Alphabet::Quaternary ? 1 : 2;
    for (std::size_t k = codes.size(); k-- > 0;) {
        if (codes[k] != top) {
            codes[k] = static_cast<std::uint8_t>(codes[k] + step);
            return true;
        }
        codes[k] = 0;
    }
    return false;  // wrapped
}

}  // namespace detail

/// Decodes candidate #index (digits in lexicographic order, first entry most
/// significant) into a sequence.
inline Sequence decode_candidate(std::uint64_t index, std::size_t n, Alphabet alphabet) {
    auto codes = detail::candidate_codes(index, n, alphabet);
    std::vector<Entry> es(n);
    for (std::size_t k = 0; k < n; ++k) es[k] = static_cast<Entry>(codes[k]);
    return Sequence(alphabet, std::move(es));
}

struct BruteForceOptions {
    std::uint64_t exemplar_limit = 0;  // how many accepted pairs to materialize
    unsigned threads = 0;              // 0 = hardware concurrency
};

struct BruteForceResult {
    std::uint64_t candidates = 0;  // ordered pairs scanned
    std::uint64_t accepted = 0;
    std::vector<std::pair<Sequence, Sequence>> exemplars;  // lexicographically first accepted pairs
};

/// Counts (and optionally lists) all ordered pairs of the given length and
/// alphabet that satisfy the Legendre condition, by direct enumeration.
/// Work is partitioned across threads by the first sequence's index range;
/// per-range results are merged in range order, so output is deterministic.
inline BruteForceResult brute_force_legendre(std::size_t n, Alphabet alphabet, BruteForceOptions opt = {}) {
    if (alphabet == Alphabet::Ternary) throw std::invalid_argument("brute force covers binary and quaternary only");
    const std::size_t max_n = alphabet == Alphabet::Quaternary ? 6 : 8;
    if (n == 0 || n > max_n)
        throw std::invalid_argument("length " + std::to_string(n) + " exceeds the enumerable bound " +
                                    std::to_string(max_n) + " for " + std::string(alphabet_name(alphabet)));
    const std::uint64_t radix = alphabet == Alphabet::Quaternary ? 4 : 2;
    std::uint64_t per_side = 1;
    for (std::size_t k = 0; k < n; ++k) per_side *= radix;

    unsigned workers = opt.threads ? opt.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, per_side));

    struct Partial {
        std::uint64_t accepted = 0;
        std::vector<std::pair<std::uint64_t, std::uint64_t>> kept;
    };
    std::vector<Partial> parts(workers);

    auto scan = [&](unsigned w) {
        const std::uint64_t lo = per_side * w / workers;
        const std::uint64_t hi = per_side * (w + 1) / workers;
        Partial& out = parts[w];
        for (std::uint64_t ai = lo; ai < hi; ++ai) {
            const auto a = detail::candidate_codes(ai, n, alphabet);
            auto b = detail::candidate_codes(0, n, alphabet);
            for (std::uint64_t bi = 0; bi < per_side; ++bi) {
                if (direct_legendre_accepts(a, b)) {
                    ++out.accepted;
                    if (out.kept.size() < opt.exemplar_limit) out.kept.emplace_back(ai, bi);
                }
                detail::candidate_increment(b, alphabet);
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(scan, w);
    scan(0);
    for (auto& t : pool) t.join();

    BruteForceResult result;
    result.candidates = per_side * per_side;
    for (const Partial& part : parts) {
        result.accepted += part.accepted;
        for (const auto& [ai, bi] : part.kept)
            if (result.exemplars.size() < opt.exemplar_limit)
                result.exemplars.emplace_back(decode_candidate(ai, n, alphabet), decode_candidate(bi, n, alphabet));
    }
    return result;
}

// ---------------------------------------------------------------------------
// Coverage of even lengths
// ---------------------------------------------------------------------------

inline constexpr std::int64_t literature_lengths[] = {16, 22, 28, 32, 34};
inline constexpr const char* literature_citation = "Kotsireas-Winterhof 2024; Kotsireas-Koutschan-Winterhof 2024";

/// How one even length is covered. A length may be reachable by both
/// constructions at once; "open" means nothing applies.
struct CoverageEntry {
    std::int64_t length = 0;
    std::optional<std::int64_t> thm1_q;  // 2N+1, prime power = 1 (mod 4)
    std::optional<std::int64_t> thm2_p;  // N = 2p, p prime, 2p-1 a prime power
    std::optional<std::string> literature;

    bool open() const { return !thm1_q && !thm2_p && !literature; }

    std::string status() const {
        if (thm1_q) return "thm1(q=" + std::to_string(*thm1_q) + ")";
        if (thm2_p) return "thm2(p=" + std::to_string(*thm2_p) + ")";
        if (literature) return "literature(" + *literature + ")";
        return "open";
    }
};

struct CoverageReport {
    std::int64_t limit = 0;
    std::vector<CoverageEntry> entries;  // even lengths 2, 4, ..., limit

    std::vector<std::int64_t> lengths_where(bool (*pred)(const CoverageEntry&)) const {
        std::vector<std::int64_t> out;
        for (const auto& e : entries)
            if (pred(e)) out.push_back(e.length);
        return out;
    }
    std::vector<std::int64_t> thm1_lengths() const {
        return lengths_where([](const CoverageEntry& e) { return e.thm1_q.has_value(); });
    }
    std::vector<std::int64_t> thm2_lengths() const {
        return lengths_where([](const CoverageEntry& e) { return e.thm2_p.has_value(); });
    }
    std::vector<std::int64_t> literature_lengths() const {
        return lengths_where([](const CoverageEntry& e) { return e.literature.has_value(); });
    }
    std::vector<std::int64_t> open_lengths() const {
        return lengths_where([](const CoverageEntry& e) { return e.open(); });
    }
};

inline CoverageReport coverage_report(std::int64_t limit) {
    if (limit < 2 || limit % 2 != 0) throw std::invalid_argument("coverage limit must be an even integer >= 2");
    CoverageReport rep;
    rep.limit = limit;
    for (std::int64_t n = 2; n <= limit; n += 2) {
        CoverageEntry e;
        e.length = n;
        if (auto pk = detail::prime_power_split(2 * n + 1); pk && (2 * n + 1) % 4 == 1) e.thm1_q = 2 * n + 1;
        if (detail::is_prime(n / 2) && detail::prime_power_split(n - 1)) e.thm2_p = n / 2;
        if (std::find(std::begin(literature_lengths), std::end(literature_lengths), n) !=
            std::end(literature_lengths))
            e.literature = literature_citation;
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

}  // namespace qlp
