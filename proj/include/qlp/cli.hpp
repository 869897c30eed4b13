#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlp/catalog.hpp"
#include "qlp/constructions.hpp"
#include "qlp/field.hpp"
#include "qlp/oracle.hpp"
#include "qlp/sequence.hpp"

namespace qlp::cli {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Sequence files: one glyph line per sequence, two consecutive lines form a
// pair. Whitespace and the parentheses used in printed tables are ignored;
// '#' starts a comment line.
// ---------------------------------------------------------------------------

inline std::vector<std::pair<Sequence, Sequence>> parse_sequence_text(const std::string& text) {
    std::vector<Sequence> seqs;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string glyphs;
        bool comment = false;
        for (std::size_t col = 0; col < line.size() && !comment; ++col) {
            const char c = line[col];
            if (c == '#') comment = true;
            else if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')') continue;
            else if (entry_from_glyph(c)) glyphs += c;
            else
                throw std::invalid_argument("line " + std::to_string(lineno) + ", column " +
                                            std::to_string(col + 1) + ": unknown glyph '" + c + "'");
        }
        if (!glyphs.empty()) seqs.push_back(Sequence::from_glyphs(glyphs));
    }
    if (seqs.size() % 2 != 0)
        throw std::invalid_argument("odd number of sequences (" + std::to_string(seqs.size()) +
                                    "); pairs are two consecutive lines");
    std::vector<std::pair<Sequence, Sequence>> pairs;
    for (std::size_t i = 0; i + 1 < seqs.size(); i += 2) pairs.emplace_back(seqs[i], seqs[i + 1]);
    return pairs;
}

inline std::vector<std::pair<Sequence, Sequence>> parse_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_sequence_text(buf.str());
}

// ---------------------------------------------------------------------------
// Fixture files: plain "key = value" lines pinning field realizations, e.g.
//   field.625.modulus = 2,4,4,0,1
//   field.625.g = 0,1,0,0
// Constructions that need GF(Q) use the pinned realization when present.
// ---------------------------------------------------------------------------

struct FieldPin {
    std::optional<std::int64_t> p;
    std::optional<int> n;
    std::optional<Coeffs> modulus;
    std::optional<Coeffs> generator;
};

using FixtureConfig = std::map<std::uint64_t, FieldPin>;

inline FixtureConfig parse_fixture_text(const std::string& text) {
    FixtureConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    auto strip = [](std::string s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return std::string();
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = strip(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = strip(line.substr(0, eq));
        const std::string value = strip(line.substr(eq + 1));
        std::istringstream ks(key);
        std::string head, qtext, attr;
        if (!std::getline(ks, head, '.') || !std::getline(ks, qtext, '.') || !std::getline(ks, attr) ||
            head != "field")
            throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": key must be field.<q>.<attr>");
        const std::uint64_t Q = std::stoull(qtext);
        FieldPin& pin = cfg[Q];
        if (attr == "p") pin.p = std::stoll(value);
        else if (attr == "n") pin.n = std::stoi(value);
        else if (attr == "modulus") pin.modulus = parse_poly(value);
        else if (attr == "g") pin.generator = parse_poly(value);
        else
            throw std::invalid_argument("fixture line " + std::to_string(lineno) + ": unknown attribute '" + attr +
                                        "'");
    }
    return cfg;
}

inline FixtureConfig parse_fixture_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open fixture '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_fixture_text(buf.str());
}

/// Field for GF(Q) honoring a pinned realization when the fixture has one.
inline std::optional<Field> fixture_field(const FixtureConfig& cfg, std::uint64_t Q) {
    const auto it = cfg.find(Q);
    if (it == cfg.end()) return std::nullopt;
    const FieldPin& pin = it->second;
    auto pk = detail::prime_power_split(static_cast<std::int64_t>(Q));
    if (!pk) throw std::invalid_argument("fixture field." + std::to_string(Q) + ": not a prime power");
    const std::int64_t p = pin.p.value_or(pk->first);
    const int n = pin.n.value_or(pk->second);
    if (p != pk->first || n != pk->second)
        throw std::invalid_argument("fixture field." + std::to_string(Q) + ": p^n does not equal " +
                                    std::to_string(Q));
    return Field::make(p, n, pin.modulus, pin.generator);
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline json sequence_json(const Sequence& s) {
    json entries = json::array();
    for (std::size_t k = 0; k < s.size(); ++k) entries.push_back({s.value_at(k).re, s.value_at(k).im});
    return {{"alphabet", std::string(alphabet_name(s.alphabet()))}, {"entries", entries}};
}

namespace detail_cli {

inline std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(v[i]);
    }
    return s;
}

}  // namespace detail_cli

/// Runs one command; writes reports to out and a one-line reason for every
/// failure to err. Returns 0 (success / verified), 1 (verification failed),
/// or 2 (usage or parameter error).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"even-length quaternary Legendre pairs: constructions, verification, search"};
    app.name("qlp");
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON reports");

    std::string fixture_path;

    auto* generate = app.add_subcommand("generate", "construct sequences");
    generate->fallthrough();
    generate->add_option("--fixture", fixture_path, "key-value file pinning field realizations");
    std::int64_t gen_param = 0;
    std::string construction;
    for (const char* name : {"thm1", "thm2", "gs", "w1", "w2"}) {
        auto* sub = generate->add_subcommand(name, "construction parameter");
        sub->fallthrough();
        sub->add_option("parameter", gen_param, "q or p")->required();
        sub->callback([&construction, name] { construction = name; });
    }
    generate->require_subcommand(1);

    auto* verify = app.add_subcommand("verify", "check pairs in a sequence file");
    verify->fallthrough();
    std::string verify_path;
    verify->add_option("path", verify_path, "sequence file, two glyph lines per pair")->required();

    auto* brute = app.add_subcommand("brute", "exhaustive search at a tiny length");
    brute->fallthrough();
    std::size_t brute_n = 0;
    std::string brute_alphabet;
    std::uint64_t brute_exemplars = 8;
    unsigned brute_threads = 0;
    brute->add_option("length", brute_n, "sequence length")->required();
    brute->add_option("alphabet", brute_alphabet, "binary | quaternary")->required();
    brute->add_option("--exemplars", brute_exemplars, "how many accepted pairs to print");
    brute->add_option("--threads", brute_threads, "worker threads (0 = auto)");

    auto* coverage = app.add_subcommand("coverage", "construction coverage of even lengths");
    coverage->fallthrough();
    std::int64_t coverage_limit = 0;
    coverage->add_option("limit", coverage_limit, "largest even length")->required();

    auto* census = app.add_subcommand("census", "primes p <= limit with 2p-1 a prime power");
    census->fallthrough();
    std::int64_t census_limit = 0;
    census->add_option("limit", census_limit, "upper bound")->required();

    auto* tables = app.add_subcommand("tables", "print the catalog of known pairs");
    tables->fallthrough();
    int which_table = 0;
    tables->add_option("which", which_table, "1 | 2")->required();

    app.require_subcommand(1);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*generate) {
            const FixtureConfig cfg = fixture_path.empty() ? FixtureConfig{} : parse_fixture_file(fixture_path);
            std::vector<Sequence> seqs;
            if (construction == "thm1") {
                auto field = fixture_field(cfg, static_cast<std::uint64_t>(gen_param));
                auto [a, b] = theorem1_pair(static_cast<std::uint64_t>(gen_param), field);
                seqs = {a, b};
            } else if (construction == "gs") {
                const std::uint64_t q = static_cast<std::uint64_t>(gen_param);
                auto [a, b] = gs_pair(q, fixture_field(cfg, q * q));
                seqs = {a, b};
            } else if (construction == "w1") {
                const std::uint64_t q = static_cast<std::uint64_t>(2 * gen_param - 1);
                auto [a, b] = w1_pair(gen_param, fixture_field(cfg, q * q));
                seqs = {a, b};
            } else if (construction == "w2") {
                seqs = {w2_sequence(gen_param)};
            } else {
                const std::uint64_t q = static_cast<std::uint64_t>(2 * gen_param - 1);
                auto [a, b] = theorem2_pair(gen_param, fixture_field(cfg, q * q));
                seqs = {a, b};
            }
            if (as_json) {
                json rep = {{"command", "generate"}, {"construction", construction}, {"parameter", gen_param},
                            {"sequences", json::array()}};
                for (const Sequence& s : seqs) rep["sequences"].push_back(sequence_json(s));
                out << rep.dump(2) << "\n";
            } else {
                for (const Sequence& s : seqs) out << s.glyphs() << "\n";
            }
            return 0;
        }

        if (*verify) {
            const auto pairs = parse_sequence_file(verify_path);
            bool all_ok = true;
            json jpairs = json::array();
            for (std::size_t i = 0; i < pairs.size(); ++i) {
                const auto& [a, b] = pairs[i];
                LegendreReport rep = is_legendre_pair(a, b);
                all_ok = all_ok && rep.ok;
                if (as_json) {
                    json violations = json::array();
                    for (const auto& [u, v] : rep.violations)
                        violations.push_back({{"shift", u}, {"value", {v.re, v.im}}});
                    jpairs.push_back({{"pair", i + 1},
                                      {"length", a.size()},
                                      {"ok", rep.ok},
                                      {"violations", violations}});
                } else if (rep.ok) {
                    out << "pair " << i + 1 << " length " << a.size() << ": ok\n";
                } else {
                    out << "pair " << i + 1 << " length " << a.size() << ": FAIL";
                    for (const auto& [u, v] : rep.violations) out << " shift=" << u << " value=" << to_string(v);
                    out << "\n";
                }
            }
            if (as_json)
                out << json{{"command", "verify"}, {"pairs", jpairs}, {"all_ok", all_ok}}.dump(2) << "\n";
            return all_ok ? 0 : 1;
        }

        if (*brute) {
            Alphabet alphabet;
            if (brute_alphabet == "binary") alphabet = Alphabet::Binary;
            else if (brute_alphabet == "quaternary") alphabet = Alphabet::Quaternary;
            else
                throw std::invalid_argument("alphabet must be binary or quaternary");
            BruteForceOptions opt;
            opt.exemplar_limit = brute_exemplars;
            opt.threads = brute_threads;
            const BruteForceResult res = brute_force_legendre(brute_n, alphabet, opt);
            if (as_json) {
                json ex = json::array();
                for (const auto& [a, b] : res.exemplars) ex.push_back({sequence_json(a), sequence_json(b)});
                out << json{{"command", "brute"},     {"length", brute_n},      {"alphabet", brute_alphabet},
                            {"candidates", res.candidates}, {"accepted", res.accepted}, {"exemplars", ex}}
                           .dump(2)
                    << "\n";
            } else {
                out << "candidates " << res.candidates << "\n";
                out << "accepted " << res.accepted << "\n";
                for (const auto& [a, b] : res.exemplars) out << a.glyphs() << "\n" << b.glyphs() << "\n";
            }
            return 0;
        }

        if (*coverage) {
            const CoverageReport rep = coverage_report(coverage_limit);
            if (as_json) {
                json rows = json::array();
                for (const auto& e : rep.entries) {
                    json row = {{"length", e.length}, {"status", e.status()}};
                    if (e.thm1_q) row["thm1_q"] = *e.thm1_q;
                    if (e.thm2_p) row["thm2_p"] = *e.thm2_p;
                    if (e.literature) row["literature"] = *e.literature;
                    rows.push_back(row);
                }
                out << json{{"command", "coverage"},
                            {"limit", rep.limit},
                            {"entries", rows},
                            {"thm1", rep.thm1_lengths()},
                            {"thm2", rep.thm2_lengths()},
                            {"literature", rep.literature_lengths()},
                            {"open", rep.open_lengths()}}
                           .dump(2)
                    << "\n";
            } else {
                for (const auto& e : rep.entries) out << e.length << " " << e.status() << "\n";
                out << "thm1: " << detail_cli::join(rep.thm1_lengths()) << "\n";
                out << "thm2: " << detail_cli::join(rep.thm2_lengths()) << "\n";
                out << "literature: " << detail_cli::join(rep.literature_lengths()) << "\n";
                out << "open: " << detail_cli::join(rep.open_lengths()) << "\n";
            }
            return 0;
        }

        if (*census) {
            const std::int64_t c = count_partner_primes(census_limit);
            if (as_json)
                out << json{{"command", "census"}, {"limit", census_limit}, {"count", c}}.dump(2) << "\n";
            else
                out << c << "\n";
            return 0;
        }

        if (*tables) {
            std::string_view text;
            if (which_table == 1) text = catalog::table1;
            else if (which_table == 2) text = catalog::table2;
            else
                throw std::invalid_argument("tables: which must be 1 or 2");
            if (as_json) {
                json jpairs = json::array();
                for (const auto& [a, b] : parse_sequence_text(std::string(text)))
                    jpairs.push_back({sequence_json(a), sequence_json(b)});
                out << json{{"command", "tables"}, {"which", which_table}, {"pairs", jpairs}}.dump(2) << "\n";
            } else {
                out << text;
            }
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

inline int run_argv(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, out, err);
}

}  // namespace qlp::cli
