#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "rideal/algorithms.hpp"
#include "rideal/atoms.hpp"
#include "rideal/error.hpp"
#include "rideal/io.hpp"
#include "rideal/operations.hpp"
#include "rideal/semigroup.hpp"
#include "rideal/witnesses.hpp"

namespace rideal {

enum class ClaimId {
    Quotients,
    Semigroup,
    QuotientComplexities,
    AtomCount,
    AtomEmptyCobasis,
    AtomR,
    Reverse,
    Star,
    BoolUnion,
    BoolIntersect,
    BoolDiff,
    BoolSymdiff,
    BoolUnequal,
    Product,
    RemarkTransposition,
    AtomatonClosedForm,
    IntervalProperty,
};

inline std::string_view claim_name(ClaimId c) {
    switch (c) {
        case ClaimId::Quotients: return "QUOTIENTS";
        case ClaimId::Semigroup: return "SEMIGROUP";
        case ClaimId::QuotientComplexities: return "QUOTIENT_COMPLEXITIES";
        case ClaimId::AtomCount: return "ATOM_COUNT";
        case ClaimId::AtomEmptyCobasis: return "ATOM_EMPTY_COBASIS";
        case ClaimId::AtomR: return "ATOM_R";
        case ClaimId::Reverse: return "REVERSE";
        case ClaimId::Star: return "STAR";
        case ClaimId::BoolUnion: return "BOOL_UNION";
        case ClaimId::BoolIntersect: return "BOOL_INTERSECT";
        case ClaimId::BoolDiff: return "BOOL_DIFF";
        case ClaimId::BoolSymdiff: return "BOOL_SYMDIFF";
        case ClaimId::BoolUnequal: return "BOOL_UNEQUAL";
        case ClaimId::Product: return "PRODUCT";
        case ClaimId::RemarkTransposition: return "REMARK_TRANSPOSITION";
        case ClaimId::AtomatonClosedForm: return "ATOMATON_CLOSED_FORM";
        case ClaimId::IntervalProperty: return "INTERVAL_PROPERTY";
    }
    return "?";
}

enum class Status { Pass, Fail, SkippedResource, Skipped, Info };

inline std::string_view status_name(Status s) {
    switch (s) {
        case Status::Pass: return "PASS";
        case Status::Fail: return "FAIL";
        case Status::SkippedResource: return "SKIPPED-RESOURCE";
        case Status::Skipped: return "SKIPPED";
        case Status::Info: return "INFO";
    }
    return "?";
}

/// Outcome of checking one claim at one parameter point.
struct ComplexityReport {
    ClaimId claim{};
    std::optional<std::size_t> n, m, r;
    std::optional<std::uint64_t> expected, measured;
    Status status = Status::Info;
    double elapsed_ms = 0;
    std::string note;

    /// True/false for checked cells; empty for skipped and informational ones.
    std::optional<bool> pass() const {
        if (status == Status::Pass) return true;
        if (status == Status::Fail) return false;
        return std::nullopt;
    }
};

struct VerifyOptions {
    std::size_t n_min = 3;
    std::size_t n_max = 7;
    /// Binary operations run over m, n in [n_min, m_max].
    std::size_t m_max = 6;
    std::size_t semigroup_n_max = 7;
    std::size_t subset_cap = kDefaultSubsetCap;
    std::size_t semigroup_cap = kDefaultSemigroupCap;
    unsigned workers = 0;  ///< 0: take RIDEAL_WORKERS, else the hardware thread count
};

using WitnessFactory = std::function<Dfa(Family, std::size_t)>;

inline Dfa default_witness(Family f, std::size_t n) { return build({f, n}); }

namespace detail {

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    while (e--) r = checked_mul(r, b);
    return r;
}

struct Cell {
    ComplexityReport shape;  // claim and params; expected when known up front
    bool degenerate = false; // measured only, no pass/fail
    std::function<void(ComplexityReport&)> run;
};

inline unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RIDEAL_WORKERS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

inline ComplexityReport execute(const Cell& cell) {
    ComplexityReport rep = cell.shape;
    auto t0 = std::chrono::steady_clock::now();
    try {
        cell.run(rep);
        if (rep.status == Status::Info && !cell.degenerate) {
            rep.status = (rep.expected && rep.measured && *rep.expected == *rep.measured) ? Status::Pass
                                                                                          : Status::Fail;
        }
    } catch (const ResourceError& e) {
        rep.status = Status::SkippedResource;
        rep.measured.reset();
        rep.note = e.what();
    } catch (const std::exception& e) {
        rep.status = cell.degenerate ? Status::Info : Status::Fail;
        rep.measured.reset();
        rep.note = std::string("error: ") + e.what();
    }
    rep.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (cell.degenerate) rep.note = rep.note.empty() ? "degenerate" : "degenerate; " + rep.note;
    return rep;
}

}  // namespace detail

/// Checks every complexity claim over the configured ranges.
/// Cells run concurrently; the returned order depends only on the options.
inline std::vector<ComplexityReport> verify_main_results(const VerifyOptions& opt,
                                                         const WitnessFactory& witness = default_witness) {
    using detail::Cell;
    if (opt.n_min == 0 || opt.n_min > opt.n_max) throw InputError("need 1 <= n-min <= n-max");
    std::vector<Cell> cells;
    const std::size_t scap = opt.subset_cap;

    auto cell = [&](ClaimId c, std::optional<std::size_t> n, std::optional<std::size_t> m,
                    std::optional<std::size_t> r, std::optional<std::uint64_t> expected, bool degenerate,
                    std::function<void(ComplexityReport&)> run) {
        ComplexityReport shape;
        shape.claim = c;
        shape.n = n;
        shape.m = m;
        shape.r = r;
        shape.expected = expected;
        cells.push_back({std::move(shape), degenerate, std::move(run)});
    };

    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
        const std::uint64_t half = std::uint64_t{1} << (n - 1);
        cell(ClaimId::Quotients, n, {}, {}, n, false,
             [=](ComplexityReport& rep) { rep.measured = complexity(witness(Family::RnAd, n)); });

        if (n <= opt.semigroup_n_max) {
            cell(ClaimId::Semigroup, n, {}, {}, detail::ipow(n, n - 1), false, [=, &opt](ComplexityReport& rep) {
                rep.measured = syntactic_semigroup_size(witness(Family::RnAbcd, n), opt.semigroup_cap);
            });
        }

        cell(ClaimId::QuotientComplexities, n, {}, {}, n, false, [=](ComplexityReport& rep) {
            auto got = state_complexities(witness(Family::RnAd, n));
            std::uint64_t matching = 0;
            std::string shown = "(";
            for (std::size_t q = 0; q < got.size(); ++q) {
                std::size_t want = (q + 1 == n) ? 1 : n;
                if (q < n && got[q] == want) ++matching;
                shown += (q ? "," : "") + std::to_string(got[q]);
            }
            if (got.size() != n) matching = 0;
            rep.measured = matching;
            rep.note = "quotient complexities " + shown + ")";
        });

        cell(ClaimId::AtomCount, n, {}, {}, half, false, [=](ComplexityReport& rep) {
            rep.measured = atomaton(witness(Family::RnAbcd, n), scap).labels.size();
        });

        cell(ClaimId::AtomEmptyCobasis, n, {}, 0, half, false, [=](ComplexityReport& rep) {
            rep.measured = atom_complexity(witness(Family::RnAbcd, n), StateSet::full(n), scap);
        });

        for (std::size_t r = 1; r + 1 <= n; ++r) {
            cell(ClaimId::AtomR, n, {}, r, atom_bound(n, r), false, [=](ComplexityReport& rep) {
                Atomaton at = atomaton(witness(Family::RnAbcd, n), scap);
                std::optional<std::uint64_t> seen;
                std::size_t count = 0;
                for (StateId q = 0; q < at.labels.size(); ++q) {
                    if (n - at.labels[q].size() != r) continue;
                    ++count;
                    std::uint64_t c = atom_dfa(at, q, scap).dfa.size();
                    // Report the first value that disagrees, otherwise the common value.
                    if (!seen || (*seen == *rep.expected && c != *rep.expected)) seen = c;
                }
                rep.measured = seen;
                rep.note = std::to_string(count) + " atoms with this co-basis size";
            });
        }

        cell(ClaimId::Reverse, n, {}, {}, half, false,
             [=](ComplexityReport& rep) { rep.measured = reverse_complexity(witness(Family::RnAd, n), scap); });

        if (n >= 2) {
            cell(ClaimId::Star, n, {}, {}, n + 1, false,
                 [=](ComplexityReport& rep) { rep.measured = complexity(star(witness(Family::RnAd, n), scap)); });
        } else {
            cell(ClaimId::Star, n, {}, {}, std::nullopt, false, [=](ComplexityReport& rep) {
                rep.measured = complexity(star(witness(Family::RnAd, n), scap));
                rep.status = Status::Skipped;
                rep.note = "the star bound n+1 is claimed for n >= 2 only";
            });
        }

        cell(ClaimId::RemarkTransposition, n, {}, {}, 1, n < 3, [=](ComplexityReport& rep) {
            if (n < 2) {
                rep.note = "a^(n-2)b undefined for n = 1";
                return;
            }
            Dfa d = witness(Family::RnAbcd, n);
            std::string w(n - 2, 'a');
            w += 'b';
            rep.measured = transformation_of_word(d, w) == transposition(0, 1, n) ? 1 : 0;
        });

        if (n >= 3) {
            cell(ClaimId::AtomatonClosedForm, n, {}, {}, 1, n < 4, [=](ComplexityReport& rep) {
                rep.measured = label_isomorphic(closed_form_atomaton_rn(n), atomaton(witness(Family::RnAbcd, n), scap))
                                   ? 1
                                   : 0;
            });
        }

        if (n >= 4) {
            cell(ClaimId::IntervalProperty, n, {}, {}, std::nullopt, false, [=](ComplexityReport& rep) {
                auto res = check_interval_property(atomaton(witness(Family::RnAbcd, n), scap),
                                                   static_cast<StateId>(n - 1), scap);
                rep.expected = res.states;
                rep.measured = res.conforming;
                rep.note = "atom DFA states that are the empty interval or an interval containing n";
            });
        }
    }

    const std::size_t b_lo = opt.n_min, b_hi = opt.m_max;
    const std::pair<ClaimId, BooleanOp> mixed[] = {
        {ClaimId::BoolUnion, BooleanOp::Union},
        {ClaimId::BoolIntersect, BooleanOp::Intersection},
        {ClaimId::BoolDiff, BooleanOp::Difference},
        {ClaimId::BoolSymdiff, BooleanOp::SymmetricDifference},
    };
    auto bool_expected = [](BooleanOp op, std::size_t m, std::size_t n) -> std::uint64_t {
        switch (op) {
            case BooleanOp::Union: return m * n - (m + n - 2);
            case BooleanOp::Difference: return m * n - (m - 1);
            default: return m * n;
        }
    };
    for (auto [claim, op] : mixed) {
        for (std::size_t m = b_lo; m <= b_hi; ++m)
            for (std::size_t n = b_lo; n <= b_hi; ++n)
                cell(claim, n, m, {}, bool_expected(op, m, n), m < 3 || n < 3, [=](ComplexityReport& rep) {
                    rep.measured = complexity(boolean(witness(Family::RnAbd, m), witness(Family::RnBad, n), op));
                });
    }
    for (auto [claim, op] : mixed) {
        for (std::size_t m = b_lo; m <= b_hi; ++m)
            for (std::size_t n = b_lo; n <= b_hi; ++n) {
                if (m == n) continue;
                cell(ClaimId::BoolUnequal, n, m, {}, bool_expected(op, m, n), m < 3 || n < 3,
                     [=](ComplexityReport& rep) {
                         rep.measured =
                             complexity(boolean(witness(Family::RnAbd, m), witness(Family::RnAbd, n), op));
                         rep.note = "op=" + std::string(op_name(op));
                     });
            }
    }
    for (std::size_t m = b_lo; m <= b_hi; ++m)
        for (std::size_t n = b_lo; n <= b_hi; ++n) {
            std::optional<std::uint64_t> expected;
            if (n >= 2) expected = m + (std::uint64_t{1} << (n - 2));
            cell(ClaimId::Product, n, m, {}, expected, n < 2, [=](ComplexityReport& rep) {
                rep.measured = complexity(concat(witness(Family::RnAbd, m), witness(Family::RnAbd, n), scap));
            });
        }

    std::vector<ComplexityReport> out(cells.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) out[i] = detail::execute(cells[i]);
    };
    const unsigned workers = std::min<std::size_t>(detail::resolve_workers(opt.workers), cells.size());
    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

/// 0 all executed checks pass, 1 some claim failed, 3 some cell hit a cap.
inline int exit_code(const std::vector<ComplexityReport>& reports) {
    bool resource = false;
    for (const auto& r : reports) {
        if (r.status == Status::Fail) return 1;
        if (r.status == Status::SkippedResource) resource = true;
    }
    return resource ? 3 : 0;
}

namespace detail {

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
    return v ? ordered_json(*v) : ordered_json(nullptr);
}

inline std::string params_string(const ComplexityReport& r) {
    std::string s;
    if (r.m) s += "m=" + std::to_string(*r.m) + " ";
    if (r.n) s += "n=" + std::to_string(*r.n);
    if (r.r) s += " r=" + std::to_string(*r.r);
    return s;
}

inline std::string value_string(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string("-");
}

}  // namespace detail

/// Report records. Timings are left null unless `timings` is set, so two
/// runs with the same options serialize identically.
inline ordered_json reports_to_json(const std::vector<ComplexityReport>& reports, bool timings = false) {
    auto arr = ordered_json::array();
    std::size_t pass = 0, fail = 0, skipped = 0, info = 0;
    for (const auto& r : reports) {
        ordered_json j;
        j["claim"] = claim_name(r.claim);
        j["params"] = {{"n", detail::opt_json(r.n)}, {"m", detail::opt_json(r.m)}, {"r", detail::opt_json(r.r)}};
        j["expected"] = detail::opt_json(r.expected);
        j["measured"] = detail::opt_json(r.measured);
        auto p = r.pass();
        j["pass"] = p ? ordered_json(*p) : ordered_json(nullptr);
        j["status"] = status_name(r.status);
        j["elapsed_ms"] = timings ? ordered_json(r.elapsed_ms) : ordered_json(nullptr);
        j["note"] = r.note;
        arr.push_back(std::move(j));
        switch (r.status) {
            case Status::Pass: ++pass; break;
            case Status::Fail: ++fail; break;
            case Status::Info: ++info; break;
            default: ++skipped; break;
        }
    }
    ordered_json out;
    out["reports"] = std::move(arr);
    out["summary"] = {{"pass", pass}, {"fail", fail}, {"skipped", skipped}, {"info", info}};
    return out;
}

/// One line per report: status, claim, parameters, values, time.
inline std::string reports_to_text(const std::vector<ComplexityReport>& reports, bool timings = true) {
    std::ostringstream os;
    for (const auto& r : reports) {
        char head[96];
        std::snprintf(head, sizeof head, "%-16s %-22s %-14s", std::string(status_name(r.status)).c_str(),
                      std::string(claim_name(r.claim)).c_str(), detail::params_string(r).c_str());
        os << head << " expected=" << detail::value_string(r.expected) << " measured=" << detail::value_string(r.measured);
        if (timings) {
            char t[32];
            std::snprintf(t, sizeof t, " (%.1f ms)", r.elapsed_ms);
            os << t;
        }
        if (!r.note.empty()) os << "  # " << r.note;
        os << '\n';
    }
    return os.str();
}

/// Markdown checklist, one row per report.
inline std::string reports_to_markdown(const std::vector<ComplexityReport>& reports) {
    std::ostringstream os;
    os << "| claim | params | expected | measured | status | note |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const auto& r : reports) {
        os << "| " << claim_name(r.claim) << " | " << detail::params_string(r) << " | "
           << detail::value_string(r.expected) << " | " << detail::value_string(r.measured) << " | "
           << status_name(r.status) << " | " << r.note << " |\n";
    }
    return os.str();
}

namespace detail {

inline std::string grouped(std::size_t v) {
    std::string s = std::to_string(v);
    for (std::ptrdiff_t i = static_cast<std::ptrdiff_t>(s.size()) - 3; i > 0; i -= 3)
        s.insert(static_cast<std::size_t>(i), ",");
    return s;
}

/// m_n / m_{n-1}: whole numbers print bare, everything else with two decimals.
inline std::string ratio_string(std::size_t num, std::size_t den) {
    if (den == 0) return "-";
    if (num % den == 0) return std::to_string(num / den);
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", static_cast<double>(num) / static_cast<double>(den));
    return buf;
}

}  // namespace detail

enum class TableFormat { Markdown, Json };

/// The atom-complexity table: "right ideal/regular" per (r, n), then the
/// max and ratio rows. "∗" marks co-basis sizes no right-ideal atom has;
/// column maxima are bold.
inline std::string render_atom_table(const std::vector<AtomTableColumn>& cols, TableFormat format) {
    if (format == TableFormat::Json) {
        ordered_json out;
        auto records = ordered_json::array(), maxima = ordered_json::array(), ratios = ordered_json::array();
        for (std::size_t i = 0; i < cols.size(); ++i) {
            const auto& c = cols[i];
            for (std::size_t r = 0; r <= c.n; ++r) {
                records.push_back({{"n", c.n},
                                   {"r", r},
                                   {"right_ideal", detail::opt_json(c.right_ideal[r])},
                                   {"regular", detail::opt_json(c.regular[r])}});
            }
            maxima.push_back({{"n", c.n}, {"right_ideal", c.right_ideal_max()}, {"regular", c.regular_max()}});
            if (i > 0) {
                const auto& p = cols[i - 1];
                ratios.push_back({{"n", c.n},
                                  {"right_ideal", static_cast<double>(c.right_ideal_max()) /
                                                      static_cast<double>(p.right_ideal_max())},
                                  {"regular", static_cast<double>(c.regular_max()) / static_cast<double>(p.regular_max())}});
            }
        }
        out["records"] = std::move(records);
        out["max"] = std::move(maxima);
        out["ratio"] = std::move(ratios);
        return out.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "| n |";
    for (const auto& c : cols) os << ' ' << c.n << " |";
    os << "\n|---|";
    for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
    os << '\n';
    const std::size_t rows = cols.empty() ? 0 : cols.back().n + 1;
    auto entry = [](const std::optional<std::size_t>& v, std::size_t max, const char* absent) {
        if (!v) return std::string(absent);
        std::string s = detail::grouped(*v);
        return *v == max ? "**" + s + "**" : s;
    };
    for (std::size_t r = 0; r < rows; ++r) {
        os << "| r=" << r << " |";
        for (const auto& c : cols) {
            if (r > c.n) {
                os << " |";
                continue;
            }
            os << ' ' << entry(c.right_ideal[r], c.right_ideal_max(), "∗") << '/'
               << entry(c.regular[r], c.regular_max(), "-") << " |";
        }
        os << '\n';
    }
    os << "| max |";
    for (const auto& c : cols) os << ' ' << detail::grouped(c.right_ideal_max()) << '/' << detail::grouped(c.regular_max()) << " |";
    os << "\n| ratio |";
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (i == 0) {
            os << " - |";
            continue;
        }
        os << ' ' << detail::ratio_string(cols[i].right_ideal_max(), cols[i - 1].right_ideal_max()) << '/'
           << detail::ratio_string(cols[i].regular_max(), cols[i - 1].regular_max()) << " |";
    }
    os << '\n';
    return os.str();
}

inline std::string emit_table1(std::size_t n_max, TableFormat format, std::size_t cap = kDefaultSubsetCap) {
    return render_atom_table(atom_table(n_max, cap), format);
}

}  // namespace rideal
