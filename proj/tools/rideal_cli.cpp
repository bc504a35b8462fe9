// rideal: command-line front end for the right-ideal witness library.
//
// Exit codes: 0 all checks passed, 1 a claim failed, 2 bad input,
// 3 a size cap was hit.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rideal/rideal.hpp"

namespace {

using namespace rideal;

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitResource = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// NFAs are determinized and minimized on load.
Dfa load_dfa(const std::string& path, std::size_t cap) {
    auto a = parse_automaton(read_file(path));
    if (auto* d = std::get_if<Dfa>(&a)) return *d;
    return minimize(determinize(std::get<Nfa>(a), cap).dfa);
}

void print_dfa(const Dfa& d, bool dot, bool json) {
    if (dot) {
        std::cout << to_dot(d);
    } else if (json) {
        std::cout << to_json(d).dump(2) << '\n';
    } else {
        std::cout << "states: " << d.size() << "\ninitial: " << d.initial() + 1 << "\nfinals: " << d.finals().to_string()
                  << '\n';
        for (std::size_t l = 0; l < d.alphabet().size(); ++l) {
            const auto& t = d.delta(l);
            std::cout << d.alphabet()[l] << ": " << to_image_string(t);
            if (is_permutation(t)) std::cout << "  " << to_cycle_string(t);
            std::cout << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Right-ideal witnesses: automaton operations, atoms, and complexity checks"};
    app.require_subcommand(1);

    std::size_t subset_cap = kDefaultSubsetCap;
    app.add_option("--subset-cap", subset_cap, "Maximum number of subsets in a determinization");

    // witness
    auto* witness = app.add_subcommand("witness", "Print a witness automaton");
    std::string family_arg;
    std::size_t witness_n = 0;
    bool w_dot = false, w_json = false;
    witness->add_option("family", family_arg, "r:abcd, r:ad, r:abd, r:bad, p or l")->required();
    witness->add_option("n", witness_n, "Number of states")->required();
    auto* w_dot_flag = witness->add_flag("--dot", w_dot, "Graphviz output");
    witness->add_flag("--json", w_json, "JSON output")->excludes(w_dot_flag);

    // complexity
    auto* cplx = app.add_subcommand("complexity", "State complexity of an automaton file");
    std::string cplx_file;
    cplx->add_option("file", cplx_file)->required();

    // semigroup
    auto* semi = app.add_subcommand("semigroup", "Size of the syntactic semigroup");
    std::string semi_file;
    std::size_t semi_cap = kDefaultSemigroupCap;
    semi->add_option("file", semi_file)->required();
    semi->add_option("--cap", semi_cap, "Maximum number of semigroup elements");

    // atoms
    auto* atoms_cmd = app.add_subcommand("atoms", "Atoms and their complexities");
    std::string atoms_file;
    bool atoms_table = false, atoms_json = false;
    atoms_cmd->add_option("file", atoms_file)->required();
    atoms_cmd->add_flag("--table", atoms_table, "Summarize by co-basis size");
    atoms_cmd->add_flag("--json", atoms_json, "JSON output");

    // op
    auto* op_cmd = app.add_subcommand("op", "Apply an operation and report the complexity of the result");
    std::string op_name_arg, op_file1, op_file2;
    bool op_dot = false, op_json = false;
    op_cmd->add_option("operation", op_name_arg, "union, intersect, diff, symdiff, concat, star or reverse")
        ->required()
        ->check(CLI::IsMember({"union", "intersect", "diff", "symdiff", "concat", "star", "reverse"}));
    op_cmd->add_option("file1", op_file1)->required();
    op_cmd->add_option("file2", op_file2);
    auto* op_dot_flag = op_cmd->add_flag("--dot", op_dot, "Print the resulting DFA as Graphviz");
    op_cmd->add_flag("--json", op_json, "Print the resulting DFA as JSON")->excludes(op_dot_flag);

    // verify
    auto* verify = app.add_subcommand("verify", "Check every complexity claim over a parameter grid");
    VerifyOptions vopt;
    bool v_json = false, v_md = false, v_timings = false;
    std::uint64_t seed = 1;
    std::size_t samples = 200;
    verify->add_option("--n-min", vopt.n_min, "Smallest n")->capture_default_str();
    verify->add_option("--n-max", vopt.n_max, "Largest n")->capture_default_str();
    verify->add_option("--m-max", vopt.m_max, "Largest m and n for binary operations")->capture_default_str();
    verify->add_option("--semigroup-n-max", vopt.semigroup_n_max, "Largest n for semigroup claims")
        ->capture_default_str();
    verify->add_option("--semigroup-cap", vopt.semigroup_cap, "Maximum semigroup size")->capture_default_str();
    verify->add_option("--workers", vopt.workers, "Worker threads (default: RIDEAL_WORKERS or all cores)");
    verify->add_option("--seed", seed, "Seed for the random word-sample oracle")->capture_default_str();
    verify->add_option("--samples", samples, "Random DFA pairs for the word-sample oracle")->capture_default_str();
    auto* v_json_flag = verify->add_flag("--json", v_json, "JSON report");
    verify->add_flag("--markdown", v_md, "Markdown checklist")->excludes(v_json_flag);
    verify->add_flag("--timings", v_timings, "Include per-cell timings in JSON");

    // table1
    auto* table = app.add_subcommand("table1", "Measured atom-complexity table");
    std::size_t table_n_max = 7;
    bool table_json = false;
    table->add_option("--n-max", table_n_max, "Largest n")->capture_default_str();
    table->add_flag("--json", table_json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*witness) {
            auto fam = parse_family(family_arg);
            if (!fam) throw InputError("unknown family '" + family_arg + "'");
            if (*fam == Family::Pn && witness_n == 3) std::cerr << "warning: P_n carries no claims for n = 3\n";
            print_dfa(build({*fam, witness_n}), w_dot, w_json);
            return 0;
        }

        if (*cplx) {
            Dfa d = load_dfa(cplx_file, subset_cap);
            std::cout << "states: " << d.size() << "\ncomplexity: " << complexity(d)
                      << "\nright_ideal: " << (is_right_ideal(d) ? "yes" : "no") << "\nquotient_complexities:";
            for (auto c : state_complexities(d)) std::cout << ' ' << c;
            std::cout << '\n';
            return 0;
        }

        if (*semi) {
            std::cout << syntactic_semigroup_size(load_dfa(semi_file, subset_cap), semi_cap) << '\n';
            return 0;
        }

        if (*atoms_cmd) {
            auto atoms = atoms_of(load_dfa(atoms_file, subset_cap), true, subset_cap);
            if (atoms_table) {
                std::map<std::size_t, std::pair<std::size_t, std::size_t>> by_r;  // r -> (count, max)
                for (const auto& a : atoms) {
                    auto& [count, max] = by_r[a.cobasis_size()];
                    ++count;
                    max = std::max(max, a.complexity);
                }
                if (atoms_json) {
                    auto arr = ordered_json::array();
                    for (const auto& [r, cm] : by_r) arr.push_back({{"r", r}, {"atoms", cm.first}, {"max_complexity", cm.second}});
                    std::cout << arr.dump(2) << '\n';
                } else {
                    std::cout << "r  atoms  max_complexity\n";
                    for (const auto& [r, cm] : by_r) std::cout << r << "  " << cm.first << "  " << cm.second << '\n';
                }
            } else if (atoms_json) {
                auto arr = ordered_json::array();
                for (const auto& a : atoms)
                    arr.push_back({{"basis", detail::ids_json(a.basis)},
                                   {"cobasis", detail::ids_json(a.cobasis())},
                                   {"r", a.cobasis_size()},
                                   {"complexity", a.complexity}});
                std::cout << arr.dump(2) << '\n';
            } else {
                for (const auto& a : atoms)
                    std::cout << "basis " << a.basis.to_string() << " co-basis " << a.cobasis().to_string()
                              << " r=" << a.cobasis_size() << " complexity " << a.complexity << '\n';
            }
            return 0;
        }

        if (*op_cmd) {
            Dfa x = load_dfa(op_file1, subset_cap);
            const bool unary = op_name_arg == "star" || op_name_arg == "reverse";
            if (unary && !op_file2.empty()) throw InputError(op_name_arg + " takes one automaton");
            if (!unary && op_file2.empty()) throw InputError(op_name_arg + " takes two automata");
            Dfa result = [&] {
                if (op_name_arg == "star") return star(x, subset_cap);
                if (op_name_arg == "reverse") return minimize(determinize(reverse(minimize(x)), subset_cap).dfa);
                Dfa y = load_dfa(op_file2, subset_cap);
                if (op_name_arg == "concat") return concat(x, y, subset_cap);
                return boolean(x, y, *parse_op(op_name_arg));
            }();
            if (op_dot || op_json)
                print_dfa(result, op_dot, op_json);
            else
                std::cout << "complexity: " << result.size() << '\n';
            return 0;
        }

        if (*verify) {
            auto reports = verify_main_results(vopt);
            auto sample = sample_operations(seed, samples);
            int code = exit_code(reports);
            if (sample.mismatches > 0) code = kExitFail;

            if (v_json) {
                auto j = reports_to_json(reports, v_timings);
                j["word_sample_oracle"] = {{"seed", sample.seed},
                                           {"pairs", sample.pairs},
                                           {"checks", sample.checks},
                                           {"mismatches", sample.mismatches},
                                           {"pass", sample.mismatches == 0}};
                std::cout << j.dump(2) << '\n';
            } else if (v_md) {
                std::cout << reports_to_markdown(reports);
                std::cout << "\nWord-sample oracle (seed " << seed << "): " << sample.checks - sample.mismatches
                          << "/" << sample.checks << " agree\n";
            } else {
                std::cout << reports_to_text(reports);
                std::cout << (sample.mismatches == 0 ? "PASS" : "FAIL") << "             WORD_SAMPLE_ORACLE     seed="
                          << seed << " pairs=" << sample.pairs << " checks=" << sample.checks
                          << " mismatches=" << sample.mismatches;
                if (!sample.first_mismatch.empty()) std::cout << "  # " << sample.first_mismatch;
                std::cout << '\n';
            }
            return code;
        }

        if (*table) {
            std::cout << emit_table1(table_n_max, table_json ? TableFormat::Json : TableFormat::Markdown, subset_cap);
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kExitResource;
    }
    return 0;
}
