#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "strandlab/exporters.hpp"
#include "strandlab/json_io.hpp"
#include "strandlab/verify.hpp"

namespace {

using namespace strandlab;

constexpr int kExitOk = 0;
constexpr int kExitFailedVerdict = 1;
constexpr int kExitUsage = 2;
constexpr int kExitOutOfImage = 3;

struct out_of_image_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw invalid_input_error("cannot open input file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw invalid_input_error("cannot open output file " + path);
    out << data;
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw invalid_input_error("input is not valid JSON");
    return j;
}

std::vector<int> parse_vertex_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoi(tok));
    if (out.empty()) throw invalid_input_error("empty vertex list");
    return out;
}

ExplorationLimits exploration_limits() {
    ExplorationLimits lim;
    if (const char* env = std::getenv("STRANDLAB_MAX_NODES")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) lim.max_nodes = static_cast<std::size_t>(v);
    }
    return lim;
}

json verdict_json(const Verdict& v) {
    json j{{"ok", v.ok}, {"checked", v.checked}};
    if (!v.ok) j["first_failure"] = v.first_failure;
    return j;
}

// ---- enumerate / count ------------------------------------------------

struct TargetBounds {
    int max_n;
};

TargetBounds bounds_for(const std::string& target) {
    if (target == "ces" || target == "collections" || target == "diagrams" ||
        target == "labeled")
        return {7};
    if (target == "oriented" || target == "mcts" || target == "chains") return {6};
    if (target == "cmatrices") return {8};
    throw invalid_input_error("unknown target \"" + target + "\"");
}

// Streams one JSON record per enumerated object and returns the count.
unsigned long long stream_records(const std::string& target, const SignVector& eps, int k,
                                  const std::function<void(const json&)>& emit) {
    const int n = eps.n();
    TargetBounds tb = bounds_for(target);
    if (n > tb.max_n)
        throw resource_limit_error("target " + target + " limited to n <= " +
                                       std::to_string(tb.max_n),
                                   static_cast<std::size_t>(tb.max_n));
    unsigned long long count = 0;
    auto send = [&](const json& j) {
        ++count;
        emit(j);
    };
    if (target == "ces") {
        for_each_exceptional_sequence(
            eps, k, {.max_n = tb.max_n},
            [&](const ExceptionalSequence& seq) { send(json_of_sequence(seq)); });
    } else if (target == "collections") {
        const auto ivs = all_intervals(n);
        std::vector<IntervalRep> pick;
        auto choose = [&](auto&& self, std::size_t start) -> void {
            if (static_cast<int>(pick.size()) == k) {
                try {
                    (void)order_collection(pick, eps);
                    send(json_of_sequence(pick));
                } catch (const not_a_collection_error&) {
                }
                return;
            }
            for (std::size_t idx = start; idx < ivs.size(); ++idx) {
                pick.push_back(ivs[idx]);
                self(self, idx + 1);
                pick.pop_back();
            }
        };
        choose(choose, 0);
    } else if (target == "diagrams") {
        for_each_diagram(eps, k, {.max_n = tb.max_n},
                         [&](const Diagram& d) { send(json_of_diagram(d)); });
    } else if (target == "labeled") {
        for_each_labeled_diagram(eps, k, {.max_n = tb.max_n},
                                 [&](const LabeledDiagram& ld) { send(json_of_labeled(ld)); });
    } else if (target == "oriented") {
        for_each_oriented_diagram(eps, {.max_n = tb.max_n},
                                  [&](const OrientedDiagram& od) { send(json_of_oriented(od)); });
    } else if (target == "mcts") {
        for_each_oriented_diagram(eps, {.max_n = tb.max_n}, [&](const OrientedDiagram& od) {
            send(json_of_mct(realize(od)));
        });
    } else if (target == "cmatrices") {
        for (const auto& c : enumerate_c_matrices(eps, exploration_limits()))
            send(json_of_cmatrix(c));
    } else if (target == "chains") {
        if (!eps.is_constant())
            throw unsupported_orientation_error("chains need a constant sign vector");
        for_each_chain(n, k, [&](const PartitionChain& chain) { send(json_of_chain(chain)); });
    }
    return count;
}

// ---- convert -----------------------------------------------------------

std::string model_name(std::string s) {
    if (s == "labeled-diagram") return "labeled";
    if (s == "nc-chain") return "chain";
    return s;
}

json run_conversion(const std::string& from_raw, const std::string& to_raw, const json& input,
                    const std::optional<SignVector>& eps_flag) {
    const std::string from = model_name(from_raw), to = model_name(to_raw);
    auto edge = from + "->" + to;
    if (edge == "ces->labeled") {
        SignVector eps = eps_flag ? *eps_flag : epsilon_of_json(input);
        return json_of_labeled(phi_tilde(sequence_of_json(input), eps));
    }
    if (edge == "labeled->ces") return json_of_sequence(phi_tilde_inverse(labeled_of_json(input)));
    if (edge == "cmatrix->oriented") {
        CMatrix c = cmatrix_of_json(input);
        SignVector eps = eps_flag ? *eps_flag
                                  : epsilon_of_json(input, static_cast<int>(c.front().size()) + 1);
        return json_of_oriented(oriented_of_cmatrix(c, eps));
    }
    if (edge == "oriented->cmatrix") {
        OrientedDiagram od = oriented_of_json(input);
        if (!is_in_D_arrow(od))
            throw out_of_image_error(
                "oriented diagram violates the local point conditions; no c-matrix");
        return json_of_cmatrix(cmatrix_of_oriented(od));
    }
    if (edge == "oriented->mct") {
        OrientedDiagram od = oriented_of_json(input);
        if (!is_in_D_arrow(od))
            throw out_of_image_error("oriented diagram violates the local point conditions");
        return json_of_mct(realize(od));
    }
    if (edge == "mct->oriented") return json_of_oriented(mct_to_oriented(mct_of_json(input)));
    if (edge == "labeled->chain")
        return json_of_chain(chain_of_labeled_diagram(labeled_of_json(input)));
    if (edge == "chain->labeled") {
        PartitionChain chain = chain_of_json(input);
        SignVector eps = eps_flag ? *eps_flag : SignVector::constant(chain.ground_size - 1);
        return json_of_labeled(labeled_diagram_of_chain(chain, eps));
    }
    throw invalid_input_error("no conversion edge " + edge +
                              " (edges: ces<->labeled, cmatrix<->oriented, oriented<->mct, "
                              "labeled<->chain)");
}

// ---- export ------------------------------------------------------------

std::string run_export(const std::string& format, const std::string& kind, const json& input,
                       const std::optional<SignVector>& eps_flag) {
    if (format == "svg") {
        if (kind == "diagram") return svg_of_diagram(diagram_of_json(input));
        if (kind == "labeled") return svg_of_labeled(labeled_of_json(input));
        if (kind == "oriented") return svg_of_oriented(oriented_of_json(input));
        if (kind == "mct") return svg_of_mct(mct_of_json(input));
        throw invalid_input_error("svg export supports diagram, labeled, oriented, mct");
    }
    if (format == "dot") {
        if (kind == "poset") {
            if (input.contains("covers") && input.contains("elements")) {
                // pre-built poset record: elements are strands, covers index them
                DiagramPoset p;
                for (const auto& e : input["elements"])
                    p.elements.push_back(make_strand(e[0].get<int>(), e[1].get<int>()));
                const int m = static_cast<int>(p.elements.size());
                p.order = Poset{m, std::vector<std::vector<bool>>(
                                       static_cast<std::size_t>(m),
                                       std::vector<bool>(static_cast<std::size_t>(m)))};
                for (const auto& c : input["covers"]) {
                    int lo = c[0].get<int>(), hi = c[1].get<int>();
                    if (lo < 0 || hi < 0 || lo >= m || hi >= m || lo == hi)
                        throw validation_error("cover indices out of range");
                    p.order.less[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)] =
                        true;
                }
                for (int k = 0; k < m; ++k)
                    for (int i = 0; i < m; ++i)
                        for (int j = 0; j < m; ++j)
                            if (p.order.below(i, k) && p.order.below(k, j))
                                p.order.less[static_cast<std::size_t>(i)]
                                            [static_cast<std::size_t>(j)] = true;
                return dot_of_poset(p);
            }
            return dot_of_poset(poset_of_diagram(diagram_of_json(input)));
        }
        if (kind == "exchange-graph") {
            if (!eps_flag) throw invalid_input_error("exchange-graph export needs --epsilon");
            return dot_of_exchange_graph(explore_exchange_graph(*eps_flag, exploration_limits()));
        }
        throw invalid_input_error("dot export supports poset, exchange-graph");
    }
    throw invalid_input_error("unknown format \"" + format + "\"");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"strandlab: models of exceptional sequences over type-A quivers"};
    app.require_subcommand(1);

    std::string eps_str, input_path, output_path, seq_str = "";
    std::string target, from, to, suite, format, kind;
    int k_opt = -1, n_opt = -1;
    bool all_eps = false;

    auto add_eps = [&](CLI::App* cmd, bool required) {
        auto* opt = cmd->add_option("--epsilon,-e", eps_str, "sign vector over {+,-}, length n+1");
        if (required) opt->required();
    };

    CLI::App* mutate_cmd = app.add_subcommand("mutate", "mutate a framed quiver or matrix");
    add_eps(mutate_cmd, false);
    mutate_cmd->add_option("--input,-i", input_path, "quiver JSON file or - for stdin");
    mutate_cmd->add_option("--at", seq_str, "comma-separated mutable vertices, applied in order")
        ->required();

    CLI::App* cmats_cmd = app.add_subcommand("cmats", "enumerate c-matrices as NDJSON");
    add_eps(cmats_cmd, true);

    CLI::App* redd_cmd = app.add_subcommand("reddening-check",
                                            "apply a mutation sequence and check the endpoint");
    add_eps(redd_cmd, true);
    redd_cmd->add_option("--seq", seq_str, "comma-separated mutation sequence")->required();

    CLI::App* enum_cmd = app.add_subcommand("enumerate", "enumerate objects as NDJSON");
    add_eps(enum_cmd, true);
    enum_cmd->add_option("--target,-t", target,
                         "ces|collections|diagrams|labeled|oriented|cmatrices|mcts|chains")
        ->required();
    enum_cmd->add_option("--k", k_opt, "size parameter, defaults to n");

    CLI::App* count_cmd = app.add_subcommand("count", "count objects without listing them");
    add_eps(count_cmd, true);
    count_cmd->add_option("--target,-t", target, "same targets as enumerate")->required();
    count_cmd->add_option("--k", k_opt, "size parameter, defaults to n");

    CLI::App* conv_cmd = app.add_subcommand("convert", "convert a record between models");
    conv_cmd->add_option("--from", from, "source model")->required();
    conv_cmd->add_option("--to", to, "target model")->required();
    conv_cmd->add_option("--input,-i", input_path, "record JSON file or - for stdin");
    add_eps(conv_cmd, false);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run an exhaustive verification suite");
    verify_cmd
        ->add_option("--suite", suite,
                     "maintech|esbij|ecbij|cmat|mct|linext|trees|chains|reddening")
        ->required();
    verify_cmd->add_option("--n", n_opt, "rank to verify at")->required();
    add_eps(verify_cmd, false);
    verify_cmd->add_flag("--all-epsilon", all_eps, "check every sign vector (default)");

    CLI::App* export_cmd = app.add_subcommand("export", "render a record to SVG or DOT");
    export_cmd->add_option("--format,-f", format, "svg|dot")->required();
    export_cmd->add_option("--kind", kind, "diagram|labeled|oriented|mct|poset|exchange-graph")
        ->required();
    export_cmd->add_option("--input,-i", input_path, "record JSON file or - for stdin");
    export_cmd->add_option("--out,-o", output_path, "output file, stdout when absent");
    add_eps(export_cmd, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::optional<SignVector> eps_flag;
        if (!eps_str.empty()) eps_flag.emplace(eps_str);

        if (mutate_cmd->parsed()) {
            ExchangeMatrix b = [&] {
                if (eps_flag) return framed_quiver(*eps_flag);
                json j = parse_json(read_input(input_path));
                if (!eps_str.empty() || j.contains("epsilon"))
                    eps_flag.emplace(epsilon_of_json(j));
                return quiver_of_json(j);
            }();
            b = mutate_sequence(b, parse_vertex_list(seq_str));
            json out = json_of_quiver(b, eps_flag ? &*eps_flag : nullptr);
            out["cmatrix"] = c_matrix(b);
            std::cout << out.dump() << "\n";
            return kExitOk;
        }

        if (cmats_cmd->parsed()) {
            auto cs = enumerate_c_matrices(*eps_flag, exploration_limits());
            for (const auto& c : cs) std::cout << json_of_cmatrix(c).dump() << "\n";
            std::cout << json{{"count", cs.size()}}.dump() << "\n";
            return kExitOk;
        }

        if (redd_cmd->parsed()) {
            ExchangeMatrix b =
                mutate_sequence(framed_quiver(*eps_flag), parse_vertex_list(seq_str));
            ReddeningVerdict v = check_reddening_terminal(*eps_flag, b);
            json out{{"is_terminal", v.is_terminal}, {"consistent", v.consistent}};
            if (v.witness) out["witness_permutation"] = *v.witness;
            if (v.counterexample_row) out["counterexample_row"] = *v.counterexample_row;
            if (!v.detail.empty()) out["detail"] = v.detail;
            std::cout << out.dump() << "\n";
            return v.is_terminal && v.consistent ? kExitOk : kExitFailedVerdict;
        }

        if (enum_cmd->parsed() || count_cmd->parsed()) {
            const int k = k_opt > 0 ? k_opt : eps_flag->n();
            unsigned long long count;
            if (enum_cmd->parsed()) {
                count = stream_records(target, *eps_flag, k,
                                       [](const json& r) { std::cout << r.dump() << "\n"; });
                std::cout << json{{"count", count}}.dump() << "\n";
            } else {
                count = stream_records(target, *eps_flag, k, [](const json&) {});
                std::cout << json{{"target", target},
                                  {"epsilon", eps_flag->str()},
                                  {"count", count}}
                                 .dump()
                          << "\n";
            }
            return kExitOk;
        }

        if (conv_cmd->parsed()) {
            json input = parse_json(read_input(input_path));
            std::cout << run_conversion(from, to, input, eps_flag).dump() << "\n";
            return kExitOk;
        }

        if (verify_cmd->parsed()) {
            std::optional<SignVector> eps_opt = eps_flag;
            if (all_eps) eps_opt.reset();
            Verdict v;
            if (suite == "maintech") v = verify_maintech(n_opt, eps_opt);
            else if (suite == "esbij") v = verify_esbij(n_opt, eps_opt);
            else if (suite == "ecbij") v = verify_ecbij(n_opt, eps_opt);
            else if (suite == "cmat") v = verify_cmat(n_opt, eps_opt);
            else if (suite == "mct") v = verify_mct(n_opt, eps_opt);
            else if (suite == "linext") v = verify_linext(n_opt, eps_opt);
            else if (suite == "trees") v = verify_trees(n_opt);
            else if (suite == "chains") v = verify_chains(n_opt);
            else if (suite == "reddening") v = verify_reddening(n_opt, eps_opt);
            else throw invalid_input_error("unknown suite \"" + suite + "\"");
            std::cout << verdict_json(v).dump() << "\n";
            return v.ok ? kExitOk : kExitFailedVerdict;
        }

        if (export_cmd->parsed()) {
            json input;
            if (kind != "exchange-graph") input = parse_json(read_input(input_path));
            write_output(output_path, run_export(format, kind, input, eps_flag));
            return kExitOk;
        }
    } catch (const out_of_image_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitOutOfImage;
    } catch (const internal_invariant_error& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return kExitFailedVerdict;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
