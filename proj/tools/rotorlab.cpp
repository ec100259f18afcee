// Command-line front end: one subcommand per library operation, GraphFile
// input, plain-text or JSON output, exit code 0 = yes/success, 1 = no,
// 2 = error.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rotorlab/action.hpp"
#include "rotorlab/engine.hpp"
#include "rotorlab/equivalence.hpp"
#include "rotorlab/graph.hpp"
#include "rotorlab/io.hpp"
#include "rotorlab/lattice.hpp"

namespace {

using namespace rotorlab;

struct Loaded {
    GraphDocument doc;
    RibbonDigraph graph;
    Drc state;
};

Loaded load(const std::string& path) {
    Loaded l;
    l.doc = load_graph_file(path);
    l.graph = l.doc.to_graph();
    l.state = l.doc.to_state();
    return l;
}

int vertex_arg(const RibbonDigraph& g, const std::string& name) {
    int v = g.vertex_by_label(name);
    if (v == -1) throw std::invalid_argument("unknown vertex name '" + name + "'");
    return v;
}

// "a=1,b=-2" -> per-vertex values; unlisted vertices get 0.
std::vector<std::pair<int, std::string>> parse_assignments(const RibbonDigraph& g,
                                                           const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) {
            throw std::invalid_argument("expected <vertex>=<value>, got '" + item + "'");
        }
        out.emplace_back(vertex_arg(g, item.substr(0, eq)), item.substr(eq + 1));
    }
    return out;
}

Divisor parse_divisor(const RibbonDigraph& g, const std::string& text) {
    Divisor x(g.vertex_count(), 0);
    for (auto& [v, val] : parse_assignments(g, text)) x[v] = BigInt(val);
    return x;
}

Arborescence parse_arborescence(const RibbonDigraph& g, const std::string& text, int root) {
    Arborescence t;
    t.root = root;
    t.slot.assign(g.vertex_count(), -1);
    for (auto& [v, val] : parse_assignments(g, text)) {
        if (v == root) throw std::invalid_argument("the root takes no tree slot");
        int slot = std::stoi(val);
        if (slot < 0 || slot >= g.out_degree(v)) {
            throw std::invalid_argument("tree slot out of range at " + g.label(v));
        }
        t.slot[v] = slot;
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != root && t.slot[v] == -1) {
            throw std::invalid_argument("tree is missing a slot for " + g.label(v));
        }
    }
    // Must be an in-arborescence to the root.
    RotorConfiguration rho = t.slot;
    rho[root] = 0;
    if (!arborescence_from_rotor(g, rho, root)) {
        throw std::invalid_argument("tree slots do not form a spanning in-arborescence");
    }
    return t;
}

std::vector<std::pair<std::string, BigInt>> named(const RibbonDigraph& g, const IntVector& v) {
    std::vector<std::pair<std::string, BigInt>> out;
    for (int i = 0; i < g.vertex_count(); ++i) out.emplace_back(g.label(i), v[i]);
    return out;
}

std::vector<std::pair<std::string, BigInt>> named_slots(const RibbonDigraph& g,
                                                        const Arborescence& t) {
    std::vector<std::pair<std::string, BigInt>> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v != t.root) out.emplace_back(g.label(v), t.slot[v]);
    }
    return out;
}

std::string edge_name(const BidirectedGraph& bg, int e) {
    return bg.graph.label(bg.edges[e].first) + "-" + bg.graph.label(bg.edges[e].second);
}

BidirectedGraph bidirected(const RibbonDigraph& g) {
    auto bg = derive_pairing(g);
    if (!bg) {
        throw std::invalid_argument(
            "graph is not bidirected: some arc has no reverse (this operation needs an "
            "undirected origin)");
    }
    return *bg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rotor-routing toolkit"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "machine"}))
        ->capture_default_str();

    std::string file_a, file_b, vertex_name;
    std::uint64_t times = 1, steps = 0, cap = kDefaultStepBudget, budget = kDefaultStepBudget;
    bool legal = false, want_witness = false;
    int jobs = 1;
    std::string method = "picard", action_method = "simulate", schedule_name = "smallest";
    std::string root_name, divisor_text, tree_text, check_text;
    int w_slot = 0;

    auto* c_validate = app.add_subcommand("validate", "check graph invariants");
    c_validate->add_option("file", file_a)->required();

    auto* c_laplacian = app.add_subcommand("laplacian", "print the Laplacian matrix");
    c_laplacian->add_option("file", file_a)->required();

    auto* c_period = app.add_subcommand("period", "print the primitive period vector");
    c_period->add_option("file", file_a)->required();

    auto* c_picard = app.add_subcommand("picard-order", "order of the Picard group");
    c_picard->add_option("file", file_a)->required();

    auto* c_orbit_size = app.add_subcommand("orbit-size", "unicycle orbit length");
    c_orbit_size->add_option("file", file_a)->required();

    auto* c_genus = app.add_subcommand("genus", "genus of the rotation system");
    c_genus->add_option("file", file_a)->required();

    auto* c_route = app.add_subcommand("route", "route at a vertex, print the new state");
    c_route->add_option("file", file_a)->required();
    c_route->add_option("vertex", vertex_name)->required();
    c_route->add_flag("--legal", legal, "require a chip at the vertex");
    c_route->add_option("--times", times, "number of routings");

    auto* c_fire = app.add_subcommand("fire", "fire a vertex, print the new state");
    c_fire->add_option("file", file_a)->required();
    c_fire->add_option("vertex", vertex_name)->required();

    auto* c_walk = app.add_subcommand("walk", "classical one-chip walk");
    c_walk->add_option("file", file_a)->required();
    c_walk->add_option("--steps", steps, "number of steps")->required();

    auto* c_recurrent = app.add_subcommand("recurrent", "is the configuration recurrent");
    c_recurrent->add_option("file", file_a)->required();

    auto* c_equiv = app.add_subcommand("equiv", "are two configurations equivalent");
    c_equiv->add_option("fileA", file_a)->required();
    c_equiv->add_option("fileB", file_b)->required();
    c_equiv->add_flag("--witness", want_witness, "print a routing-vector witness");

    auto* c_reach = app.add_subcommand("reachable", "legal-game reachability (recurrent target)");
    c_reach->add_option("fileA", file_a)->required();
    c_reach->add_option("fileB", file_b)->required();

    auto* c_same_orbit = app.add_subcommand("same-orbit", "do two unicycles share an orbit");
    c_same_orbit->add_option("fileA", file_a)->required();
    c_same_orbit->add_option("fileB", file_b)->required();

    auto* c_orbit_count = app.add_subcommand("orbit-count", "number of unicycle orbits");
    c_orbit_count->add_option("file", file_a)->required();
    c_orbit_count->add_option("--method", method)->check(CLI::IsMember({"enum", "picard"}));
    c_orbit_count->add_option("--cap", cap, "enumeration cap");
    c_orbit_count->add_option("--jobs", jobs, "parallel workers for enumeration");

    auto* c_action = app.add_subcommand("action", "rotor-router action on an arborescence");
    c_action->add_option("file", file_a)->required();
    c_action->add_option("--root", root_name)->required();
    c_action->add_option("--divisor", divisor_text, "degree-zero divisor, a=1,b=-1");
    c_action->add_option("--tree", tree_text, "arborescence slots, b=0,c=1")->required();
    c_action->add_option("--check", check_text, "second arborescence to compare against");
    c_action->add_option("--method", action_method)
        ->check(CLI::IsMember({"simulate", "alt", "decide"}));
    c_action->add_option("--schedule", schedule_name)
        ->check(CLI::IsMember({"smallest", "largest"}));
    c_action->add_option("--w-slot", w_slot, "root out-slot used by the action");
    c_action->add_option("--budget", budget, "simulation step budget");

    auto* c_reversal = app.add_subcommand("reversal-test", "unicycle cycle-reversal property");
    c_reversal->add_option("file", file_a)->required();
    c_reversal->add_option("--cap", cap, "enumeration cap");

    auto* c_bpi = app.add_subcommand("base-point-independent",
                                     "is the action independent of the base vertex");
    c_bpi->add_option("file", file_a)->required();
    c_bpi->add_option("--cap", cap, "enumeration cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        auto render = [&](const ResultDoc& doc) {
            std::cout << (format == "machine" ? doc.render_json() : doc.render_text());
        };
        auto answer = [&](bool yes) {
            ResultDoc full;
            full.add_text("answer", yes ? "yes" : "no");
            render(full);
            return yes ? 0 : 1;
        };

        if (*c_validate) {
            GraphDocument doc = load_graph_file(file_a);
            auto issues = validate_graph(doc.out_lists, doc.names);
            ResultDoc out;
            out.add_text("answer", issues.empty() ? "yes" : "no");
            if (!issues.empty()) {
                std::vector<std::string> rendered;
                for (const auto& i : issues) {
                    rendered.push_back(i.witness.empty() ? i.property
                                                         : i.property + ", " + i.witness);
                }
                out.add_names("violations", rendered);
            }
            render(out);
            return issues.empty() ? 0 : 1;
        }
        if (*c_laplacian) {
            Loaded l = load(file_a);
            ResultDoc out;
            out.add_matrix("laplacian", laplacian(l.graph));
            render(out);
            return 0;
        }
        if (*c_period) {
            Loaded l = load(file_a);
            ResultDoc out;
            out.add_map("period", named(l.graph, period_vector(l.graph)));
            render(out);
            return 0;
        }
        if (*c_picard) {
            Loaded l = load(file_a);
            ResultDoc out;
            out.add_number("picard_order", picard_order(l.graph));
            render(out);
            return 0;
        }
        if (*c_orbit_size) {
            Loaded l = load(file_a);
            ResultDoc out;
            out.add_number("orbit_size", orbit_size(l.graph));
            render(out);
            return 0;
        }
        if (*c_genus) {
            Loaded l = load(file_a);
            ResultDoc out;
            out.add_number("genus", genus(bidirected(l.graph)));
            render(out);
            return 0;
        }
        if (*c_route) {
            Loaded l = load(file_a);
            int v = vertex_arg(l.graph, vertex_name);
            Drc s = l.state;
            for (std::uint64_t i = 0; i < times; ++i) s = route_at(l.graph, s, v, legal);
            std::cout << serialize_graph_file(l.graph, s);
            return 0;
        }
        if (*c_fire) {
            Loaded l = load(file_a);
            Drc s = fire_at(l.graph, l.state, vertex_arg(l.graph, vertex_name));
            std::cout << serialize_graph_file(l.graph, s);
            return 0;
        }
        if (*c_walk) {
            Loaded l = load(file_a);
            Drc s = l.state;
            int pos = single_chip_vertex(s.divisor);
            if (pos == -1) {
                throw std::invalid_argument("the classical walk needs exactly one chip");
            }
            std::vector<std::string> trace{l.graph.label(pos)};
            for (std::uint64_t i = 0; i < steps; ++i) {
                s = classical_step(l.graph, s);
                pos = single_chip_vertex(s.divisor);
                trace.push_back(l.graph.label(pos));
            }
            ResultDoc out;
            out.add_number("steps", BigInt(steps));
            out.add_names("trace", trace);
            out.add_map("final_rotor", [&] {
                std::vector<std::pair<std::string, BigInt>> m;
                for (int v = 0; v < l.graph.vertex_count(); ++v) {
                    m.emplace_back(l.graph.label(v), s.rotor[v]);
                }
                return m;
            }());
            render(out);
            return 0;
        }
        if (*c_recurrent) {
            Loaded l = load(file_a);
            ResultDoc out;
            bool yes = is_recurrent(l.graph, l.state);
            out.add_text("answer", yes ? "yes" : "no");
            if (!yes) {
                bool negative = false;
                for (const BigInt& c : l.state.divisor) negative = negative || c < 0;
                if (negative) {
                    out.add_text("reason", "divisor has negative entry");
                } else {
                    RotorCycles rc = rotor_subgraph_cycles(l.graph, l.state.rotor);
                    for (const auto& cycle : rc.cycles) {
                        bool chipped = false;
                        std::string names;
                        for (int v : cycle) {
                            chipped = chipped || l.state.divisor[v] > 0;
                            names += (names.empty() ? "" : " ") + l.graph.label(v);
                        }
                        if (!chipped) {
                            out.add_text("reason", "rotor cycle [" + names + "] carries no chip");
                            break;
                        }
                    }
                }
            }
            render(out);
            return yes ? 0 : 1;
        }
        if (*c_equiv || *c_reach || *c_same_orbit) {
            Loaded a = load(file_a);
            Loaded b = load(file_b);
            if (!(a.graph == b.graph)) {
                throw std::invalid_argument("the two files describe different graphs");
            }
            ResultDoc out;
            bool yes;
            if (*c_equiv) {
                if (want_witness) {
                    auto w = routing_witness(a.graph, a.state, b.state);
                    yes = w.has_value();
                    out.add_text("answer", yes ? "yes" : "no");
                    if (w) out.add_map("witness", named(a.graph, *w));
                } else {
                    yes = drc_equivalent(a.graph, a.state, b.state);
                    out.add_text("answer", yes ? "yes" : "no");
                }
            } else if (*c_reach) {
                yes = reachable(a.graph, a.state, b.state);
                out.add_text("answer", yes ? "yes" : "no");
            } else {
                yes = same_orbit(a.graph, a.state, b.state);
                out.add_text("answer", yes ? "yes" : "no");
            }
            render(out);
            return yes ? 0 : 1;
        }
        if (*c_orbit_count) {
            Loaded l = load(file_a);
            auto m = method == "enum" ? OrbitCountMethod::kEnumeration : OrbitCountMethod::kPicard;
            ResultDoc out;
            out.add_number("orbit_count", count_unicycle_orbits(l.graph, m, cap, jobs));
            out.add_text("method", method);
            render(out);
            return 0;
        }
        if (*c_action) {
            Loaded l = load(file_a);
            int root = vertex_arg(l.graph, root_name);
            Divisor x = divisor_text.empty() ? Divisor(l.graph.vertex_count(), 0)
                                             : parse_divisor(l.graph, divisor_text);
            Arborescence t = parse_arborescence(l.graph, tree_text, root);
            Schedule schedule = schedule_name == "largest" ? Schedule::kLargestIndex
                                                           : Schedule::kSmallestIndex;
            if (check_text.empty()) {
                if (action_method == "decide") {
                    throw std::invalid_argument("--method decide needs --check");
                }
                Arborescence image =
                    action_method == "alt"
                        ? action_alternative(l.graph, x, t, w_slot, budget)
                        : action_simulate(l.graph, x, t, w_slot, schedule, budget);
                ResultDoc out;
                out.add_text("root", l.graph.label(root));
                out.add_map("image", named_slots(l.graph, image));
                render(out);
                return 0;
            }
            Arborescence t2 = parse_arborescence(l.graph, check_text, root);
            bool yes;
            if (action_method == "decide") {
                yes = action_decide(l.graph, x, t, t2);
            } else if (action_method == "alt") {
                yes = action_alternative(l.graph, x, t, w_slot, budget) == t2;
            } else {
                yes = action_simulate(l.graph, x, t, w_slot, schedule, budget) == t2;
            }
            return answer(yes);
        }
        if (*c_reversal) {
            Loaded l = load(file_a);
            return answer(reversal_test(bidirected(l.graph), cap));
        }
        if (*c_bpi) {
            Loaded l = load(file_a);
            BidirectedGraph bg = bidirected(l.graph);
            auto witness = base_point_witness(bg, cap);
            ResultDoc out;
            out.add_text("answer", witness ? "no" : "yes");
            if (witness) {
                out.add_names("witness_bases", {bg.graph.label(witness->base_a),
                                                bg.graph.label(witness->base_b)});
                std::vector<std::string> tree, ia, ib;
                for (int e : witness->tree) tree.push_back(edge_name(bg, e));
                for (int e : witness->image_a) ia.push_back(edge_name(bg, e));
                for (int e : witness->image_b) ib.push_back(edge_name(bg, e));
                out.add_names("witness_tree", tree);
                out.add_map("witness_divisor", named(bg.graph, witness->x));
                out.add_names("image_at_" + bg.graph.label(witness->base_a), ia);
                out.add_names("image_at_" + bg.graph.label(witness->base_b), ib);
            }
            render(out);
            return witness ? 1 : 0;
        }
        throw std::logic_error("no subcommand dispatched");
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
