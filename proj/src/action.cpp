#include "rotorlab/action.hpp"

#include <algorithm>
#include <string>

#include "rotorlab/lattice.hpp"

namespace rotorlab {

namespace {

void require_eulerian(const RibbonDigraph& g) {
    if (!g.is_eulerian()) {
        throw std::invalid_argument("the rotor-router action is defined for Eulerian digraphs");
    }
}

void require_degree_zero(const Divisor& x) {
    if (divisor_degree(x) != 0) {
        throw std::invalid_argument("the action is defined for degree-zero divisors");
    }
}

Arborescence arborescence_of(const RibbonDigraph& g, const RotorConfiguration& rho, int root) {
    auto t = arborescence_from_rotor(g, rho, root);
    if (!t) {
        throw std::logic_error("rotor configuration is not an arborescence off the root");
    }
    return *t;
}

}  // namespace

Divisor make_nonneg_off_root(const RibbonDigraph& g, const Divisor& x, int root) {
    const int n = g.vertex_count();
    if (static_cast<int>(x.size()) != n) {
        throw std::invalid_argument("divisor size does not match vertex count");
    }
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

    // Breadth-first tree from the root along out-edges.
    std::vector<int> parent(n, -1), order;
    std::vector<bool> seen(n, false);
    seen[root] = true;
    order.push_back(root);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (int w : g.out_list(v)) {
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                order.push_back(w);
            }
        }
    }

    // Children first: each vertex fires often enough to cover every child's
    // deficit plus the chips the child's own firings consume.
    IntVector z(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        BigInt need = 0;
        for (int w : order) {
            if (parent[w] != v) continue;
            BigInt shortfall = g.out_degree(w) * z[w] - x[w];
            if (shortfall > 0) {
                need = std::max(need, ceil_div(shortfall, BigInt(g.multiplicity(v, w))));
            }
        }
        z[v] = need;
    }

    Divisor out = x;
    for (int v = 0; v < n; ++v) {
        out[v] -= g.out_degree(v) * z[v];
        for (auto [w, mult] : g.out_counts(v)) out[w] += mult * z[v];
    }
    for (int v = 0; v < n; ++v) {
        if (v != root && out[v] < 0) {
            throw std::logic_error("off-root entry left negative");
        }
    }
    return out;
}

Arborescence action_simulate(const RibbonDigraph& g, const Divisor& x, const Arborescence& t,
                             int w_slot, Schedule schedule, std::uint64_t budget) {
    require_eulerian(g);
    require_degree_zero(x);
    const int n = g.vertex_count();
    const int root = t.root;

    Drc s;
    s.rotor = arborescence_to_rotor(g, t, {root, w_slot});
    s.divisor = make_nonneg_off_root(g, x, root);

    std::uint64_t steps = 0;
    while (true) {
        int v = -1;
        if (schedule == Schedule::kSmallestIndex) {
            for (int u = 0; u < n; ++u) {
                if (u != root && s.divisor[u] > 0) {
                    v = u;
                    break;
                }
            }
        } else {
            for (int u = n - 1; u >= 0; --u) {
                if (u != root && s.divisor[u] > 0) {
                    v = u;
                    break;
                }
            }
        }
        if (v == -1) break;
        if (steps == budget) {
            throw BudgetExceeded("action simulation exceeded " + std::to_string(budget) +
                                 " steps");
        }
        route_at_inplace(g, s, v, true);
        ++steps;
    }
    for (int v = 0; v < n; ++v) {
        if (s.divisor[v] != 0) {
            throw std::logic_error("chips failed to cancel at the root");
        }
    }
    return arborescence_of(g, s.rotor, root);
}

RwGoodForm rw_good_canonical(const RibbonDigraph& g, const Drc& s, int root, int w_slot,
                             std::uint64_t budget) {
    require_eulerian(g);
    require_degree_zero(s.divisor);
    if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
    if (w_slot < 0 || w_slot >= g.out_degree(root)) {
        throw std::invalid_argument("root edge slot out of range");
    }

    Drc lifted = s;
    lifted.divisor[root] += 1;
    Drc rep = recurrent_representative(g, lifted, budget);
    if (!is_unicycle(g, rep)) {
        throw std::logic_error("degree-one recurrent representative is not a unicycle");
    }

    // Within one orbit period there is exactly one moment with the chip at
    // the root and the root rotor on w_slot.
    int pos = single_chip_vertex(rep.divisor);
    RotorConfiguration rho = rep.rotor;
    BigInt limit = orbit_size(g);
    BigInt walked = 0;
    while (pos != root || rho[root] != w_slot) {
        pos = advance_chip(g, rho, pos);
        if (++walked > limit) {
            throw std::logic_error("orbit roll missed the canonical moment");
        }
    }

    RwGoodForm form;
    form.root = root;
    form.root_edge = {root, w_slot};
    form.rotor = std::move(rho);
    arborescence_of(g, form.rotor, root);  // sanity: off-root part is an arborescence
    return form;
}

Arborescence action_alternative(const RibbonDigraph& g, const Divisor& x, const Arborescence& t,
                                int w_slot, std::uint64_t budget) {
    require_eulerian(g);
    require_degree_zero(x);
    Drc s;
    s.rotor = arborescence_to_rotor(g, t, {t.root, w_slot});
    s.divisor = x;
    RwGoodForm form = rw_good_canonical(g, s, t.root, w_slot, budget);
    return arborescence_of(g, form.rotor, t.root);
}

bool action_decide(const RibbonDigraph& g, const Divisor& x, const Arborescence& t1,
                   const Arborescence& t2) {
    require_eulerian(g);
    require_degree_zero(x);
    if (t1.root != t2.root) {
        throw std::invalid_argument("arborescences have different roots");
    }
    Drc a{x, arborescence_to_rotor(g, t1, {t1.root, 0})};
    Drc b{Divisor(g.vertex_count(), 0), arborescence_to_rotor(g, t2, {t2.root, 0})};
    return drc_equivalent(g, a, b);
}

RotorConfiguration reverse_cycles(const BidirectedGraph& bg, const RotorConfiguration& rho) {
    const RibbonDigraph& g = bg.graph;
    RotorCycles rc = rotor_subgraph_cycles(g, rho);
    RotorConfiguration out = rho;
    for (const auto& cycle : rc.cycles) {
        const int k = static_cast<int>(cycle.size());
        for (int i = 0; i < k; ++i) {
            int u = cycle[i];
            int v = cycle[(i + 1) % k];
            EdgeRef rev = bg.reverse_of({u, rho[u]});
            if (rev.tail != v) {
                throw std::logic_error("cycle edge pairing mismatch");
            }
            out[v] = rev.slot;
        }
    }
    return out;
}

bool reversal_test(const BidirectedGraph& bg, std::uint64_t cap) {
    for (const Drc& u : enumerate_unicycles(bg.graph, cap)) {
        Drc reversed{u.divisor, reverse_cycles(bg, u.rotor)};
        if (!drc_equivalent(bg.graph, u, reversed)) return false;
    }
    return true;
}

bool base_point_independent(const BidirectedGraph& bg, std::uint64_t cap) {
    return reversal_test(bg, cap);
}

std::vector<int> tree_action(const BidirectedGraph& bg, const Divisor& x,
                             const std::vector<int>& tree, int root, std::uint64_t budget) {
    Arborescence t = tree_to_arborescence(bg, tree, root);
    Arborescence image = action_alternative(bg.graph, x, t, 0, budget);
    return arborescence_to_tree(bg, image);
}

std::vector<std::vector<int>> spanning_trees(const BidirectedGraph& bg, std::uint64_t cap) {
    const int n = bg.graph.vertex_count();
    const int m = bg.undirected_edge_count();
    std::vector<std::vector<int>> trees;
    std::vector<int> pick;

    // Enumerate edge subsets of size n - 1 in lexicographic order.
    auto spans = [&](const std::vector<int>& edges) {
        std::vector<int> comp(n);
        for (int v = 0; v < n; ++v) comp[v] = v;
        auto find = [&](int v) {
            while (comp[v] != v) v = comp[v] = comp[comp[v]];
            return v;
        };
        for (int e : edges) {
            int a = find(bg.edges[e].first), b = find(bg.edges[e].second);
            if (a == b) return false;  // cycle
            comp[a] = b;
        }
        return true;
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(pick.size()) == n - 1) {
            if (spans(pick)) {
                trees.push_back(pick);
                if (trees.size() > cap) {
                    throw BudgetExceeded("spanning tree count exceeds cap");
                }
            }
            return;
        }
        for (int e = from; e <= m - (n - 1 - static_cast<int>(pick.size())); ++e) {
            pick.push_back(e);
            self(self, e + 1);
            pick.pop_back();
        }
    };
    if (n >= 2) rec(rec, 0);
    return trees;
}

std::vector<Divisor> picard_class_representatives(const RibbonDigraph& g, std::uint64_t cap) {
    const int n = g.vertex_count();
    BigInt want = picard_order(g);
    std::vector<Divisor> reps;
    reps.push_back(Divisor(n, 0));

    // Scan degree-zero divisors by growing entry bound; the first n-1
    // entries range freely, the last balances the degree.
    for (int bound = 1; BigInt(reps.size()) < want; ++bound) {
        std::vector<int> entry(n - 1, -bound);
        std::uint64_t scanned = 0;
        while (true) {
            Divisor x(n);
            BigInt sum = 0;
            for (int v = 0; v < n - 1; ++v) {
                x[v] = entry[v];
                sum += entry[v];
            }
            x[n - 1] = -sum;
            bool fresh = true;
            for (const Divisor& r : reps) {
                if (divisors_equivalent(g, r, x)) {
                    fresh = false;
                    break;
                }
            }
            if (fresh) {
                reps.push_back(x);
                if (BigInt(reps.size()) == want) break;
            }
            if (++scanned > cap) {
                throw BudgetExceeded("class representative scan exceeds cap");
            }
            int v = n - 2;
            while (v >= 0 && entry[v] == bound) {
                entry[v] = -bound;
                --v;
            }
            if (v < 0) break;
            ++entry[v];
        }
        if (bound > 64) {
            throw std::logic_error("class representatives not found within bound 64");
        }
    }
    return reps;
}

std::optional<BasePointWitness> base_point_witness(const BidirectedGraph& bg, std::uint64_t cap) {
    if (reversal_test(bg, cap)) return std::nullopt;
    const int n = bg.graph.vertex_count();
    auto trees = spanning_trees(bg, cap);
    auto reps = picard_class_representatives(bg.graph, cap);
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            for (const auto& tree : trees) {
                for (const Divisor& x : reps) {
                    auto ia = tree_action(bg, x, tree, a);
                    auto ib = tree_action(bg, x, tree, b);
                    if (ia != ib) {
                        return BasePointWitness{a, b, tree, x, ia, ib};
                    }
                }
            }
        }
    }
    throw std::logic_error("reversal failed but all base points agree");
}

}  // namespace rotorlab
