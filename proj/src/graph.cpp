#include "rotorlab/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rotorlab {

namespace {

std::string default_label(int v) { return "v" + std::to_string(v); }

// Vertices reachable from start following out-edges (forward) or in-edges
// (reversed adjacency supplied by caller).
std::vector<bool> reach(const std::vector<std::vector<int>>& adj, int start) {
    std::vector<bool> seen(adj.size(), false);
    std::vector<int> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v]) {
            if (!seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

BigInt divisor_degree(const Divisor& x) {
    BigInt d = 0;
    for (const BigInt& c : x) d += c;
    return d;
}

std::vector<GraphViolation> validate_graph(const std::vector<std::vector<int>>& out_lists,
                                           const std::vector<std::string>& labels) {
    std::vector<GraphViolation> issues;
    const int n = static_cast<int>(out_lists.size());
    if (n == 0) {
        issues.push_back({"empty vertex set", ""});
        return issues;
    }
    auto name = [&](int v) {
        return static_cast<int>(labels.size()) == n ? labels[v] : default_label(v);
    };

    for (int v = 0; v < n; ++v) {
        for (int w : out_lists[v]) {
            if (w < 0 || w >= n) {
                issues.push_back({"head out of range", name(v) + " -> " + std::to_string(w)});
                return issues;  // remaining checks assume well-formed heads
            }
        }
    }

    for (int v = 0; v < n; ++v) {
        if (std::find(out_lists[v].begin(), out_lists[v].end(), v) != out_lists[v].end()) {
            issues.push_back({"loop", "at " + name(v)});
            break;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (out_lists[v].empty()) {
            issues.push_back({"zero out-degree", "at " + name(v)});
            break;
        }
    }

    std::vector<std::vector<int>> rev(n);
    for (int v = 0; v < n; ++v) {
        for (int w : out_lists[v]) rev[w].push_back(v);
    }
    std::vector<bool> fwd = reach(out_lists, 0);
    std::vector<bool> bwd = reach(rev, 0);
    for (int v = 0; v < n; ++v) {
        if (!fwd[v]) {
            issues.push_back(
                {"not strongly connected", "no path " + name(0) + " -> " + name(v)});
            return issues;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!bwd[v]) {
            issues.push_back(
                {"not strongly connected", "no path " + name(v) + " -> " + name(0)});
            return issues;
        }
    }
    return issues;
}

RibbonDigraph RibbonDigraph::make(std::vector<std::vector<int>> out_lists,
                                  std::vector<std::string> labels) {
    auto issues = validate_graph(out_lists, labels);
    if (!issues.empty()) {
        throw std::invalid_argument("invalid graph: " + issues[0].property +
                                    (issues[0].witness.empty() ? "" : ", " + issues[0].witness));
    }
    const int n = static_cast<int>(out_lists.size());
    if (labels.empty()) {
        labels.reserve(n);
        for (int v = 0; v < n; ++v) labels.push_back(default_label(v));
    }
    if (static_cast<int>(labels.size()) != n) {
        throw std::invalid_argument("invalid graph: label count does not match vertex count");
    }
    {
        auto sorted = labels;
        std::sort(sorted.begin(), sorted.end());
        auto dup = std::adjacent_find(sorted.begin(), sorted.end());
        if (dup != sorted.end()) {
            throw std::invalid_argument("invalid graph: duplicate label " + *dup);
        }
    }

    RibbonDigraph g;
    g.out_ = std::move(out_lists);
    g.labels_ = std::move(labels);
    g.counts_.resize(n);
    for (int v = 0; v < n; ++v) {
        std::map<int, int> m;
        for (int w : g.out_[v]) ++m[w];
        g.counts_[v].assign(m.begin(), m.end());
        g.edge_count_ += static_cast<int>(g.out_[v].size());
    }
    return g;
}

int RibbonDigraph::multiplicity(int v, int w) const {
    const auto& c = counts_[v];
    auto it = std::lower_bound(c.begin(), c.end(), std::pair<int, int>{w, 0});
    if (it != c.end() && it->first == w) return it->second;
    return 0;
}

int RibbonDigraph::vertex_by_label(const std::string& name) const {
    for (int v = 0; v < vertex_count(); ++v) {
        if (labels_[v] == name) return v;
    }
    return -1;
}

bool RibbonDigraph::is_eulerian() const {
    const int n = vertex_count();
    std::vector<int> indeg(n, 0);
    for (int v = 0; v < n; ++v) {
        for (int w : out_[v]) ++indeg[w];
    }
    for (int v = 0; v < n; ++v) {
        if (indeg[v] != out_degree(v)) return false;
    }
    return true;
}

RotorCycles rotor_subgraph_cycles(const RibbonDigraph& g, const RotorConfiguration& rho) {
    const int n = g.vertex_count();
    if (static_cast<int>(rho.size()) != n) {
        throw std::invalid_argument("rotor configuration size does not match vertex count");
    }
    for (int v = 0; v < n; ++v) {
        if (rho[v] < 0 || rho[v] >= g.out_degree(v)) {
            throw std::invalid_argument("rotor slot out of range at " + g.label(v));
        }
    }

    RotorCycles result;
    result.component.assign(n, -1);
    std::vector<int> token(n, -1);
    std::vector<int> path;
    for (int s = 0; s < n; ++s) {
        if (result.component[s] != -1) continue;
        path.clear();
        int u = s;
        while (result.component[u] == -1 && token[u] != s) {
            token[u] = s;
            path.push_back(u);
            u = g.head(u, rho[u]);
        }
        int cid;
        if (result.component[u] != -1) {
            cid = result.component[u];
        } else {
            // u closes a new cycle: the path suffix starting at u.
            auto at = std::find(path.begin(), path.end(), u);
            std::vector<int> cycle(at, path.end());
            auto mn = std::min_element(cycle.begin(), cycle.end());
            std::rotate(cycle.begin(), mn, cycle.end());
            cid = static_cast<int>(result.cycles.size());
            result.cycles.push_back(std::move(cycle));
        }
        for (int w : path) {
            if (result.component[w] == -1) result.component[w] = cid;
        }
    }

    // Order cycles by smallest vertex.
    const int k = static_cast<int>(result.cycles.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return result.cycles[a][0] < result.cycles[b][0]; });
    std::vector<int> rank(k);
    for (int i = 0; i < k; ++i) rank[order[i]] = i;
    std::vector<std::vector<int>> sorted(k);
    for (int i = 0; i < k; ++i) sorted[rank[i]] = std::move(result.cycles[i]);
    result.cycles = std::move(sorted);
    for (int v = 0; v < n; ++v) result.component[v] = rank[result.component[v]];
    return result;
}

int BidirectedGraph::slot_of_edge(int v, int e) const {
    const auto& ids = edge_id[v];
    for (int s = 0; s < static_cast<int>(ids.size()); ++s) {
        if (ids[s] == e) return s;
    }
    return -1;
}

BidirectedGraph import_undirected(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<std::vector<int>>& rotations,
                                  std::vector<std::string> labels) {
    const int m = static_cast<int>(edges.size());
    if (n <= 0) throw std::invalid_argument("undirected import: empty vertex set");
    for (int e = 0; e < m; ++e) {
        auto [u, w] = edges[e];
        if (u < 0 || u >= n || w < 0 || w >= n) {
            throw std::invalid_argument("undirected import: endpoint out of range in edge " +
                                        std::to_string(e));
        }
        if (u == w) {
            throw std::invalid_argument("undirected import: loop at vertex " + std::to_string(u));
        }
    }
    if (static_cast<int>(rotations.size()) != n) {
        throw std::invalid_argument("undirected import: rotation count does not match vertices");
    }

    // Each rotation must list exactly the edges incident to its vertex.
    std::vector<std::vector<int>> incident(n);
    for (int e = 0; e < m; ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    for (int v = 0; v < n; ++v) {
        auto want = incident[v];
        auto got = rotations[v];
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        if (want != got) {
            throw std::invalid_argument("undirected import: rotation at vertex " +
                                        std::to_string(v) +
                                        " is not a cyclic order of its incident edges");
        }
    }

    // Connectivity over undirected edges.
    {
        std::vector<std::vector<int>> adj(n);
        for (auto [u, w] : edges) {
            adj[u].push_back(w);
            adj[w].push_back(u);
        }
        auto seen = reach(adj, 0);
        for (int v = 0; v < n; ++v) {
            if (!seen[v]) {
                throw std::invalid_argument("undirected import: not connected, vertex " +
                                            std::to_string(v) + " unreachable");
            }
        }
    }

    BidirectedGraph bg;
    bg.edges = edges;
    std::vector<std::vector<int>> out_lists(n);
    bg.edge_id.resize(n);
    for (int v = 0; v < n; ++v) {
        for (int e : rotations[v]) {
            int other = edges[e].first == v ? edges[e].second : edges[e].first;
            out_lists[v].push_back(other);
            bg.edge_id[v].push_back(e);
        }
    }
    bg.graph = RibbonDigraph::make(std::move(out_lists), std::move(labels));

    std::vector<std::vector<EdgeRef>> ends(m);
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < static_cast<int>(bg.edge_id[v].size()); ++s) {
            ends[bg.edge_id[v][s]].push_back({v, s});
        }
    }
    bg.reverse.resize(n);
    for (int v = 0; v < n; ++v) bg.reverse[v].resize(bg.edge_id[v].size());
    for (int e = 0; e < m; ++e) {
        bg.reverse[ends[e][0].tail][ends[e][0].slot] = ends[e][1];
        bg.reverse[ends[e][1].tail][ends[e][1].slot] = ends[e][0];
    }
    return bg;
}

std::optional<BidirectedGraph> derive_pairing(const RibbonDigraph& g) {
    const int n = g.vertex_count();
    for (int v = 0; v < n; ++v) {
        for (auto [w, mult] : g.out_counts(v)) {
            if (g.multiplicity(w, v) != mult) return std::nullopt;
        }
    }

    BidirectedGraph bg;
    bg.graph = g;
    bg.edge_id.resize(n);
    bg.reverse.resize(n);
    for (int v = 0; v < n; ++v) {
        bg.edge_id[v].assign(g.out_degree(v), -1);
        bg.reverse[v].resize(g.out_degree(v));
    }

    // slots_to[v][w] = slots of v carrying v -> w arcs, in slot order.
    std::vector<std::map<int, std::vector<int>>> slots_to(n);
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < g.out_degree(v); ++s) {
            slots_to[v][g.head(v, s)].push_back(s);
        }
    }
    for (int v = 0; v < n; ++v) {
        for (auto& [w, vs] : slots_to[v]) {
            if (w < v) continue;
            const auto& ws = slots_to[w][v];
            for (size_t k = 0; k < vs.size(); ++k) {
                int id = static_cast<int>(bg.edges.size());
                bg.edges.push_back({v, w});
                bg.edge_id[v][vs[k]] = id;
                bg.edge_id[w][ws[k]] = id;
                bg.reverse[v][vs[k]] = {w, ws[k]};
                bg.reverse[w][ws[k]] = {v, vs[k]};
            }
        }
    }
    return bg;
}

int genus(const BidirectedGraph& bg) {
    const RibbonDigraph& g = bg.graph;
    const int n = g.vertex_count();
    int arcs = 0;
    std::vector<std::vector<bool>> seen(n);
    for (int v = 0; v < n; ++v) {
        seen[v].assign(g.out_degree(v), false);
        arcs += g.out_degree(v);
    }
    int faces = 0;
    for (int v = 0; v < n; ++v) {
        for (int s = 0; s < g.out_degree(v); ++s) {
            if (seen[v][s]) continue;
            ++faces;
            EdgeRef e{v, s};
            while (!seen[e.tail][e.slot]) {
                seen[e.tail][e.slot] = true;
                e = next_rotor(g, bg.reverse_of(e));
            }
        }
    }
    const int m = arcs / 2;
    const int euler = n - m + faces;
    if ((2 - euler) % 2 != 0) {
        throw std::logic_error("face tracing produced an odd Euler defect");
    }
    return (2 - euler) / 2;
}

Arborescence tree_to_arborescence(const BidirectedGraph& bg, const std::vector<int>& tree_edges,
                                  int root) {
    const RibbonDigraph& g = bg.graph;
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    if (static_cast<int>(tree_edges.size()) != n - 1) {
        throw std::invalid_argument("edge set is not a spanning tree: expected " +
                                    std::to_string(n - 1) + " edges, got " +
                                    std::to_string(tree_edges.size()));
    }
    {
        auto sorted = tree_edges;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw std::invalid_argument("edge set is not a spanning tree: repeated edge");
        }
    }
    std::vector<std::vector<int>> adj(n);  // incident tree edges
    for (int e : tree_edges) {
        if (e < 0 || e >= bg.undirected_edge_count()) {
            throw std::invalid_argument("edge id out of range: " + std::to_string(e));
        }
        adj[bg.edges[e].first].push_back(e);
        adj[bg.edges[e].second].push_back(e);
    }

    Arborescence t;
    t.root = root;
    t.slot.assign(n, -1);
    std::vector<bool> visited(n, false);
    std::vector<int> queue{root};
    visited[root] = true;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int e : adj[v]) {
            int w = bg.edges[e].first == v ? bg.edges[e].second : bg.edges[e].first;
            if (visited[w]) continue;
            visited[w] = true;
            t.slot[w] = bg.slot_of_edge(w, e);
            queue.push_back(w);
        }
    }
    if (static_cast<int>(queue.size()) != n) {
        throw std::invalid_argument("edge set is not a spanning tree: not connected");
    }
    return t;
}

std::vector<int> arborescence_to_tree(const BidirectedGraph& bg, const Arborescence& t) {
    std::vector<int> edges;
    for (int v = 0; v < bg.graph.vertex_count(); ++v) {
        if (v == t.root) continue;
        edges.push_back(bg.edge_id[v][t.slot[v]]);
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

RotorConfiguration arborescence_to_rotor(const RibbonDigraph& g, const Arborescence& t,
                                         EdgeRef extra) {
    if (extra.tail != t.root) {
        throw std::invalid_argument("extra edge must leave the root");
    }
    if (extra.slot < 0 || extra.slot >= g.out_degree(t.root)) {
        throw std::invalid_argument("extra edge slot out of range");
    }
    RotorConfiguration rho = t.slot;
    rho[t.root] = extra.slot;
    return rho;
}

std::optional<Arborescence> arborescence_from_rotor(const RibbonDigraph& g,
                                                    const RotorConfiguration& rho, int root) {
    const int n = g.vertex_count();
    // reaches_root[v]: 0 unknown, 1 yes, 2 on current walk
    std::vector<int> state(n, 0);
    state[root] = 1;
    std::vector<int> walk;
    for (int s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        walk.clear();
        int u = s;
        while (state[u] == 0) {
            state[u] = 2;
            walk.push_back(u);
            u = g.head(u, rho[u]);
        }
        if (state[u] == 2) return std::nullopt;  // cycle avoiding the root
        for (int w : walk) state[w] = 1;
    }
    Arborescence t;
    t.root = root;
    t.slot = rho;
    t.slot[root] = -1;
    return t;
}

}  // namespace rotorlab
