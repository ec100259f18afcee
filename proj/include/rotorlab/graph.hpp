#pragma once
// Ribbon digraphs: finite multidigraphs with a cyclic order on the out-edges
// of every vertex.  An edge is identified by (tail, slot) where slot indexes
// into the tail's out-list; parallel edges occupy distinct slots.
//
// Every graph in this library is loopless and strongly connected with
// positive out-degrees; the factory enforces this.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rotorlab/bigint.hpp"

namespace rotorlab {

struct EdgeRef {
    int tail = 0;
    int slot = 0;

    friend bool operator==(const EdgeRef&, const EdgeRef&) = default;
    friend bool operator<(const EdgeRef& a, const EdgeRef& b) {
        return a.tail < b.tail || (a.tail == b.tail && a.slot < b.slot);
    }
};

// Chip counts per vertex.  Entries may be negative.
using Divisor = std::vector<BigInt>;

// Current rotor slot per vertex.
using RotorConfiguration = std::vector<int>;

BigInt divisor_degree(const Divisor& x);

// A divisor together with a rotor configuration: the full game state.
struct Drc {
    Divisor divisor;
    RotorConfiguration rotor;

    friend bool operator==(const Drc&, const Drc&) = default;
    friend bool operator<(const Drc& a, const Drc& b) {
        if (a.divisor != b.divisor) return a.divisor < b.divisor;
        return a.rotor < b.rotor;
    }
};

struct GraphViolation {
    std::string property;  // "loop", "zero out-degree", "not strongly connected", ...
    std::string witness;   // human-readable locus, e.g. "v0" or "no path v1 -> v0"
};

class RibbonDigraph {
public:
    RibbonDigraph() = default;

    // Validates looplessness, positive out-degrees and strong connectivity;
    // throws std::invalid_argument naming the first violation otherwise.
    static RibbonDigraph make(std::vector<std::vector<int>> out_lists,
                              std::vector<std::string> labels = {});

    int vertex_count() const { return static_cast<int>(out_.size()); }
    int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
    int edge_count() const { return edge_count_; }

    const std::vector<int>& out_list(int v) const { return out_[v]; }
    int head(int tail, int slot) const { return out_[tail][slot]; }
    int head(EdgeRef e) const { return out_[e.tail][e.slot]; }

    // Parallel-edge multiplicities per vertex, ascending by head.
    const std::vector<std::pair<int, int>>& out_counts(int v) const { return counts_[v]; }

    // Number of v -> w edges.
    int multiplicity(int v, int w) const;

    const std::string& label(int v) const { return labels_[v]; }
    const std::vector<std::string>& labels() const { return labels_; }
    int vertex_by_label(const std::string& name) const;  // -1 if absent

    bool is_eulerian() const;  // in-degree == out-degree everywhere

    friend bool operator==(const RibbonDigraph&, const RibbonDigraph&) = default;

private:
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<std::pair<int, int>>> counts_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

// Checks the class invariants on raw adjacency data.  Returns every violated
// property with one witness each; empty means the data is a valid graph.
// Witnesses use the given labels, or v0, v1, ... when omitted.
std::vector<GraphViolation> validate_graph(const std::vector<std::vector<int>>& out_lists,
                                           const std::vector<std::string>& labels = {});

// The cyclic successor of an edge at its tail.
inline EdgeRef next_rotor(const RibbonDigraph& g, EdgeRef e) {
    return {e.tail, (e.slot + 1) % g.out_degree(e.tail)};
}

// Decomposition of the rotor subgraph {rho(v) : v} into its directed cycles.
// Each cycle is rotated to start at its smallest vertex; cycles are sorted by
// that vertex.  component[v] is the index of the cycle reached from v.
struct RotorCycles {
    std::vector<std::vector<int>> cycles;
    std::vector<int> component;
};

RotorCycles rotor_subgraph_cycles(const RibbonDigraph& g, const RotorConfiguration& rho);

// A bidirected ribbon digraph: the directed double of an undirected graph,
// with the involution pairing each edge with its reverse.
struct BidirectedGraph {
    RibbonDigraph graph;
    std::vector<std::vector<EdgeRef>> reverse;  // reverse[v][slot]
    std::vector<std::vector<int>> edge_id;      // undirected edge per (v, slot)
    std::vector<std::pair<int, int>> edges;     // endpoints per undirected edge

    EdgeRef reverse_of(EdgeRef e) const { return reverse[e.tail][e.slot]; }
    int undirected_edge_count() const { return static_cast<int>(edges.size()); }

    // The slot at v carrying the given undirected edge (each edge has exactly
    // one end incarnation per endpoint).  -1 if v is not an endpoint.
    int slot_of_edge(int v, int e) const;
};

// Builds the directed double of a connected loopless undirected multigraph.
// rotations[v] lists the undirected edge indices incident to v in cyclic
// order (parallel edges appear once per end).  Throws std::invalid_argument
// on loops, disconnection or malformed rotations.
BidirectedGraph import_undirected(int n, const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<std::vector<int>>& rotations,
                                  std::vector<std::string> labels = {});

// Recovers the bidirected structure of a ribbon digraph whose arc set is
// symmetric, pairing the k-th v->w arc with the k-th w->v arc (in slot
// order).  Returns nullopt if some arc has no reverse.
std::optional<BidirectedGraph> derive_pairing(const RibbonDigraph& g);

// Genus of the closed orientable surface defined by the rotation system,
// via face tracing: following an arc, the next arc of the face is the
// rotation successor of its reverse.  Euler's formula V - E + F = 2 - 2g.
int genus(const BidirectedGraph& bg);

// Spanning in-arborescence: every non-root vertex has one out-edge, given by
// its rotor slot, and following them reaches the root.  slot[root] == -1.
struct Arborescence {
    int root = 0;
    std::vector<int> slot;

    friend bool operator==(const Arborescence&, const Arborescence&) = default;
    friend bool operator<(const Arborescence& a, const Arborescence& b) {
        if (a.root != b.root) return a.root < b.root;
        return a.slot < b.slot;
    }
};

// Orients a spanning tree (a set of undirected edge ids) of a bidirected
// graph toward the root.  Throws std::invalid_argument if the edge set is
// not a spanning tree.
Arborescence tree_to_arborescence(const BidirectedGraph& bg, const std::vector<int>& tree_edges,
                                  int root);

// The undirected edge set underlying an arborescence of a bidirected graph.
std::vector<int> arborescence_to_tree(const BidirectedGraph& bg, const Arborescence& t);

// Rotor configuration agreeing with the arborescence off the root and with
// the given out-edge of the root.  Throws if extra.tail != root.
RotorConfiguration arborescence_to_rotor(const RibbonDigraph& g, const Arborescence& t,
                                         EdgeRef extra);

// Reads an arborescence off a rotor configuration: the non-root rotors must
// form a spanning in-arborescence rooted at root, else nullopt.
std::optional<Arborescence> arborescence_from_rotor(const RibbonDigraph& g,
                                                    const RotorConfiguration& rho, int root);

}  // namespace rotorlab
