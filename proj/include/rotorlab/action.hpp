#pragma once
// The rotor-router action of the Picard group on spanning in-arborescences
// of Eulerian digraphs: direct simulation, the canonical-form alternative
// definition, a pure lattice decision, and the cycle-reversal and
// base-point-independence tests for bidirected graphs.

#include <cstdint>
#include <optional>
#include <vector>

#include "rotorlab/engine.hpp"
#include "rotorlab/equivalence.hpp"
#include "rotorlab/graph.hpp"

namespace rotorlab {

// Zero divisor, rotor at the root on a fixed out-edge, all other rotors a
// spanning in-arborescence to the root: the unique canonical configuration
// of its equivalence class.
struct RwGoodForm {
    int root = 0;
    EdgeRef root_edge;
    RotorConfiguration rotor;

    friend bool operator==(const RwGoodForm&, const RwGoodForm&) = default;
};

// A divisor equivalent to x that is nonnegative outside the root, built by
// firing vertices outward along a breadth-first tree from the root (children
// are covered before their parent's firing count is fixed).
Divisor make_nonneg_off_root(const RibbonDigraph& g, const Divisor& x, int root);

enum class Schedule { kSmallestIndex, kLargestIndex };

// The action by direct play: rotors start at T plus the root edge at slot
// w_slot; an equivalent divisor nonnegative off the root is routed legally,
// never at the root, until every chip sits at the root.  Requires an
// Eulerian graph and degree(x) == 0.
Arborescence action_simulate(const RibbonDigraph& g, const Divisor& x, const Arborescence& t,
                             int w_slot = 0, Schedule schedule = Schedule::kSmallestIndex,
                             std::uint64_t budget = kDefaultStepBudget);

// The unique good form equivalent to a degree-zero DRC: add a chip at the
// root, walk to the recurrent (unicycle) representative, roll the orbit to
// the moment the chip is at the root with the root rotor on w_slot, remove
// the chip.
RwGoodForm rw_good_canonical(const RibbonDigraph& g, const Drc& s, int root, int w_slot = 0,
                             std::uint64_t budget = kDefaultStepBudget);

// The action via rw_good_canonical of (x, T plus root edge); agrees with
// action_simulate everywhere.
Arborescence action_alternative(const RibbonDigraph& g, const Divisor& x, const Arborescence& t,
                                int w_slot = 0, std::uint64_t budget = kDefaultStepBudget);

// Whether the action of x sends t1 to t2, decided by pure lattice
// equivalence of (x, t1 + root slot 0) and (0, t2 + root slot 0).
bool action_decide(const RibbonDigraph& g, const Divisor& x, const Arborescence& t1,
                   const Arborescence& t2);

// Every directed rotor cycle replaced by its reverse (each cycle vertex's
// new rotor is the reverse of its predecessor's rotor edge); rotors off the
// cycles are unchanged.
RotorConfiguration reverse_cycles(const BidirectedGraph& bg, const RotorConfiguration& rho);

// Whether every unicycle is equivalent to its cycle reversal.
bool reversal_test(const BidirectedGraph& bg, std::uint64_t cap = kDefaultStepBudget);

// Whether the tree-level action is the same from every base vertex; holds
// exactly when reversal_test does.
bool base_point_independent(const BidirectedGraph& bg, std::uint64_t cap = kDefaultStepBudget);

// Orient the tree toward root, act by x, return the image's underlying tree.
std::vector<int> tree_action(const BidirectedGraph& bg, const Divisor& x,
                             const std::vector<int>& tree, int root,
                             std::uint64_t budget = kDefaultStepBudget);

// All spanning trees (as sorted undirected edge id lists) of a desk-scale
// bidirected graph, in lexicographic order.
std::vector<std::vector<int>> spanning_trees(const BidirectedGraph& bg,
                                             std::uint64_t cap = kDefaultStepBudget);

// One degree-zero divisor per Picard class, found by scanning divisors with
// growing entry bounds and deduplicating by equivalence.
std::vector<Divisor> picard_class_representatives(const RibbonDigraph& g,
                                                  std::uint64_t cap = kDefaultStepBudget);

struct BasePointWitness {
    int base_a = 0;
    int base_b = 0;
    std::vector<int> tree;     // undirected edge ids
    Divisor x;                 // degree-zero divisor
    std::vector<int> image_a;  // image tree of the action based at base_a
    std::vector<int> image_b;
};

// A concrete disagreement (bases, tree, divisor) when the action is base
// point dependent; nullopt when it is independent.
std::optional<BasePointWitness> base_point_witness(const BidirectedGraph& bg,
                                                   std::uint64_t cap = kDefaultStepBudget);

}  // namespace rotorlab
