#pragma once
// The rotor-routing game: single routings, bulk routing vectors, the
// classical one-chip walk, unicycle and recurrence predicates, and return
// games.
//
// Routing convention: advance the rotor at v first, then move one chip from
// v along the NEW rotor edge.  A routing is legal iff v holds a positive
// chip count before the move.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rotorlab/graph.hpp"
#include "rotorlab/lattice.hpp"

namespace rotorlab {

// Per-vertex routing counts.  Nonnegative when used as a game prescription.
using RoutingVector = std::vector<BigInt>;

inline constexpr std::uint64_t kDefaultStepBudget = 1'000'000;

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// One rotor-walk step without divisor bookkeeping: advances the rotor at v
// and returns the vertex the chip moves to.
inline int advance_chip(const RibbonDigraph& g, RotorConfiguration& rho, int v) {
    rho[v] = (rho[v] + 1) % g.out_degree(v);
    return g.head(v, rho[v]);
}

void route_at_inplace(const RibbonDigraph& g, Drc& s, int v, bool legal_only = false);
Drc route_at(const RibbonDigraph& g, Drc s, int v, bool legal_only = false);

// Any interleaving of r(v) unconstrained routings per vertex; computed in
// bulk (full turns dispatch chips by edge multiplicity, the remainder is
// walked slot by slot).
Drc apply_routing_vector(const RibbonDigraph& g, Drc s, const RoutingVector& r);

// Chip-firing: x + L * indicator(v).  Rotors are untouched.
Drc fire_at(const RibbonDigraph& g, Drc s, int v);

// The vertex carrying the single chip of a one-chip divisor, or -1 if the
// divisor is not of that shape.
int single_chip_vertex(const Divisor& x);

// Routes at the unique chip vertex of a one-chip DRC.
Drc classical_step(const RibbonDigraph& g, Drc s);

// One chip, a unique rotor cycle, and the chip on that cycle.
bool is_unicycle(const RibbonDigraph& g, const Drc& s);

// Nonnegative divisor and every rotor cycle carries a chip; equivalent to
// the existence of a nonempty legal game returning to s.
bool is_recurrent(const RibbonDigraph& g, const Drc& s);

struct GameTrace {
    std::vector<int> routed;  // vertices in routing order
    Drc final;
};

// A legal game from a recurrent DRC back to itself routing every vertex v
// exactly outdeg(v) * per(v) times: one chip per rotor cycle is pushed until
// it rests on a vertex whose routing quota is spent, idle chips ride along.
GameTrace return_game(const RibbonDigraph& g, const Drc& s,
                      std::uint64_t budget = kDefaultStepBudget);

struct RepeatResult {
    Drc state;                    // first DRC seen twice; always recurrent
    std::uint64_t steps_to_enter = 0;
    std::uint64_t cycle_length = 0;
};

// Plays the legal game deterministically (route the smallest-index vertex
// with positive chips) until a configuration repeats.  Requires degree >= 1
// so a legal move always exists.
RepeatResult run_legal_until_repeat(const RibbonDigraph& g, Drc s,
                                    std::uint64_t budget = kDefaultStepBudget);

// Size of every unicycle orbit of the classical walk: sum of per(v)*outdeg(v).
BigInt orbit_size(const RibbonDigraph& g);

}  // namespace rotorlab
