#pragma once
// Linear equivalence of divisor-and-rotor configurations, reachability to
// recurrent targets, and unicycle-orbit analytics.
//
// Two DRCs are equivalent iff one is reachable from the other by
// unconstrained routings; decided by rotating all rotors forward onto the
// target configuration and solving the residual divisor difference over the
// Laplacian lattice.

#include <cstdint>
#include <optional>
#include <vector>

#include "rotorlab/engine.hpp"
#include "rotorlab/graph.hpp"
#include "rotorlab/lattice.hpp"

namespace rotorlab {

// alpha(v) = (slot(rho2(v)) - slot(rho1(v))) mod outdeg(v): the minimal
// routing counts turning rho1 into rho2.
RoutingVector alpha_vector(const RibbonDigraph& g, const RotorConfiguration& rho1,
                           const RotorConfiguration& rho2);

bool drc_equivalent(const RibbonDigraph& g, const Drc& a, const Drc& b);

// A nonnegative routing vector carrying a to b, or nullopt if inequivalent.
// Normalized minimally: subtracting the all-vertex full-turn block
// outdeg(v)*per(v) once would make some entry negative.
std::optional<RoutingVector> routing_witness(const RibbonDigraph& g, const Drc& a, const Drc& b);

// Whether some legal game leads from a to b.  Only decidable for recurrent
// targets, where it coincides with equivalence; throws std::invalid_argument
// otherwise.
bool reachable(const RibbonDigraph& g, const Drc& a, const Drc& b);

// Orbit membership for unicycles; throws std::invalid_argument if either
// input is not a unicycle.
bool same_orbit(const RibbonDigraph& g, const Drc& u1, const Drc& u2);

// All DRCs (one chip at v, rho) whose rotor subgraph has a unique cycle
// through v.  Deterministic order: rotor configurations in ascending slot
// order, chip positions along each cycle from its smallest vertex.
std::vector<Drc> enumerate_unicycles(const RibbonDigraph& g,
                                     std::uint64_t cap = kDefaultStepBudget);

enum class OrbitCountMethod { kEnumeration, kPicard };

// Number of orbits of the classical walk on unicycles; method kEnumeration
// partitions enumerate_unicycles by walked orbits (parallelizable), method
// kPicard returns picard_order(g).  Both agree.
BigInt count_unicycle_orbits(const RibbonDigraph& g,
                             OrbitCountMethod method = OrbitCountMethod::kPicard,
                             std::uint64_t cap = kDefaultStepBudget, int jobs = 1);

// A recurrent DRC equivalent to (and legally reachable from) the input.
// Recurrent inputs are returned unchanged.  Requires degree >= 1.
Drc recurrent_representative(const RibbonDigraph& g, const Drc& s,
                             std::uint64_t budget = kDefaultStepBudget);

}  // namespace rotorlab
