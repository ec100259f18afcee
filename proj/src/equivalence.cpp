#include "rotorlab/equivalence.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <thread>
#include <utility>

namespace rotorlab {

RoutingVector alpha_vector(const RibbonDigraph& g, const RotorConfiguration& rho1,
                           const RotorConfiguration& rho2) {
    const int n = g.vertex_count();
    if (static_cast<int>(rho1.size()) != n || static_cast<int>(rho2.size()) != n) {
        throw std::invalid_argument("rotor configuration size does not match vertex count");
    }
    RoutingVector alpha(n);
    for (int v = 0; v < n; ++v) {
        int d = g.out_degree(v);
        alpha[v] = ((rho2[v] - rho1[v]) % d + d) % d;
    }
    return alpha;
}

bool drc_equivalent(const RibbonDigraph& g, const Drc& a, const Drc& b) {
    Drc rotated = apply_routing_vector(g, a, alpha_vector(g, a.rotor, b.rotor));
    return divisors_equivalent(g, rotated.divisor, b.divisor);
}

std::optional<RoutingVector> routing_witness(const RibbonDigraph& g, const Drc& a, const Drc& b) {
    RoutingVector alpha = alpha_vector(g, a.rotor, b.rotor);
    Drc rotated = apply_routing_vector(g, a, alpha);
    auto z = firing_witness(g, rotated.divisor, b.divisor);
    if (!z) return std::nullopt;
    IntVector shifted = nonneg_shift(g, *z);
    RoutingVector r(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        r[v] = alpha[v] + g.out_degree(v) * shifted[v];
    }
    return r;
}

bool reachable(const RibbonDigraph& g, const Drc& a, const Drc& b) {
    if (!is_recurrent(g, b)) {
        throw std::invalid_argument(
            "target configuration is not recurrent (reachability is only decided for recurrent "
            "targets)");
    }
    return drc_equivalent(g, a, b);
}

bool same_orbit(const RibbonDigraph& g, const Drc& u1, const Drc& u2) {
    if (!is_unicycle(g, u1) || !is_unicycle(g, u2)) {
        throw std::invalid_argument("orbit test requires unicycles");
    }
    return drc_equivalent(g, u1, u2);
}

std::vector<Drc> enumerate_unicycles(const RibbonDigraph& g, std::uint64_t cap) {
    const int n = g.vertex_count();
    BigInt configs = 1;
    for (int v = 0; v < n; ++v) configs *= g.out_degree(v);
    if (configs > cap) {
        throw BudgetExceeded("rotor configuration count " + configs.str() + " exceeds cap " +
                             std::to_string(cap));
    }

    std::vector<Drc> unicycles;
    RotorConfiguration rho(n, 0);
    while (true) {
        RotorCycles rc = rotor_subgraph_cycles(g, rho);
        if (rc.cycles.size() == 1) {
            for (int v : rc.cycles[0]) {
                Divisor x(n, 0);
                x[v] = 1;
                unicycles.push_back({std::move(x), rho});
                if (unicycles.size() > cap) {
                    throw BudgetExceeded("unicycle count exceeds cap " + std::to_string(cap));
                }
            }
        }
        int v = n - 1;
        while (v >= 0 && rho[v] == g.out_degree(v) - 1) {
            rho[v] = 0;
            --v;
        }
        if (v < 0) break;
        ++rho[v];
    }
    return unicycles;
}

namespace {

using WalkState = std::pair<int, RotorConfiguration>;  // chip position, rotor

// Least state on the orbit through `start`, marking every visited state.
WalkState orbit_key(const RibbonDigraph& g, WalkState start, std::set<WalkState>& visited,
                    std::uint64_t cap) {
    WalkState best = start;
    WalkState cur = start;
    std::uint64_t steps = 0;
    do {
        visited.insert(cur);
        if (cur < best) best = cur;
        cur.first = advance_chip(g, cur.second, cur.first);
        if (++steps > cap) {
            throw BudgetExceeded("orbit walk exceeds cap " + std::to_string(cap));
        }
    } while (cur != start);
    return best;
}

}  // namespace

BigInt count_unicycle_orbits(const RibbonDigraph& g, OrbitCountMethod method, std::uint64_t cap,
                             int jobs) {
    if (method == OrbitCountMethod::kPicard) {
        return picard_order(g);
    }
    std::vector<Drc> unicycles = enumerate_unicycles(g, cap);
    jobs = std::max(1, jobs);
    const int count = static_cast<int>(unicycles.size());

    std::vector<std::set<WalkState>> keys(jobs);
    auto work = [&](int j) {
        std::set<WalkState> visited;
        // Contiguous share of the unicycle list.
        int lo = static_cast<int>(static_cast<long long>(count) * j / jobs);
        int hi = static_cast<int>(static_cast<long long>(count) * (j + 1) / jobs);
        for (int i = lo; i < hi; ++i) {
            WalkState s{single_chip_vertex(unicycles[i].divisor), unicycles[i].rotor};
            if (visited.count(s)) continue;
            keys[j].insert(orbit_key(g, s, visited, cap));
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& t : threads) t.join();
    }
    std::set<WalkState> merged;
    for (const auto& k : keys) merged.insert(k.begin(), k.end());
    return static_cast<int>(merged.size());
}

Drc recurrent_representative(const RibbonDigraph& g, const Drc& s, std::uint64_t budget) {
    if (divisor_degree(s.divisor) < 1) {
        throw std::invalid_argument("recurrent representatives exist only for degree >= 1");
    }
    if (is_recurrent(g, s)) return s;
    return run_legal_until_repeat(g, s, budget).state;
}

}  // namespace rotorlab
