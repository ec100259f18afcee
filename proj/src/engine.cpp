#include "rotorlab/engine.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace rotorlab {

namespace {

void check_state(const RibbonDigraph& g, const Drc& s) {
    const int n = g.vertex_count();
    if (static_cast<int>(s.divisor.size()) != n || static_cast<int>(s.rotor.size()) != n) {
        throw std::invalid_argument("state size does not match vertex count");
    }
    for (int v = 0; v < n; ++v) {
        if (s.rotor[v] < 0 || s.rotor[v] >= g.out_degree(v)) {
            throw std::invalid_argument("rotor slot out of range at " + g.label(v));
        }
    }
}

}  // namespace

void route_at_inplace(const RibbonDigraph& g, Drc& s, int v, bool legal_only) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    if (legal_only && s.divisor[v] <= 0) {
        throw std::invalid_argument("illegal routing: no chip at " + g.label(v));
    }
    int w = advance_chip(g, s.rotor, v);
    --s.divisor[v];
    ++s.divisor[w];
}

Drc route_at(const RibbonDigraph& g, Drc s, int v, bool legal_only) {
    check_state(g, s);
    route_at_inplace(g, s, v, legal_only);
    return s;
}

Drc apply_routing_vector(const RibbonDigraph& g, Drc s, const RoutingVector& r) {
    check_state(g, s);
    const int n = g.vertex_count();
    if (static_cast<int>(r.size()) != n) {
        throw std::invalid_argument("routing vector size does not match vertex count");
    }
    for (int v = 0; v < n; ++v) {
        if (r[v] < 0) {
            throw std::invalid_argument("routing vector must be nonnegative");
        }
    }
    for (int v = 0; v < n; ++v) {
        const BigInt d = g.out_degree(v);
        BigInt turns = r[v] / d;
        int rest = static_cast<int>(r[v] % d);
        if (turns > 0) {
            s.divisor[v] -= turns * d;
            for (auto [w, mult] : g.out_counts(v)) s.divisor[w] += turns * mult;
        }
        for (int i = 0; i < rest; ++i) {
            int w = advance_chip(g, s.rotor, v);
            --s.divisor[v];
            ++s.divisor[w];
        }
    }
    return s;
}

Drc fire_at(const RibbonDigraph& g, Drc s, int v) {
    check_state(g, s);
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    s.divisor[v] -= g.out_degree(v);
    for (auto [w, mult] : g.out_counts(v)) s.divisor[w] += mult;
    return s;
}

int single_chip_vertex(const Divisor& x) {
    int chip = -1;
    for (int v = 0; v < static_cast<int>(x.size()); ++v) {
        if (x[v] == 0) continue;
        if (x[v] != 1 || chip != -1) return -1;
        chip = v;
    }
    return chip;
}

Drc classical_step(const RibbonDigraph& g, Drc s) {
    check_state(g, s);
    int v = single_chip_vertex(s.divisor);
    if (v == -1) {
        throw std::invalid_argument("classical step requires exactly one chip");
    }
    route_at_inplace(g, s, v, true);
    return s;
}

bool is_unicycle(const RibbonDigraph& g, const Drc& s) {
    check_state(g, s);
    int v = single_chip_vertex(s.divisor);
    if (v == -1) return false;
    RotorCycles rc = rotor_subgraph_cycles(g, s.rotor);
    if (rc.cycles.size() != 1) return false;
    const auto& cycle = rc.cycles[0];
    return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
}

bool is_recurrent(const RibbonDigraph& g, const Drc& s) {
    check_state(g, s);
    for (const BigInt& c : s.divisor) {
        if (c < 0) return false;
    }
    RotorCycles rc = rotor_subgraph_cycles(g, s.rotor);
    for (const auto& cycle : rc.cycles) {
        bool chipped = false;
        for (int v : cycle) {
            if (s.divisor[v] > 0) {
                chipped = true;
                break;
            }
        }
        if (!chipped) return false;
    }
    return true;
}

GameTrace return_game(const RibbonDigraph& g, const Drc& s, std::uint64_t budget) {
    if (!is_recurrent(g, s)) {
        throw std::invalid_argument("return game requires a recurrent configuration");
    }
    const int n = g.vertex_count();
    IntVector per = period_vector(g);
    IntVector quota(n);
    BigInt total = 0;
    for (int v = 0; v < n; ++v) {
        quota[v] = per[v] * g.out_degree(v);
        total += quota[v];
    }
    if (total > budget) {
        throw BudgetExceeded("return game needs " + total.str() + " steps, budget is " +
                             std::to_string(budget));
    }

    RotorCycles rc = rotor_subgraph_cycles(g, s.rotor);
    GameTrace trace;
    trace.final = s;
    IntVector count(n, 0);
    // One chip per rotor cycle, pushed until it rests on a vertex whose
    // quota is spent; remaining chips never move.
    for (const auto& cycle : rc.cycles) {
        int c = -1;
        for (int v : cycle) {
            if (s.divisor[v] > 0) {
                c = v;
                break;
            }
        }
        while (count[c] < quota[c]) {
            route_at_inplace(g, trace.final, c, true);
            trace.routed.push_back(c);
            ++count[c];
            c = g.head(c, trace.final.rotor[c]);
        }
    }
    if (count != quota || !(trace.final == s)) {
        throw std::logic_error("return game failed to close");
    }
    return trace;
}

RepeatResult run_legal_until_repeat(const RibbonDigraph& g, Drc s, std::uint64_t budget) {
    check_state(g, s);
    if (divisor_degree(s.divisor) < 1) {
        throw std::invalid_argument("legal play requires degree at least 1");
    }
    std::map<Drc, std::uint64_t> seen;
    std::uint64_t step = 0;
    while (true) {
        auto [it, fresh] = seen.emplace(s, step);
        if (!fresh) {
            return {s, it->second, step - it->second};
        }
        if (step == budget) {
            throw BudgetExceeded("no repeat within " + std::to_string(budget) + " steps");
        }
        int v = 0;
        while (s.divisor[v] <= 0) ++v;  // degree >= 1 guarantees a positive vertex
        route_at_inplace(g, s, v, true);
        ++step;
    }
}

BigInt orbit_size(const RibbonDigraph& g) {
    IntVector per = period_vector(g);
    BigInt total = 0;
    for (int v = 0; v < g.vertex_count(); ++v) total += per[v] * g.out_degree(v);
    return total;
}

}  // namespace rotorlab
