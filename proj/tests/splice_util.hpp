#pragma once

#include <random>

#include "hamdec/exceptional.hpp"
#include "hamdec/generators.hpp"

namespace hamdec {
namespace testutil {

// A seeded desk-scale splice instance: partition with |A| = |B|, up to three
// exceptional vertices, an exceptional system J of the requested kind, and
// side cycles consistent with the fictive matchings.
struct SpliceInstance {
    int n = 0;
    BiPartition p;
    exceptional::ExceptionalSystem j;
    std::vector<int> c_a, c_b;
    Graph host;  // complete graph; contains every edge the splice can touch
};

inline SpliceInstance make_splice_instance(std::uint64_t seed, bool hes) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    SpliceInstance ins;
    int v0 = pick(0, 3);
    // MES splits into perfect matchings later, which needs |A'|, |B'| even
    if (!hes && v0 % 2 == 1) --v0;
    int a0 = hes ? pick(0, v0) : v0 / 2;
    int b0 = v0 - a0;

    // plan the path routing first, then size the classes from the demand
    int ab_paths = hes ? (v0 >= 2 ? 2 : 2 * pick(1, 2)) : 0;
    std::vector<char> through(ab_paths, 0);
    std::vector<int> v0_ids(v0);
    std::iota(v0_ids.begin(), v0_ids.end(), 0);  // 0..a0-1 in A0, a0..v0-1 in B0
    std::shuffle(v0_ids.begin(), v0_ids.end(), rng);
    int routed = 0;
    if (hes)
        for (int i = 0; i < ab_paths && routed < v0; ++i)
            if (rng() % 2 == 0) through[i] = 1, ++routed;
    int leftover_a = 0, leftover_b = 0;
    for (int t = routed; t < v0; ++t) (v0_ids[t] < a0 ? leftover_a : leftover_b) += 1;
    int demand_a = ab_paths + 2 * leftover_a;
    int demand_b = ab_paths + 2 * leftover_b;
    if (!hes) {
        demand_a = 2 * a0;
        demand_b = 2 * b0;
    }
    int na = std::max({demand_a, demand_b, 4});
    int max_extra = std::max(0, (20 - v0) / 2 - na);
    na += pick(0, std::min(2, max_extra));

    ins.n = 2 * na + v0;
    for (int v = 0; v < na; ++v) ins.p.A.push_back(v);
    for (int v = na; v < 2 * na; ++v) ins.p.B.push_back(v);
    for (int t = 0; t < a0; ++t) ins.p.A0.push_back(2 * na + t);
    for (int t = a0; t < v0; ++t) ins.p.B0.push_back(2 * na + t);

    std::vector<int> free_a = ins.p.A, free_b = ins.p.B;
    std::shuffle(free_a.begin(), free_a.end(), rng);
    std::shuffle(free_b.begin(), free_b.end(), rng);
    auto take = [&](std::vector<int>& pool) {
        int v = pool.back();
        pool.pop_back();
        return v;
    };

    EdgeList edges;
    if (hes) {
        int next_v0 = 0;
        for (int i = 0; i < ab_paths; ++i) {
            int x = take(free_a), y = take(free_b);
            if (through[i]) {
                int v = 2 * na + v0_ids[next_v0++];
                edges.push_back(make_edge(x, v));
                edges.push_back(make_edge(v, y));
            } else {
                edges.push_back(make_edge(x, y));
            }
        }
        for (int t = routed; t < v0; ++t) {
            int v = 2 * na + v0_ids[t];
            auto& pool = v0_ids[t] < a0 ? free_a : free_b;
            int x = take(pool), y = take(pool);
            edges.push_back(make_edge(x, v));
            edges.push_back(make_edge(v, y));
        }
    } else {
        for (int v : ins.p.A0) {
            int x = take(free_a), y = take(free_a);
            edges.push_back(make_edge(x, v));
            edges.push_back(make_edge(v, y));
        }
        for (int v : ins.p.B0) {
            int x = take(free_b), y = take(free_b);
            edges.push_back(make_edge(x, v));
            edges.push_back(make_edge(v, y));
        }
    }
    ins.j.n = ins.n;
    ins.j.edges = edges;
    ins.j.kind = hes ? exceptional::ESKind::HES : exceptional::ESKind::MES;
    ins.j.eps0 = 1.0;

    // side cycles: fictive pair edges consecutive, prescribed visit order
    auto f = exceptional::fictive(ins.j, ins.p);
    auto build_cycle = [&](const std::vector<int>& side, const std::vector<int>& visit,
                           const std::vector<Edge>& fict) {
        std::vector<int> cyc;
        std::vector<char> used(ins.n, 0);
        for (int v : visit) {
            cyc.push_back(v);
            used[v] = 1;
        }
        for (auto [u, v] : fict) {
            if (used[u] || used[v]) continue;  // pair edges already placed via visit
            cyc.push_back(u);
            cyc.push_back(v);
            used[u] = used[v] = 1;
        }
        for (int v : side)
            if (!used[v]) cyc.push_back(v);
        return cyc;
    };
    ins.c_a = build_cycle(ins.p.A, f.visit_a, f.jstar_a);
    ins.c_b = build_cycle(ins.p.B, f.visit_b, f.jstar_b);
    ins.host = gen_complete(ins.n);
    return ins;
}

}  // namespace testutil
}  // namespace hamdec
