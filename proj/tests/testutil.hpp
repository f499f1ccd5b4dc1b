#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "hamdec/graph.hpp"

namespace hamdec {
namespace testutil {

// Random d-regular graph, deterministic for a fixed seed.  Built as a union
// of random perfect matchings (n even) or random Hamilton cycles (n odd,
// d even), re-drawing any round that collides with earlier edges.
inline Graph random_regular(int n, int d, std::uint64_t seed) {
    if ((n * d) % 2 != 0) throw domain_error("n*d must be even");
    if (d >= n) throw domain_error("d must be below n");
    std::mt19937_64 rng(seed);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Graph g(n);
    int rounds = (n % 2 == 0) ? d : d / 2;
    for (int round = 0; round < rounds; ++round) {
        bool placed = false;
        for (int attempt = 0; attempt < 20000 && !placed; ++attempt) {
            std::shuffle(perm.begin(), perm.end(), rng);
            EdgeList batch;
            bool ok = true;
            if (n % 2 == 0) {
                for (int i = 0; i < n && ok; i += 2) {
                    if (g.has_edge(perm[i], perm[i + 1])) ok = false;
                    else batch.push_back(make_edge(perm[i], perm[i + 1]));
                }
            } else {
                for (int i = 0; i < n && ok; ++i) {
                    int u = perm[i], v = perm[(i + 1) % n];
                    if (g.has_edge(u, v)) ok = false;
                    else batch.push_back(make_edge(u, v));
                }
            }
            if (ok) {
                std::sort(batch.begin(), batch.end());
                if (std::adjacent_find(batch.begin(), batch.end()) != batch.end()) continue;
                for (auto [u, v] : batch) g.add_edge(u, v);
                placed = true;
            }
        }
        if (!placed) throw infeasible_error("random_regular: could not place a round");
    }
    return g;
}

inline Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) g.add_edge(u, v);
    return g;
}

// Random bipartition with |A'| = k (A0, B0 empty).
inline BiPartition random_bipartition(int n, int k, std::uint64_t seed) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(perm.begin(), perm.end(), rng);
    BiPartition p;
    p.A.assign(perm.begin(), perm.begin() + k);
    p.B.assign(perm.begin() + k, perm.end());
    std::sort(p.A.begin(), p.A.end());
    std::sort(p.B.begin(), p.B.end());
    return p;
}

inline Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);              // spokes
    }
    return g;
}

}  // namespace testutil
}  // namespace hamdec
