#pragma once

#include <vector>

namespace hamdec {

// Dinic max-flow on integer capacities.  Strongly polynomial on unit-capacity
// networks; integral flows throughout.
class MaxFlow {
  public:
    explicit MaxFlow(int n) : head_(n, -1) {}

    // Returns an edge id usable with flow_on() after run().
    int add_edge(int u, int v, long long cap);
    long long run(int s, int t);
    long long flow_on(int id) const;  // flow pushed through edge id

    // Vertices reachable from s in the residual graph (valid after run);
    // the complement certifies the min cut.
    std::vector<char> min_cut_side(int s) const;

  private:
    struct E {
        int to, next;
        long long cap;
    };
    std::vector<E> edges_;
    std::vector<int> head_;
    std::vector<int> level_, iter_;
    bool bfs(int s, int t);
    long long dfs(int v, int t, long long f);
};

}  // namespace hamdec
