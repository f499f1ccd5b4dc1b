#include "hamdec/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace hamdec {

int MaxFlow::add_edge(int u, int v, long long cap) {
    int id = static_cast<int>(edges_.size());
    edges_.push_back({v, head_[u], cap});
    head_[u] = id;
    edges_.push_back({u, head_[v], 0});
    head_[v] = id + 1;
    return id;
}

bool MaxFlow::bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id = head_[v]; id != -1; id = edges_[id].next) {
            const E& e = edges_[id];
            if (e.cap > 0 && level_[e.to] < 0) {
                level_[e.to] = level_[v] + 1;
                q.push(e.to);
            }
        }
    }
    return level_[t] >= 0;
}

long long MaxFlow::dfs(int v, int t, long long f) {
    if (v == t) return f;
    for (int& id = iter_[v]; id != -1; id = edges_[id].next) {
        E& e = edges_[id];
        if (e.cap > 0 && level_[e.to] == level_[v] + 1) {
            long long d = dfs(e.to, t, std::min(f, e.cap));
            if (d > 0) {
                e.cap -= d;
                edges_[id ^ 1].cap += d;
                return d;
            }
        }
    }
    return 0;
}

long long MaxFlow::run(int s, int t) {
    long long total = 0;
    while (bfs(s, t)) {
        iter_ = head_;
        while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) total += f;
    }
    return total;
}

long long MaxFlow::flow_on(int id) const { return edges_[id ^ 1].cap; }

std::vector<char> MaxFlow::min_cut_side(int s) const {
    std::vector<char> side(head_.size(), 0);
    std::queue<int> q;
    side[s] = 1;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int id = head_[v]; id != -1; id = edges_[id].next) {
            const E& e = edges_[id];
            if (e.cap > 0 && !side[e.to]) {
                side[e.to] = 1;
                q.push(e.to);
            }
        }
    }
    return side;
}

}  // namespace hamdec
