#include "ebetti/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "ebetti/errors.hpp"

namespace ebetti {

namespace {

// Minimal union-find over 1-indexed vertices.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n + 1) {
        for (int i = 0; i <= n; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) { parent_[find(a)] = find(b); }

private:
    std::vector<int> parent_;
};

}  // namespace

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

SimpleGraph::SimpleGraph(int n, const std::vector<Edge>& edges) : n_(n) {
    if (n < 1) {
        throw VertexOutOfRangeError("vertex universe must have size >= 1, got " +
                                    std::to_string(n));
    }
    edges_.reserve(edges.size());
    for (auto [i, j] : edges) {
        if (i == j) {
            throw LoopEdgeError("loop edge at vertex " + std::to_string(i));
        }
        if (i < 1 || i > n || j < 1 || j > n) {
            throw VertexOutOfRangeError("edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ") outside universe [1," +
                                        std::to_string(n) + "]");
        }
        if (i > j) std::swap(i, j);
        edges_.emplace_back(i, j);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    adj_.assign(n_ + 1, {});
    for (auto [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (int v = 1; v <= n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        if (!adj_[v].empty()) support_.push_back(v);
        max_degree_ = std::max(max_degree_, static_cast<int>(adj_[v].size()));
    }
}

void SimpleGraph::check_vertex(int v) const {
    if (v < 1 || v > n_) {
        throw VertexOutOfRangeError("vertex " + std::to_string(v) + " outside [1," +
                                    std::to_string(n_) + "]");
    }
}

bool SimpleGraph::has_edge(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) return false;
    const auto& a = adj_[i];
    return std::binary_search(a.begin(), a.end(), j);
}

const std::vector<int>& SimpleGraph::neighbors(int i) const {
    check_vertex(i);
    return adj_[i];
}

int SimpleGraph::degree(int i) const {
    check_vertex(i);
    return static_cast<int>(adj_[i].size());
}

bool SimpleGraph::in_support(int i) const {
    check_vertex(i);
    return !adj_[i].empty();
}

SimpleGraph SimpleGraph::induced_subgraph(const std::vector<int>& w) const {
    std::vector<char> in_w(n_ + 1, 0);
    for (int v : w) {
        check_vertex(v);
        in_w[v] = 1;
    }
    std::vector<Edge> kept;
    for (auto [i, j] : edges_) {
        if (in_w[i] && in_w[j]) kept.emplace_back(i, j);
    }
    return SimpleGraph(n_, kept);
}

int SimpleGraph::component_count() const {
    UnionFind uf(n_);
    for (auto [i, j] : edges_) uf.unite(i, j);
    int count = 0;
    for (int v : support_) {
        if (uf.find(v) == v) ++count;
    }
    return count;
}

std::optional<int> SimpleGraph::girth() const {
    // BFS from every support vertex; the shortest cycle through the root is
    // found when a non-tree edge closes two BFS branches. Minimizing over all
    // roots yields the exact girth.
    int best = -1;
    std::vector<int> dist(n_ + 1), parent(n_ + 1);
    for (int root : support_) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), 0);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int y : adj_[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push(y);
                } else if (y != parent[x]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) best = len;
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best;
}

long long SimpleGraph::triangle_count() const {
    // Each triangle is charged to its lexicographically smallest edge.
    long long count = 0;
    for (auto [i, j] : edges_) {
        const auto& a = adj_[i];
        const auto& b = adj_[j];
        size_t x = 0, y = 0;
        while (x < a.size() && y < b.size()) {
            if (a[x] < b[y]) {
                ++x;
            } else if (a[x] > b[y]) {
                ++y;
            } else {
                if (a[x] > j) ++count;
                ++x;
                ++y;
            }
        }
    }
    return count;
}

long long SimpleGraph::four_cycle_count() const {
    // A 4-cycle u-x-v-y is determined by its two diagonal pairs {u,v}, {x,y};
    // summing C(codeg(u,v), 2) over all vertex pairs counts each cycle twice.
    long long twice = 0;
    for (int u = 1; u <= n_; ++u) {
        for (int v = u + 1; v <= n_; ++v) {
            const auto& a = adj_[u];
            const auto& b = adj_[v];
            long long codeg = 0;
            size_t x = 0, y = 0;
            while (x < a.size() && y < b.size()) {
                if (a[x] < b[y]) {
                    ++x;
                } else if (a[x] > b[y]) {
                    ++y;
                } else {
                    ++codeg;
                    ++x;
                    ++y;
                }
            }
            twice += binomial(codeg, 2);
        }
    }
    return twice / 2;
}

long long SimpleGraph::sum_degree_choose_2() const {
    long long s = 0;
    for (int v : support_) {
        long long d = degree(v);
        s += d * (d - 1) / 2;
    }
    return s;
}

}  // namespace ebetti
