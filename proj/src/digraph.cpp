#include "swapsim/digraph.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace swapsim {

std::string to_string(const Arc& a) { return a.head + "->" + a.tail; }

Digraph::Digraph(std::vector<VertexId> vertexes, std::vector<Arc> arcs)
    : vertexes_(std::move(vertexes)), arcs_(std::move(arcs)) {
    std::sort(vertexes_.begin(), vertexes_.end());
    if (std::adjacent_find(vertexes_.begin(), vertexes_.end()) != vertexes_.end())
        throw SwapError("duplicate vertex");
    std::sort(arcs_.begin(), arcs_.end());
    if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end())
        throw SwapError("duplicate arc");
    for (const Arc& a : arcs_) {
        if (a.head == a.tail) throw SwapError("self-loop arc " + to_string(a));
        if (!has_vertex(a.head) || !has_vertex(a.tail))
            throw SwapError("arc endpoint not a vertex: " + to_string(a));
    }
}

bool Digraph::has_vertex(const VertexId& v) const {
    return std::binary_search(vertexes_.begin(), vertexes_.end(), v);
}

bool Digraph::has_arc(const VertexId& u, const VertexId& v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

std::vector<Arc> Digraph::arcs_entering(const VertexId& v) const {
    std::vector<Arc> out;
    for (const Arc& a : arcs_)
        if (a.tail == v) out.push_back(a);
    return out;
}

std::vector<Arc> Digraph::arcs_leaving(const VertexId& v) const {
    std::vector<Arc> out;
    for (const Arc& a : arcs_)
        if (a.head == v) out.push_back(a);
    return out;
}

Digraph Digraph::transpose() const {
    std::vector<Arc> rev;
    rev.reserve(arcs_.size());
    for (const Arc& a : arcs_) rev.push_back(Arc{a.tail, a.head});
    return Digraph(vertexes_, std::move(rev));
}

namespace {

// index-based adjacency for the search routines
struct Adj {
    std::vector<VertexId> names;
    std::map<VertexId, int> index;
    std::vector<std::vector<int>> out;

    explicit Adj(const Digraph& d) : names(d.vertexes()) {
        for (int i = 0; i < static_cast<int>(names.size()); ++i) index[names[i]] = i;
        out.resize(names.size());
        for (const Arc& a : d.arcs()) out[index.at(a.head)].push_back(index.at(a.tail));
    }
};

void reach_dfs(const std::vector<std::vector<int>>& out, int v, std::vector<bool>& seen) {
    seen[v] = true;
    for (int w : out[v])
        if (!seen[w]) reach_dfs(out, w, seen);
}

int longest_simple_dfs(const Adj& adj, int cur, int goal, std::vector<bool>& used, int len) {
    if (cur == goal) return len;
    int best = -1;
    used[cur] = true;
    for (int w : adj.out[cur]) {
        if (used[w] && w != goal) continue;
        if (w == goal) {
            best = std::max(best, len + 1);
            continue;
        }
        best = std::max(best, longest_simple_dfs(adj, w, goal, used, len + 1));
    }
    used[cur] = false;
    return best;
}

bool has_cycle(const std::vector<std::vector<int>>& out, const std::vector<bool>& removed) {
    const int n = static_cast<int>(out.size());
    std::vector<int> color(n, 0);  // 0 white, 1 on stack, 2 done
    std::function<bool(int)> dfs = [&](int v) -> bool {
        color[v] = 1;
        for (int w : out[v]) {
            if (removed[w]) continue;
            if (color[w] == 1) return true;
            if (color[w] == 0 && dfs(w)) return true;
        }
        color[v] = 2;
        return false;
    };
    for (int v = 0; v < n; ++v)
        if (!removed[v] && color[v] == 0 && dfs(v)) return true;
    return false;
}

void check_size(const Digraph& d, std::size_t max_vertexes) {
    if (d.vertexes().size() > max_vertexes)
        throw SwapError("digraph exceeds analysis size bound of " +
                        std::to_string(max_vertexes) + " vertexes");
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
    const Adj adj(d);
    const int n = static_cast<int>(adj.names.size());
    if (n <= 1) return true;
    std::vector<bool> seen(n, false);
    reach_dfs(adj.out, 0, seen);
    if (std::count(seen.begin(), seen.end(), true) != n) return false;
    // transpose reachability from the same root
    std::vector<std::vector<int>> rin(n);
    for (int v = 0; v < n; ++v)
        for (int w : adj.out[v]) rin[w].push_back(v);
    std::fill(seen.begin(), seen.end(), false);
    reach_dfs(rin, 0, seen);
    return std::count(seen.begin(), seen.end(), true) == n;
}

std::optional<int> longest_path_len(const Digraph& d, const VertexId& u, const VertexId& v,
                                    std::size_t max_vertexes) {
    if (!d.has_vertex(u) || !d.has_vertex(v)) throw SwapError("longest_path_len: unknown vertex");
    check_size(d, max_vertexes);
    if (u == v) return 0;  // degenerate path
    const Adj adj(d);
    std::vector<bool> used(adj.names.size(), false);
    int best = longest_simple_dfs(adj, adj.index.at(u), adj.index.at(v), used, 0);
    if (best < 0) return std::nullopt;
    return best;
}

namespace {

int diameter_impl(const Digraph& d, std::size_t max_vertexes, bool require_reachable) {
    check_size(d, max_vertexes);
    int best = 0;
    for (const VertexId& u : d.vertexes()) {
        for (const VertexId& v : d.vertexes()) {
            if (u == v) continue;
            auto len = longest_path_len(d, u, v, max_vertexes);
            if (!len) {
                if (require_reachable) throw SwapError("diameter: digraph not strongly connected");
                continue;
            }
            best = std::max(best, *len);
        }
    }
    return best;
}

}  // namespace

int diameter(const Digraph& d, std::size_t max_vertexes) {
    if (!is_strongly_connected(d)) throw SwapError("diameter: digraph not strongly connected");
    return diameter_impl(d, max_vertexes, true);
}

int diameter_relaxed(const Digraph& d, std::size_t max_vertexes) {
    return diameter_impl(d, max_vertexes, false);
}

bool is_feedback_vertex_set(const Digraph& d, const std::set<VertexId>& l) {
    for (const VertexId& v : l)
        if (!d.has_vertex(v)) throw SwapError("is_feedback_vertex_set: unknown vertex " + v);
    const Adj adj(d);
    std::vector<bool> removed(adj.names.size(), false);
    for (const VertexId& v : l) removed[adj.index.at(v)] = true;
    return !has_cycle(adj.out, removed);
}

std::vector<std::vector<VertexId>> min_feedback_vertex_sets(const Digraph& d,
                                                            std::size_t max_vertexes) {
    check_size(d, max_vertexes);
    const Adj adj(d);
    const int n = static_cast<int>(adj.names.size());
    std::vector<std::vector<VertexId>> result;
    for (int size = 0; size <= n; ++size) {
        // subsets in lexicographic order over sorted vertex indexes
        std::vector<int> pick;
        std::function<void(int)> rec = [&](int from) {
            if (static_cast<int>(pick.size()) == size) {
                std::vector<bool> removed(n, false);
                for (int i : pick) removed[i] = true;
                if (!has_cycle(adj.out, removed)) {
                    std::vector<VertexId> names;
                    for (int i : pick) names.push_back(adj.names[i]);
                    result.push_back(std::move(names));
                }
                return;
            }
            for (int i = from; i < n; ++i) {
                pick.push_back(i);
                rec(i + 1);
                pick.pop_back();
            }
        };
        rec(0);
        if (!result.empty()) return result;
    }
    return result;
}

bool is_valid_hashkey_path(const Digraph& d, const std::vector<VertexId>& p,
                           const VertexId& leader, const VertexId& counterparty) {
    if (p.empty()) return false;
    if (p.front() != counterparty || p.back() != leader) return false;
    if (counterparty == leader) return p.size() == 1;
    if (p.size() < 2) return false;
    std::set<VertexId> seen(p.begin(), p.end());
    if (seen.size() != p.size()) return false;  // cyclic or repeating paths rejected
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!d.has_arc(p[i], p[i + 1])) return false;
    return true;
}

}  // namespace swapsim
