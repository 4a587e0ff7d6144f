#include "sgc/core.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "sgc/error.hpp"

namespace sgc {

SignedGraph::SignedGraph(int n) : n_(n) {
    if (n < 0) {
        throw Error(Errc::domain, "negative vertex count");
    }
}

auto SignedGraph::add_vertex() -> int { return n_++; }

auto SignedGraph::add_edge(int u, int v, Sign sign) -> int {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) {
        throw Error(Errc::domain, "edge endpoint out of range: " + std::to_string(u) + "-" +
                                      std::to_string(v));
    }
    edges_.push_back({u, v, sign});
    return static_cast<int>(edges_.size()) - 1;
}

auto SignedGraph::has_positive_loop() const -> bool {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.is_loop() && e.sign == Sign::Positive; });
}

auto SignedGraph::negative_edge_count() const -> int {
    return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                          [](const Edge& e) { return e.sign == Sign::Negative; }));
}

namespace {

auto membership(int n, const std::vector<int>& set) -> std::vector<char> {
    std::vector<char> in(static_cast<std::size_t>(n), 0);
    for (const int v : set) {
        if (v < 0 || v >= n) {
            throw Error(Errc::domain, "switching vertex out of range: " + std::to_string(v));
        }
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

auto same_structure(const SignedGraph& a, const SignedGraph& b) -> bool {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    for (int i = 0; i < a.edge_count(); ++i) {
        const auto& e = a.edge(i);
        const auto& f = b.edge(i);
        const bool same = (e.u == f.u && e.v == f.v) || (e.u == f.v && e.v == f.u);
        if (!same) {
            return false;
        }
    }
    return true;
}

} // namespace

auto switch_at(const SignedGraph& g, const std::vector<int>& set) -> SignedGraph {
    const auto in = membership(g.vertex_count(), set);
    SignedGraph out(g.vertex_count());
    for (const auto& e : g.edges()) {
        const bool cut = in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)];
        out.add_edge(e.u, e.v, cut ? flip(e.sign) : e.sign);
    }
    return out;
}

auto negated(const SignedGraph& g) -> SignedGraph {
    SignedGraph out(g.vertex_count());
    for (const auto& e : g.edges()) {
        out.add_edge(e.u, e.v, flip(e.sign));
    }
    return out;
}

auto balance_witness(const SignedGraph& g) -> std::optional<std::vector<int>> {
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        const int parity = e.sign == Sign::Negative ? 1 : 0;
        if (e.is_loop()) {
            if (parity == 1) {
                return std::nullopt;
            }
            continue;
        }
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, parity});
        adj[static_cast<std::size_t>(e.v)].push_back({e.u, parity});
    }
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = 0;
        queue.push_back(s);
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (const auto& [y, parity] : adj[static_cast<std::size_t>(x)]) {
                const int want = label[static_cast<std::size_t>(x)] ^ parity;
                auto& ly = label[static_cast<std::size_t>(y)];
                if (ly < 0) {
                    ly = want;
                    queue.push_back(y);
                } else if (ly != want) {
                    return std::nullopt;
                }
            }
        }
    }
    std::vector<int> set;
    for (int v = 0; v < n; ++v) {
        if (label[static_cast<std::size_t>(v)] == 1) {
            set.push_back(v);
        }
    }
    return set;
}

auto is_balanced(const SignedGraph& g) -> bool { return balance_witness(g).has_value(); }

auto switching_equivalent(const SignedGraph& a, const SignedGraph& b) -> bool {
    if (!same_structure(a, b)) {
        throw Error(Errc::mismatch, "graphs do not share the same underlying multigraph");
    }
    SignedGraph product(a.vertex_count());
    for (int i = 0; i < a.edge_count(); ++i) {
        const auto& e = a.edge(i);
        product.add_edge(e.u, e.v, e.sign * b.edge(i).sign);
    }
    return is_balanced(product);
}

auto components(const SignedGraph& g) -> std::vector<std::vector<int>> {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        if (!e.is_loop()) {
            adj[static_cast<std::size_t>(e.u)].push_back(e.v);
            adj[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (seen[static_cast<std::size_t>(s)]) {
            continue;
        }
        std::vector<int> comp{s};
        seen[static_cast<std::size_t>(s)] = 1;
        for (std::size_t i = 0; i < comp.size(); ++i) {
            for (const int y : adj[static_cast<std::size_t>(comp[i])]) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    comp.push_back(y);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

auto girth_types(const SignedGraph& g) -> GirthTypes {
    GirthTypes out;
    if (g.edge_count() == 0) {
        return out;
    }
    // Any edge walked there and back is a closed walk of type 00.
    out.g[0][0] = 2;

    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        const int neg = e.sign == Sign::Negative ? 1 : 0;
        adj[static_cast<std::size_t>(e.u)].push_back({e.v, neg});
        if (!e.is_loop()) {
            adj[static_cast<std::size_t>(e.v)].push_back({e.u, neg});
        }
    }
    const auto state = [](int v, int i, int j) { return 4 * v + 2 * i + j; };
    std::vector<int> dist(static_cast<std::size_t>(4 * n));
    std::deque<int> queue;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(state(s, 0, 0))] = 0;
        queue.assign(1, state(s, 0, 0));
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            const int v = cur / 4;
            const int i = (cur / 2) % 2;
            const int j = cur % 2;
            for (const auto& [w, neg] : adj[static_cast<std::size_t>(v)]) {
                const int next = state(w, i ^ neg, j ^ 1);
                if (dist[static_cast<std::size_t>(next)] < 0) {
                    dist[static_cast<std::size_t>(next)] = dist[static_cast<std::size_t>(cur)] + 1;
                    queue.push_back(next);
                }
            }
        }
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (i == 0 && j == 0) {
                    continue;
                }
                const int d = dist[static_cast<std::size_t>(state(s, i, j))];
                if (d > 0 && (!out.g[i][j] || d < *out.g[i][j])) {
                    out.g[i][j] = d;
                }
            }
        }
    }
    return out;
}

auto degeneracy(const SignedGraph& g) -> Degeneracy {
    const int n = g.vertex_count();
    std::vector<int> degree(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> incident(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        degree[static_cast<std::size_t>(e.u)] += 1;
        degree[static_cast<std::size_t>(e.v)] += 1;
        incident[static_cast<std::size_t>(e.u)].push_back(e.v);
        if (!e.is_loop()) {
            incident[static_cast<std::size_t>(e.v)].push_back(e.u);
        }
    }
    Degeneracy out;
    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v) {
            if (!removed[static_cast<std::size_t>(v)] &&
                (best < 0 || degree[static_cast<std::size_t>(v)] < degree[static_cast<std::size_t>(best)])) {
                best = v;
            }
        }
        out.d = std::max(out.d, degree[static_cast<std::size_t>(best)]);
        out.order.push_back(best);
        removed[static_cast<std::size_t>(best)] = 1;
        for (const int y : incident[static_cast<std::size_t>(best)]) {
            if (y != best) {
                degree[static_cast<std::size_t>(y)] -= 1;
            }
        }
    }
    return out;
}

namespace {

// DSATUR-ordered backtracking for k-colorability.
class KColorer {
  public:
    KColorer(const std::vector<std::vector<int>>& adj, int k)
        : adj_(adj), k_(k), color_(adj.size(), -1) {}

    auto run() -> bool { return extend(0); }

  private:
    auto extend(std::size_t done) -> bool {
        if (done == adj_.size()) {
            return true;
        }
        int pick = -1;
        int pick_sat = -1;
        int pick_deg = -1;
        std::uint64_t pick_used = 0;
        for (std::size_t v = 0; v < adj_.size(); ++v) {
            if (color_[v] >= 0) {
                continue;
            }
            std::uint64_t used = 0;
            for (const int w : adj_[v]) {
                if (color_[static_cast<std::size_t>(w)] >= 0) {
                    used |= std::uint64_t{1} << color_[static_cast<std::size_t>(w)];
                }
            }
            const int sat = __builtin_popcountll(used);
            const int deg = static_cast<int>(adj_[v].size());
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = static_cast<int>(v);
                pick_sat = sat;
                pick_deg = deg;
                pick_used = used;
            }
        }
        // colors above the largest used one are interchangeable
        int highest = -1;
        for (const int c : color_) {
            highest = std::max(highest, c);
        }
        const int limit = std::min(k_, highest + 2);
        for (int c = 0; c < limit; ++c) {
            if (pick_used & (std::uint64_t{1} << c)) {
                continue;
            }
            color_[static_cast<std::size_t>(pick)] = c;
            if (extend(done + 1)) {
                return true;
            }
        }
        color_[static_cast<std::size_t>(pick)] = -1;
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    int k_;
    std::vector<int> color_;
};

auto k_colorable(const std::vector<std::vector<int>>& adj, int k) -> bool {
    if (adj.empty()) {
        return true;
    }
    if (k <= 0) {
        return false;
    }
    return KColorer(adj, k).run();
}

} // namespace

auto chromatic_number(const std::vector<std::vector<int>>& adj) -> int {
    if (adj.size() > 64) {
        throw Error(Errc::capacity, "chromatic number limited to 64 vertices");
    }
    int k = adj.empty() ? 0 : 1;
    while (!k_colorable(adj, k)) {
        ++k;
    }
    return k;
}

auto chi_plus(const SignedGraph& g, int max_free_vertices) -> int {
    if (g.has_positive_loop()) {
        throw Error(Errc::uncolorable, "positive loop");
    }
    const int n = g.vertex_count();
    const auto comps = components(g);
    std::vector<int> free_vertices;
    for (const auto& comp : comps) {
        free_vertices.insert(free_vertices.end(), comp.begin() + 1, comp.end());
    }
    const int free_count = static_cast<int>(free_vertices.size());
    if (free_count > max_free_vertices || free_count > 62) {
        throw Error(Errc::capacity, "chi_plus enumerates 2^" + std::to_string(free_count) +
                                        " switchings; limit is 2^" +
                                        std::to_string(max_free_vertices));
    }
    const auto positive_part = [&](std::uint64_t mask) {
        std::vector<char> in(static_cast<std::size_t>(n), 0);
        for (int i = 0; i < free_count; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
                in[static_cast<std::size_t>(free_vertices[static_cast<std::size_t>(i)])] = 1;
            }
        }
        std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
        for (const auto& e : g.edges()) {
            if (e.is_loop()) {
                continue;
            }
            const bool cut = in[static_cast<std::size_t>(e.u)] != in[static_cast<std::size_t>(e.v)];
            const Sign s = cut ? flip(e.sign) : e.sign;
            if (s == Sign::Positive) {
                adj[static_cast<std::size_t>(e.u)].push_back(e.v);
                adj[static_cast<std::size_t>(e.v)].push_back(e.u);
            }
        }
        for (auto& list : adj) {
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        return adj;
    };
    int best = chromatic_number(positive_part(0));
    const std::uint64_t total = std::uint64_t{1} << free_count;
    for (std::uint64_t mask = 1; mask < total && best > 1; ++mask) {
        const auto adj = positive_part(mask);
        while (best > 1 && k_colorable(adj, best - 1)) {
            --best;
        }
    }
    return best;
}

} // namespace sgc
