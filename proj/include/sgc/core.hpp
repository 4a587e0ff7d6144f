#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

namespace sgc {

enum class Sign : std::int8_t { Positive = 1, Negative = -1 };

constexpr auto operator*(Sign a, Sign b) noexcept -> Sign {
    return a == b ? Sign::Positive : Sign::Negative;
}

constexpr auto flip(Sign s) noexcept -> Sign {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

struct Edge {
    int u = 0;
    int v = 0;
    Sign sign = Sign::Positive;

    auto is_loop() const noexcept -> bool { return u == v; }
    friend auto operator==(const Edge&, const Edge&) -> bool = default;
};

// Vertices are 0..n-1. Loops and parallel edges are allowed; edge indices are stable.
class SignedGraph {
  public:
    SignedGraph() = default;
    explicit SignedGraph(int n);

    auto add_vertex() -> int;
    auto add_edge(int u, int v, Sign sign) -> int;

    auto vertex_count() const noexcept -> int { return n_; }
    auto edge_count() const noexcept -> int { return static_cast<int>(edges_.size()); }
    auto edges() const noexcept -> const std::vector<Edge>& { return edges_; }
    auto edge(int i) const -> const Edge& { return edges_.at(static_cast<std::size_t>(i)); }

    auto has_positive_loop() const -> bool;
    auto negative_edge_count() const -> int;

    friend auto operator==(const SignedGraph&, const SignedGraph&) -> bool = default;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

// Flips every edge with exactly one endpoint in `set`.
auto switch_at(const SignedGraph& g, const std::vector<int>& set) -> SignedGraph;

// Every sign flipped.
auto negated(const SignedGraph& g) -> SignedGraph;

// Switching set that makes every edge positive, if one exists.
auto balance_witness(const SignedGraph& g) -> std::optional<std::vector<int>>;
auto is_balanced(const SignedGraph& g) -> bool;

// Requires the same vertex count and endpoints at every edge index.
auto switching_equivalent(const SignedGraph& a, const SignedGraph& b) -> bool;

// Connected components, each sorted, ordered by smallest vertex.
auto components(const SignedGraph& g) -> std::vector<std::vector<int>>;

struct GirthTypes {
    // g[i][j]: negative-edge parity i, length parity j; nullopt means infinite.
    std::array<std::array<std::optional<int>, 2>, 2> g;
};

auto girth_types(const SignedGraph& g) -> GirthTypes;

struct Degeneracy {
    int d = 0;
    std::vector<int> order;
};

auto degeneracy(const SignedGraph& g) -> Degeneracy;

// Chromatic number of the loopless simple graph given by adjacency lists.
auto chromatic_number(const std::vector<std::vector<int>>& adj) -> int;

// Minimum over switchings of the chromatic number of the positive subgraph.
auto chi_plus(const SignedGraph& g, int max_free_vertices = 20) -> int;

} // namespace sgc
