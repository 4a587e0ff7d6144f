#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sgc/core.hpp"
#include "sgc/indicators.hpp"
#include "sgc/solver.hpp"

namespace sgc {

using VertexNames = std::map<int, std::string>;

auto signed_cycle(int length, bool negative) -> SignedGraph;
auto complete_graph(int n, Sign sign) -> SignedGraph;
auto digon() -> SignedGraph;

auto circular_clique_signed(std::int64_t p, std::int64_t q) -> SignedGraph;
auto hat_clique(std::int64_t p, std::int64_t q) -> SignedGraph;

// Two-terminal 2-paths of the given path sign (product of edge signs) and
// the union of a positive and a negative one; terminals 0 and 1.
auto two_path(Sign sign) -> Indicator;
auto two_path_pair() -> Indicator;
auto digon_indicator() -> Indicator;

auto gamma(int i) -> Indicator;
// Gamma_{2i-1} and Gamma_{2i} glued at their terminals.
auto gamma_prime(int i) -> Indicator;

auto spal5() -> SignedGraph;
auto outerplanar_f() -> SignedGraph;
auto omega_d(int d) -> SignedGraph;

auto mini_gadget() -> SignedGraph;
auto wenger() -> SignedGraph;
auto wenger_tilde() -> SignedGraph;
auto big_gamma() -> Indicator;
auto k4_omega() -> SignedGraph;

auto spal5_names() -> VertexNames;
auto outerplanar_f_names() -> VertexNames;
auto mini_gadget_names() -> VertexNames;
auto wenger_names() -> VertexNames;
auto wenger_tilde_names() -> VertexNames;

struct GadgetPlacement {
    std::array<int, 3> outer; // host vertices playing x, y, z
    std::array<int, 3> inner; // host vertices playing a, b, c
    std::vector<int> switched; // gadget-local vertices (0..5) switched before embedding
};

auto wenger_tilde_placements() -> std::vector<GadgetPlacement>;

// Interior colors (a, b, c) of the unswitched mini-gadget at (p, q), 4q < p,
// given outer colors (x, y, z), by the rotate/reflect recipe. Empty if it fails.
auto complete_mini_gadget(std::int64_t p, std::int64_t q, const std::array<std::int64_t, 3>& outer)
    -> std::optional<std::array<std::int64_t, 3>>;

// The explicit coloring of big_gamma at (28, 6), interiors completed by the recipe.
auto big_gamma_coloring() -> Coloring;
// The same coloring replicated into each copy of k4_omega, K4 vertices at 0.
auto k4_omega_coloring() -> Coloring;

} // namespace sgc
