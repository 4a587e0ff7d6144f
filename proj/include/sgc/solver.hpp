#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgc/arith.hpp"
#include "sgc/core.hpp"

namespace sgc {

struct Coloring {
    std::int64_t p = 2;
    std::int64_t q = 1;
    std::vector<std::int64_t> colors;

    friend auto operator==(const Coloring&, const Coloring&) -> bool = default;
};

struct Pin {
    int vertex = 0;
    std::int64_t color = 0;
};

struct SearchLimits {
    // Maximum number of search nodes; 0 means unlimited.
    std::uint64_t node_budget = 0;
};

enum class Verdict { feasible, infeasible, unknown };

struct Feasibility {
    Verdict verdict = Verdict::unknown;
    std::optional<Coloring> coloring;
    std::uint64_t nodes = 0;
};

auto verify_coloring(const SignedGraph& g, const Coloring& c) -> bool;

// Moves the witness along a switching: colors on `set` shift by p/2.
auto transport_coloring(const Coloring& c, const std::vector<int>& set) -> Coloring;

auto solve_pq(const SignedGraph& g, std::int64_t p, std::int64_t q, const std::vector<Pin>& pins,
              const SearchLimits& limits) -> Feasibility;

auto feasible_pq(const SignedGraph& g, std::int64_t p, std::int64_t q,
                 const std::vector<Pin>& pins = {}) -> std::optional<Coloring>;

struct ChiResult {
    // Empty value means the graph has no edge (chi_c = 1).
    std::optional<EvenRational> value;
    std::optional<Coloring> witness;
    std::optional<EvenRational> refuted;
    // Set when the budget ran out: value then holds the best feasible bound.
    std::optional<EvenRational> undecided;
    std::uint64_t nodes = 0;

    auto exact() const noexcept -> bool { return !undecided.has_value(); }
};

auto chi_c(const SignedGraph& g, const SearchLimits& limits = {}) -> ChiResult;

// Maximum chi_c over switching classes of the underlying graph; empty for edgeless input.
auto chi_s(const SignedGraph& g, int max_free_edges = 12) -> std::optional<EvenRational>;

// Colors in {+-1..+-k} avoiding f(u) = sign * f(v), to and from (2k,1)-colorings.
auto zero_free_to_circular(const std::vector<int>& f, int k) -> Coloring;
auto circular_to_zero_free(const Coloring& c) -> std::vector<int>;
auto is_zero_free_coloring(const SignedGraph& g, const std::vector<int>& f, int k) -> bool;

// Edge-sign-preserving homomorphism g -> h (optionally injective), lowest images first.
auto find_sp_homomorphism(const SignedGraph& g, const SignedGraph& h, bool injective)
    -> std::optional<std::vector<int>>;
auto is_sp_homomorphism(const SignedGraph& g, const SignedGraph& h, const std::vector<int>& map)
    -> bool;

} // namespace sgc
