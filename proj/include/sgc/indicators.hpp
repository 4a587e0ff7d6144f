#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgc/arith.hpp"
#include "sgc/core.hpp"
#include "sgc/solver.hpp"

namespace sgc {

struct Indicator {
    SignedGraph graph;
    int u = 0;
    int v = 1;
};

// Feasible terminal distances d/q for d = 0..p/2.
struct ZSet {
    std::int64_t p = 2;
    std::int64_t q = 1;
    std::vector<Verdict> verdicts;
    std::uint64_t nodes = 0;

    auto contains(std::int64_t d) const -> bool;
    auto complete() const -> bool;
};

auto z_set(const Indicator& ind, std::int64_t p, std::int64_t q, const SearchLimits& limits = {})
    -> ZSet;

// Replaces each edge x<y by a fresh copy of the indicator with u = x and v = y.
auto replace_edges(const SignedGraph& g, const Indicator& on_positive,
                   const std::optional<Indicator>& on_negative = std::nullopt) -> SignedGraph;

enum class ZShape {
    symmetric, // [t, r/2 - t]
    upper,     // [t, r/2]
    lower,     // [0, r/2 - t]
};

struct IntervalShape {
    ZShape kind = ZShape::symmetric;
    std::int64_t t_steps = 0; // t = t_steps / q
};

auto interval_shape(const ZSet& z) -> std::optional<IntervalShape>;

// chi_c of G(I) for an indicator whose Z-set at r = 4 - 2e has t = i*e,
// assuming that scaling holds across the family r = 4 - 2e.
auto predict_scaled_chi(const ZSet& z, const EvenRational& chi_of_g) -> EvenRational;

} // namespace sgc
