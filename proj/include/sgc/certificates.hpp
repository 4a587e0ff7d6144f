#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sgc/arith.hpp"
#include "sgc/core.hpp"
#include "sgc/solver.hpp"

namespace sgc {

// Points of the circle of circumference r, exact. r is kept as a big rational
// because refinement denominators outgrow 64 bits.
struct RationalColoring {
    Rational r;
    std::vector<Rational> colors;
};

auto to_rational(const Coloring& c) -> RationalColoring;
auto scale_coloring(const RationalColoring& c, const Rational& new_r) -> RationalColoring;
auto verify_rational(const SignedGraph& g, const RationalColoring& c) -> bool;

struct TightArc {
    int from = 0;
    int to = 0;
    int edge = 0;

    friend auto operator==(const TightArc&, const TightArc&) -> bool = default;
};

struct TightDigraph {
    int n = 0;
    std::vector<TightArc> arcs;
};

auto tight_digraph(const SignedGraph& g, const RationalColoring& c) -> TightDigraph;
auto find_tight_cycle(const TightDigraph& d) -> std::optional<std::vector<TightArc>>;

struct TightCycleCertificate {
    std::vector<TightArc> cycle;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t a = 0;
    Rational r;
};

auto cert_value(const SignedGraph& g, const RationalColoring& c, const std::vector<TightArc>& cycle)
    -> TightCycleCertificate;

auto render_certificate(const TightCycleCertificate& cert) -> std::string;

// Finds a tight cycle and evaluates it; throws corrupt_certificate when acyclic.
auto certify(const SignedGraph& g, const RationalColoring& c) -> TightCycleCertificate;

auto refine(const SignedGraph& g, const RationalColoring& c) -> RationalColoring;

} // namespace sgc
