#include "sgc/indicators.hpp"

#include <algorithm>

#include "sgc/error.hpp"

namespace sgc {

auto ZSet::contains(std::int64_t d) const -> bool {
    return d >= 0 && d < static_cast<std::int64_t>(verdicts.size()) &&
           verdicts[static_cast<std::size_t>(d)] == Verdict::feasible;
}

auto ZSet::complete() const -> bool {
    return std::none_of(verdicts.begin(), verdicts.end(), [](Verdict v) { return v == Verdict::unknown; });
}

auto z_set(const Indicator& ind, std::int64_t p, std::int64_t q, const SearchLimits& limits) -> ZSet {
    const int n = ind.graph.vertex_count();
    if (ind.u < 0 || ind.v < 0 || ind.u >= n || ind.v >= n || ind.u == ind.v) {
        throw Error(Errc::domain, "indicator terminals must be distinct vertices");
    }
    ZSet z;
    z.p = p;
    z.q = q;
    for (std::int64_t d = 0; d <= p / 2; ++d) {
        const auto res = solve_pq(ind.graph, p, q, {{ind.u, 0}, {ind.v, d}}, limits);
        z.verdicts.push_back(res.verdict);
        z.nodes += res.nodes;
    }
    return z;
}

auto replace_edges(const SignedGraph& g, const Indicator& on_positive, const std::optional<Indicator>& on_negative)
    -> SignedGraph {
    SignedGraph out(g.vertex_count());
    for (const auto& e : g.edges()) {
        if (e.is_loop()) {
            throw Error(Errc::domain, "a loop cannot be replaced by an indicator");
        }
        const Indicator* ind = &on_positive;
        if (e.sign == Sign::Negative) {
            if (!on_negative) {
                throw Error(Errc::domain, "negative edge needs a negative-edge indicator");
            }
            ind = &*on_negative;
        }
        const int x = std::min(e.u, e.v);
        const int y = std::max(e.u, e.v);
        std::vector<int> image(static_cast<std::size_t>(ind->graph.vertex_count()));
        for (int w = 0; w < ind->graph.vertex_count(); ++w) {
            image[static_cast<std::size_t>(w)] = w == ind->u ? x : w == ind->v ? y : out.add_vertex();
        }
        for (const auto& f : ind->graph.edges()) {
            out.add_edge(image[static_cast<std::size_t>(f.u)], image[static_cast<std::size_t>(f.v)], f.sign);
        }
    }
    return out;
}

auto interval_shape(const ZSet& z) -> std::optional<IntervalShape> {
    if (!z.complete()) {
        return std::nullopt;
    }
    const std::int64_t half = z.p / 2;
    std::int64_t lo = -1;
    std::int64_t hi = -1;
    for (std::int64_t d = 0; d <= half; ++d) {
        if (z.contains(d)) {
            if (lo < 0) {
                lo = d;
            } else if (hi != d - 1) {
                return std::nullopt; // hole
            }
            hi = d;
        }
    }
    if (lo < 0) {
        return std::nullopt;
    }
    if (lo >= 1 && hi == half - lo && 4 * lo < z.p) {
        return IntervalShape{ZShape::symmetric, lo};
    }
    if (lo >= 1 && lo < half && hi == half) {
        return IntervalShape{ZShape::upper, lo};
    }
    if (lo == 0 && hi < half) {
        return IntervalShape{ZShape::lower, half - hi};
    }
    return std::nullopt;
}

auto predict_scaled_chi(const ZSet& z, const EvenRational& chi_of_g) -> EvenRational {
    const auto shape = interval_shape(z);
    if (!shape) {
        throw Error(Errc::shape, "Z-set is not an interval of the form [t, r/2 - t], [t, r/2] or [0, r/2 - t]");
    }
    const Rational r(z.p, z.q);
    if (r >= 4) {
        throw Error(Errc::shape, "prediction needs r = 4 - 2e with e > 0");
    }
    const Rational eps = (4 - r) / 2;
    const Rational t(shape->t_steps, z.q);
    Rational scale = t / eps;
    if (shape->kind != ZShape::symmetric) {
        scale /= 2;
    }
    const Rational predicted = 4 - 4 / (scale * chi_of_g.value() + 1);
    if (predicted < 2) {
        throw Error(Errc::shape, "predicted value below 2");
    }
    return normalize_even(predicted);
}

} // namespace sgc
