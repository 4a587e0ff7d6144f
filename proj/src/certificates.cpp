#include "sgc/certificates.hpp"

#include <algorithm>
#include <sstream>

#include "sgc/error.hpp"

namespace sgc {

namespace {

auto circle_dist(const Rational& x, const Rational& y, const Rational& r) -> Rational {
    const Rational d = x > y ? Rational(x - y) : Rational(y - x);
    const Rational other = r - d;
    return d < other ? d : other;
}

// Signed offset of `to` ahead of `from`, minus one; zero exactly on a tight arc.
auto directed_slack(const Edge& e, const Rational& from, const Rational& to, const Rational& r) -> Rational {
    Rational target = to;
    if (e.sign == Sign::Negative) {
        target += r / 2;
    }
    return mod_circle(target - from, r) - 1;
}

auto arcs_of(const SignedGraph& g, const std::vector<Rational>& phi, const Rational& r) -> std::vector<TightArc> {
    std::vector<TightArc> arcs;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        const auto& pu = phi[static_cast<std::size_t>(e.u)];
        const auto& pv = phi[static_cast<std::size_t>(e.v)];
        if (directed_slack(e, pu, pv, r) == 0) {
            arcs.push_back({e.u, e.v, i});
        }
        if (!e.is_loop() && directed_slack(e, pv, pu, r) == 0) {
            arcs.push_back({e.v, e.u, i});
        }
    }
    std::stable_sort(arcs.begin(), arcs.end(),
                     [](const TightArc& a, const TightArc& b) { return a.from < b.from; });
    return arcs;
}

void require_verifying(const SignedGraph& g, const RationalColoring& c) {
    if (!verify_rational(g, c)) {
        throw Error(Errc::malformed, "coloring does not verify");
    }
}

} // namespace

auto to_rational(const Coloring& c) -> RationalColoring {
    RationalColoring out;
    out.r = Rational(c.p, c.q);
    for (const auto x : c.colors) {
        out.colors.emplace_back(x, c.q);
    }
    return out;
}

auto scale_coloring(const RationalColoring& c, const Rational& new_r) -> RationalColoring {
    RationalColoring out;
    out.r = new_r;
    const Rational factor = new_r / c.r;
    for (const auto& x : c.colors) {
        out.colors.push_back(x * factor);
    }
    return out;
}

auto verify_rational(const SignedGraph& g, const RationalColoring& c) -> bool {
    if (c.r < 2) {
        throw Error(Errc::domain, "circumference below 2");
    }
    if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
        throw Error(Errc::malformed, "coloring length does not match vertex count");
    }
    for (const auto& x : c.colors) {
        if (x < 0 || x >= c.r) {
            throw Error(Errc::malformed, "point outside [0, r): " + format_lowest(x));
        }
    }
    const Rational half = c.r / 2;
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        const auto& x = c.colors[static_cast<std::size_t>(e.u)];
        const auto& y = c.colors[static_cast<std::size_t>(e.v)];
        if (e.sign == Sign::Positive) {
            return !e.is_loop() && circle_dist(x, y, c.r) >= 1;
        }
        return circle_dist(x, mod_circle(y + half, c.r), c.r) >= 1;
    });
}

auto tight_digraph(const SignedGraph& g, const RationalColoring& c) -> TightDigraph {
    require_verifying(g, c);
    return {g.vertex_count(), arcs_of(g, c.colors, c.r)};
}

auto find_tight_cycle(const TightDigraph& d) -> std::optional<std::vector<TightArc>> {
    std::vector<std::vector<TightArc>> out(static_cast<std::size_t>(d.n));
    for (const auto& a : d.arcs) {
        out.at(static_cast<std::size_t>(a.from)).push_back(a);
    }
    enum : char { white, grey, black };
    std::vector<char> state(static_cast<std::size_t>(d.n), white);
    std::vector<std::size_t> cursor(static_cast<std::size_t>(d.n), 0);
    for (int root = 0; root < d.n; ++root) {
        if (state[static_cast<std::size_t>(root)] != white) {
            continue;
        }
        std::vector<TightArc> path; // arcs from root to the top vertex
        std::vector<int> stack{root};
        state[static_cast<std::size_t>(root)] = grey;
        while (!stack.empty()) {
            const int x = stack.back();
            auto& i = cursor[static_cast<std::size_t>(x)];
            if (i == out[static_cast<std::size_t>(x)].size()) {
                state[static_cast<std::size_t>(x)] = black;
                stack.pop_back();
                if (!path.empty()) {
                    path.pop_back();
                }
                continue;
            }
            const TightArc a = out[static_cast<std::size_t>(x)][i++];
            const auto next = state[static_cast<std::size_t>(a.to)];
            if (next == grey) {
                std::vector<TightArc> cycle;
                auto start = std::find_if(path.begin(), path.end(),
                                          [&](const TightArc& b) { return b.from == a.to; });
                cycle.assign(start, path.end());
                cycle.push_back(a);
                return cycle;
            }
            if (next == white) {
                state[static_cast<std::size_t>(a.to)] = grey;
                stack.push_back(a.to);
                path.push_back(a);
            }
        }
    }
    return std::nullopt;
}

auto cert_value(const SignedGraph& g, const RationalColoring& c, const std::vector<TightArc>& cycle)
    -> TightCycleCertificate {
    require_verifying(g, c);
    if (cycle.empty()) {
        throw Error(Errc::corrupt_certificate, "empty cycle");
    }
    TightCycleCertificate cert;
    cert.cycle = cycle;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const auto& a = cycle[i];
        const auto& next = cycle[(i + 1) % cycle.size()];
        if (a.edge < 0 || a.edge >= g.edge_count() || a.to != next.from) {
            throw Error(Errc::corrupt_certificate, "arcs do not form a closed walk");
        }
        const auto& e = g.edge(a.edge);
        const bool joins = (e.u == a.from && e.v == a.to) || (e.v == a.from && e.u == a.to);
        if (!joins || directed_slack(e, c.colors[static_cast<std::size_t>(a.from)],
                                     c.colors[static_cast<std::size_t>(a.to)], c.r) != 0) {
            throw Error(Errc::corrupt_certificate, "arc on edge " + std::to_string(a.edge) + " is not tight");
        }
        (e.sign == Sign::Positive ? cert.s : cert.t) += 1;
    }
    const Rational winding = (Rational(cert.s) - (c.r / 2 - 1) * cert.t) / c.r;
    if (denominator(winding) != 1) {
        throw Error(Errc::corrupt_certificate, "winding number " + format_lowest(winding) + " is not an integer");
    }
    cert.a = static_cast<std::int64_t>(numerator(winding));
    if (2 * cert.a + cert.t < 1) {
        throw Error(Errc::corrupt_certificate, "2a + t must be positive");
    }
    cert.r = Rational(2 * (cert.s + cert.t), 2 * cert.a + cert.t);
    if (cert.r != c.r) {
        throw Error(Errc::corrupt_certificate, "certificate value differs from the coloring's circumference");
    }
    return cert;
}

auto render_certificate(const TightCycleCertificate& cert) -> std::string {
    std::ostringstream out;
    out << "cycle";
    for (const auto& a : cert.cycle) {
        out << ' ' << a.from;
    }
    out << '\n' << "edges";
    for (const auto& a : cert.cycle) {
        out << ' ' << a.edge;
    }
    out << '\n'
        << "s = " << cert.s << '\n'
        << "t = " << cert.t << '\n'
        << "a = " << cert.a << '\n'
        << "r = 2(s+t)/(2a+t) = " << format_rational(cert.r) << '\n';
    return out.str();
}

auto certify(const SignedGraph& g, const RationalColoring& c) -> TightCycleCertificate {
    const auto cycle = find_tight_cycle(tight_digraph(g, c));
    if (!cycle) {
        throw Error(Errc::corrupt_certificate, "coloring has no tight cycle");
    }
    return cert_value(g, c, *cycle);
}

auto refine(const SignedGraph& g, const RationalColoring& c) -> RationalColoring {
    const auto start = tight_digraph(g, c);
    if (find_tight_cycle(start)) {
        throw Error(Errc::not_refinable, "tight cycle present");
    }
    const Rational& r = c.r;
    std::vector<Rational> phi = c.colors;
    auto arcs = start.arcs;
    while (!arcs.empty()) {
        std::vector<char> has_in(static_cast<std::size_t>(g.vertex_count()), 0);
        std::vector<char> has_out(static_cast<std::size_t>(g.vertex_count()), 0);
        for (const auto& a : arcs) {
            has_in[static_cast<std::size_t>(a.to)] = 1;
            has_out[static_cast<std::size_t>(a.from)] = 1;
        }
        int sink = -1;
        for (int v = 0; v < g.vertex_count() && sink < 0; ++v) {
            if (has_in[static_cast<std::size_t>(v)] && !has_out[static_cast<std::size_t>(v)]) {
                sink = v;
            }
        }
        if (sink < 0) {
            throw Error(Errc::internal, "acyclic tight digraph without a sink");
        }
        std::optional<Rational> least;
        for (const auto& e : g.edges()) {
            if (e.is_loop() || (e.u != sink && e.v != sink)) {
                continue;
            }
            const int other = e.u == sink ? e.v : e.u;
            const Rational s = directed_slack(e, phi[static_cast<std::size_t>(sink)],
                                              phi[static_cast<std::size_t>(other)], r);
            if (!least || s < *least) {
                least = s;
            }
        }
        if (!least || *least <= 0) {
            throw Error(Errc::internal, "sink without positive slack");
        }
        phi[static_cast<std::size_t>(sink)] = mod_circle(phi[static_cast<std::size_t>(sink)] + *least / 2, r);
        auto next = arcs_of(g, phi, r);
        if (next.size() >= arcs.size()) {
            throw Error(Errc::internal, "refinement stalled: arc count did not drop");
        }
        arcs = std::move(next);
    }
    std::optional<Rational> least;
    for (const auto& e : g.edges()) {
        const auto& pu = phi[static_cast<std::size_t>(e.u)];
        const auto& pv = phi[static_cast<std::size_t>(e.v)];
        for (const Rational& s : {directed_slack(e, pu, pv, r), directed_slack(e, pv, pu, r)}) {
            if (!least || s < *least) {
                least = s;
            }
        }
    }
    if (!least) {
        throw Error(Errc::domain, "refinement needs at least one edge");
    }
    const Rational factor = 1 + *least / 2;
    RationalColoring out;
    out.r = r / factor;
    for (const auto& x : phi) {
        out.colors.push_back(x / factor);
    }
    if (!verify_rational(g, out) || out.r >= r) {
        throw Error(Errc::internal, "refined coloring failed verification");
    }
    return out;
}

} // namespace sgc
