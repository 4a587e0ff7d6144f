#include "sgc/constructions.hpp"

#include <algorithm>

#include "sgc/arith.hpp"
#include "sgc/error.hpp"

namespace sgc {

namespace {

constexpr Sign plus = Sign::Positive;
constexpr Sign minus = Sign::Negative;

struct Pair {
    int u;
    int v;
};

void add_all(SignedGraph& g, std::initializer_list<Pair> pairs, Sign sign) {
    for (const auto& [u, v] : pairs) {
        g.add_edge(u, v, sign);
    }
}

// Vertex ids used by the Wenger-graph family.
enum WengerVertex : int { W = 0, X1, X2, X3, X4, X5, Z, T, U, V };

// Mini-gadget ids.
enum GadgetVertex : int { GX = 0, GY, GZ, GA, GB, GC };

} // namespace

auto signed_cycle(int length, bool negative) -> SignedGraph {
    if (length < 1) {
        throw Error(Errc::domain, "cycle length must be positive");
    }
    SignedGraph g(length);
    for (int i = 0; i < length; ++i) {
        const bool last = i == length - 1;
        g.add_edge(i, (i + 1) % length, last && negative ? minus : plus);
    }
    return g;
}

auto complete_graph(int n, Sign sign) -> SignedGraph {
    SignedGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            g.add_edge(i, j, sign);
        }
    }
    return g;
}

auto digon() -> SignedGraph {
    SignedGraph g(2);
    g.add_edge(0, 1, plus);
    g.add_edge(0, 1, minus);
    return g;
}

namespace {

auto clique_on(std::int64_t p, std::int64_t q, std::int64_t size) -> SignedGraph {
    if (q < 1 || p % 2 != 0 || p < 2 * q) {
        throw Error(Errc::domain, "signed circular clique needs even p >= 2q >= 2");
    }
    SignedGraph g(static_cast<int>(size));
    for (std::int64_t i = 0; i < size; ++i) {
        for (std::int64_t j = i; j < size; ++j) {
            const auto d = j - i;
            if (i != j && d >= q && d <= p - q) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j), plus);
            }
            if (d <= p / 2 - q || d >= p / 2 + q) {
                g.add_edge(static_cast<int>(i), static_cast<int>(j), minus);
            }
        }
    }
    return g;
}

} // namespace

auto circular_clique_signed(std::int64_t p, std::int64_t q) -> SignedGraph { return clique_on(p, q, p); }

auto hat_clique(std::int64_t p, std::int64_t q) -> SignedGraph { return clique_on(p, q, p / 2); }

auto two_path(Sign sign) -> Indicator {
    // the path's sign is the product of its edge signs
    SignedGraph g(3);
    g.add_edge(0, 2, plus);
    g.add_edge(2, 1, sign);
    return {g, 0, 1};
}

auto two_path_pair() -> Indicator {
    SignedGraph g(4);
    g.add_edge(0, 2, plus);
    g.add_edge(2, 1, plus);
    g.add_edge(0, 3, plus);
    g.add_edge(3, 1, minus);
    return {g, 0, 1};
}

auto digon_indicator() -> Indicator { return {digon(), 0, 1}; }

auto gamma(int i) -> Indicator {
    if (i < 1) {
        throw Error(Errc::domain, "gamma index must be at least 1");
    }
    Indicator ind = two_path(plus);
    auto& g = ind.graph;
    for (int k = 2; k <= i; ++k) {
        const int pu = ind.u;
        const int pv = ind.v;
        const int nu = g.add_vertex();
        const int nv = g.add_vertex();
        const bool even = k % 2 == 0;
        g.add_edge(nu, pu, plus);
        g.add_edge(nu, pv, even ? minus : plus);
        g.add_edge(nv, pu, even ? minus : plus);
        g.add_edge(nv, pv, plus);
        ind.u = nu;
        ind.v = nv;
    }
    return ind;
}

auto gamma_prime(int i) -> Indicator {
    if (i < 1) {
        throw Error(Errc::domain, "gamma_prime index must be at least 1");
    }
    Indicator odd = gamma(2 * i - 1);
    const Indicator even = gamma(2 * i);
    std::vector<int> image(static_cast<std::size_t>(even.graph.vertex_count()));
    for (int w = 0; w < even.graph.vertex_count(); ++w) {
        image[static_cast<std::size_t>(w)] = w == even.u ? odd.u : w == even.v ? odd.v : odd.graph.add_vertex();
    }
    for (const auto& e : even.graph.edges()) {
        odd.graph.add_edge(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)], e.sign);
    }
    return odd;
}

auto spal5() -> SignedGraph {
    // labels 1,3,5,7,9 become 0..4
    const auto id = [](int label) { return (label - 1) / 2; };
    SignedGraph g(5);
    for (const auto& [a, b] : {Pair{1, 5}, {3, 7}, {5, 9}, {1, 7}, {3, 9}}) {
        g.add_edge(id(a), id(b), plus);
    }
    for (const auto& [a, b] : {Pair{1, 3}, {3, 5}, {5, 7}, {7, 9}, {1, 9}}) {
        g.add_edge(id(a), id(b), minus);
    }
    return g;
}

auto spal5_names() -> VertexNames { return {{0, "1"}, {1, "3"}, {2, "5"}, {3, "7"}, {4, "9"}}; }

auto outerplanar_f() -> SignedGraph {
    enum : int { y = 0, x, z, a, b, c };
    SignedGraph g(6);
    add_all(g, {{y, b}, {x, a}, {z, c}}, plus);
    add_all(g, {{y, x}, {y, z}, {y, c}, {x, b}, {x, z}, {z, a}}, minus);
    return g;
}

auto outerplanar_f_names() -> VertexNames {
    return {{0, "y"}, {1, "x"}, {2, "z"}, {3, "a"}, {4, "b"}, {5, "c"}};
}

auto omega_d(int d) -> SignedGraph {
    if (d < 2) {
        throw Error(Errc::domain, "omega_d needs d >= 2");
    }
    SignedGraph g = complete_graph(d, plus);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const int y = g.add_vertex();
            for (int k = 0; k < d; ++k) {
                g.add_edge(y, k, k == i || k == j ? minus : plus);
            }
        }
    }
    return g;
}

auto mini_gadget() -> SignedGraph {
    SignedGraph g(6);
    add_all(g, {{GA, GB}, {GA, GC}, {GB, GC}, {GA, GX}, {GB, GY}, {GC, GZ}}, plus);
    add_all(g, {{GY, GZ}, {GZ, GX}, {GX, GY}, {GA, GZ}, {GB, GX}, {GC, GY}}, minus);
    return g;
}

auto mini_gadget_names() -> VertexNames {
    return {{GX, "x"}, {GY, "y"}, {GZ, "z"}, {GA, "a"}, {GB, "b"}, {GC, "c"}};
}

auto wenger() -> SignedGraph {
    SignedGraph g(10);
    add_all(g, {{W, X1}, {W, X2}, {W, X3}, {W, X4}, {W, X5}}, plus);
    add_all(g, {{X1, X2}, {X2, X3}, {X3, X4}, {X4, X5}, {X5, X1}}, plus);
    add_all(g, {{Z, X2}, {T, X4}, {V, X4}, {U, X5}, {U, T}, {U, Z}}, minus);
    add_all(g, {{Z, X3}, {T, X5}, {V, Z}, {V, T}, {V, X3}, {U, X1}, {U, X2}}, plus);
    return g;
}

auto wenger_names() -> VertexNames {
    return {{W, "w"}, {X1, "x1"}, {X2, "x2"}, {X3, "x3"}, {X4, "x4"},
            {X5, "x5"}, {Z, "z"}, {T, "t"}, {U, "u"}, {V, "v"}};
}

namespace {

auto host_sign(const SignedGraph& g, int a, int b) -> Sign {
    for (const auto& e : g.edges()) {
        if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) {
            return e.sign;
        }
    }
    throw Error(Errc::internal, "host triangle edge missing");
}

auto is_outer(int w) -> bool { return w == GX || w == GY || w == GZ; }

// Builds wenger_tilde and reports where each gadget went.
auto build_tilde(std::vector<GadgetPlacement>* placements) -> SignedGraph {
    SignedGraph g = wenger();
    const SignedGraph gadget = mini_gadget();
    const std::array<std::array<int, 3>, 4> triangles{{{Z, X2, X3}, {T, X4, X5}, {V, X3, X4}, {U, X1, X5}}};
    for (const auto& tri : triangles) {
        // among the two outer switchings matching the host signs, take the one
        // whose sorted host vertex list is lexicographically smallest
        std::optional<std::vector<int>> chosen_hosts;
        std::vector<int> chosen;
        for (int mask = 0; mask < 8; ++mask) {
            const auto in = [&](int w) { return ((mask >> w) & 1) != 0; };
            bool match = true;
            for (const auto& [a, b] : {Pair{GX, GY}, {GY, GZ}, {GZ, GX}}) {
                const Sign s = in(a) != in(b) ? flip(minus) : minus;
                match = match && s == host_sign(g, tri[static_cast<std::size_t>(a)], tri[static_cast<std::size_t>(b)]);
            }
            if (!match) {
                continue;
            }
            std::vector<int> local;
            std::vector<int> hosts;
            for (int w = 0; w < 3; ++w) {
                if (in(w)) {
                    local.push_back(w);
                    hosts.push_back(tri[static_cast<std::size_t>(w)]);
                }
            }
            std::sort(hosts.begin(), hosts.end());
            if (!chosen_hosts || hosts < *chosen_hosts) {
                chosen_hosts = hosts;
                chosen = local;
            }
        }
        if (!chosen_hosts) {
            throw Error(Errc::internal, "triangle is not negative");
        }
        GadgetPlacement place;
        place.outer = tri;
        place.switched = chosen;
        std::array<int, 6> image{};
        for (int w = 0; w < 3; ++w) {
            image[static_cast<std::size_t>(w)] = tri[static_cast<std::size_t>(w)];
        }
        for (int w = 3; w < 6; ++w) {
            image[static_cast<std::size_t>(w)] = g.add_vertex();
            place.inner[static_cast<std::size_t>(w - 3)] = image[static_cast<std::size_t>(w)];
        }
        const auto switched = [&](int w) { return std::find(chosen.begin(), chosen.end(), w) != chosen.end(); };
        for (const auto& e : gadget.edges()) {
            if (is_outer(e.u) && is_outer(e.v)) {
                continue; // the host triangle already carries these edges
            }
            const Sign s = switched(e.u) != switched(e.v) ? flip(e.sign) : e.sign;
            g.add_edge(image[static_cast<std::size_t>(e.u)], image[static_cast<std::size_t>(e.v)], s);
        }
        if (placements) {
            placements->push_back(place);
        }
    }
    return g;
}

} // namespace

auto wenger_tilde() -> SignedGraph { return build_tilde(nullptr); }

auto wenger_tilde_placements() -> std::vector<GadgetPlacement> {
    std::vector<GadgetPlacement> out;
    build_tilde(&out);
    return out;
}

auto wenger_tilde_names() -> VertexNames {
    auto names = wenger_names();
    const auto places = wenger_tilde_placements();
    for (std::size_t i = 0; i < places.size(); ++i) {
        const auto k = std::to_string(i + 1);
        names[places[i].inner[0]] = "a" + k;
        names[places[i].inner[1]] = "b" + k;
        names[places[i].inner[2]] = "c" + k;
    }
    return names;
}

auto big_gamma() -> Indicator {
    SignedGraph g = wenger_tilde();
    g.add_edge(U, V, minus);
    return {g, U, V};
}

auto k4_omega() -> SignedGraph {
    const Indicator ind = big_gamma();
    return replace_edges(complete_graph(4, plus), ind, ind);
}

auto complete_mini_gadget(std::int64_t p, std::int64_t q, const std::array<std::int64_t, 3>& outer)
    -> std::optional<std::array<std::int64_t, 3>> {
    if (p % 2 != 0 || q < 1 || p <= 4 * q) {
        throw Error(Errc::domain, "mini-gadget recipe needs r = p/q > 4 with p even");
    }
    const std::int64_t h = (p - 4 * q) / 2; // alpha/2 in steps of 1/q
    const SignedGraph gadget = mini_gadget();
    const auto wrap = [p](std::int64_t x) { return ((x % p) + p) % p; };
    for (int rot = 0; rot < 3; ++rot) {
        const std::size_t rx = static_cast<std::size_t>(rot % 3);
        const std::size_t ry = static_cast<std::size_t>((rot + 1) % 3);
        const std::size_t rz = static_cast<std::size_t>((rot + 2) % 3);
        for (const std::int64_t refl : {1, -1}) {
            const auto to_frame = [&](std::int64_t c) { return wrap(refl * (c - outer[rz])); };
            const auto from_frame = [&](std::int64_t c) { return wrap(refl * c + outer[rz]); };
            const auto tx = to_frame(outer[rx]);
            const auto ty = to_frame(outer[ry]);
            if (tx < q - h || tx > q + h || ty > tx) {
                continue;
            }
            for (const std::int64_t b : {2 * q, 2 * q + h}) {
                std::array<std::int64_t, 3> inner{};
                inner[rx] = from_frame(3 * q + h);
                inner[ry] = from_frame(b);
                inner[rz] = from_frame(q);
                Coloring c{p, q, {outer[0], outer[1], outer[2], inner[0], inner[1], inner[2]}};
                if (verify_coloring(gadget, c)) {
                    return inner;
                }
            }
        }
    }
    return std::nullopt;
}

auto big_gamma_coloring() -> Coloring {
    constexpr std::int64_t p = 28;
    constexpr std::int64_t q = 6;
    const Indicator ind = big_gamma();
    Coloring c{p, q, std::vector<std::int64_t>(static_cast<std::size_t>(ind.graph.vertex_count()), 0)};
    // phi(u)=phi(v)=0, w=3, x1=2, x2=1, x3=2, x4=1/3, x5=4, z=t=1, in steps of 1/6
    const std::array<std::int64_t, 10> host{18, 12, 6, 12, 2, 24, 6, 6, 0, 0};
    std::copy(host.begin(), host.end(), c.colors.begin());
    for (const auto& place : wenger_tilde_placements()) {
        const auto switched = [&](int w) {
            return std::find(place.switched.begin(), place.switched.end(), w) != place.switched.end();
        };
        std::array<std::int64_t, 3> outer{};
        for (int w = 0; w < 3; ++w) {
            const auto x = c.colors[static_cast<std::size_t>(place.outer[static_cast<std::size_t>(w)])];
            outer[static_cast<std::size_t>(w)] = switched(w) ? antipode(x, p) : x;
        }
        const auto inner = complete_mini_gadget(p, q, outer);
        if (!inner) {
            throw Error(Errc::internal, "mini-gadget recipe found no completion");
        }
        for (int w = 0; w < 3; ++w) {
            const auto x = (*inner)[static_cast<std::size_t>(w)];
            c.colors[static_cast<std::size_t>(place.inner[static_cast<std::size_t>(w)])] =
                switched(w + 3) ? antipode(x, p) : x;
        }
    }
    return c;
}

auto k4_omega_coloring() -> Coloring {
    const Coloring inner = big_gamma_coloring();
    const Indicator ind = big_gamma();
    Coloring c{inner.p, inner.q, std::vector<std::int64_t>(4, 0)};
    for (int copy = 0; copy < 6; ++copy) {
        for (int w = 0; w < ind.graph.vertex_count(); ++w) {
            if (w != ind.u && w != ind.v) {
                c.colors.push_back(inner.colors[static_cast<std::size_t>(w)]);
            }
        }
    }
    return c;
}

} // namespace sgc
