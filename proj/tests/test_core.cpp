#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "sgc/constructions.hpp"
#include "sgc/core.hpp"
#include "sgc/error.hpp"

using sgc::Sign;
using sgc::SignedGraph;

namespace {

auto path_alternating(int n) -> SignedGraph {
    SignedGraph g(n);
    for (int i = 0; i + 1 < n; ++i) {
        g.add_edge(i, i + 1, i % 2 == 0 ? Sign::Positive : Sign::Negative);
    }
    return g;
}

// Sign of every simple cycle through the given vertex cycle.
auto cycle_sign(const SignedGraph& g, const std::vector<int>& edges) -> Sign {
    Sign s = Sign::Positive;
    for (const int e : edges) {
        s = s * g.edge(e).sign;
    }
    return s;
}

auto sorted_edges(const SignedGraph& g) -> std::vector<std::tuple<int, int, int>> {
    std::vector<std::tuple<int, int, int>> out;
    for (const auto& e : g.edges()) {
        out.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v), static_cast<int>(e.sign));
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_SUITE("core") {
    TEST_CASE("sign product") {
        CHECK(Sign::Positive * Sign::Positive == Sign::Positive);
        CHECK(Sign::Negative * Sign::Negative == Sign::Positive);
        CHECK(Sign::Positive * Sign::Negative == Sign::Negative);
        CHECK(sgc::flip(Sign::Negative) == Sign::Positive);
    }

    TEST_CASE("graph container keeps loops, parallels and edge order") {
        SignedGraph g(3);
        CHECK(g.add_edge(0, 1, Sign::Positive) == 0);
        CHECK(g.add_edge(0, 1, Sign::Negative) == 1);
        CHECK(g.add_edge(2, 2, Sign::Negative) == 2);
        CHECK(g.edge_count() == 3);
        CHECK(g.edge(2).is_loop());
        CHECK_FALSE(g.has_positive_loop());
        CHECK(g.negative_edge_count() == 2);
        g.add_edge(1, 1, Sign::Positive);
        CHECK(g.has_positive_loop());
        CHECK(g.add_vertex() == 3);
        CHECK_THROWS_AS(g.add_edge(0, 9, Sign::Positive), sgc::Error);
        CHECK_THROWS_AS(g.add_edge(-1, 0, Sign::Positive), sgc::Error);
    }

    TEST_CASE("switching flips exactly the cut edges") {
        SignedGraph one(2);
        one.add_edge(0, 1, Sign::Positive);
        CHECK(sgc::switch_at(one, {0}).edge(0).sign == Sign::Negative);

        const auto c4 = sgc::signed_cycle(4, true);
        CHECK(sgc::switch_at(c4, {}) == c4);
        // the negative edge is 3-0; switching both its ends flips the other three
        const auto s = sgc::switch_at(c4, {3, 0});
        CHECK(s.negative_edge_count() == 3);
        CHECK(cycle_sign(s, {0, 1, 2, 3}) == Sign::Negative);

        SignedGraph loop(1);
        loop.add_edge(0, 0, Sign::Negative);
        CHECK(sgc::switch_at(loop, {0}).edge(0).sign == Sign::Negative);
    }

    TEST_CASE("switching is an involution and composes by symmetric difference") {
        oracle::Rng rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = oracle::random_graph(rng, {1, 7, 12, true, true});
            const int n = g.vertex_count();
            const auto a = oracle::random_subset(rng, n);
            const auto b = oracle::random_subset(rng, n);
            std::vector<int> sym;
            std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(sym));
            CHECK(sgc::switch_at(sgc::switch_at(g, a), a) == g);
            CHECK(sgc::switch_at(sgc::switch_at(g, a), b) == sgc::switch_at(g, sym));
            if (n > 0) {
                CHECK(sgc::switch_at(sgc::switch_at(g, {0}), {0}) == g);
            }
        }
    }

    TEST_CASE("cycle signs survive switching") {
        oracle::Rng rng(12);
        for (int trial = 0; trial < 200; ++trial) {
            const int n = oracle::uniform(rng, 3, 8);
            auto g = sgc::signed_cycle(n, oracle::coin(rng));
            g.add_edge(0, 2, oracle::coin(rng) ? Sign::Positive : Sign::Negative);
            std::vector<int> big;
            for (int i = 0; i < n; ++i) {
                big.push_back(i);
            }
            std::vector<int> chord{0, 1, n};  // 0-1-2-0 via the chord
            const auto h = sgc::switch_at(g, oracle::random_subset(rng, n));
            CHECK(cycle_sign(g, big) == cycle_sign(h, big));
            CHECK(cycle_sign(g, chord) == cycle_sign(h, chord));
        }
    }

    TEST_CASE("balance") {
        const auto k4 = sgc::complete_graph(4, Sign::Positive);
        const auto w = sgc::balance_witness(k4);
        REQUIRE(w.has_value());
        CHECK(w->empty());
        CHECK_FALSE(sgc::is_balanced(sgc::signed_cycle(4, true)));
        CHECK(sgc::is_balanced(path_alternating(7)));
        SignedGraph loop(1);
        loop.add_edge(0, 0, Sign::Negative);
        CHECK_FALSE(sgc::is_balanced(loop));
        CHECK(sgc::is_balanced(SignedGraph(3)));
    }

    TEST_CASE("balance agrees with exhaustive switching, witness works") {
        oracle::Rng rng(13);
        for (int trial = 0; trial < 300; ++trial) {
            auto g = oracle::random_graph(rng, {1, 7, 10, true, true});
            if (oracle::coin(rng)) {
                SignedGraph pos(g.vertex_count());
                for (const auto& e : g.edges()) {
                    if (!e.is_loop()) {
                        pos.add_edge(e.u, e.v, Sign::Positive);
                    }
                }
                g = sgc::switch_at(pos, oracle::random_subset(rng, g.vertex_count()));
            }
            const bool expected = oracle::brute_balanced(g);
            CHECK(sgc::is_balanced(g) == expected);
            const auto w = sgc::balance_witness(g);
            CHECK(w.has_value() == expected);
            if (w) {
                CHECK(oracle::all_positive(sgc::switch_at(g, *w)));
            }
        }
    }

    TEST_CASE("switching equivalence") {
        const auto neg = sgc::signed_cycle(4, true);
        const auto pos = sgc::signed_cycle(4, false);
        CHECK_FALSE(sgc::switching_equivalent(neg, pos));
        CHECK(sgc::switching_equivalent(neg, neg));

        SignedGraph tree_a(5);
        SignedGraph tree_b(5);
        oracle::Rng rng(14);
        for (int v = 1; v < 5; ++v) {
            const int parent = oracle::uniform(rng, 0, v - 1);
            tree_a.add_edge(parent, v, oracle::coin(rng) ? Sign::Positive : Sign::Negative);
            tree_b.add_edge(parent, v, oracle::coin(rng) ? Sign::Positive : Sign::Negative);
        }
        CHECK(sgc::switching_equivalent(tree_a, tree_b));

        SignedGraph other(4);
        other.add_edge(0, 2, Sign::Positive);
        CHECK_THROWS_AS(sgc::switching_equivalent(neg, other), sgc::Error);
        try {
            sgc::switching_equivalent(neg, SignedGraph(5));
        } catch (const sgc::Error& e) {
            CHECK(e.code() == sgc::Errc::mismatch);
        }
    }

    TEST_CASE("switching equivalence is an equivalence relation on random signatures") {
        oracle::Rng rng(15);
        for (int trial = 0; trial < 200; ++trial) {
            const auto base = oracle::random_graph(rng, {2, 6, 9, true, true});
            const auto resign = [&] {
                SignedGraph h(base.vertex_count());
                for (const auto& e : base.edges()) {
                    h.add_edge(e.u, e.v, e.is_loop() || oracle::coin(rng) ? e.sign : sgc::flip(e.sign));
                }
                return h;
            };
            const auto a = resign();
            const auto b = oracle::coin(rng) ? sgc::switch_at(a, oracle::random_subset(rng, a.vertex_count())) : resign();
            const auto c = oracle::coin(rng) ? sgc::switch_at(b, oracle::random_subset(rng, a.vertex_count())) : resign();
            CHECK(sgc::switching_equivalent(a, a));
            CHECK(sgc::switching_equivalent(a, b) == sgc::switching_equivalent(b, a));
            if (sgc::switching_equivalent(a, b) && sgc::switching_equivalent(b, c)) {
                CHECK(sgc::switching_equivalent(a, c));
            }
            CHECK(sgc::switching_equivalent(a, sgc::switch_at(a, oracle::random_subset(rng, a.vertex_count()))));
            SignedGraph all_pos(a.vertex_count());
            bool has_pos_loop = false;
            for (const auto& e : a.edges()) {
                all_pos.add_edge(e.u, e.v, Sign::Positive);
                has_pos_loop = has_pos_loop || e.is_loop();
            }
            CHECK(sgc::is_balanced(a) == sgc::switching_equivalent(a, all_pos));
            (void)has_pos_loop;
        }
    }

    TEST_CASE("components") {
        SignedGraph g(6);
        g.add_edge(4, 2, Sign::Positive);
        g.add_edge(0, 5, Sign::Negative);
        const auto comps = sgc::components(g);
        REQUIRE(comps.size() == 4);
        CHECK(comps[0] == std::vector<int>{0, 5});
        CHECK(comps[1] == std::vector<int>{1});
        CHECK(comps[2] == std::vector<int>{2, 4});
        CHECK(comps[3] == std::vector<int>{3});
    }

    TEST_CASE("girth types of the documented examples") {
        const auto c4 = sgc::girth_types(sgc::signed_cycle(4, true));
        CHECK(c4.g[0][0] == 2);
        CHECK(c4.g[1][0] == 4);
        CHECK_FALSE(c4.g[0][1].has_value());
        CHECK_FALSE(c4.g[1][1].has_value());

        const auto c5 = sgc::girth_types(sgc::signed_cycle(5, false));
        CHECK(c5.g[0][0] == 2);
        CHECK(c5.g[0][1] == 5);
        CHECK_FALSE(c5.g[1][0].has_value());
        CHECK_FALSE(c5.g[1][1].has_value());

        const auto none = sgc::girth_types(SignedGraph(4));
        for (const auto& row : none.g) {
            for (const auto& x : row) {
                CHECK_FALSE(x.has_value());
            }
        }

        SignedGraph loop(1);
        loop.add_edge(0, 0, Sign::Negative);
        const auto l = sgc::girth_types(loop);
        CHECK(l.g[1][1] == 1);
        CHECK(l.g[0][0] == 2);
    }

    TEST_CASE("girth types agree with walk enumeration and survive switching") {
        oracle::Rng rng(16);
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = oracle::random_graph(rng, {1, 7, 9, true, true});
            const auto got = sgc::girth_types(g);
            const auto want = oracle::brute_girth(g);
            const auto switched = sgc::girth_types(sgc::switch_at(g, oracle::random_subset(rng, g.vertex_count())));
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    const auto ij = got.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
                    CHECK(ij.value_or(-1) == want[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    CHECK(ij == switched.g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
                    if (ij) {
                        CHECK(*ij % 2 == j);
                    }
                }
            }
            if (g.edge_count() > 0) {
                CHECK(got.g[0][0].has_value());
            }
        }
    }

    TEST_CASE("degeneracy") {
        SignedGraph tree(6);
        for (int v = 1; v < 6; ++v) {
            tree.add_edge(v / 2, v, Sign::Positive);
        }
        CHECK(sgc::degeneracy(tree).d == 1);
        CHECK(sgc::degeneracy(sgc::complete_graph(4, Sign::Negative)).d == 3);
        const auto om = sgc::degeneracy(sgc::omega_d(4));
        CHECK(om.d == 4);
        CHECK(om.order.size() == 10);
        CHECK(sgc::degeneracy(sgc::omega_d(6)).d == 6);

        SignedGraph multi(2);
        multi.add_edge(0, 1, Sign::Positive);
        multi.add_edge(0, 1, Sign::Negative);
        CHECK(sgc::degeneracy(multi).d == 2);
        SignedGraph loop(1);
        loop.add_edge(0, 0, Sign::Negative);
        CHECK(sgc::degeneracy(loop).d == 2);
    }

    TEST_CASE("degeneracy order is a valid elimination witness") {
        oracle::Rng rng(17);
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = oracle::random_graph(rng, {1, 8, 14, true, true});
            const auto deg = sgc::degeneracy(g);
            REQUIRE(deg.order.size() == static_cast<std::size_t>(g.vertex_count()));
            std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()));
            for (std::size_t i = 0; i < deg.order.size(); ++i) {
                pos[static_cast<std::size_t>(deg.order[i])] = static_cast<int>(i);
            }
            // each vertex has at most d edge ends towards vertices removed after it
            int worst = 0;
            for (int v = 0; v < g.vertex_count(); ++v) {
                int later = 0;
                for (const auto& e : g.edges()) {
                    if (e.is_loop()) {
                        later += e.u == v ? 2 : 0;
                    } else if (e.u == v && pos[static_cast<std::size_t>(e.v)] > pos[static_cast<std::size_t>(v)]) {
                        ++later;
                    } else if (e.v == v && pos[static_cast<std::size_t>(e.u)] > pos[static_cast<std::size_t>(v)]) {
                        ++later;
                    }
                }
                worst = std::max(worst, later);
            }
            CHECK(worst == deg.d);
        }
    }

    TEST_CASE("chromatic number") {
        CHECK(sgc::chromatic_number({}) == 0);
        CHECK(sgc::chromatic_number({{}, {}}) == 1);
        CHECK(sgc::chromatic_number({{1}, {0}}) == 2);
        CHECK(sgc::chromatic_number({{1, 2}, {0, 2}, {0, 1}}) == 3);
        // C5
        CHECK(sgc::chromatic_number({{1, 4}, {0, 2}, {1, 3}, {2, 4}, {3, 0}}) == 3);
    }

    TEST_CASE("chi_plus examples") {
        SignedGraph neg(4);
        for (int u = 0; u < 4; ++u) {
            for (int v = u + 1; v < 4; ++v) {
                neg.add_edge(u, v, Sign::Negative);
            }
        }
        CHECK(sgc::chi_plus(neg) == 1);
        // switching two vertices of (K4,+) leaves a positive perfect matching
        CHECK(sgc::chi_plus(sgc::complete_graph(4, Sign::Positive)) == 2);
        CHECK(sgc::chi_plus(sgc::digon()) == 2);
        CHECK(sgc::chi_plus(sgc::complete_graph(5, Sign::Positive)) == 3);
        CHECK(sgc::chi_plus(SignedGraph(0)) == 0);
    }

    TEST_CASE("chi_plus agrees with exhaustive switching") {
        oracle::Rng rng(18);
        for (int trial = 0; trial < 200; ++trial) {
            const auto g = oracle::random_graph(rng, {1, 6, 12, true, true});
            CHECK(sgc::chi_plus(g) == oracle::brute_chi_plus(g));
        }
    }

    TEST_CASE("chi_plus size guard") {
        try {
            sgc::chi_plus(sgc::complete_graph(30, Sign::Positive), 20);
            FAIL("expected a capacity error");
        } catch (const sgc::Error& e) {
            CHECK(e.code() == sgc::Errc::capacity);
        }
    }
}
