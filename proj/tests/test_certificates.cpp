#include <doctest.h>

#include <functional>

#include "oracles.hpp"
#include "sgc/certificates.hpp"
#include "sgc/constructions.hpp"
#include "sgc/error.hpp"
#include "sgc/solver.hpp"

using sgc::Rational;
using sgc::RationalColoring;
using sgc::Sign;
using sgc::SignedGraph;
using sgc::TightArc;

namespace {

auto code_of(const std::function<void()>& fn) -> sgc::Errc {
    try {
        fn();
    } catch (const sgc::Error& e) {
        return e.code();
    }
    FAIL("no error raised");
    return sgc::Errc::internal;
}

auto points(std::initializer_list<Rational> xs) -> std::vector<Rational> { return {xs}; }

auto all_negative_cycle(int n) -> SignedGraph {
    SignedGraph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n, Sign::Negative);
    }
    return g;
}

} // namespace

TEST_SUITE("certificates") {
    TEST_CASE("conversions") {
        const auto rc = sgc::to_rational(sgc::Coloring{10, 3, {0, 4, 9}});
        CHECK(rc.r == Rational(10, 3));
        CHECK(rc.colors == points({0, Rational(4, 3), 3}));
        const auto wider = sgc::scale_coloring(rc, 5);
        CHECK(wider.r == 5);
        CHECK(wider.colors[2] == Rational(9, 2));
    }

    TEST_CASE("rational verification") {
        SignedGraph g(2);
        g.add_edge(0, 1, Sign::Positive);
        CHECK(sgc::verify_rational(g, {3, points({0, 1})}));
        CHECK_FALSE(sgc::verify_rational(g, {3, points({0, Rational(1, 2)})}));
        CHECK(sgc::verify_rational(g, {3, points({0, 2})}));
        CHECK(code_of([&] { sgc::verify_rational(g, {3, points({0, 3})}); }) == sgc::Errc::malformed);
        CHECK(code_of([&] { sgc::verify_rational(g, {3, points({0})}); }) == sgc::Errc::malformed);
    }

    TEST_CASE("tight arcs of a single positive edge") {
        SignedGraph g(2);
        g.add_edge(0, 1, Sign::Positive);
        const auto d = sgc::tight_digraph(g, {3, points({0, 1})});
        REQUIRE(d.arcs.size() == 1);
        CHECK(d.arcs[0] == TightArc{0, 1, 0});
        CHECK_FALSE(sgc::find_tight_cycle(d).has_value());

        const auto both = sgc::tight_digraph(g, {2, points({0, 1})});
        CHECK(both.arcs.size() == 2);
        const auto cyc = sgc::find_tight_cycle(both);
        REQUIRE(cyc.has_value());
        CHECK(cyc->size() == 2);
    }

    TEST_CASE("non-verifying colorings are rejected") {
        SignedGraph g(2);
        g.add_edge(0, 1, Sign::Negative);
        CHECK(code_of([&] { sgc::tight_digraph(g, {3, points({0, Rational(3, 2)})}); }) == sgc::Errc::malformed);
    }

    TEST_CASE("cycle detection on hand-made digraphs") {
        CHECK_FALSE(sgc::find_tight_cycle({3, {{0, 1, 0}, {1, 2, 1}, {0, 2, 2}}}).has_value());
        const auto two = sgc::find_tight_cycle({3, {{0, 1, 0}, {1, 0, 1}, {1, 2, 2}}});
        REQUIRE(two.has_value());
        CHECK(two->size() == 2);
        CHECK(two->at(0).to == two->at(1).from);
        CHECK(two->at(1).to == two->at(0).from);
        const auto self = sgc::find_tight_cycle({1, {{0, 0, 0}}});
        REQUIRE(self.has_value());
        CHECK(self->size() == 1);
        CHECK_FALSE(sgc::find_tight_cycle({4, {}}).has_value());
    }

    TEST_CASE("negative 4-cycle at 8/3: s=3, t=1, a=1") {
        const auto c4 = sgc::signed_cycle(4, true);
        const RationalColoring c{Rational(8, 3), points({0, 1, 2, Rational(1, 3)})};
        REQUIRE(sgc::verify_rational(c4, c));
        const auto d = sgc::tight_digraph(c4, c);
        CHECK(d.arcs.size() == 4);
        const auto cert = sgc::certify(c4, c);
        CHECK(cert.cycle.size() == 4);
        CHECK(cert.s == 3);
        CHECK(cert.t == 1);
        CHECK(cert.a == 1);
        CHECK(cert.r == Rational(8, 3));
    }

    TEST_CASE("solver optimum of the negative 4-cycle certifies 8/3") {
        const auto c4 = sgc::signed_cycle(4, true);
        const auto res = sgc::chi_c(c4);
        const auto cert = sgc::certify(c4, sgc::to_rational(*res.witness));
        CHECK(cert.cycle.size() == 4);
        CHECK(cert.r == Rational(8, 3));
    }

    TEST_CASE("positive triangle at 3: s=3, t=0, a=1") {
        const auto k3 = sgc::signed_cycle(3, false);
        const auto cert = sgc::certify(k3, {3, points({0, 1, 2})});
        CHECK(cert.s == 3);
        CHECK(cert.t == 0);
        CHECK(cert.a == 1);
        CHECK(cert.r == 3);
    }

    TEST_CASE("winding may be negative for a non-optimal coloring") {
        // all-negative 4-cycle (chi_c = 2) colored at r = 4 with each step going back by one
        const auto g = all_negative_cycle(4);
        const auto cert = sgc::certify(g, {4, points({0, 3, 2, 1})});
        CHECK(cert.s == 0);
        CHECK(cert.t == 4);
        CHECK(cert.a == -1);
        CHECK(cert.r == 4);
    }

    TEST_CASE("F at 10/3 certifies its value") {
        const auto f = sgc::outerplanar_f();
        const auto res = sgc::chi_c(f);
        const auto cert = sgc::certify(f, sgc::to_rational(*res.witness));
        CHECK(cert.r == Rational(10, 3));
        CHECK(Rational(2 * (cert.s + cert.t), 2 * cert.a + cert.t) == Rational(10, 3));
    }

    TEST_CASE("certificate rendering") {
        const auto k3 = sgc::signed_cycle(3, false);
        const auto text = sgc::render_certificate(sgc::certify(k3, {3, points({0, 1, 2})}));
        CHECK(text == "cycle 0 1 2\nedges 0 1 2\ns = 3\nt = 0\na = 1\nr = 2(s+t)/(2a+t) = 3/1 (6/2)\n");
    }

    TEST_CASE("corrupt certificates are refused") {
        const auto k3 = sgc::signed_cycle(3, false);
        const RationalColoring c{3, points({0, 1, 2})};
        CHECK(code_of([&] { sgc::cert_value(k3, c, {}); }) == sgc::Errc::corrupt_certificate);
        // walks backwards along slack arcs
        CHECK(code_of([&] { sgc::cert_value(k3, c, {{0, 2, 2}, {2, 1, 1}, {1, 0, 0}}); }) ==
              sgc::Errc::corrupt_certificate);
        // not closed
        CHECK(code_of([&] { sgc::cert_value(k3, c, {{0, 1, 0}, {1, 2, 1}}); }) == sgc::Errc::corrupt_certificate);
        // arc does not ride its edge
        CHECK(code_of([&] { sgc::cert_value(k3, c, {{0, 1, 1}, {1, 2, 1}, {2, 0, 2}}); }) ==
              sgc::Errc::corrupt_certificate);
        // a scaled coloring has no tight cycle at all
        CHECK(code_of([&] { sgc::certify(k3, sgc::scale_coloring(c, 4)); }) == sgc::Errc::corrupt_certificate);
    }

    TEST_CASE("scaling up empties the tight digraph") {
        oracle::Rng rng(31);
        for (int trial = 0; trial < 100; ++trial) {
            const auto g = oracle::random_graph(rng, {2, 6, 9, true, true});
            const auto res = sgc::chi_c(g);
            if (!res.witness) {
                continue;
            }
            const auto rc = sgc::to_rational(*res.witness);
            const auto wider = sgc::scale_coloring(rc, rc.r + Rational(1, oracle::uniform(rng, 1, 9)));
            CHECK(sgc::verify_rational(g, wider));
            CHECK(sgc::tight_digraph(g, wider).arcs.empty());
        }
    }

    TEST_CASE("refine on F re-embedded at 4") {
        const auto f = sgc::outerplanar_f();
        const auto res = sgc::chi_c(f);
        const auto at4 = sgc::scale_coloring(sgc::to_rational(*res.witness), 4);
        const auto out = sgc::refine(f, at4);
        CHECK(out.r < 4);
        CHECK(out.r >= Rational(10, 3));
        CHECK(sgc::verify_rational(f, out));
    }

    TEST_CASE("refine refuses when a tight cycle exists") {
        SignedGraph g(2);
        g.add_edge(0, 1, Sign::Positive);
        CHECK(code_of([&] { sgc::refine(g, {2, points({0, 1})}); }) == sgc::Errc::not_refinable);
        const auto k3 = sgc::signed_cycle(3, false);
        CHECK(code_of([&] { sgc::refine(k3, {3, points({0, 1, 2})}); }) == sgc::Errc::not_refinable);
    }

    TEST_CASE("refine handles nonempty acyclic digraphs") {
        SignedGraph g(2);
        g.add_edge(0, 1, Sign::Positive);
        const auto out = sgc::refine(g, {3, points({0, 1})});
        CHECK(out.r < 3);
        CHECK(out.r >= 2);
        CHECK(sgc::verify_rational(g, out));
    }

    TEST_CASE("refine on random colorings with acyclic tight digraphs") {
        oracle::Rng rng(32);
        int nonempty = 0;
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = oracle::random_graph(rng, {2, 6, 9, true, true});
            if (g.edge_count() == 0) {
                continue;
            }
            const std::int64_t p = 2 * oracle::uniform(rng, 2, 6);
            const std::int64_t q = oracle::uniform(rng, 1, static_cast<int>(p / 2));
            const int v = oracle::uniform(rng, 0, g.vertex_count() - 1);
            const auto c = sgc::feasible_pq(g, p, q, {{v, oracle::uniform(rng, 0, static_cast<int>(p - 1))}});
            if (!c) {
                continue;
            }
            const auto rc = sgc::to_rational(*c);
            const auto d = sgc::tight_digraph(g, rc);
            if (sgc::find_tight_cycle(d)) {
                CHECK(code_of([&] { sgc::refine(g, rc); }) == sgc::Errc::not_refinable);
                continue;
            }
            nonempty += d.arcs.empty() ? 0 : 1;
            const auto out = sgc::refine(g, rc);
            CHECK(out.r < rc.r);
            CHECK(sgc::verify_rational(g, out));
        }
        CHECK(nonempty > 20);
    }

    TEST_CASE("refine then re-solve never undercuts chi_c") {
        oracle::Rng rng(33);
        for (int trial = 0; trial < 60; ++trial) {
            const auto g = oracle::random_graph(rng, {2, 5, 8, true, true});
            const auto res = sgc::chi_c(g);
            if (!res.witness) {
                continue;
            }
            auto current = sgc::scale_coloring(sgc::to_rational(*res.witness), res.value->value() + 1);
            for (int step = 0; step < 6; ++step) {
                const auto d = sgc::tight_digraph(g, current);
                if (sgc::find_tight_cycle(d)) {
                    break;
                }
                current = sgc::refine(g, current);
                CHECK(current.r >= res.value->value());
            }
        }
    }
}
