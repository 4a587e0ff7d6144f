// Prints one PASS/FAIL line per acceptance criterion and exits non-zero if
// any criterion fails. Wall-clock limits are part of each check.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "properties.hpp"
#include "sgc/certificates.hpp"
#include "sgc/constructions.hpp"
#include "sgc/indicators.hpp"
#include "sgc/solver.hpp"

namespace {

using sgc::Rational;
using sgc::Sign;

struct Outcome {
    bool ok = false;
    std::string detail;
};

auto chi_value(const sgc::SignedGraph& g) -> Rational {
    const auto r = sgc::chi_c(g);
    return r.value ? r.value->value() : Rational(1);
}

auto show(const Rational& r) -> std::string { return sgc::format_rational(r); }

auto expect_chi(const sgc::SignedGraph& g, const Rational& want, std::string& log) -> bool {
    const auto got = chi_value(g);
    if (!log.empty()) {
        log += ", ";
    }
    log += show(got);
    return got == want;
}

auto criterion_cycles() -> Outcome {
    Outcome out{true, {}};
    for (int k = 1; k <= 4; ++k) {
        out.ok &= expect_chi(sgc::signed_cycle(2 * k, true), Rational(4 * k, 2 * k - 1), out.detail);
        out.ok &= expect_chi(sgc::signed_cycle(2 * k + 1, false), Rational(2 * k + 1, k), out.detail);
        out.ok &= expect_chi(sgc::signed_cycle(2 * k + 1, true), Rational(2), out.detail);
    }
    return out;
}

auto criterion_f() -> Outcome {
    Outcome out{true, {}};
    out.ok = expect_chi(sgc::outerplanar_f(), Rational(10, 3), out.detail);
    return out;
}

auto criterion_omega4() -> Outcome {
    Outcome out{true, {}};
    out.ok = expect_chi(sgc::omega_d(4), Rational(6), out.detail);
    return out;
}

auto criterion_digon() -> Outcome {
    Outcome out{true, {}};
    out.ok = expect_chi(sgc::digon(), Rational(4), out.detail);
    out.ok &= expect_chi(sgc::replace_edges(sgc::complete_graph(4, Sign::Positive), sgc::digon_indicator()),
                         Rational(8), out.detail);
    return out;
}

auto criterion_cliques() -> Outcome {
    Outcome out{true, {}};
    out.ok = expect_chi(sgc::circular_clique_signed(6, 2), Rational(3), out.detail);
    out.ok &= expect_chi(sgc::circular_clique_signed(10, 3), Rational(10, 3), out.detail);
    return out;
}

auto criterion_spal5() -> Outcome {
    const auto host = sgc::circular_clique_signed(10, 3);
    const auto g = sgc::spal5();
    const auto map = sgc::find_sp_homomorphism(g, host, true);
    if (!map) {
        return {false, "no injection found"};
    }
    std::ostringstream s;
    s << "map";
    for (const int x : *map) {
        s << " " << x;
    }
    return {sgc::is_sp_homomorphism(g, host, *map), s.str()};
}

auto criterion_gamma_zsets() -> Outcome {
    Outcome out{true, {}};
    for (int i = 1; i <= 4; ++i) {
        const auto ind = sgc::gamma(i);
        const auto z = sgc::z_set(ind, 18, 5);
        const int lo = i % 2 == 1 ? 0 : i;
        const int hi = i % 2 == 1 ? 9 - i : 9;
        std::string members;
        for (int d = 0; d <= 9; ++d) {
            const bool expected = lo <= d && d <= hi;
            out.ok &= z.contains(d) == expected;
            if (z.contains(d)) {
                members += std::to_string(d);
            }
            if (i <= 2) {
                const bool brute = oracle::brute_coloring(ind.graph, 18, 5, {{ind.u, 0}, {ind.v, d}}).has_value();
                out.ok &= brute == expected;
            }
        }
        out.detail += (i > 1 ? " " : "") + std::string("G") + std::to_string(i) + "={" + members + "}";
    }
    out.detail += ", G1 G2 brute-forced";
    return out;
}

auto criterion_gamma_prime() -> Outcome {
    const auto g = sgc::gamma_prime(2).graph;
    const bool at_10_3 = sgc::feasible_pq(g, 10, 3).has_value();
    const auto at_8_2 = sgc::feasible_pq(g, 8, 2);
    const bool witness_ok = at_8_2 && sgc::verify_coloring(g, *at_8_2);
    return {!at_10_3 && witness_ok, std::string("(10,3) ") + (at_10_3 ? "feasible" : "infeasible") +
                                        ", (8,2) " + (witness_ok ? "feasible" : "infeasible")};
}

auto criterion_composition() -> Outcome {
    Outcome out{true, {}};
    const auto g = sgc::replace_edges(sgc::complete_graph(3, Sign::Positive), sgc::two_path_pair());
    out.ok = expect_chi(g, Rational(3), out.detail);
    return out;
}

auto criterion_big_gamma_coloring() -> Outcome {
    const auto ind = sgc::big_gamma();
    const auto c = sgc::big_gamma_coloring();
    const bool ok = c.p == 28 && c.q == 6 && sgc::verify_coloring(ind.graph, c);
    return {ok, std::to_string(ind.graph.vertex_count()) + " vertices, " + std::to_string(ind.graph.edge_count()) +
                    " edges at (28,6)"};
}

bool kernel_ok = false;

auto criterion_wenger_kernel() -> Outcome {
    const sgc::Indicator ind{sgc::wenger_tilde(), 8, 9};
    const auto z = sgc::z_set(ind, 18, 4);
    std::string members;
    for (int d = 0; d <= 9; ++d) {
        if (z.verdicts[static_cast<std::size_t>(d)] == sgc::Verdict::feasible) {
            members += (members.empty() ? "" : ",") + std::to_string(d);
        }
    }
    const bool ok = z.complete() && !z.contains(0) && !z.contains(1);
    kernel_ok = ok;
    return {ok, "Z = {" + members + "} (in quarters), " + std::to_string(z.nodes) + " nodes"};
}

auto criterion_k4_omega() -> Outcome {
    const auto g = sgc::k4_omega();
    const auto c = sgc::k4_omega_coloring();
    const bool upper = c.p == 28 && c.q == 6 && sgc::verify_coloring(g, c);
    const auto res = sgc::solve_pq(g, 18, 4, {}, {1'000'000'000ULL});
    std::string lower;
    bool lower_ok = false;
    switch (res.verdict) {
    case sgc::Verdict::infeasible:
        lower = "infeasible at 9/2 (18/4)";
        lower_ok = true;
        break;
    case sgc::Verdict::feasible:
        lower = "FEASIBLE at 9/2 (18/4)";
        break;
    case sgc::Verdict::unknown:
        lower = "budget exhausted at 9/2 (18/4); accepted on criterion 11";
        lower_ok = kernel_ok;
        break;
    }
    return {upper && lower_ok, "124-vertex coloring at 14/3 " + std::string(upper ? "verifies" : "FAILS") + ", " +
                                   lower + ", " + std::to_string(res.nodes) + " nodes"};
}

auto criterion_properties() -> Outcome {
    Outcome out{true, {}};
    for (const auto& rep : props::all(20260101, 200)) {
        out.ok &= rep.passed() && rep.instances >= 200;
        if (!rep.passed()) {
            out.detail += "[" + rep.name + ": " + rep.first_failure + "] ";
        }
    }
    if (out.ok) {
        out.detail = "9 suites x 200 instances";
    }
    return out;
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Outcome()> check;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "signed cycle values", 1.0, criterion_cycles},
        {2, "chi_c(F) = 10/3", 10.0, criterion_f},
        {3, "chi_c(Omega_4) = 6", 300.0, criterion_omega4},
        {4, "chi_c(digon) = 4, chi_c(K4(D)) = 8", 10.0, criterion_digon},
        {5, "chi_c(K^s_{6;2}) = 3, chi_c(K^s_{10;3}) = 10/3", 300.0, criterion_cliques},
        {6, "SPal5 embeds into K^s_{10;3}", 60.0, criterion_spal5},
        {7, "Z-sets of Gamma_1..Gamma_4 at (18,5)", 240.0, criterion_gamma_zsets},
        {8, "Gamma'_2 infeasible at (10,3), feasible at (8,2)", 300.0, criterion_gamma_prime},
        {9, "chi_c(K3(I)) = 3 for the 2-path pair", 60.0, criterion_composition},
        {10, "explicit (28,6) coloring of Gamma verifies", 1.0, criterion_big_gamma_coloring},
        {11, "Z(wenger-tilde, 18/4) excludes 0 and 1/4", 1800.0, criterion_wenger_kernel},
        {12, "K4(Omega): feasible at 14/3, infeasible at 9/2", 3600.0, criterion_k4_omega},
        {13, "property suites", 300.0, criterion_properties},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.check();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool pass = out.ok && in_time;
        failed += pass ? 0 : 1;
        std::printf("%s  %2d  %s  [%.3f s / %.0f s]  %s%s\n", pass ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_seconds, out.detail.c_str(), in_time ? "" : "  (over time limit)");
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
