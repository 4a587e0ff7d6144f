// Command-line shell over the sgc C API.
//
// Exit codes: 0 ok, 1 parse or usage error, 2 infeasible or false,
// 3 node budget exhausted, 4 size guard exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "sgc.h"

namespace {

enum Exit { ok = 0, usage = 1, negative = 2, budget = 3, capacity = 4 };

struct Failure {
    int code;
    std::string message;
};

struct GraphFree {
    void operator()(sgc_graph* g) const { sgc_graph_free(g); }
};
struct ColoringFree {
    void operator()(sgc_coloring* c) const { sgc_coloring_free(c); }
};
struct ChiFree {
    void operator()(sgc_chi* r) const { sgc_chi_free(r); }
};
struct StringFree {
    void operator()(char* s) const { sgc_string_free(s); }
};

using Graph = std::unique_ptr<sgc_graph, GraphFree>;
using Colors = std::unique_ptr<sgc_coloring, ColoringFree>;
using Chi = std::unique_ptr<sgc_chi, ChiFree>;
using Text = std::unique_ptr<char, StringFree>;

auto exit_for(sgc_status s) -> int {
    switch (s) {
    case SGC_OK: return ok;
    case SGC_ERR_CAPACITY: return capacity;
    case SGC_ERR_UNCOLORABLE:
    case SGC_ERR_MISMATCH:
    case SGC_ERR_NOT_REFINABLE: return negative;
    default: return usage;
    }
}

void check(sgc_status s) {
    if (s != SGC_OK) {
        throw Failure{exit_for(s), sgc_last_error()};
    }
}

auto load_graph(const std::string& path) -> Graph {
    sgc_graph* g = nullptr;
    check(sgc_graph_load(path.c_str(), &g));
    return Graph(g);
}

auto load_coloring(const std::string& path) -> Colors {
    sgc_coloring* c = nullptr;
    check(sgc_coloring_load(path.c_str(), &c));
    return Colors(c);
}

auto show(std::int64_t p, std::int64_t q) -> std::string {
    char* raw = nullptr;
    check(sgc_format_rational(p, q, &raw));
    return Text(raw).get();
}

// Terminal distances are plain lengths, so no even form is attached.
auto show_distance(std::int64_t d, std::int64_t q) -> std::string {
    const auto g = std::gcd(d, q);
    if (d == 0) {
        return "0";
    }
    if (q / g == 1) {
        return std::to_string(d / g);
    }
    return std::to_string(d / g) + "/" + std::to_string(q / g);
}

struct Circumference {
    std::int64_t p = 0;
    std::int64_t q = 0;
};

auto parse_r(const std::string& text) -> Circumference {
    Circumference r;
    check(sgc_parse_circumference(text.c_str(), &r.p, &r.q));
    return r;
}

auto budget_from(const std::optional<std::uint64_t>& flag) -> std::uint64_t {
    if (flag) {
        return *flag;
    }
    if (const char* env = std::getenv("SGC_BUDGET"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const auto value = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return value;
            }
        } catch (const std::logic_error&) {
        }
        throw Failure{usage, std::string("SGC_BUDGET is not a node count: ") + env};
    }
    return 0;
}

auto witness_path(const std::string& input) -> std::string {
    std::filesystem::path path(input);
    path.replace_extension(".chi.col");
    return path.string();
}

auto run_chi(const std::string& file, bool certify, std::optional<std::uint64_t> budget_flag) -> int {
    const auto g = load_graph(file);
    sgc_chi* raw = nullptr;
    const auto s = sgc_chi_compute(g.get(), budget_from(budget_flag), &raw);
    if (s == SGC_ERR_UNCOLORABLE) {
        std::cout << "chi_c = infinity (" << sgc_last_error() << ")\n";
        return negative;
    }
    check(s);
    const Chi result(raw);
    if (sgc_chi_edgeless(result.get()) != 0) {
        std::cout << "chi_c = 1\nwitness: none (no edges)\n";
        return ok;
    }
    std::int64_t p = 0;
    std::int64_t q = 0;
    sgc_chi_value(result.get(), &p, &q);
    const Colors witness(sgc_chi_witness(result.get()));
    const auto path = witness_path(file);
    check(sgc_coloring_save(witness.get(), path.c_str()));
    if (sgc_chi_exact(result.get()) == 0) {
        std::int64_t lp = 2;
        std::int64_t lq = 1;
        const bool has_lower = sgc_chi_refuted(result.get(), &lp, &lq) != 0;
        std::int64_t up = 0;
        std::int64_t uq = 0;
        sgc_chi_undecided(result.get(), &up, &uq);
        std::cout << "chi_c unknown: budget exhausted at candidate " << show(up, uq) << "\n";
        std::cout << "chi_c in " << (has_lower ? "(" : "[") << show(lp, lq) << ", " << show(p, q) << "]\n";
        std::cout << "witness: " << path << "\n";
        return budget;
    }
    std::cout << "chi_c = " << show(p, q) << "\n";
    std::cout << "witness: " << path << "\n";
    if (certify) {
        char* cert = nullptr;
        check(sgc_certify(g.get(), witness.get(), &cert));
        std::cout << "certificate:\n" << Text(cert).get();
    }
    return ok;
}

auto run_check(const std::string& file, const std::string& r_text, const std::string& cfile) -> int {
    const auto g = load_graph(file);
    const auto c = load_coloring(cfile);
    const auto r = parse_r(r_text);
    const auto cp = sgc_coloring_p(c.get());
    const auto cq = sgc_coloring_q(c.get());
    if (r.p * cq != cp * r.q) {
        throw Failure{usage, "coloring is a " + show(cp, cq) + " coloring, not " + show(r.p, r.q)};
    }
    int verified = 0;
    check(sgc_verify(g.get(), c.get(), &verified));
    std::cout << (verified != 0 ? "valid " : "invalid ") << show(cp, cq) << " coloring\n";
    return verified != 0 ? ok : negative;
}

auto run_zset(const std::string& file, int u, int v, const std::string& r_text,
              std::optional<std::uint64_t> budget_flag) -> int {
    const auto g = load_graph(file);
    const auto r = parse_r(r_text);
    std::vector<int> table(static_cast<std::size_t>(r.p / 2 + 1));
    check(sgc_zset(g.get(), u, v, r.p, r.q, budget_from(budget_flag), table.data()));
    std::cout << "Z-set at r = " << show(r.p, r.q) << ", terminals " << u << " " << v << "\n";
    bool any_unknown = false;
    std::vector<std::int64_t> members;
    for (std::size_t d = 0; d < table.size(); ++d) {
        const auto verdict = static_cast<sgc_verdict>(table[d]);
        const char* word = verdict == SGC_FEASIBLE ? "in" : verdict == SGC_INFEASIBLE ? "out" : "unknown";
        any_unknown = any_unknown || verdict == SGC_UNKNOWN;
        if (verdict == SGC_FEASIBLE) {
            members.push_back(static_cast<std::int64_t>(d));
        }
        std::cout << "  d = " << show_distance(static_cast<std::int64_t>(d), r.q) << "  " << word << "\n";
    }
    if (any_unknown) {
        std::cout << "summary: incomplete (budget exhausted)\n";
        return budget;
    }
    if (members.empty()) {
        std::cout << "summary: empty\n";
    } else if (members.back() - members.front() + 1 == static_cast<std::int64_t>(members.size())) {
        std::cout << "summary: [" << show_distance(members.front(), r.q) << ", "
                  << show_distance(members.back(), r.q) << "]\n";
    } else {
        std::cout << "summary: not an interval\n";
    }
    return ok;
}

auto gen_param(const std::string& word) -> std::int64_t {
    if (word == "+") {
        return 1;
    }
    if (word == "-") {
        return -1;
    }
    try {
        std::size_t used = 0;
        const auto value = std::stoll(word, &used);
        if (used == word.size()) {
            return value;
        }
    } catch (const std::logic_error&) {
    }
    throw Failure{usage, "bad parameter '" + word + "'"};
}

auto run_gen(const std::string& name, const std::vector<std::string>& words, const std::string& out,
             const std::string& coloring_out) -> int {
    std::vector<std::int64_t> params;
    for (const auto& w : words) {
        params.push_back(gen_param(w));
    }
    sgc_graph* raw = nullptr;
    int tu = -1;
    int tv = -1;
    check(sgc_generate(name.c_str(), params.data(), params.size(), &raw, &tu, &tv));
    const Graph g(raw);
    char* text = nullptr;
    check(sgc_graph_render(g.get(), &text));
    std::string body = Text(text).get();
    if (tu >= 0) {
        body = "# terminals " + std::to_string(tu) + " " + std::to_string(tv) + "\n" + body;
    }
    if (out.empty()) {
        std::cout << body;
    } else {
        std::ofstream file(out, std::ios::binary);
        if (!(file << body)) {
            throw Failure{usage, "cannot write " + out};
        }
    }
    if (!coloring_out.empty()) {
        sgc_coloring* c = nullptr;
        check(sgc_generate_coloring(name.c_str(), &c));
        check(sgc_coloring_save(Colors(c).get(), coloring_out.c_str()));
    }
    return ok;
}

auto run_equiv(const std::string& a, const std::string& b) -> int {
    const auto ga = load_graph(a);
    const auto gb = load_graph(b);
    int same = 0;
    const auto s = sgc_switching_equivalent(ga.get(), gb.get(), &same);
    if (s == SGC_ERR_MISMATCH) {
        std::cout << "not equivalent (" << sgc_last_error() << ")\n";
        return negative;
    }
    check(s);
    std::cout << (same != 0 ? "switching equivalent\n" : "not equivalent\n");
    return same != 0 ? ok : negative;
}

auto run_girth(const std::string& file) -> int {
    const auto g = load_graph(file);
    std::int64_t types[4] = {};
    check(sgc_girth_types(g.get(), types));
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const auto value = types[2 * i + j];
            std::cout << "g_" << i << j << " = " << (value < 0 ? std::string("inf") : std::to_string(value)) << "\n";
        }
    }
    return ok;
}

auto run_refine(const std::string& file, const std::string& r_text, const std::string& cfile) -> int {
    const auto g = load_graph(file);
    const auto c = load_coloring(cfile);
    const auto r = parse_r(r_text);
    if (r.p * sgc_coloring_q(c.get()) != sgc_coloring_p(c.get()) * r.q) {
        throw Failure{usage, "coloring header does not match --r"};
    }
    char* text = nullptr;
    const auto s = sgc_refine(g.get(), c.get(), &text);
    if (s == SGC_ERR_NOT_REFINABLE) {
        std::cout << "tight cycle present\n";
        char* cert = nullptr;
        check(sgc_certify(g.get(), c.get(), &cert));
        std::cout << Text(cert).get();
        return negative;
    }
    check(s);
    std::cout << Text(text).get();
    return ok;
}

auto run_chis(const std::string& file) -> int {
    const auto g = load_graph(file);
    std::int64_t p = 0;
    std::int64_t q = 0;
    int edgeless = 0;
    check(sgc_chi_s(g.get(), &p, &q, &edgeless));
    std::cout << "chi_s = " << (edgeless != 0 ? std::string("1") : show(p, q)) << "\n";
    return ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact circular chromatic numbers of signed graphs"};
    app.require_subcommand(1);
    int code = ok;

    std::string file;
    std::string file2;
    std::string r_text;
    std::string cfile;
    std::string out;
    std::string coloring_out;
    std::string name;
    std::vector<std::string> params;
    bool certify = false;
    int u = 0;
    int v = 1;
    std::optional<std::uint64_t> budget_flag;

    auto* chi = app.add_subcommand("chi", "compute chi_c and write a witness coloring beside FILE");
    chi->add_option("FILE", file, "signed graph (.sg)")->required();
    chi->add_flag("--certify", certify, "print the tight-cycle certificate");
    chi->add_option("--budget", budget_flag, "search node budget (default: SGC_BUDGET or unlimited)");

    auto* chk = app.add_subcommand("check", "verify a coloring");
    chk->add_option("FILE", file)->required();
    chk->add_option("--r", r_text, "circumference p/q")->required();
    chk->add_option("--coloring", cfile)->required();

    auto* zs = app.add_subcommand("zset", "feasible terminal distances of an indicator");
    zs->add_option("FILE", file)->required();
    zs->add_option("--u", u)->required();
    zs->add_option("--v", v)->required();
    zs->add_option("--r", r_text)->required();
    zs->add_option("--budget", budget_flag);

    auto* gen = app.add_subcommand("gen", "write a named construction");
    gen->add_option("NAME", name)->required();
    gen->add_option("PARAMS", params, "integers, or + / - for signs");
    gen->add_option("-o", out, "output file (default stdout)");
    gen->add_option("--coloring", coloring_out, "also write the bundled coloring");

    auto* eq = app.add_subcommand("equiv", "switching equivalence");
    eq->add_option("FILE1", file)->required();
    eq->add_option("FILE2", file2)->required();

    auto* gi = app.add_subcommand("girth", "the four closed-walk girth types");
    gi->add_option("FILE", file)->required();

    auto* rf = app.add_subcommand("refine", "lower the circumference of a coloring without tight cycle");
    rf->add_option("FILE", file)->required();
    rf->add_option("--r", r_text)->required();
    rf->add_option("--coloring", cfile)->required();

    auto* cs = app.add_subcommand("chis", "signed circular chromatic number (small graphs)");
    cs->add_option("FILE", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (chi->parsed()) {
            code = run_chi(file, certify, budget_flag);
        } else if (chk->parsed()) {
            code = run_check(file, r_text, cfile);
        } else if (zs->parsed()) {
            code = run_zset(file, u, v, r_text, budget_flag);
        } else if (gen->parsed()) {
            code = run_gen(name, params, out, coloring_out);
        } else if (eq->parsed()) {
            code = run_equiv(file, file2);
        } else if (gi->parsed()) {
            code = run_girth(file);
        } else if (rf->parsed()) {
            code = run_refine(file, r_text, cfile);
        } else if (cs->parsed()) {
            code = run_chis(file);
        }
    } catch (const Failure& f) {
        std::cerr << "sgc: " << f.message << "\n";
        return f.code;
    }
    return code;
}
