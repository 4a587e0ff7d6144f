#include "sgc.h"

#include <cstring>
#include <string>

#include "sgc/certificates.hpp"
#include "sgc/constructions.hpp"
#include "sgc/error.hpp"
#include "sgc/indicators.hpp"
#include "sgc/io.hpp"
#include "sgc/solver.hpp"

struct sgc_graph {
    sgc::SgDocument doc;
};

struct sgc_coloring {
    sgc::Coloring c;
};

struct sgc_chi {
    sgc::ChiResult r;
};

namespace {

thread_local std::string last_error;
thread_local int last_line = 0;

auto status_of(sgc::Errc code) -> sgc_status {
    switch (code) {
    case sgc::Errc::parse: return SGC_ERR_PARSE;
    case sgc::Errc::domain: return SGC_ERR_DOMAIN;
    case sgc::Errc::mismatch: return SGC_ERR_MISMATCH;
    case sgc::Errc::uncolorable: return SGC_ERR_UNCOLORABLE;
    case sgc::Errc::capacity: return SGC_ERR_CAPACITY;
    case sgc::Errc::malformed: return SGC_ERR_MALFORMED;
    case sgc::Errc::corrupt_certificate: return SGC_ERR_CORRUPT_CERTIFICATE;
    case sgc::Errc::not_refinable: return SGC_ERR_NOT_REFINABLE;
    case sgc::Errc::shape: return SGC_ERR_SHAPE;
    case sgc::Errc::internal: return SGC_ERR_INTERNAL;
    case sgc::Errc::io: return SGC_ERR_IO;
    }
    return SGC_ERR_INTERNAL;
}

auto fail(sgc_status s, const std::string& msg, int line = 0) -> sgc_status {
    last_error = msg;
    last_line = line;
    return s;
}

template <typename Fn>
auto guarded(Fn&& fn) -> sgc_status {
    try {
        last_error.clear();
        last_line = 0;
        return fn();
    } catch (const sgc::Error& e) {
        return fail(status_of(e.code()), e.what(), e.line());
    } catch (const std::exception& e) {
        return fail(SGC_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SGC_ERR_INTERNAL, "unknown failure");
    }
}

auto dup(const std::string& s) -> char* {
    auto* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

auto to_sign(int s) -> sgc::Sign {
    if (s == 1) {
        return sgc::Sign::Positive;
    }
    if (s == -1) {
        return sgc::Sign::Negative;
    }
    throw sgc::Error(sgc::Errc::domain, "sign must be +1 or -1");
}

auto sign_param(std::int64_t s) -> sgc::Sign { return to_sign(static_cast<int>(s)); }

struct Generated {
    sgc::SignedGraph graph;
    sgc::VertexNames names;
    int u = -1;
    int v = -1;
};

auto generate(const std::string& name, const std::vector<std::int64_t>& a) -> Generated {
    using namespace sgc;
    const auto need = [&](std::size_t k) {
        if (a.size() != k) {
            throw Error(Errc::domain, name + " takes " + std::to_string(k) + " parameter(s)");
        }
    };
    const auto small = [&](std::size_t i) {
        if (a[i] < 0 || a[i] > 100000) {
            throw Error(Errc::domain, "parameter out of range");
        }
        return static_cast<int>(a[i]);
    };
    const auto indicator = [](const Indicator& ind) { return Generated{ind.graph, {}, ind.u, ind.v}; };
    if (name == "cycle") {
        need(2);
        return {signed_cycle(small(0), sign_param(a[1]) == Sign::Negative), {}};
    }
    if (name == "complete") {
        need(2);
        return {complete_graph(small(0), sign_param(a[1])), {}};
    }
    if (name == "digon") {
        need(0);
        return {digon(), {}};
    }
    if (name == "k4-digon") {
        need(0);
        return {replace_edges(complete_graph(4, Sign::Positive), digon_indicator()), {}};
    }
    if (name == "clique") {
        need(2);
        return {circular_clique_signed(a[0], a[1]), {}};
    }
    if (name == "hat-clique") {
        need(2);
        return {hat_clique(a[0], a[1]), {}};
    }
    if (name == "two-path") {
        need(1);
        return indicator(two_path(sign_param(a[0])));
    }
    if (name == "two-path-pair") {
        need(0);
        return indicator(two_path_pair());
    }
    if (name == "gamma") {
        need(1);
        return indicator(gamma(small(0)));
    }
    if (name == "gamma-prime") {
        need(1);
        return indicator(gamma_prime(small(0)));
    }
    if (name == "spal5") {
        need(0);
        return {spal5(), spal5_names()};
    }
    if (name == "F") {
        need(0);
        return {outerplanar_f(), outerplanar_f_names()};
    }
    if (name == "omega") {
        need(1);
        return {omega_d(small(0)), {}};
    }
    if (name == "mini-gadget") {
        need(0);
        return {mini_gadget(), mini_gadget_names()};
    }
    if (name == "wenger") {
        need(0);
        return {wenger(), wenger_names(), 8, 9};
    }
    if (name == "wenger-tilde") {
        need(0);
        return {wenger_tilde(), wenger_tilde_names(), 8, 9};
    }
    if (name == "big-gamma") {
        need(0);
        const auto ind = big_gamma();
        return {ind.graph, wenger_tilde_names(), ind.u, ind.v};
    }
    if (name == "k4-omega") {
        need(0);
        return {k4_omega(), {}};
    }
    throw Error(Errc::domain, "unknown construction '" + name + "'");
}

} // namespace

extern "C" {

const char* sgc_last_error(void) { return last_error.c_str(); }
int sgc_last_error_line(void) { return last_line; }
void sgc_string_free(char* s) { std::free(s); }

sgc_status sgc_graph_new(int n, sgc_graph** out) {
    return guarded([&] {
        if (out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null output");
        }
        *out = new sgc_graph{{sgc::SignedGraph(n), {}}};
        return SGC_OK;
    });
}

void sgc_graph_free(sgc_graph* g) { delete g; }

sgc_status sgc_graph_add_edge(sgc_graph* g, int u, int v, int sign) {
    return guarded([&] {
        if (g == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null graph");
        }
        g->doc.graph.add_edge(u, v, to_sign(sign));
        return SGC_OK;
    });
}

int sgc_graph_vertex_count(const sgc_graph* g) { return g ? g->doc.graph.vertex_count() : 0; }
int sgc_graph_edge_count(const sgc_graph* g) { return g ? g->doc.graph.edge_count() : 0; }

sgc_status sgc_graph_edge(const sgc_graph* g, int index, int* u, int* v, int* sign) {
    return guarded([&] {
        if (g == nullptr || index < 0 || index >= g->doc.graph.edge_count()) {
            return fail(SGC_ERR_ARGUMENT, "edge index out of range");
        }
        const auto& e = g->doc.graph.edge(index);
        if (u) *u = e.u;
        if (v) *v = e.v;
        if (sign) *sign = static_cast<int>(e.sign);
        return SGC_OK;
    });
}

sgc_status sgc_graph_parse(const char* text, sgc_graph** out) {
    return guarded([&] {
        if (text == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *out = new sgc_graph{sgc::parse_sg(text)};
        return SGC_OK;
    });
}

sgc_status sgc_graph_load(const char* path, sgc_graph** out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *out = new sgc_graph{sgc::parse_sg(sgc::read_file(path))};
        return SGC_OK;
    });
}

sgc_status sgc_graph_render(const sgc_graph* g, char** text) {
    return guarded([&] {
        if (g == nullptr || text == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *text = dup(sgc::render_sg(g->doc.graph, g->doc.names));
        return SGC_OK;
    });
}

sgc_status sgc_graph_save(const sgc_graph* g, const char* path) {
    return guarded([&] {
        if (g == nullptr || path == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        sgc::write_file(path, sgc::render_sg(g->doc.graph, g->doc.names));
        return SGC_OK;
    });
}

sgc_status sgc_generate(const char* name, const int64_t* params, size_t nparams, sgc_graph** out, int* terminal_u,
                        int* terminal_v) {
    return guarded([&] {
        if (name == nullptr || out == nullptr || (nparams > 0 && params == nullptr)) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        auto made = generate(name, std::vector<std::int64_t>(params, params + nparams));
        if (terminal_u) *terminal_u = made.u;
        if (terminal_v) *terminal_v = made.v;
        *out = new sgc_graph{{std::move(made.graph), std::move(made.names)}};
        return SGC_OK;
    });
}

sgc_status sgc_generate_coloring(const char* name, sgc_coloring** out) {
    return guarded([&] {
        if (name == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        const std::string n = name;
        if (n == "big-gamma") {
            *out = new sgc_coloring{sgc::big_gamma_coloring()};
        } else if (n == "k4-omega") {
            *out = new sgc_coloring{sgc::k4_omega_coloring()};
        } else {
            return fail(SGC_ERR_DOMAIN, "no explicit coloring ships with '" + n + "'");
        }
        return SGC_OK;
    });
}

sgc_status sgc_coloring_new(int64_t p, int64_t q, size_t n, sgc_coloring** out) {
    return guarded([&] {
        if (out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null output");
        }
        if (q < 1 || p % 2 != 0 || p < 2 * q) {
            return fail(SGC_ERR_DOMAIN, "need even p >= 2q >= 2");
        }
        *out = new sgc_coloring{{p, q, std::vector<std::int64_t>(n, 0)}};
        return SGC_OK;
    });
}

void sgc_coloring_free(sgc_coloring* c) { delete c; }
int64_t sgc_coloring_p(const sgc_coloring* c) { return c ? c->c.p : 0; }
int64_t sgc_coloring_q(const sgc_coloring* c) { return c ? c->c.q : 0; }
size_t sgc_coloring_size(const sgc_coloring* c) { return c ? c->c.colors.size() : 0; }

int64_t sgc_coloring_get(const sgc_coloring* c, size_t vertex) {
    return c && vertex < c->c.colors.size() ? c->c.colors[vertex] : -1;
}

sgc_status sgc_coloring_set(sgc_coloring* c, size_t vertex, int64_t color) {
    return guarded([&] {
        if (c == nullptr || vertex >= c->c.colors.size()) {
            return fail(SGC_ERR_ARGUMENT, "vertex out of range");
        }
        if (color < 0 || color >= c->c.p) {
            return fail(SGC_ERR_MALFORMED, "color out of range");
        }
        c->c.colors[vertex] = color;
        return SGC_OK;
    });
}

sgc_status sgc_coloring_parse(const char* text, sgc_coloring** out) {
    return guarded([&] {
        if (text == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *out = new sgc_coloring{sgc::parse_coloring(text)};
        return SGC_OK;
    });
}

sgc_status sgc_coloring_load(const char* path, sgc_coloring** out) {
    return guarded([&] {
        if (path == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *out = new sgc_coloring{sgc::parse_coloring(sgc::read_file(path))};
        return SGC_OK;
    });
}

sgc_status sgc_coloring_render(const sgc_coloring* c, char** text) {
    return guarded([&] {
        if (c == nullptr || text == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *text = dup(sgc::render_coloring(c->c));
        return SGC_OK;
    });
}

sgc_status sgc_coloring_save(const sgc_coloring* c, const char* path) {
    return guarded([&] {
        if (c == nullptr || path == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        sgc::write_file(path, sgc::render_coloring(c->c));
        return SGC_OK;
    });
}

sgc_status sgc_format_rational(int64_t num, int64_t den, char** text) {
    return guarded([&] {
        if (text == nullptr || den == 0) {
            return fail(SGC_ERR_ARGUMENT, "bad argument");
        }
        *text = dup(sgc::format_rational(sgc::Rational(num, den)));
        return SGC_OK;
    });
}

sgc_status sgc_parse_circumference(const char* text, int64_t* p, int64_t* q) {
    return guarded([&] {
        if (text == nullptr || p == nullptr || q == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        const auto r = sgc::normalize_even(sgc::parse_rational(text));
        *p = r.p();
        *q = r.q();
        return SGC_OK;
    });
}

sgc_status sgc_verify(const sgc_graph* g, const sgc_coloring* c, int* ok) {
    return guarded([&] {
        if (g == nullptr || c == nullptr || ok == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *ok = sgc::verify_coloring(g->doc.graph, c->c) ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_feasible(const sgc_graph* g, int64_t p, int64_t q, const int* pin_vertices, const int64_t* pin_colors,
                        size_t npins, uint64_t node_budget, sgc_verdict* verdict, sgc_coloring** witness) {
    return guarded([&] {
        if (g == nullptr || verdict == nullptr || (npins > 0 && (pin_vertices == nullptr || pin_colors == nullptr))) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        std::vector<sgc::Pin> pins;
        for (size_t i = 0; i < npins; ++i) {
            pins.push_back({pin_vertices[i], pin_colors[i]});
        }
        const auto res = sgc::solve_pq(g->doc.graph, p, q, pins, {node_budget});
        *verdict = static_cast<sgc_verdict>(res.verdict);
        if (witness) {
            *witness = res.coloring ? new sgc_coloring{*res.coloring} : nullptr;
        }
        return SGC_OK;
    });
}

sgc_status sgc_chi_compute(const sgc_graph* g, uint64_t node_budget, sgc_chi** out) {
    return guarded([&] {
        if (g == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *out = new sgc_chi{sgc::chi_c(g->doc.graph, {node_budget})};
        return SGC_OK;
    });
}

void sgc_chi_free(sgc_chi* r) { delete r; }
int sgc_chi_edgeless(const sgc_chi* r) { return r && !r->r.value ? 1 : 0; }
int sgc_chi_exact(const sgc_chi* r) { return r && r->r.exact() ? 1 : 0; }

void sgc_chi_value(const sgc_chi* r, int64_t* p, int64_t* q) {
    const bool has = r && r->r.value;
    if (p) *p = has ? r->r.value->p() : 1;
    if (q) *q = has ? r->r.value->q() : 1;
}

int sgc_chi_refuted(const sgc_chi* r, int64_t* p, int64_t* q) {
    if (!r || !r->r.refuted) {
        return 0;
    }
    if (p) *p = r->r.refuted->p();
    if (q) *q = r->r.refuted->q();
    return 1;
}

int sgc_chi_undecided(const sgc_chi* r, int64_t* p, int64_t* q) {
    if (!r || !r->r.undecided) {
        return 0;
    }
    if (p) *p = r->r.undecided->p();
    if (q) *q = r->r.undecided->q();
    return 1;
}

uint64_t sgc_chi_nodes(const sgc_chi* r) { return r ? r->r.nodes : 0; }

sgc_coloring* sgc_chi_witness(const sgc_chi* r) {
    if (!r || !r->r.witness) {
        return nullptr;
    }
    return new sgc_coloring{*r->r.witness};
}

sgc_status sgc_certify(const sgc_graph* g, const sgc_coloring* c, char** text) {
    return guarded([&] {
        if (g == nullptr || c == nullptr || text == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        const auto cert = sgc::certify(g->doc.graph, sgc::to_rational(c->c));
        *text = dup(sgc::render_certificate(cert));
        return SGC_OK;
    });
}

sgc_status sgc_refine(const sgc_graph* g, const sgc_coloring* c, char** text) {
    return guarded([&] {
        if (g == nullptr || c == nullptr || text == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        const auto refined = sgc::refine(g->doc.graph, sgc::to_rational(c->c));
        *text = dup(sgc::render_rational_coloring(refined));
        return SGC_OK;
    });
}

sgc_status sgc_zset(const sgc_graph* g, int u, int v, int64_t p, int64_t q, uint64_t node_budget, int* table) {
    return guarded([&] {
        if (g == nullptr || table == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        const auto z = sgc::z_set({g->doc.graph, u, v}, p, q, {node_budget});
        for (std::size_t d = 0; d < z.verdicts.size(); ++d) {
            table[d] = static_cast<int>(z.verdicts[d]);
        }
        return SGC_OK;
    });
}

sgc_status sgc_switching_equivalent(const sgc_graph* a, const sgc_graph* b, int* equivalent) {
    return guarded([&] {
        if (a == nullptr || b == nullptr || equivalent == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *equivalent = sgc::switching_equivalent(a->doc.graph, b->doc.graph) ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_is_balanced(const sgc_graph* g, int* balanced) {
    return guarded([&] {
        if (g == nullptr || balanced == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *balanced = sgc::is_balanced(g->doc.graph) ? 1 : 0;
        return SGC_OK;
    });
}

sgc_status sgc_girth_types(const sgc_graph* g, int64_t out[4]) {
    return guarded([&] {
        if (g == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        const auto t = sgc::girth_types(g->doc.graph);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                out[2 * i + j] = t.g[i][j] ? *t.g[i][j] : -1;
            }
        }
        return SGC_OK;
    });
}

sgc_status sgc_degeneracy(const sgc_graph* g, int* d) {
    return guarded([&] {
        if (g == nullptr || d == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *d = sgc::degeneracy(g->doc.graph).d;
        return SGC_OK;
    });
}

sgc_status sgc_chi_plus(const sgc_graph* g, int* out) {
    return guarded([&] {
        if (g == nullptr || out == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        *out = sgc::chi_plus(g->doc.graph);
        return SGC_OK;
    });
}

sgc_status sgc_chi_s(const sgc_graph* g, int64_t* p, int64_t* q, int* edgeless) {
    return guarded([&] {
        if (g == nullptr || p == nullptr || q == nullptr) {
            return fail(SGC_ERR_ARGUMENT, "null argument");
        }
        const auto value = sgc::chi_s(g->doc.graph);
        if (edgeless) *edgeless = value ? 0 : 1;
        *p = value ? value->p() : 1;
        *q = value ? value->q() : 1;
        return SGC_OK;
    });
}

} // extern "C"
