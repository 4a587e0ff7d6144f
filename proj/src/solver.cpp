#include "sgc/solver.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bits.hpp"
#include "sgc/error.hpp"

namespace sgc {

namespace {

void check_circle(std::int64_t p, std::int64_t q) {
    if (q < 1 || p % 2 != 0 || p < 2 * q) {
        throw Error(Errc::domain, "need even p >= 2q >= 2, got " + std::to_string(p) + "/" +
                                      std::to_string(q));
    }
}

auto edge_ok(const Edge& e, std::int64_t cu, std::int64_t cv, std::int64_t p, std::int64_t q) -> bool {
    if (e.sign == Sign::Positive) {
        return !e.is_loop() && circ_dist(cu, cv, p) >= q;
    }
    return circ_dist(cu, antipode(cv, p), p) >= q;
}

struct BudgetExhausted {};

struct Arc {
    int to;
    int mask; // index into the allowed-difference table
};

template <int W>
class Search {
    using B = detail::Bits<W>;

  public:
    Search(const SignedGraph& g, int p, int q, std::uint64_t budget)
        : n_(g.vertex_count()), p_(p), q_(q), budget_(budget), full_(B::full(p)) {
        // allowed differences: 0 positive, 1 negative, 2 both
        B pos;
        B neg;
        for (int d = 0; d < p; ++d) {
            if (d >= q && d <= p - q) {
                pos.set(d);
            }
            if (d <= p / 2 - q || d >= p / 2 + q) {
                neg.set(d);
            }
        }
        allowed_ = {pos, neg, pos & neg};
        std::map<std::pair<int, int>, int> kinds;
        for (const auto& e : g.edges()) {
            if (e.is_loop()) {
                continue;
            }
            const auto key = std::minmax(e.u, e.v);
            const int bit = e.sign == Sign::Positive ? 1 : 2;
            kinds[{key.first, key.second}] |= bit;
        }
        arcs_.resize(static_cast<std::size_t>(n_));
        for (const auto& [key, bits] : kinds) {
            const int m = bits == 1 ? 0 : bits == 2 ? 1 : 2;
            arcs_[static_cast<std::size_t>(key.first)].push_back({key.second, m});
            arcs_[static_cast<std::size_t>(key.second)].push_back({key.first, m});
        }
        dom_.assign(static_cast<std::size_t>(n_), full_);
        queued_.assign(static_cast<std::size_t>(n_), 0);
        stamp_.assign(static_cast<std::size_t>(n_), 0);
    }

    auto run(const std::vector<Pin>& pins) -> bool {
        std::vector<char> pinned(static_cast<std::size_t>(n_), 0);
        for (const auto& pin : pins) {
            if (pin.vertex < 0 || pin.vertex >= n_) {
                throw Error(Errc::domain, "pin vertex out of range: " + std::to_string(pin.vertex));
            }
            if (pin.color < 0 || pin.color >= p_) {
                throw Error(Errc::domain, "pin color out of range: " + std::to_string(pin.color));
            }
            dom_[static_cast<std::size_t>(pin.vertex)] &= B::single(static_cast<int>(pin.color));
            pinned[static_cast<std::size_t>(pin.vertex)] = 1;
        }
        for (int v = 0; v < n_; ++v) {
            if (dom_[static_cast<std::size_t>(v)].none()) {
                return false;
            }
            enqueue(v);
        }
        if (!propagate()) {
            return false;
        }
        for (const auto& comp : static_components()) {
            const bool has_pin = std::any_of(comp.begin(), comp.end(), [&](int v) {
                return pinned[static_cast<std::size_t>(v)] != 0;
            });
            if (!has_pin && !break_symmetry(comp)) {
                return false;
            }
            if (!search(comp)) {
                return false;
            }
        }
        return true;
    }

    auto colors() const -> std::vector<std::int64_t> {
        std::vector<std::int64_t> out;
        out.reserve(dom_.size());
        for (const auto& d : dom_) {
            out.push_back(d.lowest());
        }
        return out;
    }

    auto nodes() const noexcept -> std::uint64_t { return nodes_; }

  private:
    void enqueue(int v) {
        if (!queued_[static_cast<std::size_t>(v)]) {
            queued_[static_cast<std::size_t>(v)] = 1;
            queue_.push_back(v);
        }
    }

    void clear_queue() {
        for (const int v : queue_) {
            queued_[static_cast<std::size_t>(v)] = 0;
        }
        queue_.clear();
    }

    // Colors with a partner in `from` at an allowed difference; stops once `target` is covered.
    auto support(const B& from, const B& diffs, const B& target) const -> B {
        B out;
        const bool by_color = from.count() <= diffs.count();
        const B& base = by_color ? diffs : from;
        const B& shifts = by_color ? from : diffs;
        for (int s = shifts.lowest(); s >= 0; s = shifts.next(s)) {
            out |= base.rotl(s, p_, full_);
            if (target.subset_of(out)) {
                break;
            }
        }
        return out;
    }

    auto propagate() -> bool {
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const int w = queue_[head];
            queued_[static_cast<std::size_t>(w)] = 0;
            const B from = dom_[static_cast<std::size_t>(w)];
            for (const auto& arc : arcs_[static_cast<std::size_t>(w)]) {
                B& target = dom_[static_cast<std::size_t>(arc.to)];
                const B keep = target & support(from, allowed_[static_cast<std::size_t>(arc.mask)], target);
                if (keep == target) {
                    continue;
                }
                if (keep.none()) {
                    for (std::size_t rest = head + 1; rest < queue_.size(); ++rest) {
                        queued_[static_cast<std::size_t>(queue_[rest])] = 0;
                    }
                    queue_.clear();
                    return false;
                }
                target = keep;
                enqueue(arc.to);
            }
        }
        queue_.clear();
        return true;
    }

    auto static_components() const -> std::vector<std::vector<int>> {
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        std::vector<std::vector<int>> out;
        for (int s = 0; s < n_; ++s) {
            if (seen[static_cast<std::size_t>(s)]) {
                continue;
            }
            std::vector<int> comp{s};
            seen[static_cast<std::size_t>(s)] = 1;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                for (const auto& arc : arcs_[static_cast<std::size_t>(comp[i])]) {
                    if (!seen[static_cast<std::size_t>(arc.to)]) {
                        seen[static_cast<std::size_t>(arc.to)] = 1;
                        comp.push_back(arc.to);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            out.push_back(std::move(comp));
        }
        return out;
    }

    // Minimum remaining values, then most neighbours, then lowest index.
    auto pick(const std::vector<int>& vars) const -> int {
        int best = -1;
        int best_size = 0;
        std::size_t best_deg = 0;
        for (const int v : vars) {
            const int size = dom_[static_cast<std::size_t>(v)].count();
            if (size <= 1) {
                continue;
            }
            const auto deg = arcs_[static_cast<std::size_t>(v)].size();
            if (best < 0 || size < best_size || (size == best_size && deg > best_deg)) {
                best = v;
                best_size = size;
                best_deg = deg;
            }
        }
        return best;
    }

    // Rotation fixes one vertex at 0; reflection then keeps a second in [0, p/2].
    auto break_symmetry(const std::vector<int>& comp) -> bool {
        const int root = pick(comp);
        if (root < 0) {
            return true;
        }
        dom_[static_cast<std::size_t>(root)] &= B::single(0);
        if (dom_[static_cast<std::size_t>(root)].none()) {
            return false;
        }
        enqueue(root);
        if (!propagate()) {
            return false;
        }
        const int second = pick(comp);
        if (second < 0) {
            return true;
        }
        dom_[static_cast<std::size_t>(second)] &= B::range(0, p_ / 2);
        if (dom_[static_cast<std::size_t>(second)].none()) {
            return false;
        }
        enqueue(second);
        return propagate();
    }

    // Connected pieces of the still-open vertices in `vars`, smallest first.
    auto split(const std::vector<int>& vars) -> std::vector<std::vector<int>> {
        ++epoch_;
        for (const int v : vars) {
            if (dom_[static_cast<std::size_t>(v)].count() > 1) {
                stamp_[static_cast<std::size_t>(v)] = epoch_;
            }
        }
        std::vector<std::vector<int>> out;
        for (const int s : vars) {
            if (stamp_[static_cast<std::size_t>(s)] != epoch_) {
                continue;
            }
            std::vector<int> comp{s};
            stamp_[static_cast<std::size_t>(s)] = epoch_ + 1;
            for (std::size_t i = 0; i < comp.size(); ++i) {
                for (const auto& arc : arcs_[static_cast<std::size_t>(comp[i])]) {
                    if (stamp_[static_cast<std::size_t>(arc.to)] == epoch_) {
                        stamp_[static_cast<std::size_t>(arc.to)] = epoch_ + 1;
                        comp.push_back(arc.to);
                    }
                }
            }
            out.push_back(std::move(comp));
        }
        ++epoch_;
        std::stable_sort(out.begin(), out.end(),
                         [](const auto& a, const auto& b) { return a.size() < b.size(); });
        return out;
    }

    auto search(const std::vector<int>& vars) -> bool {
        auto pieces = split(vars);
        if (pieces.empty()) {
            return true;
        }
        if (pieces.size() == 1) {
            return branch(pieces.front());
        }
        for (const auto& piece : pieces) {
            if (!branch(piece)) {
                return false;
            }
        }
        return true;
    }

    auto branch(const std::vector<int>& vars) -> bool {
        const int x = pick(vars);
        if (x < 0) {
            return true;
        }
        const B values = dom_[static_cast<std::size_t>(x)];
        const std::size_t depth = depth_++;
        if (saved_.size() <= depth) {
            saved_.emplace_back();
        }
        saved_[depth] = dom_;
        for (int c = values.lowest(); c >= 0; c = values.next(c)) {
            if (budget_ != 0 && nodes_ >= budget_) {
                throw BudgetExhausted{};
            }
            ++nodes_;
            dom_[static_cast<std::size_t>(x)] = B::single(c);
            enqueue(x);
            if (propagate() && search(vars)) {
                --depth_;
                return true;
            }
            dom_ = saved_[depth];
        }
        --depth_;
        return false;
    }

    int n_;
    int p_;
    int q_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    B full_;
    std::array<B, 3> allowed_{};
    std::vector<std::vector<Arc>> arcs_;
    std::vector<B> dom_;
    std::vector<char> queued_;
    std::vector<int> queue_;
    std::vector<unsigned> stamp_;
    unsigned epoch_ = 0;
    std::vector<std::vector<B>> saved_;
    std::size_t depth_ = 0;
};

template <int W>
auto run_search(const SignedGraph& g, std::int64_t p, std::int64_t q, const std::vector<Pin>& pins,
                const SearchLimits& limits) -> Feasibility {
    Search<W> search(g, static_cast<int>(p), static_cast<int>(q), limits.node_budget);
    Feasibility out;
    try {
        if (search.run(pins)) {
            out.verdict = Verdict::feasible;
            out.coloring = Coloring{p, q, search.colors()};
        } else {
            out.verdict = Verdict::infeasible;
        }
    } catch (const BudgetExhausted&) {
        out.verdict = Verdict::unknown;
    }
    out.nodes = search.nodes();
    return out;
}

} // namespace

auto verify_coloring(const SignedGraph& g, const Coloring& c) -> bool {
    check_circle(c.p, c.q);
    if (static_cast<int>(c.colors.size()) != g.vertex_count()) {
        throw Error(Errc::malformed, "coloring has " + std::to_string(c.colors.size()) +
                                         " entries for " + std::to_string(g.vertex_count()) +
                                         " vertices");
    }
    for (const auto x : c.colors) {
        if (x < 0 || x >= c.p) {
            throw Error(Errc::malformed, "color out of range: " + std::to_string(x));
        }
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return edge_ok(e, c.colors[static_cast<std::size_t>(e.u)],
                       c.colors[static_cast<std::size_t>(e.v)], c.p, c.q);
    });
}

auto transport_coloring(const Coloring& c, const std::vector<int>& set) -> Coloring {
    Coloring out = c;
    for (const int v : set) {
        auto& x = out.colors.at(static_cast<std::size_t>(v));
        x = antipode(x, c.p);
    }
    return out;
}

auto solve_pq(const SignedGraph& g, std::int64_t p, std::int64_t q, const std::vector<Pin>& pins,
              const SearchLimits& limits) -> Feasibility {
    check_circle(p, q);
    if (g.has_positive_loop()) {
        throw Error(Errc::uncolorable, "positive loop");
    }
    Feasibility out;
    if (p <= 64) {
        out = run_search<1>(g, p, q, pins, limits);
    } else if (p <= 128) {
        out = run_search<2>(g, p, q, pins, limits);
    } else if (p <= 256) {
        out = run_search<4>(g, p, q, pins, limits);
    } else if (p <= 512) {
        out = run_search<8>(g, p, q, pins, limits);
    } else {
        throw Error(Errc::capacity, "at most 512 colors supported, got " + std::to_string(p));
    }
    if (out.coloring && !verify_coloring(g, *out.coloring)) {
        throw Error(Errc::internal, "search produced a non-verifying coloring");
    }
    return out;
}

auto feasible_pq(const SignedGraph& g, std::int64_t p, std::int64_t q, const std::vector<Pin>& pins)
    -> std::optional<Coloring> {
    return solve_pq(g, p, q, pins, {}).coloring;
}

namespace {

// Greedy (2k, 1)-coloring along the reversed elimination order, 2k = 2 floor(d/2) + 2.
auto degeneracy_coloring(const SignedGraph& g) -> Coloring {
    const auto deg = degeneracy(g);
    const std::int64_t k = deg.d / 2 + 1;
    const int n = g.vertex_count();
    std::vector<std::vector<std::pair<int, Sign>>> adj(static_cast<std::size_t>(n));
    for (const auto& e : g.edges()) {
        if (!e.is_loop()) {
            adj[static_cast<std::size_t>(e.u)].push_back({e.v, e.sign});
            adj[static_cast<std::size_t>(e.v)].push_back({e.u, e.sign});
        }
    }
    Coloring c{2 * k, 1, std::vector<std::int64_t>(static_cast<std::size_t>(n), -1)};
    for (auto it = deg.order.rbegin(); it != deg.order.rend(); ++it) {
        std::vector<char> used(static_cast<std::size_t>(2 * k), 0);
        for (const auto& [w, s] : adj[static_cast<std::size_t>(*it)]) {
            const auto cw = c.colors[static_cast<std::size_t>(w)];
            if (cw >= 0) {
                used[static_cast<std::size_t>(s == Sign::Positive ? cw : antipode(cw, 2 * k))] = 1;
            }
        }
        const auto free = std::find(used.begin(), used.end(), 0);
        if (free == used.end()) {
            throw Error(Errc::internal, "degeneracy greedy ran out of colors");
        }
        c.colors[static_cast<std::size_t>(*it)] = free - used.begin();
    }
    return c;
}

} // namespace

auto chi_c(const SignedGraph& g, const SearchLimits& limits) -> ChiResult {
    if (g.has_positive_loop()) {
        throw Error(Errc::uncolorable, "positive loop");
    }
    ChiResult out;
    if (g.edge_count() == 0) {
        return out;
    }
    if (const auto set = balance_witness(negated(g))) {
        out.value = EvenRational::normalize(2, 1);
        Coloring all_negative{2, 1, std::vector<std::int64_t>(static_cast<std::size_t>(g.vertex_count()), 0)};
        out.witness = transport_coloring(all_negative, *set);
        return out;
    }
    Coloring best = degeneracy_coloring(g);
    const auto upper = EvenRational::normalize(best.p, 1);
    auto cands = candidates(g.vertex_count(), EvenRational::normalize(2, 1), upper);
    if (cands.empty() || cands.back() != upper) {
        cands.push_back(upper);
    }
    // cands[lo] is refuted (2 is, since the negation is unbalanced), cands[hi] is feasible.
    std::size_t lo = 0;
    std::size_t hi = cands.size() - 1;
    while (hi - lo > 1) {
        const std::size_t mid = lo + (hi - lo) / 2;
        SearchLimits left = limits;
        if (limits.node_budget != 0) {
            left.node_budget = limits.node_budget > out.nodes ? limits.node_budget - out.nodes : 1;
        }
        const auto res = solve_pq(g, cands[mid].p(), cands[mid].q(), {}, left);
        out.nodes += res.nodes;
        if (res.verdict == Verdict::feasible) {
            hi = mid;
            best = *res.coloring;
        } else if (res.verdict == Verdict::infeasible) {
            lo = mid;
        } else {
            out.undecided = cands[mid];
            break;
        }
    }
    out.value = cands[hi];
    out.witness = best;
    out.refuted = cands[lo];
    return out;
}

auto chi_s(const SignedGraph& g, int max_free_edges) -> std::optional<EvenRational> {
    const int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        parent[static_cast<std::size_t>(v)] = v;
    }
    const auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            v = parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        }
        return v;
    };
    std::vector<int> extra;
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        if (e.is_loop()) {
            throw Error(Errc::domain, "chi_s needs a loopless graph");
        }
        const int a = find(e.u);
        const int b = find(e.v);
        if (a == b) {
            extra.push_back(i);
        } else {
            parent[static_cast<std::size_t>(a)] = b;
        }
    }
    const int k = static_cast<int>(extra.size());
    if (k > max_free_edges || k > 30) {
        throw Error(Errc::capacity, "chi_s enumerates 2^" + std::to_string(k) +
                                        " signatures; limit is 2^" + std::to_string(max_free_edges));
    }
    if (g.edge_count() == 0) {
        return std::nullopt;
    }
    std::optional<EvenRational> best;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask) {
        SignedGraph h(n);
        std::vector<Sign> signs(static_cast<std::size_t>(g.edge_count()), Sign::Positive);
        for (int j = 0; j < k; ++j) {
            if (mask & (std::uint32_t{1} << j)) {
                signs[static_cast<std::size_t>(extra[static_cast<std::size_t>(j)])] = Sign::Negative;
            }
        }
        for (int i = 0; i < g.edge_count(); ++i) {
            h.add_edge(g.edge(i).u, g.edge(i).v, signs[static_cast<std::size_t>(i)]);
        }
        const auto value = *chi_c(h).value;
        if (!best || *best < value) {
            best = value;
        }
    }
    return best;
}

auto zero_free_to_circular(const std::vector<int>& f, int k) -> Coloring {
    if (k < 1) {
        throw Error(Errc::malformed, "k must be positive");
    }
    Coloring c{2 * static_cast<std::int64_t>(k), 1, {}};
    for (const int x : f) {
        if (x == 0 || x > k || x < -k) {
            throw Error(Errc::malformed, "0-free color out of range: " + std::to_string(x));
        }
        c.colors.push_back(x > 0 ? x - 1 : -x + k - 1);
    }
    return c;
}

auto circular_to_zero_free(const Coloring& c) -> std::vector<int> {
    if (c.q != 1 || c.p % 2 != 0 || c.p < 2) {
        throw Error(Errc::malformed, "need a (2k,1)-coloring");
    }
    const auto k = c.p / 2;
    std::vector<int> f;
    for (const auto x : c.colors) {
        if (x < 0 || x >= c.p) {
            throw Error(Errc::malformed, "color out of range: " + std::to_string(x));
        }
        f.push_back(static_cast<int>(x < k ? x + 1 : -(x - k + 1)));
    }
    return f;
}

auto is_zero_free_coloring(const SignedGraph& g, const std::vector<int>& f, int k) -> bool {
    if (static_cast<int>(f.size()) != g.vertex_count()) {
        throw Error(Errc::malformed, "0-free coloring has wrong length");
    }
    for (const int x : f) {
        if (x == 0 || x > k || x < -k) {
            throw Error(Errc::malformed, "0-free color out of range: " + std::to_string(x));
        }
    }
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        const int a = f[static_cast<std::size_t>(e.u)];
        const int b = f[static_cast<std::size_t>(e.v)];
        return e.sign == Sign::Positive ? a != b : a != -b;
    });
}

namespace {

struct SignMatrix {
    int n = 0;
    std::vector<char> pos;
    std::vector<char> neg;

    explicit SignMatrix(const SignedGraph& g)
        : n(g.vertex_count()), pos(static_cast<std::size_t>(n * n), 0), neg(static_cast<std::size_t>(n * n), 0) {
        for (const auto& e : g.edges()) {
            auto& m = e.sign == Sign::Positive ? pos : neg;
            m[static_cast<std::size_t>(e.u * n + e.v)] = 1;
            m[static_cast<std::size_t>(e.v * n + e.u)] = 1;
        }
    }
    auto has(int a, int b, Sign s) const -> bool {
        return (s == Sign::Positive ? pos : neg)[static_cast<std::size_t>(a * n + b)] != 0;
    }
};

class HomSearch {
  public:
    HomSearch(const SignedGraph& g, const SignedGraph& h, bool injective)
        : need_(g), target_(h), injective_(injective), map_(static_cast<std::size_t>(g.vertex_count()), -1),
          used_(static_cast<std::size_t>(h.vertex_count()), 0) {}

    auto run() -> std::optional<std::vector<int>> {
        if (extend(0)) {
            return map_;
        }
        return std::nullopt;
    }

  private:
    auto consistent(int x) const -> bool {
        const int hx = map_[static_cast<std::size_t>(x)];
        for (int y = 0; y <= x; ++y) {
            const int hy = map_[static_cast<std::size_t>(y)];
            for (const Sign s : {Sign::Positive, Sign::Negative}) {
                if (need_.has(x, y, s) && !target_.has(hx, hy, s)) {
                    return false;
                }
            }
        }
        return true;
    }

    auto extend(int x) -> bool {
        if (x == need_.n) {
            return true;
        }
        for (int c = 0; c < target_.n; ++c) {
            if (injective_ && used_[static_cast<std::size_t>(c)]) {
                continue;
            }
            map_[static_cast<std::size_t>(x)] = c;
            if (consistent(x)) {
                used_[static_cast<std::size_t>(c)] = 1;
                if (extend(x + 1)) {
                    return true;
                }
                used_[static_cast<std::size_t>(c)] = 0;
            }
        }
        map_[static_cast<std::size_t>(x)] = -1;
        return false;
    }

    SignMatrix need_;
    SignMatrix target_;
    bool injective_;
    std::vector<int> map_;
    std::vector<char> used_;
};

} // namespace

auto find_sp_homomorphism(const SignedGraph& g, const SignedGraph& h, bool injective)
    -> std::optional<std::vector<int>> {
    return HomSearch(g, h, injective).run();
}

auto is_sp_homomorphism(const SignedGraph& g, const SignedGraph& h, const std::vector<int>& map) -> bool {
    if (static_cast<int>(map.size()) != g.vertex_count()) {
        return false;
    }
    for (const int x : map) {
        if (x < 0 || x >= h.vertex_count()) {
            return false;
        }
    }
    const SignMatrix target(h);
    return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
        return target.has(map[static_cast<std::size_t>(e.u)], map[static_cast<std::size_t>(e.v)], e.sign);
    });
}

} // namespace sgc
