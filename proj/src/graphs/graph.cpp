/*
 Copyright 2026 The cumulants authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#include "cumulants/graph.hpp"

#include "cumulants/error.hpp"
#include "shared_cache.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <unordered_map>

namespace cumulants {

MixedGraph::MixedGraph(int vertices) : n_(vertices) { require(vertices >= 0, "negative vertex count"); }

void MixedGraph::add_undirected(int u, int v) {
    require(u >= 0 && v >= 0 && u < n_ && v < n_, "edge endpoint out of range");
    undirected_.emplace_back(std::min(u, v), std::max(u, v));
}

void MixedGraph::add_directed(int from, int to) {
    require(from >= 0 && to >= 0 && from < n_ && to < n_, "edge endpoint out of range");
    require(from != to, "directed loop");
    directed_.emplace_back(from, to);
}

std::vector<GraphEdge> MixedGraph::underlying_edges() const {
    std::vector<GraphEdge> out = undirected_;
    for (auto [a, b] : directed_) out.emplace_back(std::min(a, b), std::max(a, b));
    return out;
}

namespace {

int find_root(std::vector<int>& parent, int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
        parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        v = parent[static_cast<std::size_t>(v)];
    }
    return v;
}

int component_count(int n, const std::vector<GraphEdge>& edges) {
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    int comps = n;
    for (auto [a, b] : edges) {
        int ra = find_root(parent, a), rb = find_root(parent, b);
        if (ra != rb) {
            parent[static_cast<std::size_t>(ra)] = rb;
            --comps;
        }
    }
    return comps;
}

std::string edge_list(const std::vector<GraphEdge>& edges, char sep) {
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(edges[i].first) + sep + std::to_string(edges[i].second);
    }
    return out;
}

}  // namespace

bool MixedGraph::is_connected() const { return n_ <= 1 || component_count(n_, underlying_edges()) == 1; }

std::string MixedGraph::key() const {
    auto u = undirected_;
    auto d = directed_;
    std::sort(u.begin(), u.end());
    std::sort(d.begin(), d.end());
    return std::to_string(n_) + ":" + edge_list(u, '-') + ";" + edge_list(d, '>');
}

std::string MixedGraph::json() const {
    auto pairs = [](std::vector<GraphEdge> edges) {
        std::sort(edges.begin(), edges.end());
        std::string out = "[";
        for (std::size_t i = 0; i < edges.size(); ++i) {
            if (i) out += ",";
            out += "[" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) + "]";
        }
        return out + "]";
    };
    return "{\"n\":" + std::to_string(n_) + ",\"undirected\":" + pairs(undirected_) + ",\"directed\":" +
           pairs(directed_) + "}";
}

std::string MixedGraph::dot(const std::string& name, const std::function<std::string(int)>& label) const {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int v = 0; v < n_; ++v) os << "  " << v << " [label=\"" << (label ? label(v) : std::to_string(v)) << "\"];\n";
    for (auto [a, b] : undirected_) os << "  " << a << " -> " << b << " [dir=none];\n";
    for (auto [a, b] : directed_) os << "  " << a << " -> " << b << ";\n";
    os << "}\n";
    return os.str();
}

MixedGraph crossing_graph(const SetPartition& p) {
    MixedGraph g(p.block_count());
    for (int i = 0; i < p.block_count(); ++i)
        for (int j = i + 1; j < p.block_count(); ++j)
            if (blocks_cross(p.mask(i), p.mask(j))) g.add_undirected(i, j);
    return g;
}

MixedGraph anti_interval_graph(const SetPartition& p) {
    MixedGraph g(p.block_count());
    for (int i = 0; i < p.block_count(); ++i)
        for (int j = i + 1; j < p.block_count(); ++j)
            if (hulls_intersect(p.mask(i), p.mask(j))) g.add_undirected(i, j);
    return g;
}

MixedGraph anti_interval_digraph(const SetPartition& p) {
    MixedGraph g(p.block_count());
    for (int i = 0; i < p.block_count(); ++i)
        for (int j = i + 1; j < p.block_count(); ++j) {
            if (blocks_cross(p.mask(i), p.mask(j))) g.add_undirected(i, j);
            else if (block_nests_in(p.mask(j), p.mask(i))) g.add_directed(i, j);
            else if (block_nests_in(p.mask(i), p.mask(j))) g.add_directed(j, i);
        }
    return g;
}

namespace {

// Loopless multigraph used by deletion-contraction.
struct Multigraph {
    int n;
    std::vector<GraphEdge> edges;  // (min, max), sorted
};

// Drops isolated vertices and relabels by decreasing degree (ties by index).
std::string memo_key(const Multigraph& g) {
    std::vector<int> degree(static_cast<std::size_t>(g.n), 0);
    for (auto [a, b] : g.edges) {
        ++degree[static_cast<std::size_t>(a)];
        ++degree[static_cast<std::size_t>(b)];
    }
    std::vector<int> order;
    for (int v = 0; v < g.n; ++v)
        if (degree[static_cast<std::size_t>(v)] > 0) order.push_back(v);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return degree[static_cast<std::size_t>(a)] > degree[static_cast<std::size_t>(b)];
    });
    std::vector<int> label(static_cast<std::size_t>(g.n), -1);
    for (std::size_t i = 0; i < order.size(); ++i) label[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::vector<GraphEdge> e;
    for (auto [a, b] : g.edges) {
        int la = label[static_cast<std::size_t>(a)], lb = label[static_cast<std::size_t>(b)];
        e.emplace_back(std::min(la, lb), std::max(la, lb));
    }
    std::sort(e.begin(), e.end());
    return std::to_string(order.size()) + ":" + edge_list(e, '-');
}

bool is_bridge(const Multigraph& g, std::size_t index) {
    auto [u, v] = g.edges[index];
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(g.n));
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == index) continue;
        auto [a, b] = g.edges[i];
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }
    std::vector<char> seen(static_cast<std::size_t>(g.n), 0);
    std::vector<int> stack{u};
    seen[static_cast<std::size_t>(u)] = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        if (x == v) return false;
        for (int w : adj[static_cast<std::size_t>(x)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
    }
    return true;
}

Multigraph delete_edge(const Multigraph& g, std::size_t index) {
    Multigraph h = g;
    h.edges.erase(h.edges.begin() + static_cast<std::ptrdiff_t>(index));
    return h;
}

// Contract edge index; returns the graph and the number of loops created.
std::pair<Multigraph, int> contract_edge(const Multigraph& g, std::size_t index) {
    auto [u, v] = g.edges[index];  // u < v; v merges into u, vertices above v shift down
    Multigraph h{g.n - 1, {}};
    int loops = 0;
    auto relabel = [&](int x) {
        if (x == v) x = u;
        return x > v ? x - 1 : x;
    };
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (i == index) continue;
        int a = relabel(g.edges[i].first), b = relabel(g.edges[i].second);
        if (a == b) ++loops;
        else h.edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(h.edges.begin(), h.edges.end());
    return {h, loops};
}

using detail::SharedCache;

SharedCache<Rational>& eval_cache() {
    static SharedCache<Rational> cache;
    return cache;
}

SharedCache<TuttePolynomial>& poly_cache() {
    static SharedCache<TuttePolynomial> cache;
    return cache;
}

Multigraph loopless(const MixedGraph& g, int& loops) {
    Multigraph m{g.vertex_count(), {}};
    loops = 0;
    for (auto e : g.underlying_edges()) {
        if (e.first == e.second) ++loops;
        else m.edges.push_back(e);
    }
    std::sort(m.edges.begin(), m.edges.end());
    return m;
}

Rational tutte_rec(const Multigraph& g, const Rational& x, const Rational& y, const std::string& point) {
    if (g.edges.empty()) return 1;
    std::string key = point + memo_key(g);
    Rational cached;
    if (eval_cache().find(key, cached)) return cached;
    Rational result;
    std::size_t index = 0;
    auto [contracted, loops] = contract_edge(g, index);
    Rational c = tutte_rec(contracted, x, y, point) * y.pow(loops);
    if (loops == 0 && is_bridge(g, index)) {
        result = x * c;
    } else {
        result = tutte_rec(delete_edge(g, index), x, y, point) + c;
    }
    eval_cache().insert(key, result);
    return result;
}

TuttePolynomial shift(const TuttePolynomial& p, int dx, int dy) {
    TuttePolynomial r;
    for (const auto& [e, c] : p.coefficients) r.coefficients[{e.first + dx, e.second + dy}] = c;
    return r;
}

void accumulate(TuttePolynomial& acc, const TuttePolynomial& p) {
    for (const auto& [e, c] : p.coefficients) {
        BigInt& slot = acc.coefficients[e];
        slot += c;
        if (slot == 0) acc.coefficients.erase(e);
    }
}

TuttePolynomial tutte_poly_rec(const Multigraph& g) {
    if (g.edges.empty()) return TuttePolynomial{{{{0, 0}, BigInt(1)}}};
    std::string key = memo_key(g);
    TuttePolynomial cached;
    if (poly_cache().find(key, cached)) return cached;
    auto [contracted, loops] = contract_edge(g, 0);
    TuttePolynomial c = shift(tutte_poly_rec(contracted), 0, loops);
    TuttePolynomial result;
    if (loops == 0 && is_bridge(g, 0)) {
        result = shift(c, 1, 0);
    } else {
        result = tutte_poly_rec(delete_edge(g, 0));
        accumulate(result, c);
    }
    poly_cache().insert(key, result);
    return result;
}

}  // namespace

Rational tutte_eval(const MixedGraph& g, const Rational& x, const Rational& y) {
    int loops = 0;
    Multigraph m = loopless(g, loops);
    return tutte_rec(m, x, y, x.str() + "," + y.str() + "@") * y.pow(loops);
}

Rational TuttePolynomial::operator()(const Rational& x, const Rational& y) const {
    Rational acc;
    for (const auto& [e, c] : coefficients) acc += Rational(c) * x.pow(e.first) * y.pow(e.second);
    return acc;
}

std::string TuttePolynomial::str() const {
    if (coefficients.empty()) return "0";
    std::string out;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        BigInt mag = abs(c);
        bool unit = mag == 1;
        std::string mono;
        if (e.first) mono += e.first == 1 ? "x" : "x^" + std::to_string(e.first);
        if (e.second) mono += std::string(mono.empty() ? "" : "*") + (e.second == 1 ? "y" : "y^" + std::to_string(e.second));
        if (mono.empty()) out += mag.get_str();
        else out += (unit ? "" : mag.get_str() + "*") + mono;
    }
    return out;
}

TuttePolynomial tutte_polynomial(const MixedGraph& g) {
    require_limit(static_cast<int>(g.edge_count()), static_cast<int>(kTuttePolynomialMaxEdges), "tutte polynomial edges");
    int loops = 0;
    Multigraph m = loopless(g, loops);
    return shift(tutte_poly_rec(m), 0, loops);
}

std::size_t tutte_cache_size() { return eval_cache().size() + poly_cache().size(); }

void tutte_cache_clear() {
    eval_cache().clear();
    poly_cache().clear();
}

OrientationCount acyclic_orientations_unique_source(const MixedGraph& g, int source) {
    require(source >= 0 && source < g.vertex_count(), "source vertex out of range");
    auto edges = g.underlying_edges();
    require_limit(static_cast<int>(edges.size()), static_cast<int>(kOrientationMaxEdges), "orientation count edges");
    if (!g.is_connected()) return {0, true};
    for (auto [a, b] : edges)
        if (a == b) return {0, false};
    int n = g.vertex_count();
    std::size_t m = edges.size();
    BigInt count = 0;
    std::vector<int> indeg(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
        std::fill(indeg.begin(), indeg.end(), 0);
        for (auto& o : out) o.clear();
        for (std::size_t i = 0; i < m; ++i) {
            auto [a, b] = edges[i];
            if (mask >> i & 1) std::swap(a, b);
            out[static_cast<std::size_t>(a)].push_back(b);
            ++indeg[static_cast<std::size_t>(b)];
        }
        bool ok = indeg[static_cast<std::size_t>(source)] == 0;
        for (int v = 0; v < n && ok; ++v)
            if (v != source && indeg[static_cast<std::size_t>(v)] == 0) ok = false;
        if (!ok) continue;
        // Kahn: acyclic iff every vertex gets removed.
        std::vector<int> queue{source};
        int removed = 0;
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            ++removed;
            for (int w : out[static_cast<std::size_t>(v)])
                if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
        }
        if (removed == n) ++count;
    }
    return {count, false};
}

std::string heap_mode_name(HeapMode mode) { return mode == HeapMode::Crossing ? "crossing" : "interval"; }

HeapMode parse_heap_mode(std::string_view name) {
    if (name == "crossing") return HeapMode::Crossing;
    if (name == "interval") return HeapMode::Interval;
    throw InvalidArgument("unknown heap mode '" + std::string(name) + "'");
}

std::vector<int> HeapOrder::maximal() const {
    std::vector<char> below(static_cast<std::size_t>(base.block_count()), 0);
    for (auto [hi, lo] : edges) below[static_cast<std::size_t>(lo)] = 1;
    std::vector<int> out;
    for (int v = 0; v < base.block_count(); ++v)
        if (!below[static_cast<std::size_t>(v)]) out.push_back(v);
    return out;
}

bool HeapOrder::is_pyramid() const {
    auto m = maximal();
    return is_acyclic() && m.size() == 1 && m[0] == 0;
}

bool HeapOrder::is_acyclic() const {
    int n = base.block_count();
    std::vector<int> indeg(static_cast<std::size_t>(n), 0);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
    for (auto [hi, lo] : edges) {
        out[static_cast<std::size_t>(hi)].push_back(lo);
        ++indeg[static_cast<std::size_t>(lo)];
    }
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) queue.push_back(v);
    int removed = 0;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        ++removed;
        for (int w : out[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) queue.push_back(w);
    }
    return removed == n;
}

bool HeapOrder::is_heap() const {
    MixedGraph g = mode == HeapMode::Crossing ? crossing_graph(base) : anti_interval_graph(base);
    std::vector<GraphEdge> mine;
    for (auto [a, b] : edges) mine.emplace_back(std::min(a, b), std::max(a, b));
    auto theirs = g.underlying_edges();
    std::sort(mine.begin(), mine.end());
    std::sort(theirs.begin(), theirs.end());
    return mine == theirs && is_acyclic();
}

std::string HeapOrder::str() const {
    auto block = [&](int b) {
        std::string out;
        for (int e : subset_elements(base.mask(b))) out += (out.empty() ? "" : ",") + std::to_string(e);
        return out;
    };
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        if (i) out += ";";
        out += block(edges[i].first) + ">" + block(edges[i].second);
    }
    return out.empty() ? block(0) : out;
}

namespace {

struct PyramidSearch {
    int n;
    std::vector<GraphEdge> edges;
    std::vector<std::vector<char>> reach;  // reach[a][b]: a above b so far
    std::vector<GraphEdge> chosen;
    const std::function<void(const std::vector<GraphEdge>&)>& emit;

    void add(int hi, int lo, std::vector<std::vector<char>>& r) {
        // Everything above hi (and hi) is now above everything below lo (and lo).
        for (int a = 0; a < n; ++a) {
            if (a != hi && !r[static_cast<std::size_t>(a)][static_cast<std::size_t>(hi)]) continue;
            for (int b = 0; b < n; ++b)
                if (b == lo || r[static_cast<std::size_t>(lo)][static_cast<std::size_t>(b)])
                    r[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
        }
    }

    void run(std::size_t i) {
        if (i == edges.size()) {
            std::vector<char> has_upper(static_cast<std::size_t>(n), 0);
            for (auto [hi, lo] : chosen) has_upper[static_cast<std::size_t>(lo)] = 1;
            if (has_upper[0]) return;
            for (int v = 1; v < n; ++v)
                if (!has_upper[static_cast<std::size_t>(v)]) return;
            emit(chosen);
            return;
        }
        auto [a, b] = edges[i];
        for (int flip = 0; flip < 2; ++flip) {
            int hi = flip ? b : a, lo = flip ? a : b;
            if (lo == 0) continue;  // nothing may sit above the root
            if (reach[static_cast<std::size_t>(lo)][static_cast<std::size_t>(hi)]) continue;  // would close a cycle
            auto saved = reach;
            add(hi, lo, reach);
            chosen.emplace_back(hi, lo);
            run(i + 1);
            chosen.pop_back();
            reach = std::move(saved);
        }
    }
};

}  // namespace

void for_each_pyramid(const SetPartition& p, HeapMode mode, const std::function<void(const HeapOrder&)>& visit) {
    if (mode == HeapMode::Crossing) require(is_connected(p), "crossing pyramids need a connected partition");
    else require(is_irreducible(p), "interval pyramids need an irreducible partition");
    MixedGraph g = mode == HeapMode::Crossing ? crossing_graph(p) : anti_interval_graph(p);
    auto edges = g.underlying_edges();
    std::sort(edges.begin(), edges.end());
    int n = p.block_count();
    std::function<void(const std::vector<GraphEdge>&)> emit = [&](const std::vector<GraphEdge>& chosen) {
        HeapOrder h{p, mode, chosen};
        std::sort(h.edges.begin(), h.edges.end());
        visit(h);
    };
    PyramidSearch s{n, edges, std::vector<std::vector<char>>(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0)), {}, emit};
    s.run(0);
}

std::vector<HeapOrder> enumerate_pyramids(const SetPartition& p, HeapMode mode) {
    std::vector<HeapOrder> out;
    for_each_pyramid(p, mode, [&](const HeapOrder& h) { out.push_back(h); });
    return out;
}

BigInt count_pyramids(const SetPartition& p, HeapMode mode) {
    BigInt count = 0;
    for_each_pyramid(p, mode, [&](const HeapOrder&) { ++count; });
    return count;
}

Rational partition_sum_identity_check(const MixedGraph& g, const Rational& q) {
    require(q != Rational(1), "partition sum identity needs q != 1");
    int n = g.vertex_count();
    require(n >= 1, "partition sum identity needs a nonempty vertex set");
    require_limit(n, kPartitionSumMaxVertices, "partition sum identity vertices");
    auto edges = g.underlying_edges();
    Rational sum;
    for_each_partition(n, PartitionClass::All, [&](const SetPartition& pi) {
        int inside = 0;
        for (auto [a, b] : edges)
            if (pi.block_of(a + 1) == pi.block_of(b + 1)) ++inside;
        int k = pi.block_count();
        BigInt mu = (k % 2 == 1 ? 1 : -1) * factorial(static_cast<unsigned>(k - 1));
        sum += q.pow(inside) * Rational(mu);
    }, hard_limit(PartitionClass::All));
    return sum * (q - Rational(1)).pow(1 - n);
}

}  // namespace cumulants
