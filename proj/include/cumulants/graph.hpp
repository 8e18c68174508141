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

#pragma once

#include "cumulants/partitions.hpp"
#include "cumulants/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cumulants {

using GraphEdge = std::pair<int, int>;

// Multigraph on vertices 0..n-1 with undirected and directed edges. An edge
// whose endpoints coincide is a loop; loops are kept in the undirected list.
class MixedGraph {
public:
    explicit MixedGraph(int vertices = 0);

    void add_undirected(int u, int v);
    void add_directed(int from, int to);

    int vertex_count() const { return n_; }
    const std::vector<GraphEdge>& undirected() const { return undirected_; }
    const std::vector<GraphEdge>& directed() const { return directed_; }
    std::size_t edge_count() const { return undirected_.size() + directed_.size(); }
    // Every edge with its orientation forgotten, normalized to (min, max).
    std::vector<GraphEdge> underlying_edges() const;

    bool is_connected() const;  // ignores orientation; the empty graph counts as connected

    // Canonical labeled key, e.g. "4:u0-1,u1-2;d0>3". Equal for equal labeled graphs.
    std::string key() const;
    // {"n":4,"undirected":[[0,1]],"directed":[[0,3]]}
    std::string json() const;
    std::string dot(const std::string& name = "G",
                    const std::function<std::string(int)>& label = nullptr) const;

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) { return a.key() == b.key(); }

private:
    int n_;
    std::vector<GraphEdge> undirected_;
    std::vector<GraphEdge> directed_;
};

// Vertices are blocks in canonical order.
MixedGraph crossing_graph(const SetPartition& p);        // edge iff the blocks cross
MixedGraph anti_interval_graph(const SetPartition& p);   // edge iff the convex hulls meet
MixedGraph anti_interval_digraph(const SetPartition& p); // nesting edges directed outer -> inner

// Tutte polynomial evaluated at (x, y) by deletion-contraction; orientation is ignored.
Rational tutte_eval(const MixedGraph& g, const Rational& x, const Rational& y);

// Full Tutte polynomial as coefficients of x^i y^j, for small graphs.
struct TuttePolynomial {
    std::map<std::pair<int, int>, BigInt> coefficients;

    Rational operator()(const Rational& x, const Rational& y) const;
    std::string str() const;
};
TuttePolynomial tutte_polynomial(const MixedGraph& g);
constexpr std::size_t kTuttePolynomialMaxEdges = 24;

// Cache statistics for the shared Tutte memo table.
std::size_t tutte_cache_size();
void tutte_cache_clear();

struct OrientationCount {
    BigInt count;
    bool disconnected = false;  // set when g is disconnected; count is then 0
};

// Acyclic orientations in which `source` is the only vertex without incoming
// edges, counted over all 2^|E| orientations.
OrientationCount acyclic_orientations_unique_source(const MixedGraph& g, int source);
constexpr std::size_t kOrientationMaxEdges = 24;

enum class HeapMode { Crossing, Interval };

std::string heap_mode_name(HeapMode mode);
HeapMode parse_heap_mode(std::string_view name);

// A heap on the blocks of a partition: the conflict graph (crossing graph or
// anti-interval graph) with every edge oriented from the higher block to the
// lower one. The partial order is the transitive closure.
struct HeapOrder {
    SetPartition base;
    HeapMode mode = HeapMode::Crossing;
    std::vector<GraphEdge> edges;  // (upper, lower), sorted

    // Blocks with nothing above them.
    std::vector<int> maximal() const;
    bool is_pyramid() const;  // block 0 (the block containing 1) is the only maximal element
    bool is_acyclic() const;
    // True iff the oriented edges are exactly the conflict edges of base.
    bool is_heap() const;
    std::string str() const;  // "1,3>2,4;..." using block element lists

    friend bool operator==(const HeapOrder& a, const HeapOrder& b) {
        return a.base == b.base && a.mode == b.mode && a.edges == b.edges;
    }
};

// Pyramids rooted in the block containing 1. Crossing mode needs a connected
// partition; interval mode an irreducible one.
void for_each_pyramid(const SetPartition& p, HeapMode mode, const std::function<void(const HeapOrder&)>& visit);
std::vector<HeapOrder> enumerate_pyramids(const SetPartition& p, HeapMode mode);
BigInt count_pyramids(const SetPartition& p, HeapMode mode);

// (q-1)^{1-|V|} sum_{pi in P(V)} q^{i(E,pi)} mu_P(pi, 1_V), where i(E,pi) counts
// edges inside blocks of pi. Orientation is ignored; needs |V| <= 8 and q != 1.
Rational partition_sum_identity_check(const MixedGraph& g, const Rational& q);
constexpr int kPartitionSumMaxVertices = 8;

}  // namespace cumulants
