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

#include "cumulants/forest.hpp"

#include "cumulants/bernoulli.hpp"
#include "cumulants/error.hpp"

#include <algorithm>
#include <functional>

namespace cumulants {

int RootedTree::size() const {
    int s = 1;
    for (const auto& c : children) s += c.size();
    return s;
}

int RootedTree::height() const {
    int h = 0;
    for (const auto& c : children) h = std::max(h, c.height() + 1);
    return h;
}

int RootedForest::size() const {
    int s = 0;
    for (const auto& t : trees) s += t.size();
    return s;
}

namespace {

std::string tree_json(const RootedTree& t, const std::function<std::string(int)>& label) {
    std::string out = "[" + label(t.node);
    for (const auto& c : t.children) out += "," + tree_json(c, label);
    return out + "]";
}

std::string forest_json(const RootedForest& f, const std::function<std::string(int)>& label) {
    std::string out = "[";
    for (std::size_t i = 0; i < f.trees.size(); ++i) {
        if (i) out += ",";
        out += tree_json(f.trees[i], label);
    }
    return out + "]";
}

RootedTree build(int node, const std::vector<std::vector<int>>& kids) {
    RootedTree t{node, {}};
    for (int c : kids[static_cast<std::size_t>(node)]) t.children.push_back(build(c, kids));
    return t;
}

}  // namespace

std::string RootedForest::json() const {
    return forest_json(*this, [](int node) { return std::to_string(node); });
}

std::string RootedForest::json(const SetPartition& p) const {
    return forest_json(*this, [&](int node) {
        std::string out = "[";
        bool first = true;
        for (int e : subset_elements(p.mask(node))) {
            if (!first) out += ",";
            first = false;
            out += std::to_string(e);
        }
        return out + "]";
    });
}

RootedForest forest_from_parents(const std::vector<int>& parent) {
    int k = static_cast<int>(parent.size());
    std::vector<std::vector<int>> kids(static_cast<std::size_t>(k));
    std::vector<int> roots;
    for (int v = 0; v < k; ++v) {
        int p = parent[static_cast<std::size_t>(v)];
        require(p >= -1 && p < k && p != v, "invalid parent array");
        if (p < 0) roots.push_back(v);
        else kids[static_cast<std::size_t>(p)].push_back(v);
    }
    RootedForest f;
    for (int r : roots) f.trees.push_back(build(r, kids));
    require(f.size() == k, "parent array contains a cycle");
    return f;
}

RootedForest nesting_forest(const SetPartition& p) {
    require(is_noncrossing(p), "nesting forest of a crossing partition");
    int k = p.block_count();
    std::vector<int> parent(static_cast<std::size_t>(k), -1);
    for (int v = 0; v < k; ++v) {
        // Enclosing blocks form a chain; the nearest one has the largest minimum.
        for (int w = 0; w < k; ++w)
            if (w != v && block_nests_in(p.mask(v), p.mask(w))) {
                int& cur = parent[static_cast<std::size_t>(v)];
                if (cur < 0 || w > cur) cur = w;
            }
    }
    return forest_from_parents(parent);
}

BigInt tree_factorial(const RootedTree& t) {
    BigInt r = t.size();
    for (const auto& c : t.children) r *= tree_factorial(c);
    return r;
}

BigInt tree_factorial(const RootedForest& f) {
    BigInt r = 1;
    for (const auto& t : f.trees) r *= tree_factorial(t);
    return r;
}

BigInt tau_factorial(const SetPartition& p) { return tree_factorial(nesting_forest(p)); }

BigInt monotone_labelling_count(const SetPartition& p) {
    return factorial(static_cast<unsigned>(p.block_count())) / tau_factorial(p);
}

Polynomial labelling_polynomial(const RootedTree& t) {
    // P_t(N) = sum_{j=1}^N prod_children P_c(j), summed termwise with Faulhaber.
    Polynomial q = Polynomial::constant(1, 'N');
    for (const auto& c : t.children) q *= labelling_polynomial(c);
    Polynomial out({}, 'N');
    for (int d = 0; d <= q.degree(); ++d) {
        const Rational& c = q.coefficients()[static_cast<std::size_t>(d)];
        if (!c.is_zero()) out += faulhaber_polynomial(d, 'N') * c;
    }
    return out;
}

Polynomial labelling_polynomial(const RootedForest& f) {
    Polynomial out = Polynomial::constant(1, 'N');
    for (const auto& t : f.trees) out *= labelling_polynomial(t);
    return out;
}

Polynomial labelling_polynomial(const SetPartition& p) { return labelling_polynomial(nesting_forest(p)); }

Rational alpha(const RootedForest& f) {
    if (f.trees.size() != 1) return 0;
    return labelling_polynomial(f).coefficient(1);
}

Rational alpha(const SetPartition& p) { return alpha(nesting_forest(p)); }

}  // namespace cumulants
