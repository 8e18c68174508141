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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumulants/bernoulli.hpp"
#include "cumulants/error.hpp"
#include "cumulants/forest.hpp"
#include "oracles.hpp"

using namespace cumulants;

namespace {

SetPartition P(const char* text) { return SetPartition::parse(text); }

using oracle::all_parent_arrays;
using oracle::brute_labellings;

// Lagrange interpolation through (x, y) pairs, x = 0..deg.
Polynomial interpolate(const std::vector<Rational>& ys) {
    Polynomial out({}, 'N');
    int m = static_cast<int>(ys.size());
    for (int i = 0; i < m; ++i) {
        Polynomial basis = Polynomial::constant(1, 'N');
        for (int j = 0; j < m; ++j) {
            if (j == i) continue;
            basis *= Polynomial({Rational(-j), 1}, 'N') * (Rational(1) / Rational(i - j));
        }
        out += basis * ys[static_cast<std::size_t>(i)];
    }
    return out;
}

long brute_linear_extensions(const std::vector<int>& parent) {
    std::vector<int> order(parent.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    long count = 0;
    do {
        std::vector<int> pos(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
        bool ok = true;
        for (std::size_t v = 0; v < parent.size(); ++v)
            if (parent[v] >= 0 && pos[static_cast<std::size_t>(parent[v])] > pos[v]) ok = false;
        count += ok;
    } while (std::next_permutation(order.begin(), order.end()));
    return count;
}

}  // namespace

TEST_CASE("nesting forest shapes") {
    auto f = nesting_forest(SetPartition::coarsest(4));
    CHECK(f.trees.size() == 1);
    CHECK(f.size() == 1);
    f = nesting_forest(P("1,4|2,3"));
    REQUIRE(f.trees.size() == 1);
    CHECK(f.trees[0].node == 0);
    REQUIRE(f.trees[0].children.size() == 1);
    CHECK(f.trees[0].children[0].node == 1);
    CHECK(f.json() == "[[0,[1]]]");
    CHECK(f.json(P("1,4|2,3")) == "[[[1,4],[[2,3]]]]");
    auto fig = P("1,2,10|3,6|4,5|7|8,9|11,14,18|12,13|15,17|16");
    f = nesting_forest(fig);
    REQUIRE(f.trees.size() == 2);
    CHECK(f.trees[0].size() == 5);
    CHECK(f.trees[1].size() == 4);
    CHECK_THROWS_AS(nesting_forest(P("1,3|2,4")), InvalidArgument);
}

TEST_CASE("tree factorial") {
    CHECK(tree_factorial(forest_from_parents({-1})) == 1);
    CHECK(tree_factorial(forest_from_parents({-1, 0, 1})) == 6);
    CHECK(tree_factorial(forest_from_parents({-1, 0, 0})) == 3);
    CHECK_THROWS_AS(forest_from_parents({1, 0}), InvalidArgument);
}

TEST_CASE("monotone labelling counts") {
    CHECK(monotone_labelling_count(SetPartition::coarsest(5)) == 1);
    CHECK(monotone_labelling_count(P("1,4|2|3")) == 2);
    CHECK(monotone_labelling_count(P("1,2|3|4,5|6")) == 24);
    for (int k = 1; k <= 6; ++k) {
        std::vector<std::vector<int>> arrays;
        std::vector<int> cur;
        all_parent_arrays(k, cur, arrays);
        for (const auto& parent : arrays) {
            auto f = forest_from_parents(parent);
            CHECK(factorial(static_cast<unsigned>(k)) / tree_factorial(f) == brute_linear_extensions(parent));
        }
    }
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& p : enumerate(n, PartitionClass::Noncrossing)) total += monotone_labelling_count(p);
        CHECK(total == factorial(static_cast<unsigned>(n + 1)) / 2);
    }
}

TEST_CASE("tree factorial is multiplicative over irreducible components") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : enumerate(n, PartitionClass::Noncrossing)) {
            BigInt prod = 1;
            for (const auto& c : components(p, ComponentMode::Irreducible)) prod *= tau_factorial(c.partition);
            CHECK(prod == tau_factorial(p));
            CHECK(depth(p) == 1 + [&] {
                int h = 0;
                for (const auto& t : nesting_forest(p).trees) h = std::max(h, t.height());
                return h;
            }());
        }
}

TEST_CASE("labelling polynomials against brute force") {
    CHECK(labelling_polynomial(forest_from_parents({-1})) == Polynomial({0, 1}, 'N'));
    CHECK(labelling_polynomial(forest_from_parents({-1, 0, 0}))(2) == Rational(5));
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> path(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) path[static_cast<std::size_t>(i)] = i - 1;
        auto p = labelling_polynomial(forest_from_parents(path));
        for (long N = 0; N <= 8; ++N) CHECK(p(Rational(N)) == Rational(binomial(N + n - 1, n)));
    }
    for (int k = 1; k <= 5; ++k) {
        std::vector<std::vector<int>> arrays;
        std::vector<int> cur;
        all_parent_arrays(k, cur, arrays);
        for (const auto& parent : arrays) {
            auto f = forest_from_parents(parent);
            auto poly = labelling_polynomial(f);
            CHECK(poly.degree() <= k);
            CHECK(poly.coefficient(0).is_zero());
            std::vector<Rational> ys;
            for (int N = 0; N <= k; ++N) ys.push_back(Rational(brute_labellings(parent, N)));
            CHECK(interpolate(ys) == poly);
            for (int N = 0; N <= 4; ++N) CHECK(poly(Rational(N)) == Rational(brute_labellings(parent, N)));
        }
    }
}

TEST_CASE("alpha worked examples") {
    CHECK(alpha(SetPartition::coarsest(4)) == Rational(1));
    for (int n = 1; n <= 8; ++n) {
        std::vector<int> star(static_cast<std::size_t>(n + 1), 0);
        star[0] = -1;
        CHECK(alpha(forest_from_parents(star)) == bernoulli_number(n));
        std::vector<int> path(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) path[static_cast<std::size_t>(i)] = i - 1;
        CHECK(alpha(forest_from_parents(path)) == Rational(1, n));
    }
    CHECK(alpha(P("1,4|2|3")) == Rational(1, 6));
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : enumerate(n, PartitionClass::Noncrossing))
            if (!is_irreducible(p)) CHECK(alpha(p).is_zero());
}
