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

#include "cumulants/beta.hpp"
#include "cumulants/cumulants.hpp"
#include "cumulants/error.hpp"
#include "oracles.hpp"

#include <algorithm>
#include <map>

using namespace cumulants;

namespace {

SetPartition P(const char* text) { return SetPartition::parse(text); }

Monomial monomial_of(const SetPartition& p) {
    Monomial m;
    for (int b = 0; b < p.block_count(); ++b) m.push_back(p.mask(b));
    std::sort(m.begin(), m.end(), symbol_less);
    return m;
}

// Coefficients of K_n in the basis {H_pi}, read off by peeling monomials m_pi
// from the coarsest partition down. [m_pi] H_sigma vanishes unless pi <= sigma.
std::map<SetPartition, Rational> beta_by_peeling(int n) {
    auto parts = oracle::all_set_partitions(n);
    std::stable_sort(parts.begin(), parts.end(),
                     [](const SetPartition& a, const SetPartition& b) { return a.block_count() < b.block_count(); });
    const auto& k = cumulant_poly(CumulantKind::Classical, n);
    std::map<SetPartition, Rational> beta;
    std::map<SetPartition, MomentPolynomial> h;
    for (const auto& pi : parts) {
        auto mono = monomial_of(pi);
        Rational c = k.coefficient(mono);
        for (const auto& [sigma, b] : beta) c -= b * h.at(sigma).coefficient(mono);
        beta.emplace(pi, c);
        h.emplace(pi, partitioned_cumulant(CumulantKind::Monotone, pi));
    }
    return beta;
}

}  // namespace

TEST_CASE("worked values") {
    CHECK(beta_formula(SetPartition::coarsest(5)) == 1);
    CHECK(beta_formula(P("1,2|3,4")) == 0);
    CHECK(beta_formula(nested_pairs(3)) == Rational(2, 3));
    CHECK(beta_formula(P("1,4|2|3")) == Rational(1, 3));
    CHECK(beta_formula(P("1,3|2,4")) == -1);
    CHECK(beta_formula(P("1,4|2,3")) == Rational(-1, 2));
    auto pi = P("1,4|2,6|3|5");
    CHECK(beta_formula(pi) == beta_recursive(pi));
    CHECK(nested_pairs(2) == P("1,4|2,3"));
}

TEST_CASE("both routes match the expansion of K in H") {
    for (int n = 1; n <= 5; ++n) {
        CAPTURE(n);
        for (const auto& [pi, b] : beta_by_peeling(n)) {
            CAPTURE(pi.str());
            CHECK(beta_formula(pi) == b);
            CHECK(beta_recursive(pi) == b);
        }
    }
}

TEST_CASE("routes agree and beta depends only on the digraph") {
    beta_cache_clear();
    std::map<std::string, Rational> by_key;
    for (const auto& pi : oracle::all_set_partitions(6)) {
        Rational f = beta_formula(pi);
        CHECK(f == beta_recursive(pi));
        auto [it, fresh] = by_key.emplace(beta_key(pi), f);
        if (!fresh) CHECK(it->second == f);
    }
    CHECK(beta_cache_size() > 0);
    CHECK(beta_cache_size() <= by_key.size() + 64);
}

TEST_CASE("table") {
    auto rows = beta_table(4);
    CHECK(rows.size() == 15);
    auto it = std::find_if(rows.begin(), rows.end(), [](const BetaRow& r) { return r.partition == P("1,4|2,3"); });
    REQUIRE(it != rows.end());
    CHECK(it->beta == Rational(-1, 2));
    CHECK(it->key == beta_key(it->partition));
    auto irreducible = beta_table(4, true);
    CHECK(irreducible.size() < rows.size());
    for (const auto& r : irreducible) CHECK(is_irreducible(r.partition));
    CHECK_THROWS_AS(beta_table(kBetaTableLimit + 1), ResourceLimit);
}

TEST_CASE("nested pairs and the log-Bessel coefficients") {
    auto lb = logbessel_coefficients(7);
    const long expected[] = {1, -1, 4, -33, 456, -9460, 274800};
    for (int n = 1; n <= 7; ++n) CHECK(lb[static_cast<std::size_t>(n - 1)] == expected[n - 1]);
    for (int n = 1; n <= 6; ++n)
        CHECK(beta_recursive(nested_pairs(n)) * Rational(oracle::factorial(n)) == lb[static_cast<std::size_t>(n - 1)]);
    for (std::size_t k = 1; k < lb.size(); ++k) {
        std::vector<Rational> prefix(lb.begin(), lb.begin() + static_cast<long>(k));
        CHECK(carlitz_next(prefix) == lb[k]);
    }
}

TEST_CASE("limits") {
    CHECK_THROWS_AS(beta_formula(SetPartition::finest(kBetaBlockLimit + 1)), ResourceLimit);
    CHECK_THROWS_AS(beta_recursive(SetPartition::coarsest(kBetaAmbientLimit + 1)), ResourceLimit);
}
