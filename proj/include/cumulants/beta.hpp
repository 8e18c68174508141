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

#include <string>
#include <vector>

namespace cumulants {

// beta(pi) is the coefficient of H_pi when K_n is expanded in monotone cumulants.
// Both routes sum over coarsenings of pi, so the cost is governed by the block count.
constexpr int kBetaBlockLimit = 8;
constexpr int kBetaAmbientLimit = 16;
constexpr int kBetaTableLimit = 7;

// sum over sigma >= pi with pi|W noncrossing for all W in sigma of mu_P(sigma, 1) / tau(pi|sigma)!.
Rational beta_formula(const SetPartition& pi);
// [pi noncrossing] / tau(pi)! minus the sum over sigma in [pi, 1) of prod_W beta(pi|W),
// memoized on the anti-interval digraph.
Rational beta_recursive(const SetPartition& pi);
std::size_t beta_cache_size();
void beta_cache_clear();

// Key of the labelled anti-interval digraph, blocks ordered by minimum.
std::string beta_key(const SetPartition& pi);

struct BetaRow {
    SetPartition partition;
    std::string key;
    Rational beta;
};
// One row per partition of [n] in enumeration order.
std::vector<BetaRow> beta_table(int n, bool irreducible_only = false);

// {1,2n},{2,2n-1},...,{n,n+1}
SetPartition nested_pairs(int n);
// (k!)^2 [z^k] log(sum_j z^j / (j!)^2) for k = 1..max_n.
std::vector<Rational> logbessel_coefficients(int max_n);
// b_{n+1} = -sum_{k=1}^{n} C(n,k) C(n,k-1) b_k b_{n+1-k}, from b_1..b_n.
Rational carlitz_next(const std::vector<Rational>& b);

}  // namespace cumulants
