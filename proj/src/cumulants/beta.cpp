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

#include "cumulants/beta.hpp"

#include "cumulants/error.hpp"
#include "cumulants/forest.hpp"
#include "cumulants/graph.hpp"
#include "cumulants/series.hpp"
#include "shared_cache.hpp"

#include <functional>

namespace cumulants {

namespace {

void check_size(const SetPartition& pi) {
    require_limit(pi.n(), kBetaAmbientLimit, "beta ambient size");
    require_limit(pi.block_count(), kBetaBlockLimit, "beta block count");
}

// Element mask of a union of blocks given by a mask over block indices.
SubsetMask union_of_blocks(const SetPartition& pi, unsigned blocks) {
    SubsetMask m = 0;
    for (int b = 0; b < pi.block_count(); ++b)
        if (blocks >> b & 1u) m |= pi.mask(b);
    return m;
}

// Visits every set partition of the block indices as a list of block masks.
void for_each_coarsening(const SetPartition& pi, const std::function<void(const std::vector<unsigned>&)>& visit) {
    int k = pi.block_count();
    for_each_partition(k, PartitionClass::All, [&](const SetPartition& groups) {
        std::vector<unsigned> parts;
        for (int g = 0; g < groups.block_count(); ++g) parts.push_back(groups.mask(g));
        visit(parts);
    });
}

Rational sign_factorial(int k) {  // mu_P(sigma, 1) for |sigma| = k
    Rational v(factorial(static_cast<unsigned>(k - 1)));
    return k % 2 == 1 ? v : -v;
}

detail::SharedCache<Rational>& recursive_cache() {
    static detail::SharedCache<Rational> cache;
    return cache;
}

Rational noncrossing_weight(const SetPartition& p) {
    return is_noncrossing(p) ? Rational(1) / Rational(tau_factorial(p)) : Rational(0);
}

}  // namespace

std::string beta_key(const SetPartition& pi) { return anti_interval_digraph(pi).key(); }

Rational beta_formula(const SetPartition& pi) {
    check_size(pi);
    int k = pi.block_count();
    std::vector<Rational> weight(std::size_t{1} << k);
    for (unsigned w = 1; w < (1u << k); ++w) weight[w] = noncrossing_weight(restrict(pi, union_of_blocks(pi, w)));
    Rational total;
    for_each_coarsening(pi, [&](const std::vector<unsigned>& parts) {
        Rational t = sign_factorial(static_cast<int>(parts.size()));
        for (unsigned w : parts) {
            t *= weight[w];
            if (t.is_zero()) return;
        }
        total += t;
    });
    return total;
}

Rational beta_recursive(const SetPartition& pi) {
    check_size(pi);
    std::string key = beta_key(pi);
    Rational cached;
    if (recursive_cache().find(key, cached)) return cached;
    int k = pi.block_count();
    Rational value = noncrossing_weight(pi);
    if (k > 1) {
        std::vector<Rational> sub(std::size_t{1} << k);
        std::vector<char> known(std::size_t{1} << k, 0);
        auto beta_of = [&](unsigned w) -> const Rational& {
            if (!known[w]) {
                sub[w] = beta_recursive(restrict(pi, union_of_blocks(pi, w)));
                known[w] = 1;
            }
            return sub[w];
        };
        for_each_coarsening(pi, [&](const std::vector<unsigned>& parts) {
            if (parts.size() == 1) return;  // sigma = 1 is the unknown itself
            Rational t = 1;
            for (unsigned w : parts) {
                t *= beta_of(w);
                if (t.is_zero()) return;
            }
            value -= t;
        });
    }
    recursive_cache().insert(key, value);
    return value;
}

std::size_t beta_cache_size() { return recursive_cache().size(); }
void beta_cache_clear() { recursive_cache().clear(); }

std::vector<BetaRow> beta_table(int n, bool irreducible_only) {
    require(n >= 1, "n must be positive");
    require_limit(n, kBetaTableLimit, "beta table");
    std::vector<BetaRow> rows;
    for_each_partition(n, PartitionClass::All, [&](const SetPartition& p) {
        if (irreducible_only && !is_irreducible(p)) return;
        rows.push_back({p, beta_key(p), beta_formula(p)});
    });
    return rows;
}

SetPartition nested_pairs(int n) {
    require(n >= 1, "n must be positive");
    require_limit(2 * n, kMaxAmbient, "nested pairs");
    std::vector<std::vector<int>> blocks;
    for (int i = 1; i <= n; ++i) blocks.push_back({i, 2 * n + 1 - i});
    return SetPartition::from_blocks(2 * n, blocks);
}

std::vector<Rational> logbessel_coefficients(int max_n) {
    require(max_n >= 1, "n must be positive");
    std::vector<Rational> c(static_cast<std::size_t>(max_n) + 1);
    for (int j = 0; j <= max_n; ++j) {
        Rational f(factorial(static_cast<unsigned>(j)));
        c[static_cast<std::size_t>(j)] = Rational(1) / (f * f);
    }
    auto log = series_log(TruncatedSeries(max_n, c));
    std::vector<Rational> out;
    for (int j = 1; j <= max_n; ++j) {
        Rational f(factorial(static_cast<unsigned>(j)));
        out.push_back(log[j] * f * f);
    }
    return out;
}

Rational carlitz_next(const std::vector<Rational>& b) {
    int n = static_cast<int>(b.size());
    require(n >= 1, "Carlitz recursion needs b_1");
    Rational s;
    for (int k = 1; k <= n; ++k)
        s += Rational(BigInt(binomial(n, k) * binomial(n, k - 1))) * b[static_cast<std::size_t>(k - 1)] *
             b[static_cast<std::size_t>(n - k)];
    return -s;
}

}  // namespace cumulants
