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

#include "cumulants/bernoulli.hpp"

#include "cumulants/error.hpp"
#include "cumulants/series.hpp"

#include <mutex>
#include <vector>

namespace cumulants {

namespace {

std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli;  // B_n(1), n = 0..size-1

}  // namespace

Rational bernoulli_number(int n) {
    require(n >= 0, "negative Bernoulli index");
    std::lock_guard lock(g_bernoulli_mutex);
    if (static_cast<int>(g_bernoulli.size()) <= n) {
        int order = std::max(2 * n, 16);
        // (e^z - 1)/z = sum z^k/(k+1)!
        TruncatedSeries d(order);
        Rational fact = 1;
        for (int k = 0; k <= order; ++k) {
            fact *= Rational(k + 1);
            d[k] = Rational(1) / fact;
        }
        TruncatedSeries gen = series_reciprocal(d) * TruncatedSeries::exp_series(order);
        g_bernoulli.assign(static_cast<std::size_t>(order) + 1, Rational());
        Rational nfact = 1;
        for (int k = 0; k <= order; ++k) {
            if (k > 0) nfact *= Rational(k);
            g_bernoulli[static_cast<std::size_t>(k)] = gen[k] * nfact;
        }
    }
    return g_bernoulli[static_cast<std::size_t>(n)];
}

Polynomial bernoulli_polynomial(int n, char variable) {
    require(n >= 0, "negative Bernoulli index");
    // B_n(x) = sum_k C(n,k) B_k(0) x^{n-k}, with B_k(0) = B_k(1) except B_1(0) = -1/2.
    std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        Rational b = bernoulli_number(k);
        if (k == 1) b = -b;
        coeffs[static_cast<std::size_t>(n - k)] = Rational(binomial(n, k)) * b;
    }
    return Polynomial(std::move(coeffs), variable);
}

Polynomial faulhaber_polynomial(int j, char variable) {
    require(j >= 0, "negative Faulhaber exponent");
    Polynomial b = bernoulli_polynomial(j + 1, variable);
    Polynomial shifted = b.shifted(1, 1) - Polynomial::constant(b(1), variable);
    return shifted * (Rational(1) / Rational(j + 1));
}

}  // namespace cumulants
