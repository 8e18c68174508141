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

#include "cumulants/series.hpp"

#include "cumulants/error.hpp"

#include <algorithm>

namespace cumulants {

TruncatedSeries::TruncatedSeries(int order) : order_(order) {
    require(order >= 0, "series order must be nonnegative");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coefficients) : TruncatedSeries(order) {
    for (std::size_t k = 0; k < coefficients.size() && k < coeffs_.size(); ++k) coeffs_[k] = std::move(coefficients[k]);
}

TruncatedSeries TruncatedSeries::identity(int order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::one(int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::exp_series(int order) {
    TruncatedSeries s(order);
    Rational term = 1;
    for (int k = 0; k <= order; ++k) {
        s.coeffs_[static_cast<std::size_t>(k)] = term;
        term /= Rational(k + 1);
    }
    return s;
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
    int o = std::min(order, order_);
    TruncatedSeries r(o, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + o + 1));
    r.order_reduced_ = order_reduced_ || order > order_;
    return r;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& o) {
    if (o.order_ < order_) {
        *this = truncated(o.order_);
        order_reduced_ = true;
    }
    for (int k = 0; k <= order_; ++k) coeffs_[static_cast<std::size_t>(k)] += o[k];
    order_reduced_ = order_reduced_ || o.order_reduced_ || o.order_ != order_;
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& o) {
    return *this += -o;
}

TruncatedSeries& TruncatedSeries::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    int order = std::min(a.order_, b.order_);
    TruncatedSeries r(order);
    for (int i = 0; i <= order; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order; ++j) r.coeffs_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
    }
    r.order_reduced_ = a.order_reduced_ || b.order_reduced_ || a.order_ != b.order_;
    return r;
}

TruncatedSeries TruncatedSeries::operator-() const {
    TruncatedSeries r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

TruncatedSeries TruncatedSeries::derivative() const {
    if (order_ == 0) return TruncatedSeries(0);
    TruncatedSeries r(order_ - 1);
    for (int k = 1; k <= order_; ++k) r.coeffs_[static_cast<std::size_t>(k - 1)] = coeffs_[static_cast<std::size_t>(k)] * Rational(k);
    r.order_reduced_ = order_reduced_;
    return r;
}

std::string TruncatedSeries::json() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ",";
        out += "\"" + coeffs_[k].str() + "\"";
    }
    return out + "]";
}

TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    require(g[0].is_zero(), "inner series of a composition must have zero constant term");
    int order = std::min(f.order(), g.order());
    TruncatedSeries result(order);
    // Horner in g.
    for (int k = order; k >= 0; --k) {
        result = result * g.truncated(order);
        result[0] += f[k];
    }
    result.order_reduced_ = f.order_reduced() || g.order_reduced() || f.order() != g.order();
    return result;
}

TruncatedSeries series_reciprocal(const TruncatedSeries& f) {
    require(!f[0].is_zero(), "reciprocal of a series with zero constant term");
    int order = f.order();
    TruncatedSeries r(order);
    Rational inv = Rational(1) / f[0];
    r[0] = inv;
    for (int n = 1; n <= order; ++n) {
        Rational acc;
        for (int k = 1; k <= n; ++k) acc += f[k] * r[n - k];
        r[n] = -acc * inv;
    }
    return r;
}

TruncatedSeries series_log(const TruncatedSeries& f) {
    require(f[0] == Rational(1), "log of a series requires constant term 1");
    int order = f.order();
    // (log f)' = f'/f, integrated termwise.
    TruncatedSeries q = f.derivative() * series_reciprocal(f).truncated(std::max(order - 1, 0));
    TruncatedSeries r(order);
    for (int k = 1; k <= order; ++k) r[k] = q[k - 1] / Rational(k);
    return r;
}

TruncatedSeries series_exp(const TruncatedSeries& g) {
    require(g[0].is_zero(), "exp of a series requires zero constant term");
    int order = g.order();
    // e' = g' e  =>  n e_n = sum_{k=1..n} k g_k e_{n-k}
    TruncatedSeries e(order);
    e[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rational acc;
        for (int k = 1; k <= n; ++k) acc += Rational(k) * g[k] * e[n - k];
        e[n] = acc / Rational(n);
    }
    return e;
}

TruncatedSeries series_power(const TruncatedSeries& f, int k) {
    require(k >= 0, "negative series power");
    TruncatedSeries result = TruncatedSeries::one(f.order());
    TruncatedSeries base = f;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k) base = base * base;
    }
    return result;
}

}  // namespace cumulants
