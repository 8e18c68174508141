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

#include "cumulants/rational.hpp"

#include <string>
#include <vector>

namespace cumulants {

// Formal power series truncated at a fixed order: coefficients of z^0..z^order.
// Binary operations on series of different orders work at the smaller order and
// set order_reduced() on the result.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coefficients);

    static TruncatedSeries identity(int order);  // z
    static TruncatedSeries one(int order);
    static TruncatedSeries exp_series(int order);  // sum z^k / k!

    int order() const { return order_; }
    bool order_reduced() const { return order_reduced_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    const Rational& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
    Rational& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

    TruncatedSeries truncated(int order) const;

    TruncatedSeries& operator+=(const TruncatedSeries& o);
    TruncatedSeries& operator-=(const TruncatedSeries& o);
    TruncatedSeries& operator*=(const Rational& c);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& c) { return a *= c; }
    TruncatedSeries operator-() const;

    TruncatedSeries derivative() const;  // order drops by one

    // Equality compares coefficients only; the order_reduced flag is metadata.
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

    std::string json() const;

private:
    int order_;
    std::vector<Rational> coeffs_;
    bool order_reduced_ = false;

    friend TruncatedSeries series_compose(const TruncatedSeries&, const TruncatedSeries&);
};

// f(g(z)); g must have zero constant term.
TruncatedSeries series_compose(const TruncatedSeries& f, const TruncatedSeries& g);
// 1/f; f must have a nonzero constant term.
TruncatedSeries series_reciprocal(const TruncatedSeries& f);
// log f; f must have constant term 1.
TruncatedSeries series_log(const TruncatedSeries& f);
// exp g; g must have zero constant term. Inverse of series_log.
TruncatedSeries series_exp(const TruncatedSeries& g);
// f^k for k >= 0.
TruncatedSeries series_power(const TruncatedSeries& f, int k);

}  // namespace cumulants
