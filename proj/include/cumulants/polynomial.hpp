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

// Dense univariate polynomial over the rationals. Coefficients are indexed by
// degree; trailing zeros are always stripped, so the zero polynomial has no
// coefficients and degree() == kZeroDegree.
class Polynomial {
public:
    static constexpr int kZeroDegree = -1;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients, char variable = 'x');
    static Polynomial constant(const Rational& c, char variable = 'x');
    static Polynomial monomial(int degree, const Rational& c = 1, char variable = 'x');

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    char variable() const { return var_; }
    const std::vector<Rational>& coefficients() const { return coeffs_; }
    Rational coefficient(int degree) const;

    Rational operator()(const Rational& at) const;  // Horner evaluation
    Polynomial derivative() const;
    // p(a*x + b)
    Polynomial shifted(const Rational& scale, const Rational& offset) const;

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    // "3/2*N^2 + 1/2*N" style; "0" for the zero polynomial.
    std::string str() const;
    // JSON array of rational strings, lowest degree first.
    std::string json() const;

private:
    void strip();

    std::vector<Rational> coeffs_;
    char var_ = 'x';
};

}  // namespace cumulants
