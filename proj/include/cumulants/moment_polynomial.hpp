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

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace cumulants {

// A nonempty subset S of [n] encoded as a bit mask (bit i-1 <-> element i).
// As a moment symbol it stands for m_S = phi(X_{s_1} ... X_{s_k}), s_1 < ... < s_k.
using SubsetMask = std::uint32_t;
constexpr int kMaxAmbient = 32;

std::vector<int> subset_elements(SubsetMask s);
SubsetMask subset_from_elements(std::span<const int> elements);
// Canonical symbol order: by size, then lexicographically by sorted elements.
bool symbol_less(SubsetMask a, SubsetMask b);
std::string symbol_str(SubsetMask s);  // "m{1,3}"

// Multiset of symbols, kept sorted by symbol_less.
using Monomial = std::vector<SubsetMask>;

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Exact rational polynomial in the commuting formal symbols m_S, S subset of [n].
// Zero coefficients are never stored, so equality is term-by-term.
class MomentPolynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    explicit MomentPolynomial(int ambient);

    static MomentPolynomial constant(int ambient, const Rational& c);
    static MomentPolynomial symbol(int ambient, SubsetMask s);
    static MomentPolynomial term(int ambient, Monomial monomial, const Rational& c);

    int ambient() const { return n_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Monomial& monomial) const;

    void add_term(Monomial monomial, const Rational& c);

    MomentPolynomial& operator+=(const MomentPolynomial& o);
    MomentPolynomial& operator-=(const MomentPolynomial& o);
    MomentPolynomial& operator*=(const Rational& c);
    void add_scaled(const MomentPolynomial& o, const Rational& c);  // *this += c*o

    friend MomentPolynomial operator+(MomentPolynomial a, const MomentPolynomial& b) { return a += b; }
    friend MomentPolynomial operator-(MomentPolynomial a, const MomentPolynomial& b) { return a -= b; }
    friend MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b);
    friend MomentPolynomial operator*(MomentPolynomial a, const Rational& c) { return a *= c; }
    friend MomentPolynomial operator*(const Rational& c, MomentPolynomial a) { return a *= c; }

    friend bool operator==(const MomentPolynomial& a, const MomentPolynomial& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // Moves symbols over [k] onto the positions p_1 < ... < p_k of [new_ambient]:
    // element i is sent to positions[i-1].
    MomentPolynomial relabel(std::span<const int> positions, int new_ambient) const;

    // Univariate specialization X_1 = ... = X_n: m_S becomes m_{[|S|]}, i.e. m_{|S|}.
    MomentPolynomial univariate() const;

    // Replace every symbol m_S by image(S) and expand. Images must share this ambient.
    MomentPolynomial substitute(const std::function<MomentPolynomial(SubsetMask)>& image) const;

    std::string str() const;

private:
    int n_;
    Terms terms_;
};

}  // namespace cumulants
