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

#include "cumulants/moment_polynomial.hpp"

#include "cumulants/error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace cumulants {

std::vector<int> subset_elements(SubsetMask s) {
    std::vector<int> out;
    while (s) {
        int b = std::countr_zero(s);
        out.push_back(b + 1);
        s &= s - 1;
    }
    return out;
}

SubsetMask subset_from_elements(std::span<const int> elements) {
    SubsetMask s = 0;
    for (int e : elements) {
        require(e >= 1 && e <= kMaxAmbient, "subset element out of range");
        s |= SubsetMask{1} << (e - 1);
    }
    return s;
}

bool symbol_less(SubsetMask a, SubsetMask b) {
    int pa = std::popcount(a);
    int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    if (a == b) return false;
    // Same size: the first differing element in sorted order decides.
    SubsetMask diff = a ^ b;
    SubsetMask low = diff & (~diff + 1);
    return (a & low) != 0;
}

std::string symbol_str(SubsetMask s) {
    std::string out = "m{";
    bool first = true;
    for (int e : subset_elements(s)) {
        if (!first) out += ",";
        first = false;
        out += std::to_string(e);
    }
    return out + "}";
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), symbol_less);
}

namespace {

void normalize(Monomial& m) { std::sort(m.begin(), m.end(), symbol_less); }

Monomial merge(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), symbol_less);
    return out;
}

}  // namespace

MomentPolynomial::MomentPolynomial(int ambient) : n_(ambient) {
    require(ambient >= 0 && ambient <= kMaxAmbient, "ambient size out of range");
}

MomentPolynomial MomentPolynomial::constant(int ambient, const Rational& c) {
    MomentPolynomial p(ambient);
    p.add_term({}, c);
    return p;
}

MomentPolynomial MomentPolynomial::symbol(int ambient, SubsetMask s) {
    MomentPolynomial p(ambient);
    p.add_term({s}, 1);
    return p;
}

MomentPolynomial MomentPolynomial::term(int ambient, Monomial monomial, const Rational& c) {
    MomentPolynomial p(ambient);
    p.add_term(std::move(monomial), c);
    return p;
}

Rational MomentPolynomial::coefficient(const Monomial& monomial) const {
    Monomial key = monomial;
    normalize(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational() : it->second;
}

void MomentPolynomial::add_term(Monomial monomial, const Rational& c) {
    if (c.is_zero()) return;
    for (SubsetMask s : monomial) {
        require(s != 0, "empty moment symbol");
        require(n_ == kMaxAmbient || (s >> n_) == 0, "moment symbol outside ambient set");
    }
    normalize(monomial);
    auto [it, inserted] = terms_.try_emplace(std::move(monomial), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MomentPolynomial& MomentPolynomial::operator+=(const MomentPolynomial& o) {
    add_scaled(o, 1);
    return *this;
}

MomentPolynomial& MomentPolynomial::operator-=(const MomentPolynomial& o) {
    add_scaled(o, -1);
    return *this;
}

MomentPolynomial& MomentPolynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

void MomentPolynomial::add_scaled(const MomentPolynomial& o, const Rational& c) {
    require(o.n_ == n_, "ambient mismatch");
    if (c.is_zero()) return;
    for (const auto& [m, v] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(m, v * c);
        if (!inserted) {
            it->second += v * c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
}

MomentPolynomial operator*(const MomentPolynomial& a, const MomentPolynomial& b) {
    require(a.n_ == b.n_, "ambient mismatch");
    MomentPolynomial r(a.n_);
    for (const auto& [ma, va] : a.terms_) {
        for (const auto& [mb, vb] : b.terms_) {
            Monomial m = merge(ma, mb);
            Rational v = va * vb;
            auto [it, inserted] = r.terms_.try_emplace(std::move(m), v);
            if (!inserted) {
                it->second += v;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    }
    return r;
}

MomentPolynomial MomentPolynomial::relabel(std::span<const int> positions, int new_ambient) const {
    require(static_cast<int>(positions.size()) >= n_, "relabel needs one position per element");
    MomentPolynomial r(new_ambient);
    for (const auto& [m, v] : terms_) {
        Monomial out;
        out.reserve(m.size());
        for (SubsetMask s : m) {
            SubsetMask t = 0;
            for (int e : subset_elements(s)) {
                int p = positions[static_cast<std::size_t>(e - 1)];
                require(p >= 1 && p <= new_ambient, "relabel position out of range");
                t |= SubsetMask{1} << (p - 1);
            }
            out.push_back(t);
        }
        r.add_term(std::move(out), v);
    }
    return r;
}

MomentPolynomial MomentPolynomial::univariate() const {
    MomentPolynomial r(n_);
    for (const auto& [m, v] : terms_) {
        Monomial out;
        out.reserve(m.size());
        for (SubsetMask s : m) {
            int k = std::popcount(s);
            out.push_back(k == 32 ? ~SubsetMask{0} : (SubsetMask{1} << k) - 1);
        }
        r.add_term(std::move(out), v);
    }
    return r;
}

MomentPolynomial MomentPolynomial::substitute(const std::function<MomentPolynomial(SubsetMask)>& image) const {
    MomentPolynomial r(n_);
    for (const auto& [m, v] : terms_) {
        MomentPolynomial prod = constant(n_, v);
        for (SubsetMask s : m) {
            MomentPolynomial img = image(s);
            require(img.n_ == n_, "substitution image has a different ambient");
            prod = prod * img;
            if (prod.is_zero()) break;
        }
        r += prod;
    }
    return r;
}

std::string MomentPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, v] : terms_) {
        Rational mag = v.sign() < 0 ? -v : v;
        if (first) {
            if (v.sign() < 0) os << "-";
        } else {
            os << (v.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rational(1);
        if (m.empty()) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i) os << "*";
            os << symbol_str(m[i]);
        }
    }
    return os.str();
}

}  // namespace cumulants
