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

#include "cumulants/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace cumulants {

Polynomial::Polynomial(std::vector<Rational> coefficients, char variable)
    : coeffs_(std::move(coefficients)), var_(variable) {
    strip();
}

Polynomial Polynomial::constant(const Rational& c, char variable) {
    return Polynomial({c}, variable);
}

Polynomial Polynomial::monomial(int degree, const Rational& c, char variable) {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return Polynomial(std::move(coeffs), variable);
}

void Polynomial::strip() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coefficient(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(degree)];
}

Rational Polynomial::operator()(const Rational& at) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<Rational> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d.push_back(coeffs_[k] * Rational(static_cast<long>(k)));
    return Polynomial(std::move(d), var_);
}

Polynomial Polynomial::shifted(const Rational& scale, const Rational& offset) const {
    Polynomial inner({offset, scale}, var_);
    Polynomial acc({}, var_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= inner;
        acc += Polynomial::constant(*it, var_);
    }
    return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    strip();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    strip();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(r);
    strip();
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    for (auto& v : coeffs_) v *= c;
    strip();
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == Rational(1);
        if (k == 0) {
            os << mag;
            continue;
        }
        if (!unit) os << mag << "*";
        os << var_;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::string Polynomial::json() const {
    std::string out = "[";
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (k) out += ",";
        out += "\"" + coeffs_[k].str() + "\"";
    }
    return out + "]";
}

}  // namespace cumulants
