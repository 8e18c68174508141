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

#include "cumulants/rational.hpp"

#include "cumulants/error.hpp"

#include <cctype>
#include <vector>

namespace cumulants {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
    require(denominator != 0, "rational with zero denominator");
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset) {
    std::size_t i = 0;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    if (i == text.size()) throw ParseError("expected digits", offset + i);
    for (std::size_t j = i; j < text.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) throw ParseError("unexpected character", offset + j);
    std::string digits(text);
    if (digits[0] == '+') digits.erase(0, 1);
    return BigInt(digits, 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    std::string_view body = text.substr(begin, end - begin);
    if (body.empty()) throw ParseError("empty rational", begin);
    auto slash = body.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(body, begin));
    BigInt num = parse_integer(body.substr(0, slash), begin);
    std::string_view den_text = body.substr(slash + 1);
    if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
        throw ParseError("sign in denominator", begin + slash + 1);
    BigInt den = parse_integer(den_text, begin + slash + 1);
    if (den == 0) throw ParseError("zero denominator", begin + slash + 1);
    return Rational(num, den);
}

std::string Rational::str() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::pow(int exponent) const {
    if (exponent < 0) return Rational(1) / pow(-exponent);
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(num, den);
}

Rational& Rational::operator/=(const Rational& o) {
    require(!o.is_zero(), "division by zero");
    value_ /= o.value_;
    return *this;
}

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt catalan(unsigned n) {
    return binomial(2L * n, n) / (n + 1);
}

BigInt bell(unsigned n) {
    // Bell triangle.
    std::vector<BigInt> row{1};
    for (unsigned i = 0; i < n; ++i) {
        std::vector<BigInt> next{row.back()};
        for (const auto& v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

}  // namespace cumulants
