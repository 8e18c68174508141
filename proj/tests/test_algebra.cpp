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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cumulants/bernoulli.hpp"
#include "cumulants/error.hpp"
#include "cumulants/moment_polynomial.hpp"
#include "cumulants/polynomial.hpp"
#include "cumulants/rational.hpp"
#include "cumulants/series.hpp"

using namespace cumulants;

TEST_CASE("rational arithmetic and parsing") {
    Rational a = Rational::parse("6/4");
    CHECK(a.str() == "3/2");
    CHECK(Rational::parse(" -7 ").str() == "-7");
    CHECK(Rational::parse("0/5").is_zero());
    CHECK((a * Rational(2)).str() == "3");
    CHECK((a - a).is_zero());
    CHECK(Rational(1, -2).str() == "-1/2");
    CHECK(Rational(2, 3).pow(-2).str() == "9/4");
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
    CHECK_THROWS_AS(Rational::parse("x"), ParseError);
    CHECK_THROWS_AS(Rational::parse(""), ParseError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), InvalidArgument);
}

TEST_CASE("integer helpers") {
    CHECK(factorial(10) == 3628800);
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429};
    for (unsigned n = 0; n < 8; ++n) CHECK(catalan(n) == cat[n]);
    const long bells[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140};
    for (unsigned n = 0; n < 9; ++n) CHECK(bell(n) == bells[n]);
}

TEST_CASE("polynomial basics") {
    Polynomial p({1, 2, 3});
    CHECK(p.degree() == 2);
    CHECK(p(2) == Rational(17));
    CHECK(p.derivative() == Polynomial({2, 6}));
    // p(x+1) = 3x^2 + 8x + 6
    CHECK(p.shifted(1, 1) == Polynomial({6, 8, 3}));
    CHECK((p - p).is_zero());
    CHECK((p - p).degree() == Polynomial::kZeroDegree);
    CHECK((Polynomial({1, 1}) * Polynomial({-1, 1})) == Polynomial({-1, 0, 1}));
    CHECK(Polynomial({Rational(1, 2), 0, Rational(-3, 2)}, 'N').str() == "-3/2*N^2 + 1/2");
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial({0, 1}).json() == "[\"0\",\"1\"]");
}

TEST_CASE("series reciprocal, log, exp, compose") {
    // 1/(1 - z - z^2) has Fibonacci coefficients.
    TruncatedSeries f(12, {1, -1, -1});
    auto r = series_reciprocal(f);
    long a = 1, b = 1;
    for (int k = 0; k <= 12; ++k) {
        CHECK(r[k] == Rational(a));
        long c = a + b;
        a = b;
        b = c;
    }
    TruncatedSeries g(8, {1, Rational(1, 3), Rational(-2, 5), 7, 0, 1});
    CHECK(series_exp(series_log(g)) == g);
    CHECK(series_log(TruncatedSeries::exp_series(8)) == TruncatedSeries::identity(8));
    TruncatedSeries geometric(3, {1, 1, 1, 1});
    TruncatedSeries inner(3, {0, 1, 1});
    CHECK(series_compose(geometric, inner) == TruncatedSeries(3, {1, 1, 2, 3}));
    CHECK(series_power(inner, 2) == TruncatedSeries(3, {0, 0, 1, 2}));
    TruncatedSeries shorter(2, {1, 1, 1});
    auto sum = geometric + shorter;
    CHECK(sum.order() == 2);
    CHECK(sum.order_reduced());
    CHECK_THROWS_AS(series_log(TruncatedSeries(3, {2, 1})), InvalidArgument);
    CHECK_THROWS_AS(series_compose(geometric, geometric), InvalidArgument);
}

TEST_CASE("bernoulli numbers and faulhaber polynomials") {
    CHECK(bernoulli_number(0) == Rational(1));
    CHECK(bernoulli_number(1) == Rational(1, 2));
    CHECK(bernoulli_number(2) == Rational(1, 6));
    CHECK(bernoulli_number(3).is_zero());
    CHECK(bernoulli_number(4) == Rational(-1, 30));
    CHECK(bernoulli_number(12) == Rational(-691, 2730));
    CHECK(bernoulli_polynomial(2) == Polynomial({Rational(1, 6), -1, 1}));
    // Direct summation oracle.
    for (int j = 0; j <= 8; ++j) {
        Polynomial q = faulhaber_polynomial(j);
        BigInt acc = 0;
        CHECK(q(0).is_zero());
        for (long N = 1; N <= 20; ++N) {
            BigInt pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(j));
            acc += pw;
            CHECK(q(Rational(N)) == Rational(acc));
        }
        CHECK(q.degree() == j + 1);
    }
}

TEST_CASE("moment polynomials") {
    const int e13[] = {1, 3};
    SubsetMask s13 = subset_from_elements(e13);
    CHECK(s13 == 0b101u);
    CHECK(symbol_str(s13) == "m{1,3}");
    CHECK(symbol_less(0b1000u, 0b011u));
    CHECK(symbol_less(0b101u, 0b110u));
    CHECK(symbol_less(0b011u, 0b101u));
    CHECK_FALSE(symbol_less(0b101u, 0b101u));

    auto x = MomentPolynomial::symbol(3, 0b001);
    auto y = MomentPolynomial::symbol(3, 0b110);
    auto p = (x + y) * (x - y);
    CHECK(p.size() == 2);
    CHECK(p.coefficient({0b001, 0b001}) == Rational(1));
    CHECK(p.coefficient({0b110, 0b110}) == Rational(-1));
    CHECK(p.str() == "m{1}*m{1} - m{2,3}*m{2,3}");
    CHECK((p - p).is_zero());

    const int pos[] = {2, 5, 7};
    auto moved = y.relabel(pos, 7);
    CHECK(moved == MomentPolynomial::symbol(7, 0b1010000));
    CHECK((x * y).univariate() == MomentPolynomial::term(3, {0b1, 0b11}, 1));
    auto sub = p.substitute([](SubsetMask s) {
        return s == 0b001 ? MomentPolynomial::constant(3, 2) : MomentPolynomial::symbol(3, s);
    });
    CHECK(sub == MomentPolynomial::constant(3, 4) - MomentPolynomial::term(3, {0b110, 0b110}, 1));
    CHECK_THROWS_AS(MomentPolynomial::symbol(2, 0b100), InvalidArgument);
}
