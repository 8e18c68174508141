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

#include "cumulants/moment_polynomial.hpp"
#include "cumulants/partitions.hpp"
#include "cumulants/polynomial.hpp"
#include "cumulants/rational.hpp"
#include "cumulants/series.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cumulants {

enum class CumulantKind { Classical, Free, Boolean, Monotone };

// Moments plus the four cumulant families; the pivot for univariate conversions.
enum class Basis { Moments, Classical, Free, Boolean, Monotone };

std::string_view kind_name(CumulantKind kind);  // "classical", "free", "boolean", "monotone"
std::string_view kind_letter(CumulantKind kind);  // "K", "R", "B", "H"
std::string_view basis_name(Basis basis);
// Accepts the lowercase names and the letters K, R, B, H, M.
std::optional<Basis> parse_basis(std::string_view text);
std::optional<CumulantKind> parse_kind(std::string_view text);

// Largest n accepted by cumulant_poly.
int cumulant_poly_limit(CumulantKind kind);

// n-th multivariate cumulant of (X_1, ..., X_n) in the symbols m_S. K, R and B
// come from Moebius inversion over P, NC and I; H solves
//   m_[n] = sum over NC(n) of H_pi / tau(pi)!
// for its top term. Results are memoized.
const MomentPolynomial& cumulant_poly(CumulantKind kind, int n);

// Product over the blocks V of the |V|-th cumulant evaluated at (X_v)_{v in V}.
MomentPolynomial partitioned_cumulant(CumulantKind kind, const SetPartition& pi);
// The same product after setting X_1 = ... = X_n.
MomentPolynomial univariate_partitioned_cumulant(CumulantKind kind, const SetPartition& pi);
// Univariate n-th cumulant in the symbols m_{[k]}, ambient n.
MomentPolynomial univariate_cumulant(CumulantKind kind, int n);

// Sum over monotone partitions (sigma, lambda) of H_sigma / |sigma|!.
MomentPolynomial monotone_ordered_sum(int n);

// Replaces every symbol m_S by value(S) and evaluates.
Polynomial evaluate(const MomentPolynomial& p, const std::function<Polynomial(SubsetMask)>& value);
Rational evaluate(const MomentPolynomial& p, const std::function<Rational(SubsetMask)>& value);

// Univariate sequences are stored from index 1: values[k-1] is the k-th term; m_0 = 1 is implicit.
using Sequence = std::vector<Rational>;
constexpr int kConvertLimit = 12;

Sequence moments_from_cumulants(CumulantKind kind, const Sequence& cumulants);
Sequence cumulants_from_moments(CumulantKind kind, const Sequence& moments);
Sequence convert_sequence(Basis from, Basis to, const Sequence& values);

// Ordinary generating function 1 + sum m_k z^k (or sum c_k z^k without the 1) at order values.size().
TruncatedSeries moment_series(const Sequence& moments);
TruncatedSeries cumulant_series(const Sequence& cumulants);

// Moments of the formal element with R(tilde X) = -B(X).
Sequence tilde_transform(const Sequence& moments);
// Moments of X(t), whose monotone cumulants are t * h.
Sequence monotone_dilate(const Sequence& monotone_cumulants, const Rational& t);

// Classical cumulants of the law with every Boolean cumulant equal to x.
Polynomial boolean_poisson_kappa(int n);

// Determinant of a square matrix by fraction-exact elimination.
Rational determinant(std::vector<std::vector<Rational>> a);
// kappa_n or b_n as a Hessenberg determinant in m_1..m_n.
Rational determinant_cumulant(CumulantKind kind, const Sequence& moments, int n);
// m_n as a Hessenberg determinant in kappa_1..kappa_n or b_1..b_n.
Rational determinant_moment(CumulantKind kind, const Sequence& cumulants, int n);

}  // namespace cumulants
