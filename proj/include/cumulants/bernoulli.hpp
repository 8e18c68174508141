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

#include "cumulants/polynomial.hpp"
#include "cumulants/rational.hpp"

namespace cumulants {

/// Bernoulli number in the B_n(1) convention, so bernoulli_number(1) == +1/2.
/// Read off z e^z / (e^z - 1) = sum B_n(1) z^n / n!.
Rational bernoulli_number(int n);

/// Bernoulli polynomial B_n(x) from z e^{xz} / (e^z - 1) = sum B_n(x) z^n / n!.
Polynomial bernoulli_polynomial(int n, char variable = 'x');

/// The polynomial Q_j(N) with Q_j(N) = 1^j + 2^j + ... + N^j for every N >= 0,
/// i.e. (B_{j+1}(N+1) - B_{j+1}(1)) / (j+1).
Polynomial faulhaber_polynomial(int j, char variable = 'N');

}  // namespace cumulants
