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

#include "cumulants/graph.hpp"
#include "cumulants/partitions.hpp"
#include "cumulants/polynomial.hpp"
#include "cumulants/rational.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cumulants {

// Permutation of [n] in one-line notation: values()[i-1] = sigma(i).
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> one_line);

    static Permutation identity(int n);
    // Cycles in any order and rotation; missing elements of [n] are fixed points.
    static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);
    // "(1,3)(2,5,7)"; n defaults to the largest element mentioned.
    static Permutation parse_cycles(std::string_view text, int n = 0);

    int n() const { return static_cast<int>(values_.size()); }
    int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& values() const { return values_; }

    // Standard form: each cycle starts at its minimum, cycles sorted by minimum.
    std::vector<std::vector<int>> cycles() const;
    // Concatenation of the standard cycles.
    std::vector<int> cycle_word() const;
    std::string cycle_str() const;  // "(1,3)(2)"
    std::string str() const;        // "[3,2,1]"
    int descents() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

constexpr int kPermutationHardLimit = 10;

// All permutations of [n] in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);
// Full cycles of [n], ordered lexicographically by the word (1, sigma(1), sigma^2(1), ...).
std::vector<Permutation> cyclic_permutations(int n);

struct Runs {
    SetPartition partition;  // blocks are the value sets of the runs
    int descents;
};

// Maximal increasing segments of (sigma(1), ..., sigma(n)).
Runs runs(const Permutation& sigma);
SetPartition cycles_partition(const Permutation& sigma);
// Maximal increasing segments of the standard cycle words.
SetPartition cycle_runs(const Permutation& sigma);

bool is_cyclic(const Permutation& sigma);
// Every cycle is (k, k+1, ..., l).
bool is_interval_type(const Permutation& sigma);

// Number of permutations of [n] with k descents.
BigInt eulerian(int n, int k);
// E_n(x) = sum over S_n of x^{descents}; E_0 = 1.
Polynomial eulerian_polynomial(int n, char variable = 'x');

// Interval heap on the cycle runs of a full cycle, read in the order of
// (1, sigma(1), sigma^2(1), ...): every pair of runs with intersecting convex
// hulls is ordered with the earlier run above.
HeapOrder psi(const Permutation& sigma);
// Repeatedly removes the minimal block with the smallest minimum and prepends it to the cycle word.
Permutation psi_inverse(const HeapOrder& heap);

// Cancellation involution on permutations that are not of interval type. In
// the concatenated standard cycle word, a last descent inside a cycle splits
// that cycle there; a last descent between two cycles joins them.
Permutation phi(const Permutation& sigma);

}  // namespace cumulants
