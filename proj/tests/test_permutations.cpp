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

#include "cumulants/error.hpp"
#include "cumulants/permutation.hpp"
#include "oracles.hpp"

#include <map>
#include <set>

using namespace cumulants;

namespace {

SetPartition P(const char* text) { return SetPartition::parse(text); }

// Brute force: runs as blocks of values, read straight off the one-line form.
std::vector<std::set<int>> brute_runs(const std::vector<int>& w) {
    std::vector<std::set<int>> out{{w[0]}};
    for (std::size_t i = 1; i < w.size(); ++i) {
        if (w[i] < w[i - 1]) out.emplace_back();
        out.back().insert(w[i]);
    }
    return out;
}

SetPartition from_sets(int n, const std::vector<std::set<int>>& sets) {
    std::vector<std::vector<int>> blocks;
    for (const auto& s : sets) blocks.emplace_back(s.begin(), s.end());
    return SetPartition::from_blocks(n, blocks);
}

}  // namespace

TEST_CASE("permutation construction and notation") {
    auto s = Permutation::parse_cycles("(1,3)(2,5,7,4,6)(8,9)");
    CHECK(s.n() == 9);
    CHECK(s(2) == 5);
    CHECK(s(6) == 2);
    CHECK(s.cycle_str() == "(1,3)(2,5,7,4,6)(8,9)");
    CHECK(Permutation::parse_cycles("(3,1)", 4).cycle_str() == "(1,3)(2)(4)");
    CHECK(Permutation({3, 1, 2}).str() == "[3,1,2]");
    CHECK(Permutation({3, 1, 2}).cycle_str() == "(1,3,2)");
    CHECK(Permutation::identity(3).descents() == 0);
    CHECK_THROWS_AS(Permutation({1, 1}), InvalidArgument);
    CHECK_THROWS_AS(Permutation({0, 1}), InvalidArgument);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1,2"), ParseError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1,2)(2,3)"), ParseError);
    CHECK_THROWS_AS(Permutation::parse_cycles("1,2"), ParseError);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1,2)", 1), ParseError);
}

TEST_CASE("runs, cycles and cycle runs") {
    auto s = Permutation::parse_cycles("(1,3)(2,5,7,4,6)(8,9)");
    CHECK(cycles_partition(s) == P("1,3|2,4,5,6,7|8,9"));
    CHECK(cycle_runs(s) == P("1,3|2,5,7|4,6|8,9"));
    auto r = runs(Permutation({2, 5, 1, 3, 4}));
    CHECK(r.partition == P("1,3,4|2,5"));
    CHECK(r.descents == 1);
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& p) {
            auto rr = runs(p);
            CHECK(rr.partition == from_sets(n, brute_runs(p.values())));
            CHECK(rr.partition.block_count() == rr.descents + 1);
        });
    CHECK(is_interval_type(Permutation::parse_cycles("(1,2,3)(4)(5,6)")));
    CHECK_FALSE(is_interval_type(Permutation::parse_cycles("(1,3,2)")));
    CHECK(is_cyclic(Permutation::parse_cycles("(1,3,2)")));
    CHECK_FALSE(is_cyclic(Permutation::identity(2)));
}

TEST_CASE("enumeration sizes") {
    for (int n = 1; n <= 7; ++n) {
        long count = 0;
        std::set<Permutation> seen;
        for_each_permutation(n, [&](const Permutation& p) {
            ++count;
            if (n <= 5) seen.insert(p);
        });
        CHECK(count == oracle::factorial(n));
        if (n <= 5) CHECK(static_cast<long>(seen.size()) == count);
        auto cyc = cyclic_permutations(n);
        CHECK(static_cast<long>(cyc.size()) == oracle::factorial(n - 1));
        for (const auto& c : cyc) CHECK(is_cyclic(c));
    }
    CHECK_THROWS_AS(cyclic_permutations(kPermutationHardLimit + 1), ResourceLimit);
}

TEST_CASE("Eulerian numbers against descent counting") {
    CHECK(eulerian(4, 1) == 11);
    CHECK(eulerian(0, 0) == 1);
    CHECK(eulerian(3, 3) == 0);
    CHECK(eulerian_polynomial(3).str() == "x^2 + 4*x + 1");
    for (int n = 1; n <= 7; ++n) {
        std::map<int, long> by_descents;
        for_each_permutation(n, [&](const Permutation& p) { ++by_descents[p.descents()]; });
        for (int k = 0; k < n; ++k) CHECK(eulerian(n, k) == by_descents[k]);
    }
}

TEST_CASE("heap of a cyclic permutation and its inverse") {
    // Heap on the partition 1,6,12|2,5|3,8|4,10|7,13|9,11 recovered from a cycle.
    auto sigma = Permutation::parse_cycles("(1,6,12,4,10,7,13,9,11,3,8,2,5)");
    auto h = psi(sigma);
    CHECK(h.base == P("1,6,12|2,5|3,8|4,10|7,13|9,11"));
    CHECK(h.is_pyramid());
    CHECK(h.is_heap());
    CHECK(psi_inverse(h) == sigma);

    for (int n = 1; n <= 7; ++n) {
        std::set<std::string> images;
        for (const auto& c : cyclic_permutations(n)) {
            auto heap = psi(c);
            CHECK(heap.base == cycle_runs(c));
            CHECK(is_irreducible(heap.base));
            CHECK(heap.is_pyramid());
            CHECK(psi_inverse(heap) == c);
            images.insert(heap.str());
        }
        CHECK(static_cast<long>(images.size()) == oracle::factorial(n - 1));
    }
    CHECK_THROWS_AS(psi(Permutation::identity(2)), InvalidArgument);
}

TEST_CASE("three counts agree with the interval Tutte evaluation") {
    for (int n = 1; n <= 8; ++n) {
        std::map<std::string, long> by_cycle_runs, by_runs;
        for (const auto& c : cyclic_permutations(n)) ++by_cycle_runs[cycle_runs(c).str()];
        for_each_permutation(n, [&](const Permutation& p) {
            if (p(1) == 1) ++by_runs[runs(p).partition.str()];
        });
        long total = 0;
        std::map<int, long> by_size;
        for_each_partition(n, PartitionClass::Irreducible, [&](const SetPartition& pi) {
            Rational t = tutte_eval(anti_interval_graph(pi), 1, 0);
            CHECK(t == Rational(by_cycle_runs[pi.str()]));
            CHECK(t == Rational(by_runs[pi.str()]));
            if (n <= 6) CHECK(t == Rational(count_pyramids(pi, HeapMode::Interval)));
            total += by_cycle_runs[pi.str()];
            by_size[pi.block_count()] += by_runs[pi.str()];
        });
        // Every cyclic permutation lands on an irreducible partition.
        CHECK(total == oracle::factorial(n - 1));
        for (int k = 1; k <= n; ++k) CHECK(eulerian(n - 1, k - 1) == by_size[k]);
    }
}

TEST_CASE("cancellation involution") {
    auto a = Permutation::parse_cycles("(1,3)(2,5,7,4,6)(8,9)");
    auto b = Permutation::parse_cycles("(1,3)(2,5,7)(4,6)(8,9)");
    CHECK(phi(a) == b);
    CHECK(phi(b) == a);
    CHECK_THROWS_AS(phi(Permutation::parse_cycles("(1,2)(3)")), InvalidArgument);
    for (int n = 1; n <= 7; ++n) {
        long interval = 0;
        for_each_permutation(n, [&](const Permutation& p) {
            if (is_interval_type(p)) {
                ++interval;
                return;
            }
            auto q = phi(p);
            CHECK(phi(q) == p);
            CHECK(cycle_runs(q) == cycle_runs(p));
            int dc = static_cast<int>(q.cycles().size()) - static_cast<int>(p.cycles().size());
            CHECK((dc == 1 || dc == -1));
        });
        // Interval-type permutations are compositions of n.
        CHECK(interval == (1L << (n - 1)));
    }
}
