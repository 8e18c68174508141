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
#include "cumulants/rational.hpp"

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace cumulants {

// A set partition of [n], n >= 1, stored as a restricted growth string
// (rgs[i] is the block index of element i+1, blocks numbered by first
// appearance) together with one bit mask per block. Blocks are therefore
// always ordered by their minimum.
class SetPartition {
public:
    SetPartition() = default;  // empty placeholder, n() == 0

    static SetPartition from_rgs(std::vector<int> rgs);
    static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
    static SetPartition from_masks(int n, const std::vector<SubsetMask>& masks);
    // "1,3|2|4,5"; whitespace is ignored.
    static SetPartition parse(std::string_view text);
    // [[1,3],[2],[4,5]]
    static SetPartition parse_json(std::string_view text);

    static SetPartition finest(int n);    // 0̂_n, all singletons
    static SetPartition coarsest(int n);  // 1̂_n, one block

    int n() const { return static_cast<int>(rgs_.size()); }
    int block_count() const { return static_cast<int>(masks_.size()); }
    const std::vector<int>& rgs() const { return rgs_; }
    const std::vector<SubsetMask>& masks() const { return masks_; }
    SubsetMask mask(int block) const { return masks_.at(static_cast<std::size_t>(block)); }
    int block_of(int element) const { return rgs_.at(static_cast<std::size_t>(element - 1)); }
    SubsetMask ground() const;
    std::vector<std::vector<int>> blocks() const;

    std::string str() const;
    std::string json() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) { return a.rgs_ == b.rgs_; }
    friend std::strong_ordering operator<=>(const SetPartition& a, const SetPartition& b);

private:
    std::vector<int> rgs_;
    std::vector<SubsetMask> masks_;
};

struct SetPartitionHash {
    std::size_t operator()(const SetPartition& p) const;
};

enum class PartitionClass {
    All,
    Noncrossing,
    Interval,
    Irreducible,
    Connected,
    IrreducibleNoncrossing,
    ConnectedNoncrossing,
};

// "all", "noncrossing", "interval", "irreducible", "connected",
// "irreducible_noncrossing", "connected_noncrossing".
PartitionClass parse_partition_class(std::string_view name);
std::string partition_class_name(PartitionClass cls);

// Relations between two disjoint nonempty blocks.
bool blocks_cross(SubsetMask a, SubsetMask b);
bool block_nests_in(SubsetMask inner, SubsetMask outer);  // inner lies between two elements of outer
bool hulls_intersect(SubsetMask a, SubsetMask b);          // cross or nest

struct PartitionFlags {
    bool noncrossing;
    bool interval;
    bool irreducible;
    bool connected;
};

bool is_noncrossing(const SetPartition& p);
bool is_interval(const SetPartition& p);
bool is_irreducible(const SetPartition& p);
bool is_connected(const SetPartition& p);
PartitionFlags classify(const SetPartition& p);
bool belongs_to(const SetPartition& p, PartitionClass cls);

SetPartition noncrossing_closure(const SetPartition& p);
SetPartition interval_closure(const SetPartition& p);

enum class ComponentMode { Irreducible, Connected };

struct Component {
    SubsetMask support;
    SetPartition partition;  // restriction of the original to support, relabeled
};

std::vector<Component> components(const SetPartition& p, ComponentMode mode);

bool lattice_leq(const SetPartition& a, const SetPartition& b);  // a refines b
SetPartition lattice_join(const SetPartition& a, const SetPartition& b);
SetPartition lattice_meet(const SetPartition& a, const SetPartition& b);

// sigma >= pi and pi restricted to every block of sigma is noncrossing.
bool triangle_geq(const SetPartition& sigma, const SetPartition& pi);

// Intersect blocks with s, drop empties, relabel s order-preservingly onto [|s|].
SetPartition restrict(const SetPartition& p, SubsetMask s);

enum class Lattice { P, NC, I };

std::string lattice_name(Lattice lattice);
Lattice parse_lattice(std::string_view name);

// Kreweras complement of a noncrossing partition.
SetPartition kreweras(const SetPartition& p);

// Möbius function of the given lattice on the interval [pi, sigma], by
// factoring the interval into full lattices.
BigInt mobius(const SetPartition& pi, const SetPartition& sigma, Lattice lattice);

// Depth of a noncrossing partition: the maximal number of blocks covering a block, itself included.
int depth(const SetPartition& p);

// The monomial prod_{V in p} m_V.
MomentPolynomial moment_monomial(const SetPartition& p);

// Default and hard limits on n for enumeration.
int default_limit(PartitionClass cls);
int hard_limit(PartitionClass cls);
constexpr int kMonotoneDefaultLimit = 8;
constexpr int kMonotoneHardLimit = 10;

// Members of a class in lexicographic restricted-growth-string order.
// limit < 0 selects default_limit(cls); a limit above hard_limit(cls) is rejected.
void for_each_partition(int n, PartitionClass cls, const std::function<void(const SetPartition&)>& visit,
                        int limit = -1);
std::vector<SetPartition> enumerate(int n, PartitionClass cls, int limit = -1);

// A set partition with a linear order on its blocks.
struct OrderedPartition {
    SetPartition base;
    std::vector<int> order;  // block indices, first block first

    std::string str() const;  // blocks separated by "|" in the given order
    friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

// Noncrossing base and every outer block placed before the blocks nested in it.
bool is_monotone(const OrderedPartition& op);

// Monotone partitions: noncrossing partitions in RGS order, and for each one
// its admissible block orders in lexicographic order.
std::vector<OrderedPartition> enumerate_monotone(int n, int limit = -1);

}  // namespace cumulants
