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

#include "cumulants/partitions.hpp"
#include "cumulants/polynomial.hpp"
#include "cumulants/rational.hpp"

#include <string>
#include <vector>

namespace cumulants {

// Planar rooted tree; node ids are block indices of the originating partition.
struct RootedTree {
    int node = 0;
    std::vector<RootedTree> children;

    int size() const;
    int height() const;  // a single vertex has height 0
};

struct RootedForest {
    std::vector<RootedTree> trees;

    int size() const;
    // Nested arrays: a tree is [node, child, child, ...]; a forest is a list of trees.
    std::string json() const;
    // Same shape with each node replaced by the element list of its block in p.
    std::string json(const SetPartition& p) const;
};

// Forest from a parent array (-1 marks roots); children keep increasing index order.
RootedForest forest_from_parents(const std::vector<int>& parent);

// One tree per irreducible component; a block's parent is its nearest enclosing block.
RootedForest nesting_forest(const SetPartition& p);

// t! = |t| * t_1! * ... * t_r! over the root's subtrees; forests multiply.
BigInt tree_factorial(const RootedTree& t);
BigInt tree_factorial(const RootedForest& f);
// tau(p)! for a noncrossing partition.
BigInt tau_factorial(const SetPartition& p);

// Number of monotone block orders, |p|! / tau(p)!.
BigInt monotone_labelling_count(const SetPartition& p);

// Number of nondecreasing N-labellings (labels grow away from the root) as a polynomial in N.
Polynomial labelling_polynomial(const RootedTree& t);
Polynomial labelling_polynomial(const RootedForest& f);
Polynomial labelling_polynomial(const SetPartition& p);

// Linear coefficient of the labelling polynomial.
Rational alpha(const RootedForest& f);
Rational alpha(const SetPartition& p);

}  // namespace cumulants
