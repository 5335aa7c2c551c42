// Copyright 2026 The cmep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CMEP_TREES_HPP
#define CMEP_TREES_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cmep/decomposition.hpp"
#include "cmep/errors.hpp"
#include "cmep/polynomial.hpp"

namespace cmep {

// weakly_increasing: child label >= parent label. multiset: child label > parent label.
enum class TreeMode { weakly_increasing, multiset };

std::string to_string(TreeMode mode);
TreeMode parse_tree_mode(std::string_view text);

/**
 * Rooted plane tree stored as a node arena. Node 0 is the root and carries
 * label 0; children are kept left to right.
 */
class PlaneTree {
 public:
  struct Node {
    int label = 0;
    int parent = -1;
    std::vector<int> children;
  };

  PlaneTree();

  static constexpr int root() { return 0; }

  // Returns the id of the new node.
  int add_child(int parent, int label, bool leftmost = false);
  // Undoes the most recent add_child when it appended on the right.
  void pop_last();

  std::size_t size() const { return nodes_.size(); }
  const Node& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }

  std::vector<int> preorder() const;
  // Node first, then its subtrees from right to left.
  std::vector<int> reverse_preorder() const;
  // Non-root labels in ascending order.
  std::vector<int> labels() const;

  bool valid(TreeMode mode) const;

  // Nested list form, e.g. [0,[1,[2]],[1,[2],[3]]].
  std::string to_string() const;
  static PlaneTree parse(std::string_view text);

  // Structural equality: labels and child order, ignoring node ids.
  bool operator==(const PlaneTree& other) const;

 private:
  std::vector<Node> nodes_;
};

struct TreeStats {
  long internal = 0;
  long leaves = 0;
  long young_leaves = 0;
};

TreeStats tree_statistics(const PlaneTree& tree);

/**
 * Visits every tree on the label multiset exactly once. Labels are placed in
 * ascending order, each as the rightmost child of an admissible parent, and
 * equal labels must land in preorder order so that interchangeable copies
 * are not counted twice.
 *
 * Throws CapacityError as soon as more than cap trees have been produced.
 */
void for_each_tree(std::vector<int> labels, TreeMode mode,
                   const std::function<void(const PlaneTree&)>& visit,
                   std::uint64_t cap = kDefaultEnumerationCap);

std::vector<PlaneTree> enumerate_trees(std::vector<int> labels, TreeMode mode,
                                       std::uint64_t cap = kDefaultEnumerationCap);

// sum over weakly increasing trees of x^internal.
IntPoly eulerian_narayana(std::vector<int> labels, std::uint64_t cap = kDefaultEnumerationCap);

/**
 * Each letter becomes a child of the rightmost earlier letter that is
 * strictly smaller, or of the root if there is none. New children go on the
 * left.
 */
PlaneTree perm_to_tree(std::span<const int> word);

// Inverse of perm_to_tree on multiset trees: labels in reverse preorder.
std::vector<int> tree_to_perm(const PlaneTree& tree);

// {1^k, ..., (n-1)^k, n} as a sorted label list.
std::vector<int> almost_uniform_labels(int n, int k);

struct GHPartition {
  int n = 0;
  int k = 0;
  IntPoly polynomial;  // A for m = (k,...,k,1), r = 1
  int degree = 0;
  SymmetricDecomposition decomposition;
  std::vector<PlaneTree> g;
  std::vector<PlaneTree> h;
  IntPoly g_sum;
  IntPoly h_sum;
  bool g_matches = false;  // g_sum == x b
  bool h_matches = false;  // h_sum == a
  Integer base_count;      // multiset trees on {1^k, ..., (n-1)^k}
  bool cardinalities_match = false;
};

/**
 * Splits the multiset trees on {1^k, ..., (n-1)^k, n} by the parent of n.
 * The copies of n-1 are ranked by reverse preorder, which is their order in
 * the corresponding word; a tree is in G when n hangs below one of the first
 * k-1 of them.
 */
GHPartition partition_GH(int n, int k, std::uint64_t cap = kDefaultEnumerationCap);

// gammas[i] counts weakly increasing trees with i+1 leaves and no young
// leaves; n is the degree of eulerian_narayana on the same labels.
GammaVector tree_gamma(std::vector<int> labels, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace cmep

#endif  // CMEP_TREES_HPP
