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

#include "cmep/trees.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "cmep/combinatorics.hpp"
#include "cmep/eulerian.hpp"

namespace cmep {

std::string to_string(TreeMode mode) {
  return mode == TreeMode::weakly_increasing ? "weakly_increasing" : "multiset";
}

TreeMode parse_tree_mode(std::string_view text) {
  std::string t(text);
  for (auto& ch : t) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (t == "weakly_increasing" || t == "weak" || t == "weakly-increasing") return TreeMode::weakly_increasing;
  if (t == "multiset" || t == "multiset_tree" || t == "multiset-tree" || t == "strict")
    return TreeMode::multiset;
  throw std::invalid_argument("unknown tree mode: " + t);
}

PlaneTree::PlaneTree() : nodes_(1) {}

int PlaneTree::add_child(int parent, int label, bool leftmost) {
  if (parent < 0 || static_cast<std::size_t>(parent) >= nodes_.size())
    throw std::out_of_range("add_child: no such parent");
  const int id = static_cast<int>(nodes_.size());
  nodes_.push_back({label, parent, {}});
  auto& kids = nodes_[static_cast<std::size_t>(parent)].children;
  if (leftmost) kids.insert(kids.begin(), id);
  else kids.push_back(id);
  return id;
}

void PlaneTree::pop_last() {
  if (nodes_.size() <= 1) throw std::logic_error("pop_last on a bare root");
  const int id = static_cast<int>(nodes_.size()) - 1;
  auto& kids = nodes_[static_cast<std::size_t>(nodes_.back().parent)].children;
  if (kids.empty() || kids.back() != id || !nodes_.back().children.empty())
    throw std::logic_error("pop_last: last node is not a rightmost leaf");
  kids.pop_back();
  nodes_.pop_back();
}

std::vector<int> PlaneTree::preorder() const {
  std::vector<int> out;
  out.reserve(nodes_.size());
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    const auto& kids = node(v).children;
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

std::vector<int> PlaneTree::reverse_preorder() const {
  std::vector<int> out;
  out.reserve(nodes_.size());
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    out.push_back(v);
    for (int c : node(v).children) stack.push_back(c);
  }
  return out;
}

std::vector<int> PlaneTree::labels() const {
  std::vector<int> out;
  for (std::size_t i = 1; i < nodes_.size(); ++i) out.push_back(nodes_[i].label);
  std::sort(out.begin(), out.end());
  return out;
}

bool PlaneTree::valid(TreeMode mode) const {
  if (nodes_.empty() || nodes_[0].label != 0 || nodes_[0].parent != -1) return false;
  std::size_t seen = 0;
  for (int v : preorder()) {
    ++seen;
    const auto& nd = node(v);
    if (v != 0 && nd.label < 1) return false;
    int prev = -1;
    for (int c : nd.children) {
      const int lc = node(c).label;
      if (node(c).parent != v) return false;
      if (mode == TreeMode::weakly_increasing ? lc < nd.label : lc <= nd.label) return false;
      if (lc < prev) return false;
      prev = lc;
    }
  }
  return seen == nodes_.size();
}

namespace {

void render(const PlaneTree& t, int v, std::string& out) {
  out += '[';
  out += std::to_string(t.node(v).label);
  for (int c : t.node(v).children) {
    out += ',';
    render(t, c, out);
  }
  out += ']';
}

void build(PlaneTree& t, int parent, const nlohmann::json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_number_integer())
    throw std::invalid_argument("tree: expected [label, subtree...]");
  const int label = j[0].get<int>();
  const int id = t.add_child(parent, label);
  for (std::size_t i = 1; i < j.size(); ++i) build(t, id, j[i]);
}

bool same_shape(const PlaneTree& a, int u, const PlaneTree& b, int v) {
  const auto& x = a.node(u);
  const auto& y = b.node(v);
  if (x.label != y.label || x.children.size() != y.children.size()) return false;
  for (std::size_t i = 0; i < x.children.size(); ++i)
    if (!same_shape(a, x.children[i], b, y.children[i])) return false;
  return true;
}

}  // namespace

std::string PlaneTree::to_string() const {
  std::string out;
  render(*this, 0, out);
  return out;
}

PlaneTree PlaneTree::parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("tree: ") + e.what());
  }
  if (!j.is_array() || j.empty() || j[0] != 0)
    throw std::invalid_argument("tree: root must be labeled 0");
  PlaneTree t;
  for (std::size_t i = 1; i < j.size(); ++i) build(t, 0, j[i]);
  return t;
}

bool PlaneTree::operator==(const PlaneTree& other) const {
  return size() == other.size() && same_shape(*this, 0, other, 0);
}

TreeStats tree_statistics(const PlaneTree& tree) {
  TreeStats s;
  for (std::size_t v = 1; v < tree.size(); ++v) {
    const auto& nd = tree.node(static_cast<int>(v));
    if (!nd.children.empty()) {
      ++s.internal;
      continue;
    }
    ++s.leaves;
    if (tree.node(nd.parent).children.back() != static_cast<int>(v)) ++s.young_leaves;
  }
  return s;
}

namespace {

struct TreeGenerator {
  std::vector<int> labels;
  TreeMode mode;
  const std::function<void(const PlaneTree&)>& visit;
  std::uint64_t cap;
  std::uint64_t produced = 0;
  PlaneTree tree;

  bool admissible(int parent_label, int label) const {
    return mode == TreeMode::weakly_increasing ? parent_label <= label : parent_label < label;
  }

  // Node ids follow insertion order, so label index i lives at node i + 1.
  void run(std::size_t i) {
    if (i == labels.size()) {
      if (++produced > cap) throw CapacityError("tree enumeration exceeds cap", cap);
      visit(tree);
      return;
    }
    const int label = labels[i];
    const int previous_copy = (i > 0 && labels[i - 1] == label) ? static_cast<int>(i) : -1;
    for (int p = 0; p <= static_cast<int>(i); ++p) {
      if (!admissible(tree.node(p).label, label)) continue;
      const int id = tree.add_child(p, label);
      if (previous_copy < 0 || comes_after(id, previous_copy)) run(i + 1);
      tree.pop_last();
    }
  }

  bool comes_after(int v, int c) const {
    for (int u : tree.preorder()) {
      if (u == c) return true;
      if (u == v) return false;
    }
    return false;
  }
};

}  // namespace

void for_each_tree(std::vector<int> labels, TreeMode mode,
                   const std::function<void(const PlaneTree&)>& visit, std::uint64_t cap) {
  for (int l : labels)
    if (l < 1) throw std::invalid_argument("tree labels must be positive");
  std::sort(labels.begin(), labels.end());
  TreeGenerator gen{std::move(labels), mode, visit, cap, 0, PlaneTree{}};
  gen.run(0);
}

std::vector<PlaneTree> enumerate_trees(std::vector<int> labels, TreeMode mode, std::uint64_t cap) {
  std::vector<PlaneTree> out;
  for_each_tree(std::move(labels), mode, [&](const PlaneTree& t) { out.push_back(t); }, cap);
  return out;
}

namespace {

void bump(std::vector<Integer>& v, std::size_t i) {
  if (v.size() <= i) v.resize(i + 1, Integer(0));
  v[i] += 1;
}

}  // namespace

IntPoly eulerian_narayana(std::vector<int> labels, std::uint64_t cap) {
  std::vector<Integer> coeffs;
  for_each_tree(
      std::move(labels), TreeMode::weakly_increasing,
      [&](const PlaneTree& t) { bump(coeffs, static_cast<std::size_t>(tree_statistics(t).internal)); },
      cap);
  return IntPoly(std::move(coeffs));
}

PlaneTree perm_to_tree(std::span<const int> word) {
  PlaneTree t;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] < 1) throw std::invalid_argument("perm_to_tree: letters must be positive");
    int parent = 0;
    for (std::size_t s = i; s-- > 0;) {
      if (word[s] < word[i]) {
        parent = static_cast<int>(s) + 1;
        break;
      }
    }
    t.add_child(parent, word[i], true);
  }
  return t;
}

std::vector<int> tree_to_perm(const PlaneTree& tree) {
  std::vector<int> out;
  for (int v : tree.reverse_preorder())
    if (v != 0) out.push_back(tree.node(v).label);
  return out;
}

std::vector<int> almost_uniform_labels(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("need n >= 1 and k >= 1");
  std::vector<int> out;
  for (int v = 1; v < n; ++v) out.insert(out.end(), static_cast<std::size_t>(k), v);
  out.push_back(n);
  return out;
}

GHPartition partition_GH(int n, int k, std::uint64_t cap) {
  if (n < 2) throw std::invalid_argument("partition_GH needs n >= 2");
  GHPartition out;
  out.n = n;
  out.k = k;

  std::vector<int> m(static_cast<std::size_t>(n), k);
  m.back() = 1;
  const auto res = eulerian_by_transform(MultisetSpec(m, std::vector<int>(m.size(), 1)));
  out.polynomial = res.poly;
  out.degree = res.degree;
  out.decomposition = symmetric_decomposition(res.poly, res.degree);

  std::vector<Integer> g_coeffs;
  std::vector<Integer> h_coeffs;
  for_each_tree(
      almost_uniform_labels(n, k), TreeMode::multiset,
      [&](const PlaneTree& t) {
        int top = -1;
        std::vector<int> copies;
        for (int v : t.reverse_preorder()) {
          if (t.node(v).label == n) top = v;
          else if (t.node(v).label == n - 1) copies.push_back(v);
        }
        const int parent = t.node(top).parent;
        const auto rank = std::find(copies.begin(), copies.end(), parent) - copies.begin();
        const bool in_g = rank < static_cast<long>(copies.size()) && rank < k - 1;
        const auto internal = static_cast<std::size_t>(tree_statistics(t).internal);
        if (in_g) {
          out.g.push_back(t);
          bump(g_coeffs, internal);
        } else {
          out.h.push_back(t);
          bump(h_coeffs, internal);
        }
      },
      cap);
  out.g_sum = IntPoly(std::move(g_coeffs));
  out.h_sum = IntPoly(std::move(h_coeffs));
  out.g_matches = out.g_sum == IntPoly{0, 1} * out.decomposition.b;
  out.h_matches = out.h_sum == out.decomposition.a;

  std::vector<int> base;
  for (int v = 1; v < n; ++v) base.insert(base.end(), static_cast<std::size_t>(k), v);
  std::uint64_t base_count = 0;
  for_each_tree(base, TreeMode::multiset, [&](const PlaneTree&) { ++base_count; }, cap);
  out.base_count = Integer(static_cast<unsigned long>(base_count));
  out.cardinalities_match =
      Integer(static_cast<unsigned long>(out.g.size())) == out.base_count * (k - 1) &&
      Integer(static_cast<unsigned long>(out.h.size())) == out.base_count * ((n - 2) * k + 2);
  return out;
}

GammaVector tree_gamma(std::vector<int> labels, std::uint64_t cap) {
  std::vector<Integer> internal;
  std::vector<Integer> gammas;
  for_each_tree(
      std::move(labels), TreeMode::weakly_increasing,
      [&](const PlaneTree& t) {
        const auto s = tree_statistics(t);
        bump(internal, static_cast<std::size_t>(s.internal));
        if (s.young_leaves == 0 && s.leaves > 0) bump(gammas, static_cast<std::size_t>(s.leaves - 1));
      },
      cap);
  GammaVector g;
  g.n = IntPoly(std::move(internal)).degree();
  const auto width = static_cast<std::size_t>(g.n / 2 + 1);
  if (gammas.size() < width) gammas.resize(width, Integer(0));
  g.gammas = std::move(gammas);
  return g;
}

}  // namespace cmep
