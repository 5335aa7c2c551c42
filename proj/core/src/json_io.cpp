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

#include "cmep/json_io.hpp"

#include <stdexcept>

namespace cmep::json {

Json number(long v) { return std::to_string(v); }
Json number(const Integer& v) { return to_string(v); }
Json number(const Rational& v) { return to_string(v); }

Json numbers(const std::vector<int>& v) {
  Json out = Json::array();
  for (int x : v) out.push_back(number(static_cast<long>(x)));
  return out;
}

namespace {

template <class Coeff>
Json poly_json(const Polynomial<Coeff>& p) {
  Json coeffs = Json::array();
  for (const auto& c : p.coefficients()) coeffs.push_back(number(c));
  Json out;
  out["var"] = p.var();
  out["degree"] = number(static_cast<long>(p.degree()));
  out["coeffs"] = std::move(coeffs);
  return out;
}

Json bools(bool weak, bool strict) {
  Json out;
  out["weak"] = weak;
  out["strict"] = strict;
  return out;
}

int as_int(const Json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) return static_cast<int>(parse_integer(j.get<std::string>()).get_si());
  throw std::invalid_argument("expected an integer");
}

std::vector<int> as_ints(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array");
  std::vector<int> out;
  for (const auto& x : j) out.push_back(as_int(x));
  return out;
}

std::string as_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number()) return j.dump();
  throw std::invalid_argument("expected a number");
}

Json sequence(const std::vector<int>& s) { return numbers(s); }

}  // namespace

Json to_json(const MultisetSpec& spec) {
  Json out;
  out["m"] = numbers(spec.m());
  out["r"] = numbers(spec.r());
  return out;
}

Json to_json(const IntPoly& p) { return poly_json(p); }
Json to_json(const RatPoly& p) { return poly_json(p); }

Json to_json(const TruncatedSeries& s, const std::vector<std::string>& variables) {
  Json out;
  if (!variables.empty()) out["variables"] = variables;
  out["caps"] = numbers(s.caps());
  Json terms = Json::array();
  for (const auto& [exp, c] : s.terms()) {
    Json t;
    t["exp"] = numbers(exp);
    t["coeff"] = number(c);
    terms.push_back(std::move(t));
  }
  out["terms"] = std::move(terms);
  return out;
}

Json to_json(const EulerianResult& r) {
  Json out;
  out["spec"] = to_json(r.spec);
  out["method"] = to_string(r.method);
  out["polynomial"] = to_json(r.poly);
  out["degree"] = number(static_cast<long>(r.degree));
  out["codegree"] = number(static_cast<long>(r.codegree));
  out["symmetric_wrt_degree"] = r.symmetric_wrt_degree;
  return out;
}

Json to_json(const TruncationCaps& caps) {
  Json out;
  out["truncation_degree"] = number(static_cast<long>(caps.truncation_degree));
  out["variable_degree"] = number(static_cast<long>(caps.variable_degree));
  return out;
}

Json to_json(const IdentityReport& r) {
  Json out;
  out["kind"] = to_string(r.kind);
  out["spec"] = to_json(r.spec);
  out["caps"] = to_json(r.caps);
  out["variables"] = r.variables;
  out["status"] = r.match ? "match" : "mismatch";
  if (r.witness) {
    Json w;
    w["exp"] = numbers(r.witness->exponent);
    w["lhs"] = number(r.witness->lhs);
    w["rhs"] = number(r.witness->rhs);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  out["lhs_terms"] = number(static_cast<long>(r.lhs_terms));
  out["rhs_terms"] = number(static_cast<long>(r.rhs_terms));
  return out;
}

Json to_json(const SymmetricDecomposition& d) {
  Json out;
  out["n"] = number(static_cast<long>(d.n));
  out["a"] = to_json(d.a);
  out["b"] = to_json(d.b);
  return out;
}

Json to_json(const GammaVector& g) {
  Json out;
  out["n"] = number(static_cast<long>(g.n));
  Json gs = Json::array();
  for (const auto& c : g.gammas) gs.push_back(number(c));
  out["gammas"] = std::move(gs);
  out["nonnegative"] = g.nonnegative();
  return out;
}

Json to_json(const ShapeReport& s) {
  Json out;
  out["nonnegative"] = s.nonnegative;
  out["unimodal"] = s.unimodal;
  out["log_concave"] = s.log_concave;
  out["alternatingly_increasing"] = s.alternatingly_increasing;
  return out;
}

Json to_json(const RootCertificate& c) {
  Json out;
  out["degree"] = number(static_cast<long>(c.degree));
  out["real_rooted"] = c.real_rooted;
  out["real_root_count"] = number(static_cast<long>(c.real_root_count));
  out["square_free_part"] = to_json(c.square_free_part);
  Json iv = Json::array();
  for (std::size_t i = 0; i < c.intervals.size(); ++i) {
    Json e;
    e["lo"] = number(c.intervals[i].lo);
    e["hi"] = number(c.intervals[i].hi);
    e["multiplicity"] = number(static_cast<long>(c.multiplicities.at(i)));
    iv.push_back(std::move(e));
  }
  out["intervals"] = std::move(iv);
  return out;
}

Json to_json(const InterlacingResult& r) {
  Json out;
  out["holds"] = r.holds;
  out["reason"] = r.reason;
  return out;
}

Json to_json(const SelfInterlacingReport& r) {
  Json out;
  out["d"] = number(static_cast<long>(r.d));
  out["decomposition"] = to_json(r.decomposition);
  out["hypothesis_met"] = r.hypothesis_met;
  Json conds = Json::array();
  for (const auto& c : r.conditions) {
    Json e;
    e["name"] = c.name;
    e["weak"] = c.weak;
    e["strict"] = c.strict;
    conds.push_back(std::move(e));
  }
  out["conditions"] = std::move(conds);
  out["reflection_on_p"] = bools(r.reflection_on_p.weak, r.reflection_on_p.strict);
  out["weak_agree"] = r.weak_agree;
  out["strict_agree"] = r.strict_agree;
  return out;
}

Json to_json(const SEqualityCheck& c) {
  Json out;
  out["name"] = c.name;
  out["s"] = sequence(c.s);
  out["spec"] = to_json(c.spec);
  out["e_poly"] = to_json(c.e_poly);
  out["a_poly"] = to_json(c.a_poly);
  out["equal"] = c.equal;
  return out;
}

Json to_json(const SearchReport& r) {
  Json out;
  out["target"] = to_json(r.target);
  out["size"] = number(r.size);
  out["factorizations"] = number(static_cast<long>(r.factorizations));
  out["candidates"] = number(static_cast<long>(r.evaluated.size()));
  out["duplicates_merged"] = number(static_cast<long>(r.duplicates_merged));
  Json matches = Json::array();
  for (const auto& s : r.matches) matches.push_back(sequence(s));
  out["matches"] = std::move(matches);
  out["reductions"] = r.reductions;
  return out;
}

Json to_json(const DecompositionRemarkReport& r) {
  Json out;
  out["n"] = number(static_cast<long>(r.n));
  out["spec"] = to_json(r.spec);
  out["polynomial"] = to_json(r.polynomial);
  out["decomposition"] = to_json(r.decomposition);
  out["a_sequence"] = sequence(r.a_sequence);
  out["b_sequence"] = sequence(r.b_sequence);
  out["a_expected"] = to_json(r.a_expected);
  out["b_expected"] = to_json(r.b_expected);
  out["a_matches"] = r.a_matches;
  out["b_matches"] = r.b_matches;
  return out;
}

Json to_json(const PlaneTree& t) { return t.to_string(); }

Json to_json(const TreeStats& s) {
  Json out;
  out["internal"] = number(s.internal);
  out["leaves"] = number(s.leaves);
  out["young_leaves"] = number(s.young_leaves);
  return out;
}

Json to_json(const GHPartition& p, bool include_trees) {
  Json out;
  out["n"] = number(static_cast<long>(p.n));
  out["k"] = number(static_cast<long>(p.k));
  out["polynomial"] = to_json(p.polynomial);
  out["degree"] = number(static_cast<long>(p.degree));
  out["decomposition"] = to_json(p.decomposition);
  out["g_count"] = number(static_cast<long>(p.g.size()));
  out["h_count"] = number(static_cast<long>(p.h.size()));
  out["base_count"] = number(p.base_count);
  out["g_sum"] = to_json(p.g_sum);
  out["h_sum"] = to_json(p.h_sum);
  out["g_matches"] = p.g_matches;
  out["h_matches"] = p.h_matches;
  out["cardinalities_match"] = p.cardinalities_match;
  if (include_trees) {
    Json g = Json::array();
    for (const auto& t : p.g) g.push_back(to_json(t));
    Json h = Json::array();
    for (const auto& t : p.h) h.push_back(to_json(t));
    out["g"] = std::move(g);
    out["h"] = std::move(h);
  }
  return out;
}

MultisetSpec spec_from_json(const Json& j) { return MultisetSpec(as_ints(j.at("m")), as_ints(j.at("r"))); }

IntPoly int_poly_from_json(const Json& j) {
  std::vector<Integer> c;
  for (const auto& x : j.at("coeffs")) c.push_back(parse_integer(as_text(x)));
  return IntPoly(std::move(c), j.value("var", std::string("x")));
}

RatPoly rat_poly_from_json(const Json& j) {
  std::vector<Rational> c;
  for (const auto& x : j.at("coeffs")) c.push_back(parse_rational(as_text(x)));
  return RatPoly(std::move(c), j.value("var", std::string("x")));
}

TruncatedSeries series_from_json(const Json& j) {
  TruncatedSeries s(as_ints(j.at("caps")));
  for (const auto& t : j.at("terms")) s.add_term(as_ints(t.at("exp")), parse_integer(as_text(t.at("coeff"))));
  return s;
}

PlaneTree tree_from_json(const Json& j) {
  if (j.is_string()) return PlaneTree::parse(j.get<std::string>());
  return PlaneTree::parse(j.dump());
}

}  // namespace cmep::json
