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

#include "cmep/cli.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "cmep/decomposition.hpp"
#include "cmep/errors.hpp"
#include "cmep/eulerian.hpp"
#include "cmep/identities.hpp"
#include "cmep/poly_ops.hpp"
#include "cmep/real_roots.hpp"
#include "cmep/s_eulerian.hpp"
#include "cmep/self_interlacing.hpp"
#include "cmep/trees.hpp"

namespace cmep::cli {

using json::Json;

std::uint64_t enumeration_cap_from_env() {
  const char* raw = std::getenv("EULERIAN_CAP");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return kDefaultEnumerationCap;
  return static_cast<std::uint64_t>(v);
}

namespace {

// ---------------------------------------------------------------- parsing

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  if (used != text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  return v;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) out.push_back(parse_int(item));
  return out;
}

// Accepts "1,1,2" as well as "1^2,2".
std::vector<int> parse_multiset(const std::string& text) {
  std::vector<int> out;
  for (const auto& item : split_list(text)) {
    const auto caret = item.find('^');
    if (caret == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const int value = parse_int(item.substr(0, caret));
    const int times = parse_int(item.substr(caret + 1));
    if (times < 0) throw std::invalid_argument("negative multiplicity in '" + item + "'");
    out.insert(out.end(), static_cast<std::size_t>(times), value);
  }
  return out;
}

IntPoly parse_poly(const std::string& text) {
  std::vector<Integer> c;
  for (const auto& item : split_list(text)) c.push_back(parse_integer(item));
  return IntPoly(std::move(c));
}

std::pair<int, int> parse_pair(const std::string& text, const char* what) {
  const auto v = parse_ints(text);
  if (v.size() != 2) throw std::invalid_argument(std::string(what) + " expects two integers a,b");
  return {v[0], v[1]};
}

MultisetSpec make_spec(const std::string& m_text, const std::string& r_text, int default_r) {
  const auto m = parse_ints(m_text);
  if (r_text.empty()) return MultisetSpec::uniform(m, default_r);
  auto r = parse_ints(r_text);
  if (r.size() == 1 && m.size() > 1) r.assign(m.size(), r[0]);
  return MultisetSpec(m, r);
}

int default_colors(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::lin_a:
    case IdentityKind::lin_b:
    case IdentityKind::equidistribution:
      return 2;
    default:
      return 1;
  }
}

// --------------------------------------------------------------- rendering

bool is_poly(const Json& j) { return j.is_object() && j.contains("var") && j.contains("coeffs"); }

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  return j.dump();
}

std::string poly_text(const Json& j) {
  const std::string var = j.at("var").get<std::string>();
  std::string out;
  std::size_t i = 0;
  for (const auto& c : j.at("coeffs")) {
    Integer v = parse_integer(c.get<std::string>());
    const std::size_t e = i++;
    if (v == 0) continue;
    const bool neg = v < 0;
    if (neg) v = -v;
    if (out.empty()) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    if (v != 1 || e == 0) out += to_string(v);
    if (e >= 1) out += var;
    if (e >= 2) out += "^" + std::to_string(e);
  }
  return out.empty() ? "0" : out;
}

// Scalars short enough to sit on one line.
bool is_flat(const Json& j) {
  return std::all_of(j.begin(), j.end(), [](const Json& x) {
    return !x.is_structured() && !(x.is_string() && x.get<std::string>().find(' ') != std::string::npos);
  });
}

void render_value(const std::string& prefix, const Json& j, int indent, std::string& out);

void render_object(const Json& j, int indent, std::string& out) {
  for (auto it = j.begin(); it != j.end(); ++it)
    render_value(std::string(static_cast<std::size_t>(indent), ' ') + it.key() + ":", it.value(),
                 indent, out);
}

void render_value(const std::string& prefix, const Json& j, int indent, std::string& out) {
  if (is_poly(j)) {
    out += prefix + " " + poly_text(j) + "\n";
  } else if (j.is_object()) {
    out += prefix + "\n";
    render_object(j, indent + 2, out);
  } else if (j.is_array() && is_flat(j)) {
    std::string items;
    for (const auto& x : j) items += (items.empty() ? "" : ", ") + text_of(x);
    out += prefix + " [" + items + "]\n";
  } else if (j.is_array()) {
    out += prefix + "\n";
    const std::string pad(static_cast<std::size_t>(indent + 2), ' ');
    for (const auto& x : j) {
      if (x.is_object() && !is_poly(x)) {
        out += pad + "-\n";
        render_object(x, indent + 4, out);
      } else {
        render_value(pad + "-", x, indent + 2, out);
      }
    }
  } else {
    out += prefix + " " + text_of(j) + "\n";
  }
}

// ---------------------------------------------------------------- commands

struct Outcome {
  Json payload;
  int exit_code = kOk;
};

Outcome cmd_eulerian(const std::string& m, const std::string& r, const std::string& method,
                     std::uint64_t cap) {
  const MultisetSpec spec = make_spec(m, r, 1);
  Outcome o;
  o.payload["command"] = "eulerian";
  const auto transform = eulerian_by_transform(spec);
  if (method == "transform") {
    o.payload["result"] = json::to_json(transform);
  } else {
    const auto enumerated = eulerian_by_enumeration(spec, cap);
    o.payload["result"] = json::to_json(method == "both" ? transform : enumerated);
    if (method == "both") {
      o.payload["enumeration"] = json::to_json(enumerated.poly);
      o.payload["methods_agree"] = enumerated.poly == transform.poly;
      if (enumerated.poly != transform.poly) o.exit_code = kMismatch;
    }
  }
  const auto dc = degree_and_codegree(spec);
  const bool criterion = symmetry_criterion(spec);
  o.payload["degree_formula"] = json::number(static_cast<long>(dc.degree));
  o.payload["codegree_formula"] = json::number(static_cast<long>(dc.codegree));
  o.payload["symmetry_criterion"] = criterion;
  if (dc.degree != transform.degree || criterion != transform.symmetric_wrt_degree)
    o.exit_code = kMismatch;
  return o;
}

Outcome cmd_verify(const std::string& kind_text, const std::string& m, const std::string& r,
                   const std::string& caps_text, std::uint64_t cap) {
  TruncationCaps caps;
  if (!caps_text.empty()) {
    const auto [t, d] = parse_pair(caps_text, "--caps");
    if (t < 0 || d < 0) throw std::invalid_argument("--caps must be nonnegative");
    caps.truncation_degree = t;
    caps.variable_degree = d;
  }
  Outcome o;
  o.payload["command"] = "verify";
  std::string kind_lower = kind_text;
  for (auto& ch : kind_lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (kind_lower != "all") {
    const IdentityKind kind = parse_identity_kind(kind_text);
    const auto report = verify_identity(kind, make_spec(m, r, default_colors(kind)), caps, cap);
    o.payload["report"] = json::to_json(report);
    if (!report.match) o.exit_code = kMismatch;
    return o;
  }
  Json reports = Json::array();
  for (IdentityKind kind : all_identity_kinds()) {
    const MultisetSpec spec = make_spec(m, r, default_colors(kind));
    try {
      check_kind_applies(kind, spec);
    } catch (const IncompatibleInput& e) {
      Json skipped;
      skipped["kind"] = to_string(kind);
      skipped["spec"] = json::to_json(spec);
      skipped["status"] = "not_applicable";
      skipped["reason"] = e.what();
      reports.push_back(std::move(skipped));
      continue;
    }
    const auto report = verify_identity(kind, spec, caps, cap);
    if (!report.match) o.exit_code = kMismatch;
    reports.push_back(json::to_json(report));
  }
  o.payload["reports"] = std::move(reports);
  return o;
}

int reference_degree(const IntPoly& p, int n) { return n >= 0 ? n : std::max(p.degree(), 0); }

Outcome cmd_decompose(const std::string& poly, int n) {
  const IntPoly p = parse_poly(poly);
  const int d = reference_degree(p, n);
  const auto dec = symmetric_decomposition(p, d);
  Outcome o;
  o.payload["command"] = "decompose";
  o.payload["polynomial"] = json::to_json(p);
  o.payload["decomposition"] = json::to_json(dec);
  o.payload["a_nonnegative"] =
      std::all_of(dec.a.coefficients().begin(), dec.a.coefficients().end(),
                  [](const Integer& c) { return c >= 0; });
  o.payload["b_nonnegative"] =
      std::all_of(dec.b.coefficients().begin(), dec.b.coefficients().end(),
                  [](const Integer& c) { return c >= 0; });
  return o;
}

Outcome cmd_gamma(const std::string& poly, int n) {
  const IntPoly p = parse_poly(poly);
  const auto g = gamma_expansion(p, reference_degree(p, n));
  Outcome o;
  o.payload["command"] = "gamma";
  o.payload["polynomial"] = json::to_json(p);
  o.payload["gamma"] = json::to_json(g);
  return o;
}

Outcome cmd_certify(const std::string& check, const std::string& poly, const std::string& m,
                    const std::string& r, const std::string& q, bool strict, bool weak, int d) {
  if (poly.empty() == m.empty())
    throw std::invalid_argument("certify needs exactly one of --poly or --m");
  const IntPoly p = poly.empty() ? eulerian_by_transform(make_spec(m, r, 1)).poly : parse_poly(poly);
  Outcome o;
  o.payload["command"] = "certify";
  o.payload["check"] = check;
  o.payload["polynomial"] = json::to_json(p);
  if (check == "roots") {
    const auto cert = real_root_certificate(p);
    o.payload["certificate"] = json::to_json(cert);
    if (!cert.real_rooted) o.exit_code = kMismatch;
  } else if (check == "interlace") {
    if (q.empty()) throw std::invalid_argument("--check interlace needs --q");
    const IntPoly qp = parse_poly(q);
    const auto res = interlaces(qp, p, strict);
    o.payload["q"] = json::to_json(qp);
    o.payload["strict"] = strict;
    o.payload["interlacing"] = json::to_json(res);
    if (!res.holds) o.exit_code = kMismatch;
  } else if (check == "suite") {
    const int deg = reference_degree(p, d);
    const auto rep = self_interlacing_suite(p, deg);
    o.payload["suite"] = json::to_json(rep);
    bool ok = rep.hypothesis_met;
    for (const auto& c : rep.conditions) ok = ok && (weak ? c.weak : c.strict);
    o.payload["judged_on"] = weak ? "weak" : "strict";
    o.payload["all_conditions_hold"] = ok;
    if (!ok) o.exit_code = kMismatch;
  } else {
    o.payload["shape"] = json::to_json(shape_checks(p, reference_degree(p, d)));
  }
  return o;
}

Outcome cmd_seulerian(const std::string& s, const std::string& hat, const std::string& eq,
                      const std::string& target, int remark, std::uint64_t cap) {
  const int chosen = !s.empty() + !hat.empty() + !eq.empty() + !target.empty() + (remark > 0);
  if (chosen != 1)
    throw std::invalid_argument(
        "seulerian needs exactly one of --s, --hat, --equalities, --search-target, --remark");
  Outcome o;
  o.payload["command"] = "seulerian";
  if (!s.empty()) {
    const auto seq = parse_ints(s);
    o.payload["s"] = json::numbers(seq);
    o.payload["polynomial"] = json::to_json(s_eulerian_poly(seq, cap));
  } else if (!hat.empty()) {
    const auto [n, r] = parse_pair(hat, "--hat");
    const auto seq = hat_sequence(n, r);
    o.payload["n"] = json::number(static_cast<long>(n));
    o.payload["r"] = json::number(static_cast<long>(r));
    o.payload["s"] = json::numbers(seq);
    o.payload["polynomial"] = json::to_json(s_eulerian_poly(seq, cap));
  } else if (!eq.empty()) {
    const auto [n, r] = parse_pair(eq, "--equalities");
    Json checks = Json::array();
    for (const auto& c : verify_s_equalities(n, r, cap)) {
      if (!c.equal) o.exit_code = kMismatch;
      checks.push_back(json::to_json(c));
    }
    o.payload["checks"] = std::move(checks);
  } else if (!target.empty()) {
    o.payload["search"] = json::to_json(not_s_eulerian_search(parse_poly(target), cap));
  } else {
    const auto rep = verify_decomposition_remark(remark, cap);
    o.payload["remark"] = json::to_json(rep);
    if (!rep.a_matches || !rep.b_matches) o.exit_code = kMismatch;
  }
  return o;
}

Outcome cmd_trees(const std::string& multiset, const std::string& mode_text, bool stats,
                  bool narayana, bool gamma, const std::string& partition, const std::string& perm,
                  bool list, std::uint64_t cap) {
  const int chosen = stats + narayana + gamma + !partition.empty() + !perm.empty();
  if (chosen != 1)
    throw std::invalid_argument(
        "trees needs exactly one of --stats, --narayana, --gamma, --partition, --perm");
  const bool needs_multiset = stats || narayana || gamma;
  if (needs_multiset && multiset.empty()) throw std::invalid_argument("this action needs --multiset");
  const TreeMode mode = parse_tree_mode(mode_text);
  Outcome o;
  o.payload["command"] = "trees";
  if (!perm.empty()) {
    const auto word = parse_ints(perm);
    const auto tree = perm_to_tree(word);
    o.payload["word"] = json::numbers(word);
    o.payload["tree"] = json::to_json(tree);
    o.payload["stats"] = json::to_json(tree_statistics(tree));
    o.payload["round_trip"] = tree_to_perm(tree) == word;
    return o;
  }
  if (!partition.empty()) {
    const auto [n, k] = parse_pair(partition, "--partition");
    const auto gh = partition_GH(n, k, cap);
    o.payload["partition"] = json::to_json(gh, list);
    if (!gh.g_matches || !gh.h_matches || !gh.cardinalities_match) o.exit_code = kMismatch;
    return o;
  }
  const auto labels = parse_multiset(multiset);
  o.payload["multiset"] = json::numbers(labels);
  o.payload["mode"] = to_string(mode);
  if (gamma) {
    if (mode != TreeMode::weakly_increasing)
      throw std::invalid_argument("--gamma counts weakly increasing trees only");
    o.payload["gamma"] = json::to_json(tree_gamma(labels, cap));
    return o;
  }
  std::vector<Integer> coeffs;
  Json trees = Json::array();
  long count = 0;
  TreeStats total;
  for_each_tree(
      labels, mode,
      [&](const PlaneTree& t) {
        const auto st = tree_statistics(t);
        ++count;
        total.internal += st.internal;
        total.leaves += st.leaves;
        total.young_leaves += st.young_leaves;
        const auto i = static_cast<std::size_t>(st.internal);
        if (coeffs.size() <= i) coeffs.resize(i + 1, Integer(0));
        coeffs[i] += 1;
        if (stats && list) {
          Json e;
          e["tree"] = json::to_json(t);
          e["stats"] = json::to_json(st);
          trees.push_back(std::move(e));
        }
      },
      cap);
  o.payload["count"] = json::number(count);
  o.payload["narayana"] = json::to_json(IntPoly(std::move(coeffs)));
  if (stats) {
    o.payload["totals"] = json::to_json(total);
    if (list) o.payload["trees"] = std::move(trees);
  }
  return o;
}

Outcome cmd_lattice(const std::string& m, const std::string& r, int t, bool interior,
                    std::uint64_t cap) {
  if (t < 0) throw std::invalid_argument("--t must be nonnegative");
  const MultisetSpec spec = make_spec(m, r, 1);
  const auto count = brute_lattice_count(spec, t, interior, cap);
  const RatPoly L = ehrhart_product(spec);
  Rational value = L.evaluate(Rational(interior ? -t : t));
  if (interior && spec.total() % 2 == 1) value = -value;
  Outcome o;
  o.payload["command"] = "lattice";
  o.payload["spec"] = json::to_json(spec);
  o.payload["t"] = json::number(static_cast<long>(t));
  o.payload["interior"] = interior;
  o.payload["lattice_count"] = json::number(count);
  o.payload["ehrhart_value"] = json::number(value);
  o.payload["agree"] = Rational(count) == value;
  if (Rational(count) != value) o.exit_code = kMismatch;
  return o;
}

}  // namespace

std::string render_pretty(const Json& payload) {
  std::string out;
  if (payload.is_object()) render_object(payload, 0, out);
  else render_value("", payload, 0, out);
  return out;
}

CommandResult run(const std::vector<std::string>& args) {
  CLI::App app{"Colored multiset Eulerian polynomials: construction, identities, certificates",
               "cmep"};
  app.require_subcommand(1);
  const std::uint64_t cap = enumeration_cap_from_env();
  bool as_json = false;

  std::string m, r, method = "transform", kind, caps, poly, q, check = "roots";
  std::string s, hat, equalities, target, multiset, mode = "weakly_increasing", partition, perm;
  int n = -1, d = -1, remark = 0, t = 1;
  bool strict = false, weak = false, stats = false, narayana = false, gamma = false, list = false;
  bool interior = false;

  auto* eul = app.add_subcommand("eulerian", "Construct A(m, r) with degree, codegree and symmetry");
  eul->add_option("--m", m, "multiplicities, comma separated")->required();
  eul->add_option("--r", r, "colors per value (one value broadcasts; default 1)");
  eul->add_option("--method", method, "transform | enumeration | both")
      ->check(CLI::IsMember({"transform", "enumeration", "both"}));

  auto* ver = app.add_subcommand("verify", "Check a generating-function identity to finite order");
  ver->add_option("--kind", kind, "identity kind or 'all'")->required();
  ver->add_option("--m", m, "multiplicities")->required();
  ver->add_option("--r", r, "colors (default depends on the kind)");
  ver->add_option("--caps", caps, "T,D truncation caps (default 4,24)");

  auto* dec = app.add_subcommand("decompose", "Symmetric decomposition p = a + x b");
  dec->add_option("--poly", poly, "coefficients, constant term first")->required();
  dec->add_option("--n", n, "reference degree (default deg p)");

  auto* gam = app.add_subcommand("gamma", "Gamma vector of a palindromic polynomial");
  gam->add_option("--poly", poly, "coefficients, constant term first")->required();
  gam->add_option("--n", n, "reference degree (default deg p)");

  auto* cer = app.add_subcommand("certify", "Real roots, interlacing, self-interlacing suite, shape");
  cer->add_option("--check", check, "roots | interlace | suite | shape")
      ->check(CLI::IsMember({"roots", "interlace", "suite", "shape"}));
  cer->add_option("--poly", poly, "coefficients of p");
  cer->add_option("--m", m, "use A(m, r) as p");
  cer->add_option("--r", r, "colors for --m");
  cer->add_option("--q", q, "coefficients of q for q <= p");
  cer->add_flag("--strict", strict, "strict interlacing");
  cer->add_flag("--weak", weak, "judge the suite on weak conditions");
  cer->add_option("--d", d, "reference degree for suite and shape (default deg p)");

  auto* seu = app.add_subcommand("seulerian", "s-Eulerian polynomials and related checks");
  seu->add_option("--s", s, "an s-sequence");
  seu->add_option("--hat", hat, "n,r for the scaled hat sequence");
  seu->add_option("--equalities", equalities, "n,r for the three equalities");
  seu->add_option("--search-target", target, "coefficients of the target polynomial");
  seu->add_option("--remark", remark, "n for the decomposition identification");

  auto* tre = app.add_subcommand("trees", "Weakly increasing and multiset trees");
  tre->add_option("--multiset", multiset, "labels, e.g. 1^2,2,3");
  tre->add_option("--mode", mode, "weakly_increasing | multiset");
  tre->add_flag("--stats", stats, "count trees and sum statistics");
  tre->add_flag("--narayana", narayana, "sum of x^internal");
  tre->add_flag("--gamma", gamma, "leaf histogram of trees without young leaves");
  tre->add_option("--partition", partition, "n,k for the G/H split");
  tre->add_option("--perm", perm, "word to send through the tree bijection");
  tre->add_flag("--list", list, "include every tree in the output");

  auto* lat = app.add_subcommand("lattice", "Lattice points against the Ehrhart product");
  lat->add_option("--m", m, "multiplicities")->required();
  lat->add_option("--r", r, "colors (default 1)");
  lat->add_option("--t", t, "dilation factor (default 1)");
  lat->add_flag("--interior", interior, "count relative interior points");

  for (auto* sub : {eul, ver, dec, gam, cer, seu, tre, lat})
    sub->add_flag("--json", as_json, "emit JSON instead of the pretty listing");

  CommandResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream out, err;
    const int code = app.exit(e, out, err);
    result.rendered = out.str();
    result.error = err.str();
    result.exit_code = code == 0 ? kOk : kUsage;
    return result;
  }

  Outcome o;
  try {
    if (*eul) o = cmd_eulerian(m, r, method, cap);
    else if (*ver) o = cmd_verify(kind, m, r, caps, cap);
    else if (*dec) o = cmd_decompose(poly, n);
    else if (*gam) o = cmd_gamma(poly, n);
    else if (*cer) o = cmd_certify(check, poly, m, r, q, strict, weak, d);
    else if (*seu) o = cmd_seulerian(s, hat, equalities, target, remark, cap);
    else if (*tre) o = cmd_trees(multiset, mode, stats, narayana, gamma, partition, perm, list, cap);
    else o = cmd_lattice(m, r, t, interior, cap);
  } catch (const CapacityError& e) {
    result.exit_code = kCapacity;
    result.error = std::string("capacity exceeded: ") + e.what() + " (cap " +
                   std::to_string(e.cap()) + "; set EULERIAN_CAP to raise it)\n";
    return result;
  } catch (const std::exception& e) {
    result.exit_code = kUsage;
    result.error = std::string("error: ") + e.what() + "\n";
    return result;
  }

  result.exit_code = o.exit_code;
  result.payload = std::move(o.payload);
  result.rendered = as_json ? result.payload.dump(2) + "\n" : render_pretty(result.payload);
  return result;
}

}  // namespace cmep::cli
