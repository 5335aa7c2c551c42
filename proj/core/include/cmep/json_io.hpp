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

#ifndef CMEP_JSON_IO_HPP
#define CMEP_JSON_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cmep/combinatorics.hpp"
#include "cmep/decomposition.hpp"
#include "cmep/eulerian.hpp"
#include "cmep/identities.hpp"
#include "cmep/polynomial.hpp"
#include "cmep/real_roots.hpp"
#include "cmep/s_eulerian.hpp"
#include "cmep/self_interlacing.hpp"
#include "cmep/series.hpp"
#include "cmep/trees.hpp"

// Every number is written as a decimal string; rationals use "p/q".
// Key order is fixed so equal inputs give byte-identical output.
namespace cmep::json {

using Json = nlohmann::ordered_json;

Json number(long v);
Json number(const Integer& v);
Json number(const Rational& v);
Json numbers(const std::vector<int>& v);

Json to_json(const MultisetSpec& spec);
Json to_json(const IntPoly& p);
Json to_json(const RatPoly& p);
Json to_json(const TruncatedSeries& s, const std::vector<std::string>& variables = {});
Json to_json(const EulerianResult& r);
Json to_json(const TruncationCaps& caps);
Json to_json(const IdentityReport& r);
Json to_json(const SymmetricDecomposition& d);
Json to_json(const GammaVector& g);
Json to_json(const ShapeReport& s);
Json to_json(const RootCertificate& c);
Json to_json(const InterlacingResult& r);
Json to_json(const SelfInterlacingReport& r);
Json to_json(const SEqualityCheck& c);
Json to_json(const SearchReport& r);
Json to_json(const DecompositionRemarkReport& r);
// A tree is carried as its nested-list text so that labels stay strings.
Json to_json(const PlaneTree& t);
Json to_json(const TreeStats& s);
Json to_json(const GHPartition& p, bool include_trees = false);

MultisetSpec spec_from_json(const Json& j);
IntPoly int_poly_from_json(const Json& j);
RatPoly rat_poly_from_json(const Json& j);
TruncatedSeries series_from_json(const Json& j);
PlaneTree tree_from_json(const Json& j);

}  // namespace cmep::json

#endif  // CMEP_JSON_IO_HPP
