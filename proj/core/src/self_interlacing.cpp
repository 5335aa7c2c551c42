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

#include "cmep/self_interlacing.hpp"

#include "cmep/ehrhart.hpp"
#include "cmep/poly_ops.hpp"
#include "cmep/real_roots.hpp"

namespace cmep {

namespace {

ConditionResult condition(std::string name, const IntPoly& q, const IntPoly& p) {
  return {std::move(name), interlaces(q, p, false).holds, interlaces(q, p, true).holds};
}

bool nonnegative(const IntPoly& p) {
  for (const auto& c : p.coefficients())
    if (c < 0) return false;
  return true;
}

}  // namespace

SelfInterlacingReport self_interlacing_suite(const IntPoly& p, int d) {
  SelfInterlacingReport r;
  r.d = d;
  r.decomposition = symmetric_decomposition(p, d);
  const IntPoly& a = r.decomposition.a;
  const IntPoly& b = r.decomposition.b;
  r.hypothesis_met = nonnegative(a) && nonnegative(b);
  const IntPoly e = subdivision_image_of_hstar(p, d);
  r.conditions = {
      condition("b interlaces a", b, a),
      condition("b interlaces p", b, p),
      condition("a interlaces p", a, p),
      condition("I_d(p) interlaces p", reciprocal(p, d), p),
      condition("R_d(E) interlaces E", reflect(e, d), e),
  };
  r.reflection_on_p = condition("R_d(p) interlaces p", reflect(p, d), p);
  r.weak_agree = true;
  r.strict_agree = true;
  for (const auto& c : r.conditions) {
    if (c.weak != r.conditions[0].weak) r.weak_agree = false;
    if (c.strict != r.conditions[0].strict) r.strict_agree = false;
  }
  return r;
}

}  // namespace cmep
