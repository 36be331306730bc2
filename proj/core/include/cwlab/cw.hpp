/*
   Copyright 2026 The cwlab authors

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

#ifndef CWLAB_CW_HPP
#define CWLAB_CW_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cwlab/field.hpp"
#include "cwlab/grid.hpp"
#include "cwlab/mpoly.hpp"

namespace cwlab {

/// One checkable statement instance: a polynomial system together with the
/// variable restriction its theorem expects.  Full-space statements carry
/// neither grid nor points; grid statements carry axes; point statements
/// carry an arbitrary point set.
struct Instance {
    std::string theorem;
    FieldPtr field;
    std::vector<MultiPoly> system;
    std::optional<std::vector<std::vector<FieldElement>>> grid;
    std::optional<PointSet> points;
};

/// Outcome of checking one instance.  The conclusion is only evaluated when
/// the hypothesis holds; a failed conclusion carries the full instance back
/// for replay.
struct VerificationRecord {
    std::string theorem_id;
    bool hypothesis_holds = false;
    std::map<std::string, std::int64_t> quantities;
    std::optional<bool> conclusion_holds;
    std::optional<Instance> counterexample;
};

struct CountResult {
    std::int64_t count = 0;
    PointSet zeros;
};

/// Exact enumeration of the domain, evaluating every system member.
CountResult count_solutions(const PolySystem& system, const PointSet& domain);

/// The same count through the indicator route: sums, as 0/1 integers, the
/// pointwise values prod_j (1 - f_j(x)^(q-1)).  Independent of the
/// zero-testing route in count_solutions; the two must always agree.
std::int64_t indicator_count(const PolySystem& system, const PointSet& domain);

/// sum over the zeros in the grid of prod_i 1/phi_i'(x_i), where phi_i is
/// the vanishing polynomial of axis i (separable, so the derivative values
/// are nonzero; violations signal an arithmetic bug).
FieldElement weighted_residue(const PolySystem& system, const GridSet& grid);

/// All F_q^n as a point set; refuses q^n above 2^20.
PointSet full_space(const FieldPtr& field, unsigned arity);

const std::vector<std::string>& theorem_ids();

/// Checks the instance against its named statement.  Every run recomputes
/// the hypothesis from scratch (axis classifications, coset structure,
/// omega-bar) and cross-checks the zero count against the indicator route.
/// Throws std::invalid_argument for an unknown theorem or malformed shape.
VerificationRecord verify(const Instance& instance);

}  // namespace cwlab

#endif  // CWLAB_CW_HPP
