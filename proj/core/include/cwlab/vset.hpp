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

#ifndef CWLAB_VSET_HPP
#define CWLAB_VSET_HPP

#include <map>
#include <optional>
#include <vector>

#include "cwlab/field.hpp"

namespace cwlab {

/// A subset of F_q of size r >= 2 is Vandermonde when its least nonvanishing
/// power sum has index r-1, and super-Vandermonde when that index is r.
enum class VsetClass { NotVandermonde, Vandermonde, SuperVandermonde };

/// Functional behaviour of the vanishing polynomial of a set, over a chosen
/// subfield: linear (an F_{p^b}-endomorphism of the field), affine, or
/// neither.
enum class Linearity { Linear, Affine, Neither };

struct CosetTest {
    bool is_coset = false;
    /// Present iff is_coset: the additive subgroup G with Y = y0 + G, sorted.
    std::vector<FieldElement> subgroup;
};

/// Full classification of a univariate subset of size >= 2.
struct VsetReport {
    int size = 0;
    /// Least k >= 1 with a nonzero k-th power sum.
    int omega = 0;
    VsetClass classification = VsetClass::NotVandermonde;
    bool p_divides_size = false;
    /// Present iff the derivative of the vanishing polynomial is constant on
    /// the set; then the constant is nonzero.
    std::optional<FieldElement> derivative_constant;
    bool coset_flag = false;
    std::optional<std::vector<FieldElement>> subgroup;
    /// For each divisor b of the extension degree: is the set an
    /// F_{p^b}-subspace of the field?
    std::map<unsigned, bool> subspace_flags;
    /// Functional behaviour of the vanishing polynomial per subfield degree.
    std::map<unsigned, Linearity> functional;
};

/// Sum of k-th powers over the subset; requires k >= 1 and Y nonempty.
FieldElement power_sum(const FieldPtr& field, const std::vector<FieldElement>& set,
                       unsigned k);

/// Least k >= 1 with nonzero power sum.  Defined for every nonempty subset
/// except {0} (where every power sum vanishes).
int omega(const FieldPtr& field, const std::vector<FieldElement>& set);

/// Classification by scanning power sums; requires size >= 2.
VsetClass classify_by_power_sums(const FieldPtr& field,
                                 const std::vector<FieldElement>& set);

/// Independent classification route: expands the vanishing polynomial and
/// inspects which elementary symmetric functions of the set vanish
/// (via Newton's identities these determine the vanishing power sums).
/// Requires size >= 2 and always agrees with classify_by_power_sums.
VsetClass classify_by_coefficients(const FieldPtr& field,
                                   const std::vector<FieldElement>& set);

/// Power sums pi_1..pi_r of the root multiset of a monic univariate
/// polynomial, recovered from its coefficients by the Newton recurrence.
/// `coeffs` has length r+1, low degree first, last entry 1.
std::vector<FieldElement> newton_power_sums_from_coeffs(
    const FieldPtr& field, const std::vector<FieldElement>& coeffs);

/// The constant value of phi_Y' on Y when it exists (then nonzero, and
/// phi_Y - c*t has only exponents divisible by p); nullopt otherwise.
/// Requires size >= 2.
std::optional<FieldElement> derivative_constancy(const FieldPtr& field,
                                                 const std::vector<FieldElement>& set);

/// Is Y a coset of an additive subgroup?  Checks closure of Y - y0 under
/// addition (sufficient in a finite group of prime exponent).
CosetTest coset_test(const FieldPtr& field, const std::vector<FieldElement>& set);

/// Evaluates the vanishing polynomial on the whole field and tests exact
/// additivity plus F_{p^b}-homogeneity, or the same after subtracting the
/// value at 0.  Requires b | a.
Linearity functional_linearity_test(const FieldPtr& field,
                                    const std::vector<FieldElement>& set, unsigned b);

/// Structural counterpart: 0 in Y, closed under + and under scaling by the
/// subfield of degree b.
bool is_subspace(const FieldPtr& field, const std::vector<FieldElement>& set, unsigned b);

/// Y - y0 is an F_{p^b}-subspace for some (equivalently any) y0 in Y.
bool is_subspace_coset(const FieldPtr& field, const std::vector<FieldElement>& set,
                       unsigned b);

/// alpha*Y + beta with alpha != 0; sorted and deduplicated (scaling and
/// translation are injective, so the size is preserved).
std::vector<FieldElement> scale_translate(const FieldPtr& field,
                                          const std::vector<FieldElement>& set,
                                          FieldElement alpha, FieldElement beta);

/// Runs every classifier and structure test, asserting that the power-sum
/// and coefficient routes agree.  Requires size >= 2.
VsetReport classify(const FieldPtr& field, const std::vector<FieldElement>& set);

}  // namespace cwlab

#endif  // CWLAB_VSET_HPP
