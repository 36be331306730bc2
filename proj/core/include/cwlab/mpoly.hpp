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

#ifndef CWLAB_MPOLY_HPP
#define CWLAB_MPOLY_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cwlab/affine.hpp"
#include "cwlab/field.hpp"

namespace cwlab {

/// Exponent vector of a monomial; length equals the polynomial arity.
using Exponents = std::vector<int>;

/// A sparse multivariate polynomial over a FiniteField.  Exponents are
/// formal: t^q and t are distinct polynomials even though they induce the
/// same function.  Stored terms never have a zero coefficient, and the term
/// map iterates in lexicographic exponent order, so every traversal and
/// serialization is deterministic.  The zero polynomial has no terms and no
/// degree.  Immutable in practice: all operations return new values.
class MultiPoly {
public:
    using Term = std::pair<FieldElement, Exponents>;

    static MultiPoly zero(FieldPtr field, unsigned arity);
    static MultiPoly constant(FieldPtr field, unsigned arity, FieldElement c);
    static MultiPoly variable(FieldPtr field, unsigned arity, unsigned index);

    /// Sums duplicate exponent vectors and drops zero results.  Throws on an
    /// exponent vector of the wrong length or a negative exponent.
    static MultiPoly build(FieldPtr field, unsigned arity, const std::vector<Term>& terms);

    const FieldPtr& field() const { return field_; }
    unsigned arity() const { return arity_; }
    const std::map<Exponents, FieldElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }

    /// Max exponent sum over the stored terms; nullopt for the zero
    /// polynomial (the "no degree" marker).
    std::optional<int> total_degree() const;

    MultiPoly operator+(const MultiPoly& other) const;
    MultiPoly operator-(const MultiPoly& other) const;
    MultiPoly operator*(const MultiPoly& other) const;
    bool operator==(const MultiPoly& other) const;

    /// f^e with pow_int(f, 0) = 1; exponents stay formal, never reduced.
    MultiPoly pow_int(unsigned e) const;

    FieldElement evaluate(const std::vector<FieldElement>& point) const;

    /// Coefficient of the given monomial, zero if absent.
    FieldElement coeff_of(const Exponents& exponents) const;

private:
    MultiPoly(FieldPtr field, unsigned arity) : field_(std::move(field)), arity_(arity) {}

    void add_term(const Exponents& exponents, FieldElement coeff);

    FieldPtr field_;
    unsigned arity_ = 0;
    std::map<Exponents, FieldElement> terms_;
};

/// A nonempty system of polynomials sharing field and arity, every member of
/// positive total degree (constants, including zero, are rejected).
class PolySystem {
public:
    explicit PolySystem(std::vector<MultiPoly> polys);

    const std::vector<MultiPoly>& polys() const { return polys_; }
    const FieldPtr& field() const { return polys_.front().field(); }
    unsigned arity() const { return polys_.front().arity(); }

    /// Sum of the formal total degrees.
    int degree_sum() const;

private:
    std::vector<MultiPoly> polys_;
};

/// The monic vanishing polynomial of a set: prod_{y in Y} (t - y).
/// Duplicates in Y are removed; Y must be nonempty.  Univariate (arity 1).
MultiPoly phi_of_set(const FieldPtr& field, const std::vector<FieldElement>& set);

/// Formal derivative of a univariate polynomial.
MultiPoly derivative(const MultiPoly& f);

/// prod_j (1 - f_j^(q-1)): evaluates to 1 exactly on the common zero set
/// and to 0 elsewhere on F_q^n.
MultiPoly chevalley_poly(const PolySystem& system);

/// The interpolation kernel of a grid at an anchor: total degree
/// sum(#X_i - 1), value 1 at the anchor and 0 at every other grid point.
/// The anchor must lie in the grid.
MultiPoly delta_poly(const FieldPtr& field,
                     const std::vector<std::vector<FieldElement>>& axes,
                     const std::vector<FieldElement>& anchor);

/// P composed with the affine map: P(a_1 + sum m_{1j} t_j, ...).  Preserves
/// total degree for invertible maps (which AffineMap guarantees).
MultiPoly affine_substitute(const MultiPoly& f, const AffineMap& map);

/// True iff no monomial in the support other than d itself is divisible by
/// t^d.  Holds in particular whenever deg(f) <= |d|.
bool is_d_topped(const MultiPoly& f, const Exponents& d);

}  // namespace cwlab

#endif  // CWLAB_MPOLY_HPP
