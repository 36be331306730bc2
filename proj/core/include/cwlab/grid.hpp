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

#ifndef CWLAB_GRID_HPP
#define CWLAB_GRID_HPP

#include <vector>

#include "cwlab/affine.hpp"
#include "cwlab/field.hpp"
#include "cwlab/mpoly.hpp"

namespace cwlab {

/// A point in F_q^n as a vector of element indices.
using Point = std::vector<FieldElement>;

/// A finite subset of F_q^n: sorted, deduplicated, every coordinate a valid
/// element.  Immutable after construction.
class PointSet {
public:
    PointSet(FieldPtr field, unsigned arity, std::vector<Point> points);

    const FieldPtr& field() const { return field_; }
    unsigned arity() const { return arity_; }
    const std::vector<Point>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    bool contains(const Point& point) const;

private:
    FieldPtr field_;
    unsigned arity_;
    std::vector<Point> points_;
};

/// A product grid, stored by its axes (each a nonempty subset of F_q).
class GridSet {
public:
    GridSet(FieldPtr field, std::vector<std::vector<FieldElement>> axes);

    const FieldPtr& field() const { return field_; }
    unsigned arity() const { return static_cast<unsigned>(axes_.size()); }
    const std::vector<std::vector<FieldElement>>& axes() const { return axes_; }

    /// Cartesian product; has prod #X_i points.
    PointSet to_point_set() const;

private:
    FieldPtr field_;
    std::vector<std::vector<FieldElement>> axes_;
};

/// The multivariate power-sum invariant of a point set, with the witness
/// multi-index found by the canonical scan (|k| ascending, lexicographic
/// within a level).
struct OmegaBarReport {
    int omega_bar = 0;
    std::vector<int> witness;
    /// sum over coordinates of (#projection - 1); always >= omega_bar.
    int upper_bound = 0;
    bool optimal = false;
    bool p_divides_size = false;
};

/// Sum of the monomial t^k over the set; the all-zero multi-index gives #X
/// as a field element.
FieldElement multi_power_sum(const PointSet& set, const std::vector<int>& k);

/// Least |k| with nonzero multi power sum.  The scan is bounded by the
/// projection bound, which always contains a witness.  In reduced mode
/// per-axis exponents are capped at q-1 (sound: any level-minimal witness
/// already satisfies the cap); default mode scans formal exponents.
OmegaBarReport omega_bar(const PointSet& set, bool reduced_exponents = false);

/// Coordinate-wise images, each sorted.
std::vector<std::vector<FieldElement>> projections(const PointSet& set);

/// Image of the set under an invertible affine map; the cardinality is
/// preserved and checked.
PointSet affine_apply(const PointSet& set, const AffineMap& map);

struct SpanCoset {
    PointSet points;
    /// e with #span = p^e.
    int log_p_size = 0;
};

/// base + the additive closure of the generators (their F_p-span).
SpanCoset span_coset(const FieldPtr& field, unsigned arity,
                     const std::vector<Point>& generators, const Point& base);

/// The graph {(x, f(x))} of a nonconstant polynomial in n-1 variables, as a
/// subset of F_q^n with q^(n-1) points.
PointSet graph_set(const MultiPoly& f);

}  // namespace cwlab

#endif  // CWLAB_GRID_HPP
