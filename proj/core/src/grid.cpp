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

#include "cwlab/grid.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace cwlab {

PointSet::PointSet(FieldPtr field, unsigned arity, std::vector<Point> points)
    : field_(std::move(field)), arity_(arity), points_(std::move(points)) {
    if (!field_) throw std::invalid_argument("point set requires a field");
    if (arity_ < 1) throw std::invalid_argument("point set arity must be >= 1");
    for (const Point& point : points_) {
        if (point.size() != arity_) throw std::invalid_argument("point length mismatch");
        for (FieldElement x : point) {
            if (x.index >= field_->order()) {
                throw std::invalid_argument("point coordinate out of range");
            }
        }
    }
    std::sort(points_.begin(), points_.end());
    points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool PointSet::contains(const Point& point) const {
    return std::binary_search(points_.begin(), points_.end(), point);
}

GridSet::GridSet(FieldPtr field, std::vector<std::vector<FieldElement>> axes)
    : field_(std::move(field)), axes_(std::move(axes)) {
    if (!field_) throw std::invalid_argument("grid requires a field");
    if (axes_.empty()) throw std::invalid_argument("grid needs at least one axis");
    for (auto& axis : axes_) {
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
        if (axis.empty()) throw std::invalid_argument("grid axis is empty");
        for (FieldElement x : axis) {
            if (x.index >= field_->order()) {
                throw std::invalid_argument("grid axis element out of range");
            }
        }
    }
}

PointSet GridSet::to_point_set() const {
    std::vector<Point> points;
    Point current(axes_.size());
    std::size_t total = 1;
    for (const auto& axis : axes_) total *= axis.size();
    points.reserve(total);

    std::vector<std::size_t> cursor(axes_.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < axes_.size(); ++i) current[i] = axes_[i][cursor[i]];
        points.push_back(current);
        std::size_t i = axes_.size();
        while (i > 0) {
            --i;
            if (++cursor[i] < axes_[i].size()) break;
            cursor[i] = 0;
            if (i == 0) return PointSet(field_, static_cast<unsigned>(axes_.size()), std::move(points));
        }
    }
}

FieldElement multi_power_sum(const PointSet& set, const std::vector<int>& k) {
    if (set.empty()) throw std::invalid_argument("multi power sum of the empty set");
    if (k.size() != set.arity()) throw std::invalid_argument("multi-index length mismatch");
    for (int e : k) {
        if (e < 0) throw std::invalid_argument("negative exponent in multi-index");
    }
    const auto& field = set.field();
    FieldElement acc = field->zero();
    for (const Point& point : set.points()) {
        FieldElement term = field->one();
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] != 0) term = field->mul(term, field->pow(point[i], static_cast<std::uint64_t>(k[i])));
        }
        acc = field->add(acc, term);
    }
    return acc;
}

namespace {

// Visits the compositions of `level` into n parts in lexicographic order,
// subject to a per-coordinate cap; returns true when the visitor accepts.
bool scan_level(std::vector<int>& k, std::size_t position, int remaining, int cap,
                const std::function<bool(const std::vector<int>&)>& visit) {
    if (position + 1 == k.size()) {
        if (remaining > cap) return false;
        k[position] = remaining;
        const bool hit = visit(k);
        k[position] = 0;
        return hit;
    }
    for (int e = 0; e <= std::min(remaining, cap); ++e) {
        k[position] = e;
        if (scan_level(k, position + 1, remaining - e, cap, visit)) {
            k[position] = 0;
            return true;
        }
    }
    k[position] = 0;
    return false;
}

}  // namespace

OmegaBarReport omega_bar(const PointSet& set, bool reduced_exponents) {
    if (set.empty()) throw std::invalid_argument("omega-bar of the empty set");
    const auto& field = set.field();
    const unsigned n = set.arity();

    int upper_bound = 0;
    for (const auto& image : projections(set)) {
        upper_bound += static_cast<int>(image.size()) - 1;
    }

    // Per-point coordinate power tables, exponents 0..upper_bound.
    const int max_exp = reduced_exponents
                            ? std::min<int>(upper_bound, static_cast<int>(field->order()) - 1)
                            : upper_bound;
    std::vector<std::vector<FieldElement>> powers(set.size());
    for (std::size_t idx = 0; idx < set.size(); ++idx) {
        auto& row = powers[idx];
        row.resize(std::size_t{n} * (max_exp + 1));
        for (unsigned i = 0; i < n; ++i) {
            row[std::size_t{i} * (max_exp + 1)] = field->one();
            for (int e = 1; e <= max_exp; ++e) {
                row[std::size_t{i} * (max_exp + 1) + e] =
                    field->mul(row[std::size_t{i} * (max_exp + 1) + e - 1], set.points()[idx][i]);
            }
        }
    }
    auto power_sum_at = [&](const std::vector<int>& k) {
        FieldElement acc = field->zero();
        for (std::size_t idx = 0; idx < set.size(); ++idx) {
            FieldElement term = field->one();
            for (unsigned i = 0; i < n; ++i) {
                term = field->mul(term, powers[idx][std::size_t{i} * (max_exp + 1) + k[i]]);
            }
            acc = field->add(acc, term);
        }
        return acc;
    };

    OmegaBarReport report;
    report.upper_bound = upper_bound;
    report.p_divides_size = set.size() % field->characteristic() == 0;

    std::vector<int> k(n, 0);
    for (int level = 0; level <= upper_bound; ++level) {
        std::vector<int> witness;
        const bool found = scan_level(
            k, 0, level, max_exp, [&](const std::vector<int>& candidate) {
                if (field->is_zero(power_sum_at(candidate))) return false;
                witness = candidate;
                return true;
            });
        if (found) {
            report.omega_bar = level;
            report.witness = std::move(witness);
            report.optimal = level == upper_bound;
            if ((report.omega_bar >= 1) != report.p_divides_size) {
                throw std::logic_error("omega-bar positivity disagrees with p | #X");
            }
            return report;
        }
    }
    throw std::logic_error("no witness within the projection bound (unreachable)");
}

std::vector<std::vector<FieldElement>> projections(const PointSet& set) {
    if (set.empty()) throw std::invalid_argument("projections of the empty set");
    std::vector<std::set<FieldElement>> images(set.arity());
    for (const Point& point : set.points()) {
        for (std::size_t i = 0; i < point.size(); ++i) images[i].insert(point[i]);
    }
    std::vector<std::vector<FieldElement>> out(set.arity());
    for (std::size_t i = 0; i < images.size(); ++i) {
        out[i].assign(images[i].begin(), images[i].end());
    }
    return out;
}

PointSet affine_apply(const PointSet& set, const AffineMap& map) {
    if (map.dim() != set.arity()) throw std::invalid_argument("affine map dimension mismatch");
    if (!map.field()->same_field(*set.field())) {
        throw std::invalid_argument("affine map field mismatch");
    }
    std::vector<Point> images;
    images.reserve(set.size());
    for (const Point& point : set.points()) images.push_back(map.apply(point));
    PointSet out(set.field(), set.arity(), std::move(images));
    if (out.size() != set.size()) {
        throw std::logic_error("invertible affine image changed the cardinality");
    }
    return out;
}

SpanCoset span_coset(const FieldPtr& field, unsigned arity,
                     const std::vector<Point>& generators, const Point& base) {
    if (base.size() != arity) throw std::invalid_argument("base point length mismatch");
    std::set<Point> span;
    span.insert(Point(arity, field->zero()));
    for (const Point& g : generators) {
        if (g.size() != arity) throw std::invalid_argument("generator length mismatch");
        // extend the span by all multiples of g
        std::set<Point> extended;
        for (const Point& s : span) {
            Point shifted = s;
            for (unsigned c = 0; c < field->characteristic(); ++c) {
                extended.insert(shifted);
                for (unsigned i = 0; i < arity; ++i) {
                    shifted[i] = field->add(shifted[i], g[i]);
                }
            }
        }
        span = std::move(extended);
    }

    int e = 0;
    std::size_t size = span.size();
    while (size > 1) {
        if (size % field->characteristic() != 0) {
            throw std::logic_error("additive span size is not a power of p");
        }
        size /= field->characteristic();
        ++e;
    }

    std::vector<Point> points;
    points.reserve(span.size());
    for (const Point& s : span) {
        Point shifted(arity);
        for (unsigned i = 0; i < arity; ++i) shifted[i] = field->add(s[i], base[i]);
        points.push_back(std::move(shifted));
    }
    return SpanCoset{PointSet(field, arity, std::move(points)), e};
}

PointSet graph_set(const MultiPoly& f) {
    const auto degree = f.total_degree();
    if (!degree || *degree < 1) {
        throw std::invalid_argument("graph of a constant polynomial is excluded");
    }
    const auto& field = f.field();
    const unsigned m = f.arity();

    std::vector<Point> points;
    Point argument(m, field->zero());
    while (true) {
        Point point = argument;
        point.push_back(f.evaluate(argument));
        points.push_back(std::move(point));
        unsigned i = 0;
        for (; i < m; ++i) {
            if (argument[i].index + 1u < field->order()) {
                argument[i] = field->element(argument[i].index + 1u);
                break;
            }
            argument[i] = field->zero();
        }
        if (i == m) break;
    }
    return PointSet(field, m + 1, std::move(points));
}

}  // namespace cwlab
