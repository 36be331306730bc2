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

#include "cwlab/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cwlab {
namespace {

void require_same_ring(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("polynomial arity mismatch");
    if (!a.field()->same_field(*b.field())) {
        throw std::invalid_argument("polynomial field mismatch");
    }
}

void require_exponents(const Exponents& e, unsigned arity) {
    if (e.size() != arity) throw std::invalid_argument("exponent vector length mismatch");
    for (int k : e) {
        if (k < 0) throw std::invalid_argument("negative exponent");
    }
}

}  // namespace

MultiPoly MultiPoly::zero(FieldPtr field, unsigned arity) {
    if (!field) throw std::invalid_argument("polynomial requires a field");
    if (arity < 1) throw std::invalid_argument("polynomial arity must be >= 1");
    return MultiPoly(std::move(field), arity);
}

MultiPoly MultiPoly::constant(FieldPtr field, unsigned arity, FieldElement c) {
    MultiPoly out = zero(std::move(field), arity);
    out.add_term(Exponents(arity, 0), c);
    return out;
}

MultiPoly MultiPoly::variable(FieldPtr field, unsigned arity, unsigned index) {
    if (index >= arity) throw std::invalid_argument("variable index out of range");
    MultiPoly out = zero(std::move(field), arity);
    Exponents e(arity, 0);
    e[index] = 1;
    out.add_term(e, out.field_->one());
    return out;
}

MultiPoly MultiPoly::build(FieldPtr field, unsigned arity, const std::vector<Term>& terms) {
    MultiPoly out = zero(std::move(field), arity);
    for (const auto& [coeff, exponents] : terms) {
        require_exponents(exponents, arity);
        out.add_term(exponents, coeff);
    }
    return out;
}

void MultiPoly::add_term(const Exponents& exponents, FieldElement coeff) {
    if (field_->is_zero(coeff)) return;
    auto it = terms_.find(exponents);
    if (it == terms_.end()) {
        terms_.emplace(exponents, coeff);
        return;
    }
    it->second = field_->add(it->second, coeff);
    if (field_->is_zero(it->second)) terms_.erase(it);
}

std::optional<int> MultiPoly::total_degree() const {
    std::optional<int> degree;
    for (const auto& [exponents, coeff] : terms_) {
        const int sum = std::accumulate(exponents.begin(), exponents.end(), 0);
        if (!degree || sum > *degree) degree = sum;
    }
    return degree;
}

MultiPoly MultiPoly::operator+(const MultiPoly& other) const {
    require_same_ring(*this, other);
    MultiPoly out = *this;
    for (const auto& [exponents, coeff] : other.terms_) out.add_term(exponents, coeff);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& other) const {
    require_same_ring(*this, other);
    MultiPoly out = *this;
    for (const auto& [exponents, coeff] : other.terms_) {
        out.add_term(exponents, field_->neg(coeff));
    }
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& other) const {
    require_same_ring(*this, other);
    MultiPoly out = zero(field_, arity_);
    Exponents sum(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : other.terms_) {
            for (unsigned i = 0; i < arity_; ++i) sum[i] = ea[i] + eb[i];
            out.add_term(sum, field_->mul(ca, cb));
        }
    }
    return out;
}

bool MultiPoly::operator==(const MultiPoly& other) const {
    return arity_ == other.arity_ && field_->same_field(*other.field_) &&
           terms_ == other.terms_;
}

MultiPoly MultiPoly::pow_int(unsigned e) const {
    MultiPoly result = constant(field_, arity_, field_->one());
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

FieldElement MultiPoly::evaluate(const std::vector<FieldElement>& point) const {
    if (point.size() != arity_) throw std::invalid_argument("evaluation point length mismatch");
    FieldElement acc = field_->zero();
    for (const auto& [exponents, coeff] : terms_) {
        FieldElement term = coeff;
        for (unsigned i = 0; i < arity_; ++i) {
            if (exponents[i] != 0) {
                term = field_->mul(term, field_->pow(point[i], static_cast<std::uint64_t>(exponents[i])));
            }
        }
        acc = field_->add(acc, term);
    }
    return acc;
}

FieldElement MultiPoly::coeff_of(const Exponents& exponents) const {
    require_exponents(exponents, arity_);
    auto it = terms_.find(exponents);
    return it == terms_.end() ? field_->zero() : it->second;
}

PolySystem::PolySystem(std::vector<MultiPoly> polys) : polys_(std::move(polys)) {
    if (polys_.empty()) throw std::invalid_argument("polynomial system must be nonempty");
    for (const auto& f : polys_) {
        require_same_ring(polys_.front(), f);
        const auto degree = f.total_degree();
        if (!degree || *degree < 1) {
            throw std::invalid_argument("system members must have positive degree");
        }
    }
}

int PolySystem::degree_sum() const {
    int sum = 0;
    for (const auto& f : polys_) sum += *f.total_degree();
    return sum;
}

MultiPoly phi_of_set(const FieldPtr& field, const std::vector<FieldElement>& set) {
    std::vector<FieldElement> points = set;
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.empty()) throw std::invalid_argument("phi of the empty set is undefined");

    MultiPoly out = MultiPoly::constant(field, 1, field->one());
    for (FieldElement x : points) {
        MultiPoly factor = MultiPoly::build(
            field, 1, {{field->one(), {1}}, {field->neg(x), {0}}});
        out = out * factor;
    }
    return out;
}

MultiPoly derivative(const MultiPoly& f) {
    if (f.arity() != 1) throw std::invalid_argument("derivative requires a univariate polynomial");
    const auto& field = f.field();
    std::vector<MultiPoly::Term> terms;
    for (const auto& [exponents, coeff] : f.terms()) {
        if (exponents[0] == 0) continue;
        const unsigned e_mod_p = static_cast<unsigned>(exponents[0]) % field->characteristic();
        terms.push_back({field->mul(coeff, field->element(e_mod_p)), {exponents[0] - 1}});
    }
    return MultiPoly::build(field, 1, terms);
}

MultiPoly chevalley_poly(const PolySystem& system) {
    const auto& field = system.field();
    const unsigned arity = system.arity();
    MultiPoly out = MultiPoly::constant(field, arity, field->one());
    const MultiPoly unit = MultiPoly::constant(field, arity, field->one());
    for (const auto& f : system.polys()) {
        out = out * (unit - f.pow_int(field->order() - 1));
    }
    const auto degree = out.total_degree();
    const int bound = static_cast<int>(field->order() - 1) * system.degree_sum();
    if (degree && *degree > bound) {
        throw std::logic_error("chevalley polynomial exceeds its degree bound");
    }
    return out;
}

MultiPoly delta_poly(const FieldPtr& field,
                     const std::vector<std::vector<FieldElement>>& axes,
                     const std::vector<FieldElement>& anchor) {
    const unsigned n = static_cast<unsigned>(axes.size());
    if (n < 1) throw std::invalid_argument("delta polynomial needs at least one axis");
    if (anchor.size() != n) throw std::invalid_argument("anchor length mismatch");

    MultiPoly out = MultiPoly::constant(field, n, field->one());
    for (unsigned i = 0; i < n; ++i) {
        std::vector<FieldElement> axis = axes[i];
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
        if (axis.empty()) throw std::invalid_argument("delta polynomial axis is empty");
        if (!std::binary_search(axis.begin(), axis.end(), anchor[i])) {
            throw std::invalid_argument("anchor is not a grid point");
        }
        Exponents e(n, 0);
        e[i] = 1;
        for (FieldElement y : axis) {
            if (y == anchor[i]) continue;
            // (t_i - y) / (x_i - y)
            const FieldElement scale = field->inv(field->sub(anchor[i], y));
            out = out * MultiPoly::build(
                field, n,
                {{scale, e}, {field->neg(field->mul(scale, y)), Exponents(n, 0)}});
        }
    }
    return out;
}

MultiPoly affine_substitute(const MultiPoly& f, const AffineMap& map) {
    if (map.dim() != f.arity()) throw std::invalid_argument("affine map dimension mismatch");
    if (!map.field()->same_field(*f.field())) {
        throw std::invalid_argument("affine map field mismatch");
    }
    const auto& field = f.field();
    const unsigned n = f.arity();

    // Substitution image of each variable: a_i + sum_j m_{ij} t_j.
    std::vector<MultiPoly> images;
    images.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        std::vector<MultiPoly::Term> terms;
        terms.push_back({map.translation_vector()[i], Exponents(n, 0)});
        for (unsigned j = 0; j < n; ++j) {
            Exponents e(n, 0);
            e[j] = 1;
            terms.push_back({map.matrix_at(i, j), e});
        }
        images.push_back(MultiPoly::build(field, n, terms));
    }

    MultiPoly out = MultiPoly::zero(field, n);
    for (const auto& [exponents, coeff] : f.terms()) {
        MultiPoly term = MultiPoly::constant(field, n, coeff);
        for (unsigned i = 0; i < n; ++i) {
            if (exponents[i] != 0) {
                term = term * images[i].pow_int(static_cast<unsigned>(exponents[i]));
            }
        }
        out = out + term;
    }
    return out;
}

bool is_d_topped(const MultiPoly& f, const Exponents& d) {
    if (d.size() != f.arity()) throw std::invalid_argument("exponent vector length mismatch");
    for (const auto& [exponents, coeff] : f.terms()) {
        if (exponents == d) continue;
        bool divisible = true;
        for (std::size_t i = 0; i < d.size(); ++i) {
            if (exponents[i] < d[i]) {
                divisible = false;
                break;
            }
        }
        if (divisible) return false;
    }
    return true;
}

}  // namespace cwlab
