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

#include "cwlab/affine.hpp"

#include <stdexcept>

namespace cwlab {
namespace {

// Gauss-Jordan inversion over the field; returns empty on a singular input.
std::vector<FieldElement> invert_matrix(const FiniteField& field,
                                        std::vector<FieldElement> m, unsigned n) {
    std::vector<FieldElement> inv(std::size_t{n} * n, field.zero());
    for (unsigned i = 0; i < n; ++i) inv[std::size_t{i} * n + i] = field.one();

    for (unsigned col = 0; col < n; ++col) {
        unsigned pivot = col;
        while (pivot < n && field.is_zero(m[std::size_t{pivot} * n + col])) ++pivot;
        if (pivot == n) return {};
        if (pivot != col) {
            for (unsigned j = 0; j < n; ++j) {
                std::swap(m[std::size_t{pivot} * n + j], m[std::size_t{col} * n + j]);
                std::swap(inv[std::size_t{pivot} * n + j], inv[std::size_t{col} * n + j]);
            }
        }
        const FieldElement scale = field.inv(m[std::size_t{col} * n + col]);
        for (unsigned j = 0; j < n; ++j) {
            m[std::size_t{col} * n + j] = field.mul(m[std::size_t{col} * n + j], scale);
            inv[std::size_t{col} * n + j] = field.mul(inv[std::size_t{col} * n + j], scale);
        }
        for (unsigned row = 0; row < n; ++row) {
            if (row == col) continue;
            const FieldElement factor = m[std::size_t{row} * n + col];
            if (field.is_zero(factor)) continue;
            for (unsigned j = 0; j < n; ++j) {
                m[std::size_t{row} * n + j] = field.sub(
                    m[std::size_t{row} * n + j],
                    field.mul(factor, m[std::size_t{col} * n + j]));
                inv[std::size_t{row} * n + j] = field.sub(
                    inv[std::size_t{row} * n + j],
                    field.mul(factor, inv[std::size_t{col} * n + j]));
            }
        }
    }
    return inv;
}

}  // namespace

AffineMap::AffineMap(FieldPtr field, unsigned dim, std::vector<FieldElement> matrix,
                     std::vector<FieldElement> translation)
    : field_(std::move(field)), dim_(dim), matrix_(std::move(matrix)),
      translation_(std::move(translation)) {
    if (!field_) throw std::invalid_argument("affine map requires a field");
    if (dim_ < 1) throw std::invalid_argument("affine map dimension must be >= 1");
    if (matrix_.size() != std::size_t{dim_} * dim_) {
        throw std::invalid_argument("affine map matrix must have dim*dim entries");
    }
    if (translation_.size() != dim_) {
        throw std::invalid_argument("affine map translation must have dim entries");
    }
    if (invert_matrix(*field_, matrix_, dim_).empty()) {
        throw std::invalid_argument("affine map matrix is singular");
    }
}

AffineMap AffineMap::identity(FieldPtr field, unsigned dim) {
    std::vector<FieldElement> m(std::size_t{dim} * dim, field->zero());
    for (unsigned i = 0; i < dim; ++i) m[std::size_t{i} * dim + i] = field->one();
    return AffineMap(field, dim, std::move(m),
                     std::vector<FieldElement>(dim, field->zero()));
}

AffineMap AffineMap::translation(FieldPtr field, std::vector<FieldElement> offset) {
    const unsigned dim = static_cast<unsigned>(offset.size());
    std::vector<FieldElement> m(std::size_t{dim} * dim, field->zero());
    for (unsigned i = 0; i < dim; ++i) m[std::size_t{i} * dim + i] = field->one();
    return AffineMap(field, dim, std::move(m), std::move(offset));
}

std::vector<FieldElement> AffineMap::apply(const std::vector<FieldElement>& point) const {
    if (point.size() != dim_) throw std::invalid_argument("point dimension mismatch");
    std::vector<FieldElement> out(dim_);
    for (unsigned i = 0; i < dim_; ++i) {
        FieldElement acc = translation_[i];
        for (unsigned j = 0; j < dim_; ++j) {
            acc = field_->add(acc, field_->mul(matrix_at(i, j), point[j]));
        }
        out[i] = acc;
    }
    return out;
}

AffineMap AffineMap::inverse() const {
    std::vector<FieldElement> minv = invert_matrix(*field_, matrix_, dim_);
    // x -> Mx + t inverts to x -> M^{-1}x - M^{-1}t.
    std::vector<FieldElement> tinv(dim_);
    for (unsigned i = 0; i < dim_; ++i) {
        FieldElement acc = field_->zero();
        for (unsigned j = 0; j < dim_; ++j) {
            acc = field_->add(acc, field_->mul(minv[std::size_t{i} * dim_ + j], translation_[j]));
        }
        tinv[i] = field_->neg(acc);
    }
    return AffineMap(field_, dim_, std::move(minv), std::move(tinv));
}

}  // namespace cwlab
