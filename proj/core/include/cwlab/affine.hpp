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

#ifndef CWLAB_AFFINE_HPP
#define CWLAB_AFFINE_HPP

#include <vector>

#include "cwlab/field.hpp"

namespace cwlab {

/// An invertible affine transformation x -> Mx + t of F_q^n.  Singular
/// matrices are rejected at construction.
class AffineMap {
public:
    /// matrix is row-major, n*n entries; translation has length n.
    AffineMap(FieldPtr field, unsigned dim, std::vector<FieldElement> matrix,
              std::vector<FieldElement> translation);

    static AffineMap identity(FieldPtr field, unsigned dim);
    static AffineMap translation(FieldPtr field, std::vector<FieldElement> offset);

    const FieldPtr& field() const { return field_; }
    unsigned dim() const { return dim_; }
    FieldElement matrix_at(unsigned row, unsigned col) const {
        return matrix_[std::size_t{row} * dim_ + col];
    }
    const std::vector<FieldElement>& translation_vector() const { return translation_; }

    std::vector<FieldElement> apply(const std::vector<FieldElement>& point) const;

    AffineMap inverse() const;

private:
    FieldPtr field_;
    unsigned dim_;
    std::vector<FieldElement> matrix_;
    std::vector<FieldElement> translation_;
};

}  // namespace cwlab

#endif  // CWLAB_AFFINE_HPP
