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

#include "cwlab/vset.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwlab/mpoly.hpp"

namespace cwlab {
namespace {

std::vector<FieldElement> canonical(const std::vector<FieldElement>& set) {
    std::vector<FieldElement> out = set;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void require_size(const std::vector<FieldElement>& set, std::size_t min) {
    if (set.size() < min) throw std::invalid_argument("subset is too small for this operation");
}

// Dense coefficients of phi_Y, low degree first, length r+1, monic.
std::vector<FieldElement> phi_coeffs(const FieldPtr& field,
                                     const std::vector<FieldElement>& set) {
    std::vector<FieldElement> coeffs{field->one()};
    for (FieldElement x : set) {
        // multiply by (t - x) in place, highest coefficient first
        coeffs.push_back(field->zero());
        for (std::size_t i = coeffs.size() - 1; i > 0; --i) {
            coeffs[i] = field->add(coeffs[i - 1], field->mul(coeffs[i], field->neg(x)));
        }
        coeffs[0] = field->mul(coeffs[0], field->neg(x));
    }
    return coeffs;
}

FieldElement eval_dense(const FieldPtr& field, const std::vector<FieldElement>& coeffs,
                        FieldElement x) {
    FieldElement acc = field->zero();
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        acc = field->add(field->mul(acc, x), coeffs[i]);
    }
    return acc;
}

// Elementary symmetric functions s_0..s_r of the set, read off the monic
// vanishing polynomial: a_i = (-1)^(r-i) s_{r-i}.
std::vector<FieldElement> elementary_symmetric(const FieldPtr& field,
                                               const std::vector<FieldElement>& coeffs) {
    const std::size_t r = coeffs.size() - 1;
    std::vector<FieldElement> s(r + 1);
    for (std::size_t k = 0; k <= r; ++k) {
        FieldElement v = coeffs[r - k];
        if (k % 2 == 1) v = field->neg(v);
        s[k] = v;
    }
    return s;
}

}  // namespace

FieldElement power_sum(const FieldPtr& field, const std::vector<FieldElement>& set,
                       unsigned k) {
    if (set.empty()) throw std::invalid_argument("power sum of the empty set");
    if (k < 1) throw std::invalid_argument("power sum index must be >= 1");
    FieldElement acc = field->zero();
    for (FieldElement y : canonical(set)) acc = field->add(acc, field->pow(y, k));
    return acc;
}

int omega(const FieldPtr& field, const std::vector<FieldElement>& set) {
    const auto points = canonical(set);
    if (points.empty()) throw std::invalid_argument("omega of the empty set");
    if (points.size() == 1 && field->is_zero(points[0])) {
        throw std::invalid_argument("omega of {0} is undefined (every power sum vanishes)");
    }
    const int r = static_cast<int>(points.size());
    for (int k = 1; k <= r; ++k) {
        if (!field->is_zero(power_sum(field, points, static_cast<unsigned>(k)))) return k;
    }
    throw std::logic_error("no nonvanishing power sum up to the set size (unreachable)");
}

VsetClass classify_by_power_sums(const FieldPtr& field,
                                 const std::vector<FieldElement>& set) {
    const auto points = canonical(set);
    require_size(points, 2);
    const int w = omega(field, points);
    const int r = static_cast<int>(points.size());
    if (w == r) return VsetClass::SuperVandermonde;
    if (w == r - 1) return VsetClass::Vandermonde;
    return VsetClass::NotVandermonde;
}

VsetClass classify_by_coefficients(const FieldPtr& field,
                                   const std::vector<FieldElement>& set) {
    const auto points = canonical(set);
    require_size(points, 2);
    const std::size_t r = points.size();
    const unsigned p = field->characteristic();
    const auto s = elementary_symmetric(field, phi_coeffs(field, points));

    // By Newton's identities, the first k power sums vanish iff s_i = 0 for
    // every 1 <= i <= k with p not dividing i.  Vandermonde-or-super needs
    // the first r-2 power sums to vanish; super needs the first r-1.
    auto sym_vanish_through = [&](std::size_t k) {
        for (std::size_t i = 1; i <= k; ++i) {
            if (i % p != 0 && !field->is_zero(s[i])) return false;
        }
        return true;
    };

    if (!sym_vanish_through(r - 2)) return VsetClass::NotVandermonde;
    return sym_vanish_through(r - 1) ? VsetClass::SuperVandermonde : VsetClass::Vandermonde;
}

std::vector<FieldElement> newton_power_sums_from_coeffs(
    const FieldPtr& field, const std::vector<FieldElement>& coeffs) {
    if (coeffs.size() < 2 || coeffs.back() != field->one()) {
        throw std::invalid_argument("expected a monic polynomial of degree >= 1");
    }
    const std::size_t r = coeffs.size() - 1;
    const auto s = elementary_symmetric(field, coeffs);

    // pi_k = (-1)^(k-1) k s_k + sum_{i=1}^{k-1} (-1)^(k-1+i) s_{k-i} pi_i
    std::vector<FieldElement> pi(r + 1, field->zero());
    for (std::size_t k = 1; k <= r; ++k) {
        FieldElement acc =
            field->mul(field->element(static_cast<unsigned>(k % field->characteristic())), s[k]);
        if (k % 2 == 0) acc = field->neg(acc);
        for (std::size_t i = 1; i < k; ++i) {
            FieldElement term = field->mul(s[k - i], pi[i]);
            if ((k - 1 + i) % 2 == 1) term = field->neg(term);
            acc = field->add(acc, term);
        }
        pi[k] = acc;
    }
    return std::vector<FieldElement>(pi.begin() + 1, pi.end());
}

std::optional<FieldElement> derivative_constancy(const FieldPtr& field,
                                                 const std::vector<FieldElement>& set) {
    const auto points = canonical(set);
    require_size(points, 2);
    const MultiPoly phi = phi_of_set(field, points);
    const MultiPoly dphi = derivative(phi);

    std::optional<FieldElement> constant;
    for (FieldElement y : points) {
        const FieldElement v = dphi.evaluate({y});
        if (!constant) {
            constant = v;
        } else if (*constant != v) {
            return std::nullopt;
        }
    }
    // phi_Y is separable, so its derivative cannot vanish at a root.
    if (field->is_zero(*constant)) {
        throw std::logic_error("derivative of a separable polynomial vanished at a root");
    }
    // The constancy forces phi_Y = g(t^p) + c*t syntactically.
    const unsigned p = field->characteristic();
    for (const auto& [exponents, coeff] : phi.terms()) {
        const unsigned e = static_cast<unsigned>(exponents[0]);
        if (e % p != 0 && e != 1) {
            throw std::logic_error("constant-derivative vanishing polynomial is not g(t^p) + ct");
        }
        if (e == 1 && coeff != *constant) {
            throw std::logic_error("linear coefficient disagrees with the derivative constant");
        }
    }
    return constant;
}

CosetTest coset_test(const FieldPtr& field, const std::vector<FieldElement>& set) {
    const auto points = canonical(set);
    if (points.empty()) throw std::invalid_argument("coset test on the empty set");

    // Translate a chosen element to zero; in a finite group of exponent p,
    // closure under addition makes the translate a subgroup.
    const FieldElement base = points.front();
    std::vector<FieldElement> translated;
    translated.reserve(points.size());
    for (FieldElement y : points) translated.push_back(field->sub(y, base));
    std::sort(translated.begin(), translated.end());

    for (FieldElement x : translated) {
        for (FieldElement y : translated) {
            if (!std::binary_search(translated.begin(), translated.end(), field->add(x, y))) {
                return CosetTest{};
            }
        }
    }
    return CosetTest{true, std::move(translated)};
}

Linearity functional_linearity_test(const FieldPtr& field,
                                    const std::vector<FieldElement>& set, unsigned b) {
    const auto points = canonical(set);
    if (points.empty()) throw std::invalid_argument("linearity test on the empty set");
    const auto coeffs = phi_coeffs(field, points);

    std::vector<FieldElement> table(field->order());
    for (unsigned i = 0; i < field->order(); ++i) {
        table[i] = eval_dense(field, coeffs, field->element(i));
    }
    const auto subfield = field->subfield_elements(b);

    auto additive_and_homogeneous = [&](const std::vector<FieldElement>& values) {
        for (unsigned i = 0; i < field->order(); ++i) {
            const FieldElement x = field->element(i);
            for (unsigned j = 0; j < field->order(); ++j) {
                const FieldElement sum = field->add(x, field->element(j));
                if (values[sum.index] != field->add(values[i], values[j])) return false;
            }
            for (FieldElement lambda : subfield) {
                const FieldElement lx = field->mul(lambda, x);
                if (values[lx.index] != field->mul(lambda, values[i])) return false;
            }
        }
        return true;
    };

    if (additive_and_homogeneous(table)) return Linearity::Linear;

    std::vector<FieldElement> centred(table.size());
    for (std::size_t i = 0; i < table.size(); ++i) centred[i] = field->sub(table[i], table[0]);
    if (additive_and_homogeneous(centred)) return Linearity::Affine;
    return Linearity::Neither;
}

bool is_subspace(const FieldPtr& field, const std::vector<FieldElement>& set, unsigned b) {
    const auto points = canonical(set);
    if (points.empty()) return false;
    if (!std::binary_search(points.begin(), points.end(), field->zero())) return false;
    for (FieldElement x : points) {
        for (FieldElement y : points) {
            if (!std::binary_search(points.begin(), points.end(), field->add(x, y))) return false;
        }
        for (FieldElement lambda : field->subfield_elements(b)) {
            if (!std::binary_search(points.begin(), points.end(), field->mul(lambda, x))) {
                return false;
            }
        }
    }
    return true;
}

bool is_subspace_coset(const FieldPtr& field, const std::vector<FieldElement>& set,
                       unsigned b) {
    const auto points = canonical(set);
    if (points.empty()) return false;
    std::vector<FieldElement> translated;
    translated.reserve(points.size());
    for (FieldElement y : points) translated.push_back(field->sub(y, points.front()));
    return is_subspace(field, translated, b);
}

std::vector<FieldElement> scale_translate(const FieldPtr& field,
                                          const std::vector<FieldElement>& set,
                                          FieldElement alpha, FieldElement beta) {
    if (field->is_zero(alpha)) throw std::invalid_argument("scale factor must be nonzero");
    std::vector<FieldElement> out;
    out.reserve(set.size());
    for (FieldElement y : set) out.push_back(field->add(field->mul(alpha, y), beta));
    return canonical(out);
}

VsetReport classify(const FieldPtr& field, const std::vector<FieldElement>& set) {
    const auto points = canonical(set);
    require_size(points, 2);

    VsetReport report;
    report.size = static_cast<int>(points.size());
    report.omega = omega(field, points);
    report.classification = classify_by_power_sums(field, points);
    if (classify_by_coefficients(field, points) != report.classification) {
        throw std::logic_error("power-sum and coefficient classifications disagree");
    }
    report.p_divides_size =
        points.size() % field->characteristic() == 0;
    report.derivative_constant = derivative_constancy(field, points);

    CosetTest coset = coset_test(field, points);
    report.coset_flag = coset.is_coset;
    if (coset.is_coset) report.subgroup = std::move(coset.subgroup);

    for (unsigned b = 1; b <= field->degree(); ++b) {
        if (field->degree() % b != 0) continue;
        report.subspace_flags[b] = is_subspace(field, points, b);
        report.functional[b] = functional_linearity_test(field, points, b);
    }
    return report;
}

}  // namespace cwlab
