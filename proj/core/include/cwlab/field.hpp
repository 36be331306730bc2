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

#ifndef CWLAB_FIELD_HPP
#define CWLAB_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cwlab {

/// An element of a concrete GF(p^a), identified by its canonical index in
/// [0, q).  The base-p digits of the index are the coefficients of the
/// residue polynomial, lowest degree first.  Elements sort and deduplicate
/// bit-exactly; arithmetic goes through the owning FiniteField.
struct FieldElement {
    std::uint16_t index = 0;

    friend constexpr auto operator<=>(const FieldElement&, const FieldElement&) = default;
};

/// A concrete finite field GF(p^a) with an explicit monic irreducible
/// modulus over F_p.  Supports orders up to 256; all arithmetic is exact
/// and table-driven.  Immutable after construction and safe to share
/// across threads.
class FiniteField {
public:
    static constexpr unsigned kMaxOrder = 256;

    /// Builds GF(p^a).  When no modulus is supplied, picks the monic
    /// irreducible degree-a polynomial whose coefficient tuple
    /// (c_0,...,c_{a-1}) encodes to the least integer sum c_i p^i, so all
    /// outputs are deterministic.  Throws std::invalid_argument for a
    /// composite p, a reducible or non-monic modulus, or order > 256.
    FiniteField(unsigned p, unsigned a,
                std::optional<std::vector<unsigned>> modulus = std::nullopt);

    unsigned characteristic() const { return p_; }
    unsigned degree() const { return a_; }
    unsigned order() const { return q_; }

    /// Modulus coefficients, length a+1, low degree first, monic.
    const std::vector<unsigned>& modulus() const { return modulus_; }

    FieldElement element(unsigned index) const;
    FieldElement zero() const { return FieldElement{0}; }
    FieldElement one() const { return FieldElement{1}; }

    FieldElement add(FieldElement x, FieldElement y) const {
        return FieldElement{add_[flat(x, y)]};
    }
    FieldElement sub(FieldElement x, FieldElement y) const {
        return add(x, neg(y));
    }
    FieldElement neg(FieldElement x) const { return FieldElement{neg_[x.index]}; }
    FieldElement mul(FieldElement x, FieldElement y) const {
        return FieldElement{mul_[flat(x, y)]};
    }
    /// Throws std::domain_error on inversion of zero.
    FieldElement inv(FieldElement x) const;
    FieldElement div(FieldElement x, FieldElement y) const { return mul(x, inv(y)); }

    /// x^e by repeated squaring; pow(x, 0) = 1 for every x, including 0.
    FieldElement pow(FieldElement x, std::uint64_t e) const;

    bool is_zero(FieldElement x) const { return x.index == 0; }

    /// All q elements in index order.
    std::vector<FieldElement> elements() const;

    /// The p^b elements fixed by x -> x^(p^b), i.e. the subfield GF(p^b).
    /// Requires b | a.
    std::vector<FieldElement> subfield_elements(unsigned b) const;

    /// Base-p digits of an element, length a, low degree first.
    std::vector<unsigned> digits(FieldElement x) const;
    FieldElement from_digits(const std::vector<unsigned>& digits) const;

    /// Value equality: same characteristic, degree and modulus.
    bool same_field(const FiniteField& other) const {
        return p_ == other.p_ && a_ == other.a_ && modulus_ == other.modulus_;
    }

private:
    std::size_t flat(FieldElement x, FieldElement y) const {
        return std::size_t{x.index} * q_ + y.index;
    }

    unsigned p_ = 0;
    unsigned a_ = 0;
    unsigned q_ = 0;
    std::vector<unsigned> modulus_;
    std::vector<std::uint16_t> add_;
    std::vector<std::uint16_t> mul_;
    std::vector<std::uint16_t> neg_;
    std::vector<std::uint16_t> inv_;
};

using FieldPtr = std::shared_ptr<const FiniteField>;

FieldPtr make_field(unsigned p, unsigned a,
                    std::optional<std::vector<unsigned>> modulus = std::nullopt);

/// Parses a field spec string: "p^a" for the default modulus, or
/// "p^a/c0,c1,...,1" with modulus coefficients listed low to high.
/// Used identically by the CLI and all file loaders.
FieldPtr parse_field_spec(const std::string& spec);

/// "p^a/c0,...,1" when full (the canonical unambiguous form), "p^a" otherwise.
std::string format_field_spec(const FiniteField& field, bool full_modulus = true);

}  // namespace cwlab

#endif  // CWLAB_FIELD_HPP
