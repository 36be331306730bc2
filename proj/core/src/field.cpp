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

#include "cwlab/field.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cwlab {
namespace {

// Dense F_p[t] coefficient vectors, low degree first, trailing zeros allowed.
using Coeffs = std::vector<unsigned>;

int poly_degree(const Coeffs& f) {
    for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) {
        if (f[static_cast<std::size_t>(i)] != 0) return i;
    }
    return -1;
}

Coeffs poly_mul(const Coeffs& f, const Coeffs& g, unsigned p) {
    if (f.empty() || g.empty()) return {};
    Coeffs out(f.size() + g.size() - 1, 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == 0) continue;
        for (std::size_t j = 0; j < g.size(); ++j) {
            out[i + j] = (out[i + j] + f[i] * g[j]) % p;
        }
    }
    return out;
}

// Remainder of f modulo a monic divisor.
Coeffs poly_rem(Coeffs f, const Coeffs& divisor, unsigned p) {
    const int dd = poly_degree(divisor);
    for (int d = poly_degree(f); d >= dd && dd >= 0; d = poly_degree(f)) {
        const unsigned lead = f[static_cast<std::size_t>(d)];
        for (int i = 0; i <= dd; ++i) {
            auto& c = f[static_cast<std::size_t>(d - dd + i)];
            c = (c + p * lead - lead * divisor[static_cast<std::size_t>(i)] % p) % p;
        }
    }
    if (dd >= 0) f.resize(static_cast<std::size_t>(dd), 0);
    return f;
}

Coeffs decode_base_p(std::uint64_t value, unsigned p, unsigned len) {
    Coeffs digits(len, 0);
    for (unsigned i = 0; i < len; ++i) {
        digits[i] = static_cast<unsigned>(value % p);
        value /= p;
    }
    return digits;
}

std::uint64_t encode_base_p(const Coeffs& digits, unsigned p) {
    std::uint64_t value = 0;
    for (std::size_t i = digits.size(); i-- > 0;) value = value * p + digits[i];
    return value;
}

// Exhaustive divisor scan; fields here are desk-scale, so no probabilistic
// tests.  A monic polynomial of degree a is irreducible iff it has no monic
// divisor of degree 1..a/2.
bool is_irreducible(const Coeffs& f, unsigned p) {
    const int a = poly_degree(f);
    if (a < 1) return false;
    for (int d = 1; 2 * d <= a; ++d) {
        std::uint64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            Coeffs divisor = decode_base_p(enc, p, static_cast<unsigned>(d) + 1);
            divisor[static_cast<std::size_t>(d)] = 1;
            if (poly_degree(poly_rem(f, divisor, p)) < 0) return false;
        }
    }
    return true;
}

Coeffs default_modulus(unsigned p, unsigned a, std::uint64_t q) {
    for (std::uint64_t enc = 0; enc < q; ++enc) {
        Coeffs candidate = decode_base_p(enc, p, a + 1);
        candidate[a] = 1;
        if (is_irreducible(candidate, p)) return candidate;
    }
    throw std::logic_error("no irreducible polynomial found (unreachable)");
}

bool is_prime(unsigned p) {
    if (p < 2) return false;
    for (unsigned d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

}  // namespace

FiniteField::FiniteField(unsigned p, unsigned a,
                         std::optional<std::vector<unsigned>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (a < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < a; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("field order above supported bound 256");
    }
    p_ = p;
    a_ = a;
    q_ = static_cast<unsigned>(q);

    if (modulus) {
        if (modulus->size() != a + 1) {
            throw std::invalid_argument("modulus must have degree a (a+1 coefficients)");
        }
        for (unsigned c : *modulus) {
            if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
        }
        if (modulus->back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!is_irreducible(*modulus, p)) {
            throw std::invalid_argument("modulus is reducible over F_p");
        }
        modulus_ = std::move(*modulus);
    } else {
        modulus_ = default_modulus(p, a, q);
    }

    add_.resize(std::size_t{q_} * q_);
    mul_.resize(std::size_t{q_} * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);

    for (unsigned i = 0; i < q_; ++i) {
        const Coeffs pi = decode_base_p(i, p_, a_);
        Coeffs negd(a_);
        for (unsigned k = 0; k < a_; ++k) negd[k] = (p_ - pi[k]) % p_;
        neg_[i] = static_cast<std::uint16_t>(encode_base_p(negd, p_));
        for (unsigned j = 0; j < q_; ++j) {
            const Coeffs pj = decode_base_p(j, p_, a_);
            Coeffs sum(a_);
            for (unsigned k = 0; k < a_; ++k) sum[k] = (pi[k] + pj[k]) % p_;
            add_[std::size_t{i} * q_ + j] = static_cast<std::uint16_t>(encode_base_p(sum, p_));
            Coeffs prod = poly_rem(poly_mul(pi, pj, p_), modulus_, p_);
            prod.resize(a_, 0);
            mul_[std::size_t{i} * q_ + j] = static_cast<std::uint16_t>(encode_base_p(prod, p_));
        }
    }
    for (unsigned i = 1; i < q_; ++i) {
        inv_[i] = pow(FieldElement{static_cast<std::uint16_t>(i)}, q_ - 2).index;
    }
}

FieldElement FiniteField::element(unsigned index) const {
    if (index >= q_) throw std::invalid_argument("element index out of range [0, q)");
    return FieldElement{static_cast<std::uint16_t>(index)};
}

FieldElement FiniteField::inv(FieldElement x) const {
    if (x.index == 0) throw std::domain_error("inversion of zero");
    return FieldElement{inv_[x.index]};
}

FieldElement FiniteField::pow(FieldElement x, std::uint64_t e) const {
    FieldElement result = one();
    FieldElement base = x;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e) base = mul(base, base);
    }
    return result;
}

std::vector<FieldElement> FiniteField::elements() const {
    std::vector<FieldElement> out;
    out.reserve(q_);
    for (unsigned i = 0; i < q_; ++i) out.push_back(FieldElement{static_cast<std::uint16_t>(i)});
    return out;
}

std::vector<FieldElement> FiniteField::subfield_elements(unsigned b) const {
    if (b < 1 || a_ % b != 0) {
        throw std::invalid_argument("subfield degree must divide the extension degree");
    }
    std::uint64_t pb = 1;
    for (unsigned i = 0; i < b; ++i) pb *= p_;
    std::vector<FieldElement> out;
    for (unsigned i = 0; i < q_; ++i) {
        const FieldElement x{static_cast<std::uint16_t>(i)};
        if (pow(x, pb) == x) out.push_back(x);
    }
    return out;
}

std::vector<unsigned> FiniteField::digits(FieldElement x) const {
    return decode_base_p(x.index, p_, a_);
}

FieldElement FiniteField::from_digits(const std::vector<unsigned>& digits) const {
    if (digits.size() != a_) throw std::invalid_argument("digit vector must have length a");
    for (unsigned d : digits) {
        if (d >= p_) throw std::invalid_argument("digit out of range [0, p)");
    }
    return FieldElement{static_cast<std::uint16_t>(encode_base_p(digits, p_))};
}

FieldPtr make_field(unsigned p, unsigned a, std::optional<std::vector<unsigned>> modulus) {
    return std::make_shared<const FiniteField>(p, a, std::move(modulus));
}

namespace {

unsigned parse_unsigned(std::string_view text, std::size_t& pos) {
    unsigned value = 0;
    const char* begin = text.data() + pos;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr == begin) {
        throw std::invalid_argument("malformed field spec: expected a number");
    }
    pos += static_cast<std::size_t>(ptr - begin);
    return value;
}

}  // namespace

FieldPtr parse_field_spec(const std::string& spec) {
    std::size_t pos = 0;
    const unsigned p = parse_unsigned(spec, pos);
    if (pos >= spec.size() || spec[pos] != '^') {
        throw std::invalid_argument("malformed field spec: expected \"p^a\"");
    }
    ++pos;
    const unsigned a = parse_unsigned(spec, pos);
    if (pos == spec.size()) return make_field(p, a);
    if (spec[pos] != '/') throw std::invalid_argument("malformed field spec: expected '/'");
    ++pos;
    std::vector<unsigned> modulus;
    while (true) {
        modulus.push_back(parse_unsigned(spec, pos));
        if (pos == spec.size()) break;
        if (spec[pos] != ',') throw std::invalid_argument("malformed field spec: expected ','");
        ++pos;
    }
    return make_field(p, a, std::move(modulus));
}

std::string format_field_spec(const FiniteField& field, bool full_modulus) {
    std::string out = std::to_string(field.characteristic()) + "^" + std::to_string(field.degree());
    if (full_modulus) {
        out += "/";
        const auto& mod = field.modulus();
        for (std::size_t i = 0; i < mod.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(mod[i]);
        }
    }
    return out;
}

}  // namespace cwlab
