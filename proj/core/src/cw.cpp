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

#include "cwlab/cw.hpp"

#include <algorithm>
#include <stdexcept>

#include "cwlab/vset.hpp"

namespace cwlab {
namespace {

struct Enumeration {
    std::int64_t z_count = 0;
    std::vector<Point> zeros;
    std::int64_t chi_sum = 0;
};

// One pass over the domain computing both routes: the zero test of every
// system member, and the pointwise indicator prod(1 - f_j(x)^(q-1)).  The
// indicator must be 0/1 and match the zero test at every point.
Enumeration enumerate_zeros(const PolySystem& system, const PointSet& domain) {
    const auto& field = system.field();
    Enumeration out;
    for (const Point& x : domain.points()) {
        bool all_zero = true;
        FieldElement chi = field->one();
        for (const MultiPoly& f : system.polys()) {
            const FieldElement v = f.evaluate(x);
            if (!field->is_zero(v)) all_zero = false;
            chi = field->mul(chi, field->sub(field->one(), field->pow(v, field->order() - 1)));
        }
        const std::int64_t chi_int =
            field->is_zero(chi) ? 0 : (chi == field->one() ? 1 : -1);
        if (chi_int < 0 || (chi_int == 1) != all_zero) {
            throw std::logic_error("indicator evaluation disagrees with the zero test");
        }
        out.chi_sum += chi_int;
        if (all_zero) {
            out.z_count += 1;
            out.zeros.push_back(x);
        }
    }
    return out;
}

void require_compatible(const PolySystem& system, const FieldPtr& field, unsigned arity) {
    if (!system.field()->same_field(*field)) {
        throw std::invalid_argument("system field does not match the instance field");
    }
    if (system.arity() != arity) {
        throw std::invalid_argument("system arity does not match the variable restriction");
    }
}

std::int64_t ipow(std::int64_t base, unsigned exp) {
    std::int64_t out = 1;
    for (unsigned i = 0; i < exp; ++i) out *= base;
    return out;
}

bool axis_is_vandermonde_p_divisible(const FieldPtr& field,
                                     const std::vector<FieldElement>& axis) {
    if (axis.size() < 2 || axis.size() % field->characteristic() != 0) return false;
    return classify_by_power_sums(field, axis) == VsetClass::Vandermonde;
}

// Multidimensional coset test: X - x0 closed under addition.  In a finite
// group of exponent p closure suffices, and the subgroup order is a p-power.
std::optional<int> coset_log_size(const PointSet& set) {
    const auto& field = set.field();
    const Point& base = set.points().front();
    std::vector<Point> translated;
    translated.reserve(set.size());
    for (const Point& x : set.points()) {
        Point t(set.arity());
        for (unsigned i = 0; i < set.arity(); ++i) t[i] = field->sub(x[i], base[i]);
        translated.push_back(std::move(t));
    }
    std::sort(translated.begin(), translated.end());
    Point sum(set.arity());
    for (const Point& x : translated) {
        for (const Point& y : translated) {
            for (unsigned i = 0; i < set.arity(); ++i) sum[i] = field->add(x[i], y[i]);
            if (!std::binary_search(translated.begin(), translated.end(), sum)) {
                return std::nullopt;
            }
        }
    }
    int e = 0;
    std::size_t size = set.size();
    while (size > 1) {
        if (size % field->characteristic() != 0) {
            throw std::logic_error("additive subgroup size is not a power of p");
        }
        size /= field->characteristic();
        ++e;
    }
    return e;
}

}  // namespace

CountResult count_solutions(const PolySystem& system, const PointSet& domain) {
    require_compatible(system, domain.field(), domain.arity());
    Enumeration e = enumerate_zeros(system, domain);
    return CountResult{e.z_count,
                       PointSet(domain.field(), domain.arity(), std::move(e.zeros))};
}

std::int64_t indicator_count(const PolySystem& system, const PointSet& domain) {
    require_compatible(system, domain.field(), domain.arity());
    const auto& field = system.field();
    std::int64_t sum = 0;
    for (const Point& x : domain.points()) {
        FieldElement chi = field->one();
        for (const MultiPoly& f : system.polys()) {
            const FieldElement v = f.evaluate(x);
            chi = field->mul(chi, field->sub(field->one(), field->pow(v, field->order() - 1)));
        }
        if (!field->is_zero(chi)) {
            if (chi != field->one()) throw std::logic_error("indicator value is not 0/1");
            sum += 1;
        }
    }
    return sum;
}

FieldElement weighted_residue(const PolySystem& system, const GridSet& grid) {
    require_compatible(system, grid.field(), grid.arity());
    const auto& field = grid.field();

    // Per-axis derivative values of the axis vanishing polynomial; separable,
    // so all nonzero.
    std::vector<std::vector<FieldElement>> inverse_weights(grid.arity());
    for (unsigned i = 0; i < grid.arity(); ++i) {
        const MultiPoly dphi = derivative(phi_of_set(field, grid.axes()[i]));
        for (FieldElement x : grid.axes()[i]) {
            const FieldElement v = dphi.evaluate({x});
            if (field->is_zero(v)) {
                throw std::logic_error("derivative of a separable polynomial vanished at a root");
            }
            inverse_weights[i].push_back(field->inv(v));
        }
    }

    FieldElement acc = field->zero();
    const PointSet domain = grid.to_point_set();
    for (const Point& x : domain.points()) {
        bool all_zero = true;
        for (const MultiPoly& f : system.polys()) {
            if (!field->is_zero(f.evaluate(x))) {
                all_zero = false;
                break;
            }
        }
        if (!all_zero) continue;
        FieldElement weight = field->one();
        for (unsigned i = 0; i < grid.arity(); ++i) {
            const auto& axis = grid.axes()[i];
            const auto pos = std::lower_bound(axis.begin(), axis.end(), x[i]) - axis.begin();
            weight = field->mul(weight, inverse_weights[i][static_cast<std::size_t>(pos)]);
        }
        acc = field->add(acc, weight);
    }
    return acc;
}

PointSet full_space(const FieldPtr& field, unsigned arity) {
    if (arity < 1) throw std::invalid_argument("full space arity must be >= 1");
    std::uint64_t total = 1;
    for (unsigned i = 0; i < arity; ++i) {
        total *= field->order();
        if (total > (1u << 20)) {
            throw std::invalid_argument("full-space enumeration too large (q^n > 2^20)");
        }
    }
    std::vector<Point> points;
    points.reserve(total);
    Point current(arity, field->zero());
    while (true) {
        points.push_back(current);
        unsigned i = 0;
        for (; i < arity; ++i) {
            if (current[i].index + 1u < field->order()) {
                current[i] = field->element(current[i].index + 1u);
                break;
            }
            current[i] = field->zero();
        }
        if (i == arity) break;
    }
    return PointSet(field, arity, std::move(points));
}

const std::vector<std::string>& theorem_ids() {
    static const std::vector<std::string> ids = {
        "chevalley", "cw",  "warning", "rchev",         "rcw0",
        "coset",     "vcw", "rcw",     "coeff-formula", "am-bound"};
    return ids;
}

VerificationRecord verify(const Instance& instance) {
    const auto& id = instance.theorem;
    if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end()) {
        throw std::invalid_argument("unknown theorem id: " + id);
    }
    if (!instance.field) throw std::invalid_argument("instance has no field");

    const bool wants_grid = id == "rchev" || id == "rcw0" || id == "coset" ||
                            id == "vcw" || id == "coeff-formula";
    const bool wants_points = id == "rcw" || id == "am-bound";
    if (wants_grid && !instance.grid) {
        throw std::invalid_argument("theorem " + id + " requires a grid restriction");
    }
    if (wants_points && !instance.points) {
        throw std::invalid_argument("theorem " + id + " requires a point-set restriction");
    }
    if (!wants_grid && instance.grid) {
        throw std::invalid_argument("theorem " + id + " does not take a grid restriction");
    }
    if (!wants_points && instance.points) {
        throw std::invalid_argument("theorem " + id + " does not take a point-set restriction");
    }
    if (id == "coeff-formula" && instance.system.size() != 1) {
        throw std::invalid_argument("coeff-formula takes a single polynomial");
    }

    const PolySystem system(instance.system);
    const auto& field = instance.field;
    const unsigned q = field->order();
    const unsigned p = field->characteristic();
    const unsigned n = system.arity();
    const int d = system.degree_sum();

    std::optional<GridSet> grid;
    if (instance.grid) grid.emplace(field, *instance.grid);

    PointSet domain = wants_points ? *instance.points
                                   : (grid ? grid->to_point_set() : full_space(field, n));
    if (wants_points && domain.empty()) {
        throw std::invalid_argument("point-set restriction must be nonempty");
    }
    require_compatible(system, domain.field(), domain.arity());

    VerificationRecord record;
    record.theorem_id = id;
    record.quantities["q"] = q;
    record.quantities["n"] = n;
    record.quantities["r"] = static_cast<std::int64_t>(system.polys().size());
    record.quantities["degree_sum"] = d;
    record.quantities["domain_size"] = static_cast<std::int64_t>(domain.size());

    // Both counting routes on every run.
    const CountResult zeros = count_solutions(system, domain);
    const std::int64_t z = zeros.count;
    const std::int64_t chi = indicator_count(system, domain);
    if (z != chi) throw std::logic_error("zero count disagrees with the indicator sum");
    record.quantities["z_count"] = z;
    record.quantities["chi_sum"] = chi;

    int grid_threshold = 0;
    if (grid) {
        for (const auto& axis : grid->axes()) {
            grid_threshold += static_cast<int>(axis.size()) - 1;
        }
        record.quantities["threshold"] = grid_threshold;
        record.quantities["scaled_degree"] = static_cast<std::int64_t>(q - 1) * d;
    }

    bool hypothesis = false;
    std::optional<bool> conclusion;

    if (id == "chevalley" || id == "cw" || id == "warning") {
        hypothesis = d < static_cast<int>(n);
        if (hypothesis) {
            if (id == "chevalley") {
                conclusion = z != 1;
            } else if (id == "cw") {
                conclusion = z % p == 0;
            } else {
                const std::int64_t bound = ipow(q, n - static_cast<unsigned>(d));
                record.quantities["warning_bound"] = bound;
                conclusion = z == 0 || z >= bound;
            }
        }
    } else if (id == "rchev") {
        hypothesis = static_cast<std::int64_t>(q - 1) * d < grid_threshold;
        if (hypothesis) conclusion = z != 1;
    } else if (id == "rcw0") {
        hypothesis = static_cast<std::int64_t>(q - 1) * d < grid_threshold;
        const FieldElement residue = weighted_residue(system, *grid);
        record.quantities["residue"] = residue.index;
        record.quantities["p_divides_z"] = z % p == 0 ? 1 : 0;
        if (hypothesis) conclusion = field->is_zero(residue);
    } else if (id == "coset") {
        bool all_cosets = true;
        for (const auto& axis : grid->axes()) {
            if (!coset_test(field, axis).is_coset) {
                all_cosets = false;
                break;
            }
        }
        record.quantities["axes_are_cosets"] = all_cosets ? 1 : 0;
        hypothesis = all_cosets && static_cast<std::int64_t>(q - 1) * d < grid_threshold;
        if (hypothesis) conclusion = z % p == 0;
    } else if (id == "vcw") {
        bool all_vandermonde = true;
        for (const auto& axis : grid->axes()) {
            if (!axis_is_vandermonde_p_divisible(field, axis)) {
                all_vandermonde = false;
                break;
            }
        }
        record.quantities["axes_are_vandermonde"] = all_vandermonde ? 1 : 0;
        hypothesis = all_vandermonde && static_cast<std::int64_t>(q - 1) * d < grid_threshold;
        if (hypothesis) conclusion = z % p == 0;
    } else if (id == "rcw") {
        const OmegaBarReport omega = omega_bar(domain);
        record.quantities["omega_bar"] = omega.omega_bar;
        hypothesis = static_cast<std::int64_t>(q - 1) * d < omega.omega_bar;
        if (hypothesis) conclusion = z % p == 0;
    } else if (id == "coeff-formula") {
        bool all_vandermonde = true;
        for (const auto& axis : grid->axes()) {
            if (!axis_is_vandermonde_p_divisible(field, axis)) {
                all_vandermonde = false;
                break;
            }
        }
        record.quantities["axes_are_vandermonde"] = all_vandermonde ? 1 : 0;

        const MultiPoly& f = system.polys().front();
        Exponents top(n);
        for (unsigned i = 0; i < n; ++i) {
            top[i] = static_cast<int>(grid->axes()[i].size()) - 1;
        }
        const bool topped = is_d_topped(f, top);
        record.quantities["d_topped"] = topped ? 1 : 0;
        hypothesis = all_vandermonde && topped;

        if (hypothesis) {
            FieldElement lhs = f.coeff_of(top);
            record.quantities["top_coefficient"] = lhs.index;
            for (const auto& axis : grid->axes()) {
                const auto constant = derivative_constancy(field, axis);
                if (!constant) {
                    throw std::logic_error("vandermonde axis lost derivative constancy");
                }
                lhs = field->mul(lhs, *constant);
            }
            FieldElement rhs = field->zero();
            for (const Point& x : domain.points()) rhs = field->add(rhs, f.evaluate(x));
            record.quantities["lhs"] = lhs.index;
            record.quantities["rhs"] = rhs.index;
            conclusion = lhs == rhs;
        }
    } else {  // am-bound
        const auto log_size = coset_log_size(domain);
        record.quantities["is_coset"] = log_size ? 1 : 0;
        if (log_size) record.quantities["coset_log_size"] = *log_size;
        // a * degree_sum < e, with e = log_p of the coset size.
        hypothesis = log_size &&
                     static_cast<std::int64_t>(field->degree()) * d < *log_size;
        if (hypothesis) conclusion = z % p == 0;
    }

    record.hypothesis_holds = hypothesis;
    if (hypothesis) {
        record.conclusion_holds = conclusion;
        if (!*conclusion) record.counterexample = instance;
    }
    return record;
}

}  // namespace cwlab
