#include "torictodd/riemann_roch.hpp"

#include <algorithm>
#include <stdexcept>

#include "torictodd/linalg.hpp"

namespace torictodd {

TruncatedSeries todd_factor_series(const Rat& q, int degree,
                                   unsigned conductor) {
    if (q == 0) {
        // t / (1 - e^{-t}) = 1 / ((1 - e^{-t}) / t); the divided series has
        // coefficients (-1)^k / (k+1)! and constant term 1.
        TruncatedSeries den(conductor, degree);
        Rat sign(1);
        for (int k = 0; k <= degree; ++k) {
            den[k] = CycloNumber(conductor, sign * make_rat(1, factorial(k + 1)));
            sign = -sign;
        }
        return series_invert(den);
    }
    // t * (1 - a e^{-t})^{-1}: the constant term 1 - a is nonzero.
    CycloNumber a = root_of_unity(q, conductor);
    TruncatedSeries den(conductor, degree);
    Rat sign(1);
    for (int k = 0; k <= degree; ++k) {
        den[k] = (-sign * make_rat(1, factorial(k))) * a;
        sign = -sign;
    }
    den[0] += CycloNumber(conductor, Rat(1));
    TruncatedSeries inv = series_invert(den);
    TruncatedSeries out(conductor, degree);
    for (int k = 1; k <= degree; ++k) out[k] = inv[k - 1];
    return out;
}

PerGContribution element_contribution(const ChowRing& ring,
                                      const GroupElement& g,
                                      const std::vector<Int>* rates) {
    const Fan& fan = ring.fan();
    const int d = fan.dim();
    const unsigned N = ring.conductor();
    if (static_cast<int>(g.charges.size()) != fan.ray_count())
        throw std::invalid_argument("element_contribution: charge length");
    if (rates && static_cast<int>(rates->size()) != fan.ray_count())
        throw std::invalid_argument("element_contribution: rate length");

    PerGContribution out{g, {}, ChowClass(N)};
    for (int tau = 0; tau < fan.ray_count(); ++tau) {
        TruncatedSeries s = todd_factor_series(g.charges[tau], d, N);
        if (rates)
            s = series_mul(s, exp_rational_rate(Rat((*rates)[tau]), N, d));
        out.factor_series.push_back(std::move(s));
    }

    // Expand the product over all rays.  A factor with tau outside g(1) has
    // constant term exactly 1, so only the rays of a cone containing the
    // support need positive exponents: enumerate cones gamma >= g(1) and
    // exponent vectors e >= 1 on gamma with total degree <= d.
    for (int k = static_cast<int>(g.support.size()); k <= d; ++k) {
        for (const Cone& gamma : fan.cones_by_dim()[k]) {
            if (!std::includes(gamma.rays.begin(), gamma.rays.end(),
                               g.support.begin(), g.support.end()))
                continue;
            std::vector<int> e(k, 1);
            for (;;) {
                int total = 0;
                for (int x : e) total += x;
                if (total <= d) {
                    CycloNumber coeff(N, Rat(1));
                    std::vector<int> multiset;
                    for (int i = 0; i < k; ++i) {
                        coeff *= out.factor_series[gamma.rays[i]][e[i]];
                        multiset.insert(multiset.end(), e[i], gamma.rays[i]);
                    }
                    if (!coeff.is_zero())
                        for (const auto& [cone, r] :
                             ring.monomial_reduced(multiset))
                            out.assembled.add(cone, r * coeff);
                }
                // Next exponent vector with entries >= 1, capped at degree d.
                int j = 0;
                while (j < k && e[j] == d) e[j++] = 1;
                if (j == k) break;
                e[j] += 1;
            }
        }
    }
    return out;
}

CycloNumber twist_character(const GroupElement& g,
                            const std::vector<Int>& rates, unsigned conductor) {
    Rat s(0);
    for (size_t i = 0; i < g.charges.size(); ++i)
        s += Rat(rates[i]) * g.charges[i];
    return root_of_unity(mod_one(s), conductor);
}

namespace {

ToddReport assemble_report(const Fan& f, const ChowRing& ring,
                           std::vector<PerGContribution> contributions,
                           bool keep_contributions) {
    ChowClass total(ring.conductor());
    for (const PerGContribution& c : contributions) total += c.assembled;

    ToddReport rep;
    rep.conductor = ring.conductor();
    rep.components.assign(f.dim() + 1, {});
    for (const auto& [cone, coeff] : total.rational_terms())
        rep.components[cone.size()].emplace(cone, coeff);
    for (const auto& [cone, coeff] : rep.components[f.dim()])
        rep.top_integral += coeff;
    if (keep_contributions) rep.contributions = std::move(contributions);
    return rep;
}

}  // namespace

ToddReport todd_class(const Fan& f, bool verbose) {
    SupportSet ss = support_set(f);
    ChowRing ring(f, ss.conductor);
    std::vector<PerGContribution> parts;
    parts.reserve(ss.elements.size());
    for (const GroupElement& g : ss.elements)
        parts.push_back(element_contribution(ring, g));
    return assemble_report(f, ring, std::move(parts), verbose);
}

ToddReport todd_smooth_oracle(const Fan& f) {
    if (!f.is_smooth())
        throw std::invalid_argument("todd_smooth_oracle: fan is not smooth");
    ChowRing ring(f, 1);
    GroupElement id = make_element(std::vector<Rat>(f.ray_count(), Rat(0)));
    std::vector<PerGContribution> parts;
    parts.push_back(element_contribution(ring, id));
    return assemble_report(f, ring, std::move(parts), false);
}

Rat chi_for_rates(const ChowRing& ring,
                  const std::vector<GroupElement>& elements,
                  const std::vector<Int>& rates) {
    CycloNumber total(ring.conductor());
    for (const GroupElement& g : elements) {
        PerGContribution c = element_contribution(ring, g, &rates);
        // The bundle's eigenvalue on the fixed locus of g pairs with the
        // normal-bundle denominator of g^{-1}; in the g-indexed denominator
        // convention used here the twist is therefore evaluated at g^{-1}.
        // (The two agree exactly when the divisor is Cartier.)
        total += twist_character(element_inverse(g), rates, ring.conductor()) *
                 ring.integrate(c.assembled);
    }
    std::optional<Rat> r = total.as_rational();
    if (!r) throw rationality_error("chi not rational: " + total.str());
    return *r;
}

Rat chi_twisted(const Fan& f, const Divisor& d, const Int& n) {
    if (static_cast<int>(d.coeffs.size()) != f.ray_count())
        throw std::invalid_argument("divisor length does not match ray count");
    SupportSet ss = support_set(f);
    ChowRing ring(f, ss.conductor);
    return chi_for_rates(ring, ss.elements, d.scaled(n).coeffs);
}

EhrhartResult ehrhart(const Fan& f, const Divisor& d, int max_n) {
    if (max_n < 0) throw std::invalid_argument("ehrhart: max_n must be >= 0");
    EhrhartResult out;
    out.nef = is_nef(f, d);

    SupportSet ss = support_set(f);
    ChowRing ring(f, ss.conductor);
    for (int n = 0; n <= max_n; ++n)
        out.chi_table.push_back(
            chi_for_rates(ring, ss.elements, d.scaled(n).coeffs));

    // Cartier: an integral dual functional per maximal cone.
    out.cartier = true;
    for (const std::vector<int>& cone : f.max_cones()) {
        RatMatrix a;
        std::vector<Rat> b;
        for (int r : cone) {
            RatRow row(f.dim());
            for (int j = 0; j < f.dim(); ++j) row[j] = Rat(f.rays()[r][j]);
            a.push_back(std::move(row));
            b.emplace_back(-d.coeffs[r]);
        }
        std::optional<std::vector<Rat>> m = solve_rational(a, b);
        if (!m) throw std::logic_error("ehrhart: cone solve must succeed");
        for (const Rat& x : *m)
            if (!is_integer(x)) {
                out.cartier = false;
                break;
            }
        if (!out.cartier) break;
    }

    if (out.cartier) {
        // E(n) = sum_k (integral of D^k Td_{d-k}) n^k / k!.
        std::vector<PerGContribution> parts;
        for (const GroupElement& g : ss.elements)
            parts.push_back(element_contribution(ring, g));
        ToddReport td = assemble_report(f, ring, std::move(parts), false);
        std::vector<Rat> poly;
        for (int k = 0; k <= f.dim(); ++k) {
            ChowClass c = ChowClass::from_rational(
                ss.conductor, td.components[f.dim() - k]);
            for (int i = 0; i < k; ++i)
                c = ring.multiply_by_combination(c, d.coeffs);
            std::optional<Rat> val = ring.integrate(c).as_rational();
            if (!val) throw rationality_error("ehrhart coefficient not rational");
            poly.push_back(*val / Rat(factorial(k)));
        }
        out.polynomial = std::move(poly);
    }
    return out;
}

}  // namespace torictodd
