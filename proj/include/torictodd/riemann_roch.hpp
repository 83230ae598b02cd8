#pragma once

#include <map>
#include <optional>
#include <vector>

#include "torictodd/chow.hpp"
#include "torictodd/polytope.hpp"
#include "torictodd/series.hpp"
#include "torictodd/stabilizers.hpp"

namespace torictodd {

// Truncation of t / (1 - a e^{-t}) with a = e^(2 pi i q): the classical
// Todd series for q = 0, otherwise t times the inverse of a unit series.
TruncatedSeries todd_factor_series(const Rat& q, int degree, unsigned conductor);

// One group element's term of the class sum.  Per ray tau the factor series
// is todd_factor_series(q_tau), times e^(rate_tau t) when rates are given
// (the twisted-bundle case); the assembled class is the reduced product over
// all rays, truncated at total degree dim.
struct PerGContribution {
    GroupElement element;
    std::vector<TruncatedSeries> factor_series;  // one per ray
    ChowClass assembled;
};

PerGContribution element_contribution(const ChowRing& ring,
                                      const GroupElement& g,
                                      const std::vector<Int>* rates = nullptr);

// The character value prod_tau a_tau(g)^(rate_tau).
CycloNumber twist_character(const GroupElement& g,
                            const std::vector<Int>& rates, unsigned conductor);

struct ToddReport {
    unsigned conductor = 1;
    // components[k]: codimension-k part, every coefficient verified rational.
    std::vector<std::map<std::vector<int>, Rat>> components;
    Rat top_integral{0};
    // Per-element contributions; populated only when requested.
    std::vector<PerGContribution> contributions;
};

// Td(X) as the sum over the support set, reduced degree by degree.
// Throws incomplete_fan_error / rationality_error.
ToddReport todd_class(const Fan& f, bool verbose = false);

// The identity-element product alone, in the rational field.  Valid only
// for smooth complete fans, where it is the whole class.
ToddReport todd_smooth_oracle(const Fan& f);

// chi of the line bundle with ray rates b_tau, summed over the given
// elements; each term is weighted by the bundle character at the inverse
// element, prod a_tau(g^-1)^(b_tau), matching the g-indexed denominators.
// Exposed so the convention tests can swap or drop elements.
Rat chi_for_rates(const ChowRing& ring,
                  const std::vector<GroupElement>& elements,
                  const std::vector<Int>& rates);

// chi(O_X(n D)): exact rational (an integer for integral divisors).
Rat chi_twisted(const Fan& f, const Divisor& d, const Int& n);

struct EhrhartResult {
    bool nef = false;
    bool cartier = false;
    std::vector<Rat> chi_table;                  // chi(n D), n = 0..max_n
    std::optional<std::vector<Rat>> polynomial;  // c_0..c_d when Cartier
};

// Table of chi(n D); when D is Cartier also the single Ehrhart polynomial
// E(n) = sum_k (integral of D^k Td_{d-k} / k!) n^k.
EhrhartResult ehrhart(const Fan& f, const Divisor& d, int max_n);

}  // namespace torictodd
