#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "torictodd/cyclotomic.hpp"
#include "torictodd/fan.hpp"

namespace torictodd {

// Graded linear combination of cone classes [V(sigma)], keyed by the sorted
// ray indices of the cone.  The codimension of a term is the cone dimension;
// the empty key is the fundamental class [X].  Coefficients live in
// Q(zeta_conductor) because per-element contributions are cyclotomic before
// the final sum; rationality is asserted only on end results.
class ChowClass {
public:
    explicit ChowClass(unsigned conductor = 1) : conductor_(conductor) {}

    unsigned conductor() const { return conductor_; }
    const std::map<std::vector<int>, CycloNumber>& terms() const {
        return terms_;
    }

    // Accumulates, pruning exact zeros.
    void add(const std::vector<int>& cone, const CycloNumber& coeff);
    void add(const std::vector<int>& cone, const Rat& coeff);

    bool is_zero() const { return terms_.empty(); }
    std::set<int> degrees() const;

    ChowClass scaled(const CycloNumber& s) const;
    ChowClass scaled(const Rat& s) const;
    ChowClass& operator+=(const ChowClass& rhs);

    // All coefficients as rationals; throws rationality_error if any term
    // has a nonvanishing cyclotomic part.
    std::map<std::vector<int>, Rat> rational_terms() const;
    static ChowClass from_rational(unsigned conductor,
                                   const std::map<std::vector<int>, Rat>& terms);

    bool operator==(const ChowClass&) const = default;

private:
    unsigned conductor_;
    std::map<std::vector<int>, CycloNumber> terms_;
};

// Rational Chow ring of a complete simplicial toric variety, presented on
// cone classes.  Products of divisor classes are reduced eagerly:
//   [V(sigma)] * F_tau, tau outside sigma spanning a cone gamma
//       -> (mult sigma / mult gamma) [V(gamma)]
//   [V(sigma)] * F_tau, no such cone -> 0   (Stanley-Reisner vanishing)
//   [V(sigma)] * F_tau, tau in sigma -> rewrite F_tau through the linear
//       relation of a functional dual to tau on sigma's rays.
// The degree map sends every maximal-cone class to 1.
class ChowRing {
public:
    // Throws incomplete_fan_error; the linear-relation reduction and the
    // degree map are only implemented for complete fans.
    explicit ChowRing(const Fan& f, unsigned conductor = 1);

    const Fan& fan() const { return fan_; }
    unsigned conductor() const { return conductor_; }

    ChowClass divisor_class(int ray) const;  // F_tau = 1 [V(tau)]
    ChowClass multiply_by_divisor(const ChowClass& c, int ray) const;
    // c * sum_tau coeffs[tau] F_tau
    ChowClass multiply_by_combination(const ChowClass& c,
                                      const std::vector<Int>& coeffs) const;
    // Product of F_tau over a multiset of ray indices, applied to [X];
    // deterministic reduction order: ascending ray index.
    ChowClass monomial(const std::vector<int>& rays_multiset) const;
    // Same reduction with plain rational coefficients, cached.
    const std::map<std::vector<int>, Rat>& monomial_reduced(
        std::vector<int> rays_multiset) const;

    // Sum of the coefficients of the maximal-cone terms.
    CycloNumber integrate(const ChowClass& c) const;

    // Poincare-pairing equality: a and b must be pure of the same
    // codimension (or zero); tests the pairing against every square-free
    // monomial of complementary degree.
    bool equal(const ChowClass& a, const ChowClass& b) const;

    // Single reduction steps on one cone class, rational coefficients.
    // step_off: ray outside sigma.  step_diag: ray in sigma; the dual
    // functional m (<m, n_tau'> = [tau' == ray] on sigma's rays) defaults to
    // the canonical echelon-form solve (free variables zero) and may be
    // overridden to test choice independence.
    std::map<std::vector<int>, Rat> step_off(const std::vector<int>& sigma,
                                             int ray) const;
    std::map<std::vector<int>, Rat> step_diag(
        const std::vector<int>& sigma, int ray,
        const std::vector<Rat>* functional = nullptr) const;

private:
    const std::map<std::vector<int>, Rat>& step_diag_cached(
        const std::vector<int>& sigma, int ray) const;

    const Fan& fan_;
    unsigned conductor_;
    mutable std::map<std::pair<std::vector<int>, int>,
                     std::map<std::vector<int>, Rat>>
        diag_cache_;
    mutable std::map<std::vector<int>, std::map<std::vector<int>, Rat>>
        monomial_cache_;
};

}  // namespace torictodd
