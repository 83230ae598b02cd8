#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torictodd/numeric.hpp"

namespace torictodd {

// Coefficients of the n-th cyclotomic polynomial, little-endian, monic.
// Computed by exact division of x^n - 1 by the lower-order factors; cached.
std::vector<Int> cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

// Element of Q(zeta_n), stored in the power basis of Q[x] / Phi_n(x).
// Arithmetic requires matching conductors; the conductor is fixed per
// computation by the caller (lcm of the orders of the roots of unity needed).
class CycloNumber {
public:
    CycloNumber() : CycloNumber(1) {}
    explicit CycloNumber(unsigned conductor);
    CycloNumber(unsigned conductor, const Rat& value);

    unsigned conductor() const { return conductor_; }
    // phi(conductor) coefficients: c[0] + c[1] z + ... with z = zeta_conductor.
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    bool is_zero() const;
    // The value as an element of Q, if all higher basis coefficients vanish.
    std::optional<Rat> as_rational() const;
    // Field inverse via the extended Euclidean algorithm against Phi_n.
    // Throws std::domain_error on zero.
    CycloNumber inverse() const;

    std::string str() const;

    CycloNumber& operator+=(const CycloNumber& rhs);
    CycloNumber& operator-=(const CycloNumber& rhs);
    CycloNumber& operator*=(const CycloNumber& rhs);

    friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) {
        return a += b;
    }
    friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) {
        return a -= b;
    }
    friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
    friend CycloNumber operator*(const Rat& s, const CycloNumber& a);
    CycloNumber operator-() const;

    bool operator==(const CycloNumber&) const = default;

private:
    friend CycloNumber root_of_unity(const Rat& q, unsigned conductor);

    unsigned conductor_ = 1;
    std::vector<Rat> coeffs_;
};

// e^(2 pi i q) as an element of Q(zeta_conductor).  Requires 0 <= q < 1 and
// denominator(q) | conductor.
CycloNumber root_of_unity(const Rat& q, unsigned conductor);

}  // namespace torictodd
