#pragma once

#include <vector>

#include "torictodd/cyclotomic.hpp"

namespace torictodd {

// Polynomial truncation of a power series in one variable t, with
// coefficients in Q(zeta_conductor).  Powers above the truncation degree are
// discarded; the truncation degree is fixed per computation (the fan
// dimension, since higher terms integrate to zero).
class TruncatedSeries {
public:
    TruncatedSeries(unsigned conductor, int truncation)
        : conductor_(conductor),
          coeffs_(truncation + 1, CycloNumber(conductor)) {}

    unsigned conductor() const { return conductor_; }
    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }

    const CycloNumber& operator[](int k) const { return coeffs_[k]; }
    CycloNumber& operator[](int k) { return coeffs_[k]; }

    bool operator==(const TruncatedSeries&) const = default;

private:
    unsigned conductor_;
    std::vector<CycloNumber> coeffs_;
};

// Product, truncated.  Conductors and truncation degrees must match.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

// Multiplicative inverse; the constant term must be nonzero.
TruncatedSeries series_invert(const TruncatedSeries& s);

// exp of a series with zero constant term.
TruncatedSeries series_exp(const TruncatedSeries& s);

TruncatedSeries series_scale(const TruncatedSeries& s, const CycloNumber& c);

// e^(b t) truncated, with rational rate b.
TruncatedSeries exp_rational_rate(const Rat& b, unsigned conductor,
                                  int truncation);

}  // namespace torictodd
