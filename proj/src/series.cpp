#include "torictodd/series.hpp"

#include <stdexcept>

namespace torictodd {

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("series: conductor mismatch");
    if (a.truncation() != b.truncation())
        throw std::invalid_argument("series: truncation mismatch");
}

}  // namespace

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b);
    const int t = a.truncation();
    TruncatedSeries out(a.conductor(), t);
    for (int i = 0; i <= t; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= t; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

TruncatedSeries series_invert(const TruncatedSeries& s) {
    const int t = s.truncation();
    TruncatedSeries out(s.conductor(), t);
    CycloNumber lead = s[0].inverse();  // throws on zero constant term
    out[0] = lead;
    for (int k = 1; k <= t; ++k) {
        CycloNumber acc(s.conductor());
        for (int j = 1; j <= k; ++j) acc += s[j] * out[k - j];
        out[k] = -(lead * acc);
    }
    return out;
}

TruncatedSeries series_exp(const TruncatedSeries& s) {
    if (!s[0].is_zero())
        throw std::invalid_argument("series_exp: nonzero constant term");
    const int t = s.truncation();
    TruncatedSeries out(s.conductor(), t);
    out[0] = CycloNumber(s.conductor(), Rat(1));
    TruncatedSeries power = out;  // s^0
    for (int k = 1; k <= t; ++k) {
        power = series_mul(power, s);
        Rat inv_fact = make_rat(1, factorial(k));
        for (int j = 0; j <= t; ++j) out[j] += inv_fact * power[j];
    }
    return out;
}

TruncatedSeries series_scale(const TruncatedSeries& s, const CycloNumber& c) {
    TruncatedSeries out = s;
    for (int k = 0; k <= s.truncation(); ++k) out[k] = c * out[k];
    return out;
}

TruncatedSeries exp_rational_rate(const Rat& b, unsigned conductor,
                                  int truncation) {
    TruncatedSeries out(conductor, truncation);
    Rat p(1);
    for (int k = 0; k <= truncation; ++k) {
        out[k] = CycloNumber(conductor, p * make_rat(1, factorial(k)));
        p *= b;
    }
    return out;
}

}  // namespace torictodd
