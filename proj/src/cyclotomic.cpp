#include "torictodd/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace torictodd {

namespace {

// --- integer polynomial helpers (little-endian coefficient vectors) ---

void trim(std::vector<Int>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division of monic-divisor polynomials over Z; remainder must vanish.
std::vector<Int> divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
    trim(num);
    const size_t dd = den.size() - 1;  // den is monic of this degree
    if (num.size() < den.size()) throw std::logic_error("cyclotomic: bad division");
    std::vector<Int> quot(num.size() - dd);
    for (size_t i = num.size(); i-- > dd;) {
        // i is the current top degree of num
        size_t k = i - dd;
        Int c = num[i];
        quot[k] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("cyclotomic: nonzero remainder");
    return quot;
}

std::map<unsigned, std::vector<Int>>& phi_cache() {
    static std::map<unsigned, std::vector<Int>> cache;
    return cache;
}

std::mutex cache_mutex;

std::vector<Int> compute_phi(unsigned n);

const std::vector<Int>& phi_locked(unsigned n) {
    auto it = phi_cache().find(n);
    if (it == phi_cache().end())
        it = phi_cache().emplace(n, compute_phi(n)).first;
    return it->second;
}

std::vector<Int> compute_phi(unsigned n) {
    if (n == 1) return {Int(-1), Int(1)};  // x - 1
    std::vector<Int> num(n + 1);           // x^n - 1
    num[0] = -1;
    num[n] = 1;
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = divide_exact(std::move(num), phi_locked(d));
    return num;
}

// --- rational polynomial helpers for the extended Euclidean algorithm ---

using RPoly = std::vector<Rat>;

void trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly sub_scaled(RPoly a, const RPoly& b, const Rat& s, size_t shift) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift);
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= s * b[i];
    trim(a);
    return a;
}

// a mod b together with the quotient, over Q.
std::pair<RPoly, RPoly> divmod(RPoly a, const RPoly& b) {
    RPoly q;
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        size_t shift = a.size() - b.size();
        Rat c = a.back() / b.back();
        if (q.size() < shift + 1) q.resize(shift + 1);
        q[shift] += c;
        a = sub_scaled(std::move(a), b, c, shift);
    }
    return {q, a};
}

RPoly mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly out(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Per-conductor data: Phi_n and the reductions of x^deg .. x^(2 deg - 2).
struct FieldData {
    size_t deg;
    RPoly phi;                       // rational copy for Euclid
    std::vector<std::vector<Rat>> xpow;
};

const FieldData& field_data(unsigned n) {
    static std::map<unsigned, FieldData> fields;
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = fields.find(n);
    if (it != fields.end()) return it->second;

    const std::vector<Int>& phi = phi_locked(n);
    FieldData fd;
    fd.deg = phi.size() - 1;
    fd.phi.reserve(phi.size());
    for (const Int& c : phi) fd.phi.emplace_back(c);
    // x^deg = -(phi[0] + ... + phi[deg-1] x^(deg-1)) since Phi_n is monic.
    std::vector<Rat> r(fd.deg);
    for (size_t j = 0; j < fd.deg; ++j) r[j] = Rat(-phi[j]);
    for (size_t k = 0; k + 1 < fd.deg; ++k) {
        fd.xpow.push_back(r);
        // multiply by x and reduce the overflowing term
        std::vector<Rat> next(fd.deg);
        Rat top = r[fd.deg - 1];
        for (size_t j = 0; j + 1 < fd.deg; ++j) next[j + 1] = r[j];
        if (top != 0)
            for (size_t j = 0; j < fd.deg; ++j) next[j] += top * fd.xpow[0][j];
        r = std::move(next);
    }
    return fields.emplace(n, std::move(fd)).first->second;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n >= 1");
    std::lock_guard<std::mutex> lock(cache_mutex);
    return phi_locked(n);
}

unsigned euler_phi(unsigned n) {
    return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

CycloNumber::CycloNumber(unsigned conductor) : conductor_(conductor) {
    if (conductor == 0) throw std::invalid_argument("CycloNumber: conductor >= 1");
    coeffs_.assign(field_data(conductor).deg, Rat(0));
}

CycloNumber::CycloNumber(unsigned conductor, const Rat& value)
    : CycloNumber(conductor) {
    coeffs_[0] = value;
}

bool CycloNumber::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

std::optional<Rat> CycloNumber::as_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

namespace {

void require_same_field(const CycloNumber& a, const CycloNumber& b) {
    if (a.conductor() != b.conductor())
        throw std::invalid_argument("CycloNumber: conductor mismatch");
}

}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& rhs) {
    require_same_field(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& rhs) {
    require_same_field(*this, rhs);
    for (size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
    require_same_field(a, b);
    const FieldData& fd = field_data(a.conductor());
    const size_t deg = fd.deg;
    std::vector<Rat> conv(2 * deg - 1);
    for (size_t i = 0; i < deg; ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (size_t j = 0; j < deg; ++j) conv[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    CycloNumber out(a.conductor());
    for (size_t j = 0; j < deg; ++j) out.coeffs_[j] = conv[j];
    // Fold the high part through the precomputed reductions of x^k mod Phi.
    for (size_t k = deg; k < conv.size(); ++k) {
        if (conv[k] == 0) continue;
        const std::vector<Rat>& red = fd.xpow[k - deg];
        for (size_t j = 0; j < deg; ++j) out.coeffs_[j] += conv[k] * red[j];
    }
    return out;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& rhs) {
    return *this = *this * rhs;
}

CycloNumber operator*(const Rat& s, const CycloNumber& a) {
    CycloNumber out = a;
    for (Rat& c : out.coeffs_) c *= s;
    return out;
}

CycloNumber CycloNumber::operator-() const {
    CycloNumber out = *this;
    for (Rat& c : out.coeffs_) c = -c;
    return out;
}

CycloNumber CycloNumber::inverse() const {
    if (is_zero()) throw std::domain_error("CycloNumber: division by zero");
    const FieldData& fd = field_data(conductor_);
    // Extended Euclid on (Phi, f): track s with s * f = r (mod Phi).  Phi is
    // irreducible over Q, so the gcd is a nonzero constant.
    RPoly r0 = fd.phi, r1(coeffs_);
    trim(r1);
    RPoly s0, s1 = {Rat(1)};
    while (!r1.empty()) {
        auto [q, rem] = divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        RPoly qs = mul(q, s1);
        RPoly next = s0;
        if (next.size() < qs.size()) next.resize(qs.size());
        for (size_t i = 0; i < qs.size(); ++i) next[i] -= qs[i];
        trim(next);
        s0 = std::move(s1);
        s1 = std::move(next);
    }
    if (r0.size() != 1) throw std::logic_error("CycloNumber: reducible modulus");
    CycloNumber out(conductor_);
    for (size_t i = 0; i < s0.size() && i < fd.deg; ++i)
        out.coeffs_[i] = s0[i] / r0[0];
    return out;
}

std::string CycloNumber::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        Rat c = coeffs_[i];
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        if (i == 0 || c != 1) os << to_string(c);
        if (i > 0) {
            if (c != 1) os << "*";
            os << "z";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

CycloNumber root_of_unity(const Rat& q, unsigned conductor) {
    if (q < 0 || q >= 1)
        throw std::invalid_argument("root_of_unity: charge outside [0, 1)");
    const Int& den = denominator(q);
    if (den > conductor || conductor % den.get_ui() != 0)
        throw std::invalid_argument("root_of_unity: denominator does not divide conductor");
    const FieldData& fd = field_data(conductor);
    unsigned e = mpz_class(numerator(q) * (conductor / den.get_ui())).get_ui();
    // zeta^e = x^e mod Phi: reduce by long division.
    RPoly p(e + 1, Rat(0));
    p[e] = 1;
    RPoly rem = divmod(std::move(p), fd.phi).second;
    CycloNumber out(conductor);
    for (size_t i = 0; i < rem.size(); ++i) out.coeffs_[i] = rem[i];
    return out;
}

}  // namespace torictodd
