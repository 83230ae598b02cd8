#include "torictodd/chow.hpp"

#include <algorithm>
#include <stdexcept>

#include "torictodd/linalg.hpp"

namespace torictodd {

void ChowClass::add(const std::vector<int>& cone, const CycloNumber& coeff) {
    if (coeff.is_zero()) return;
    auto [it, fresh] = terms_.emplace(cone, coeff);
    if (!fresh) {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ChowClass::add(const std::vector<int>& cone, const Rat& coeff) {
    add(cone, CycloNumber(conductor_, coeff));
}

std::set<int> ChowClass::degrees() const {
    std::set<int> out;
    for (const auto& [cone, coeff] : terms_)
        out.insert(static_cast<int>(cone.size()));
    return out;
}

ChowClass ChowClass::scaled(const CycloNumber& s) const {
    ChowClass out(conductor_);
    for (const auto& [cone, coeff] : terms_) out.add(cone, s * coeff);
    return out;
}

ChowClass ChowClass::scaled(const Rat& s) const {
    return scaled(CycloNumber(conductor_, s));
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
    if (conductor_ != rhs.conductor_)
        throw std::invalid_argument("ChowClass: conductor mismatch");
    for (const auto& [cone, coeff] : rhs.terms_) add(cone, coeff);
    return *this;
}

std::map<std::vector<int>, Rat> ChowClass::rational_terms() const {
    std::map<std::vector<int>, Rat> out;
    for (const auto& [cone, coeff] : terms_) {
        std::optional<Rat> r = coeff.as_rational();
        if (!r) throw rationality_error("Chow coefficient not rational: " +
                                        coeff.str());
        out.emplace(cone, *r);
    }
    return out;
}

ChowClass ChowClass::from_rational(
    unsigned conductor, const std::map<std::vector<int>, Rat>& terms) {
    ChowClass out(conductor);
    for (const auto& [cone, coeff] : terms) out.add(cone, coeff);
    return out;
}

ChowRing::ChowRing(const Fan& f, unsigned conductor)
    : fan_(f), conductor_(conductor) {
    if (!f.is_complete())
        throw incomplete_fan_error(
            "Chow ring reduction requires a complete fan");
}

ChowClass ChowRing::divisor_class(int ray) const {
    if (ray < 0 || ray >= fan_.ray_count())
        throw std::invalid_argument("divisor_class: ray index out of range");
    ChowClass out(conductor_);
    out.add(std::vector<int>{ray}, Rat(1));
    return out;
}

std::map<std::vector<int>, Rat> ChowRing::step_off(
    const std::vector<int>& sigma, int ray) const {
    std::vector<int> gamma = sigma;
    gamma.insert(std::lower_bound(gamma.begin(), gamma.end(), ray), ray);
    std::map<std::vector<int>, Rat> out;
    if (fan_.has_cone(gamma)) {
        Rat ratio = make_rat(fan_.multiplicity(sigma), fan_.multiplicity(gamma));
        out.emplace(std::move(gamma), ratio);
    }
    return out;
}

std::map<std::vector<int>, Rat> ChowRing::step_diag(
    const std::vector<int>& sigma, int ray,
    const std::vector<Rat>* functional) const {
    const int d = fan_.dim();
    const auto& rays = fan_.rays();
    size_t pos = std::find(sigma.begin(), sigma.end(), ray) - sigma.begin();
    if (pos == sigma.size())
        throw std::invalid_argument("step_diag: ray not in cone");

    std::vector<Rat> m;
    if (functional) {
        m = *functional;
        if (static_cast<int>(m.size()) != d)
            throw std::invalid_argument("step_diag: functional has wrong size");
    } else {
        RatMatrix a;
        std::vector<Rat> b;
        for (size_t i = 0; i < sigma.size(); ++i) {
            RatRow row(d);
            for (int j = 0; j < d; ++j) row[j] = Rat(rays[sigma[i]][j]);
            a.push_back(std::move(row));
            b.emplace_back(i == pos ? 1 : 0);
        }
        std::optional<std::vector<Rat>> sol = solve_rational(a, b);
        if (!sol)
            throw std::logic_error("step_diag: dual functional must exist");
        m = std::move(*sol);
    }
    // The functional must be dual to the ray within the cone.
    for (size_t i = 0; i < sigma.size(); ++i) {
        Rat v(0);
        for (int j = 0; j < d; ++j) v += m[j] * Rat(rays[sigma[i]][j]);
        if (v != Rat(i == pos ? 1 : 0))
            throw std::invalid_argument("step_diag: functional not dual to ray");
    }

    // sum_tau <m, n_tau> F_tau = 0 in the ring, so
    // [V(sigma)] F_ray = - sum_{tau outside sigma} <m, n_tau> [V(sigma)] F_tau.
    std::map<std::vector<int>, Rat> out;
    for (int tau = 0; tau < fan_.ray_count(); ++tau) {
        if (std::binary_search(sigma.begin(), sigma.end(), tau)) continue;
        Rat pairing(0);
        for (int j = 0; j < d; ++j) pairing += m[j] * Rat(rays[tau][j]);
        if (pairing == 0) continue;
        for (const auto& [gamma, r] : step_off(sigma, tau)) {
            Rat& acc = out[gamma];
            acc -= pairing * r;
            if (acc == 0) out.erase(gamma);
        }
    }
    return out;
}

const std::map<std::vector<int>, Rat>& ChowRing::step_diag_cached(
    const std::vector<int>& sigma, int ray) const {
    auto key = std::make_pair(sigma, ray);
    auto it = diag_cache_.find(key);
    if (it == diag_cache_.end())
        it = diag_cache_.emplace(std::move(key), step_diag(sigma, ray)).first;
    return it->second;
}

ChowClass ChowRing::multiply_by_divisor(const ChowClass& c, int ray) const {
    if (ray < 0 || ray >= fan_.ray_count())
        throw std::invalid_argument("multiply_by_divisor: ray out of range");
    ChowClass out(c.conductor());
    for (const auto& [sigma, coeff] : c.terms()) {
        const bool inside =
            std::binary_search(sigma.begin(), sigma.end(), ray);
        if (inside) {
            for (const auto& [gamma, r] : step_diag_cached(sigma, ray))
                out.add(gamma, r * coeff);
        } else {
            for (const auto& [gamma, r] : step_off(sigma, ray))
                out.add(gamma, r * coeff);
        }
    }
    return out;
}

ChowClass ChowRing::multiply_by_combination(const ChowClass& c,
                                            const std::vector<Int>& coeffs) const {
    if (static_cast<int>(coeffs.size()) != fan_.ray_count())
        throw std::invalid_argument("multiply_by_combination: length mismatch");
    ChowClass out(c.conductor());
    for (int ray = 0; ray < fan_.ray_count(); ++ray) {
        if (coeffs[ray] == 0) continue;
        out += multiply_by_divisor(c, ray).scaled(Rat(coeffs[ray]));
    }
    return out;
}

ChowClass ChowRing::monomial(const std::vector<int>& rays_multiset) const {
    return ChowClass::from_rational(conductor_,
                                    monomial_reduced(rays_multiset));
}

const std::map<std::vector<int>, Rat>& ChowRing::monomial_reduced(
    std::vector<int> rays_multiset) const {
    std::sort(rays_multiset.begin(), rays_multiset.end());
    for (int r : rays_multiset)
        if (r < 0 || r >= fan_.ray_count())
            throw std::invalid_argument("monomial: ray index out of range");
    auto it = monomial_cache_.find(rays_multiset);
    if (it != monomial_cache_.end()) return it->second;

    std::map<std::vector<int>, Rat> acc{{std::vector<int>{}, Rat(1)}};
    for (int ray : rays_multiset) {
        std::map<std::vector<int>, Rat> next;
        for (const auto& [sigma, x] : acc) {
            const bool inside =
                std::binary_search(sigma.begin(), sigma.end(), ray);
            const std::map<std::vector<int>, Rat>& steps =
                inside ? step_diag_cached(sigma, ray) : step_off(sigma, ray);
            for (const auto& [gamma, r] : steps) {
                Rat& a = next[gamma];
                a += r * x;
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        acc = std::move(next);
    }
    return monomial_cache_.emplace(std::move(rays_multiset), std::move(acc))
        .first->second;
}

CycloNumber ChowRing::integrate(const ChowClass& c) const {
    CycloNumber out(c.conductor());
    for (const auto& [cone, coeff] : c.terms())
        if (static_cast<int>(cone.size()) == fan_.dim()) out += coeff;
    return out;
}

bool ChowRing::equal(const ChowClass& a, const ChowClass& b) const {
    std::set<int> degs = a.degrees();
    for (int k : b.degrees()) degs.insert(k);
    if (degs.size() > 1)
        throw std::invalid_argument("chow equality requires pure degrees");
    if (degs.empty()) return true;
    const int k = *degs.begin();

    ChowClass diff = a;
    diff += b.scaled(Rat(-1));
    if (diff.is_zero()) return true;
    // Pair with every square-free complementary monomial.
    for (const Cone& delta : fan_.cones_by_dim()[fan_.dim() - k]) {
        ChowClass c = diff;
        for (int ray : delta.rays) c = multiply_by_divisor(c, ray);
        if (!integrate(c).is_zero()) return false;
    }
    return true;
}

}  // namespace torictodd
