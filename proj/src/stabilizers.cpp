#include "torictodd/stabilizers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "torictodd/linalg.hpp"

namespace torictodd {

GroupElement make_element(std::vector<Rat> charges) {
    GroupElement g;
    g.charges = std::move(charges);
    Int ord = 1;
    for (size_t i = 0; i < g.charges.size(); ++i) {
        const Rat& q = g.charges[i];
        if (q < 0 || q >= 1)
            throw std::invalid_argument("group element charge outside [0, 1)");
        if (q != 0) g.support.push_back(static_cast<int>(i));
        ord = int_lcm(ord, denominator(q));
    }
    g.order = static_cast<unsigned>(ord.get_ui());
    return g;
}

std::vector<GroupElement> stabilizer_of_cone(const Fan& f,
                                             const std::vector<int>& cone) {
    const int d = f.dim();
    const int k = static_cast<int>(cone.size());
    if (k == 0) return {make_element(std::vector<Rat>(f.ray_count(), Rat(0)))};

    IntMatrix a(d, k);  // columns are the cone's rays
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < d; ++i) a.at(i, j) = f.rays()[cone[j]][i];
    SmithDecomposition snf = smith_normal_form(a);
    for (int j = 0; j < k; ++j)
        if (j >= d || snf.d.at(j, j) == 0)
            throw std::invalid_argument("stabilizer_of_cone: dependent rays");

    // a z integral  <=>  d w integral for w = v^{-1} z, so the classes mod
    // Z^k are w_j = c_j / d_j; push back through v and reduce mod 1.
    std::vector<GroupElement> out;
    std::vector<Int> c(k, 0);
    for (;;) {
        std::vector<Rat> charges(f.ray_count(), Rat(0));
        for (int i = 0; i < k; ++i) {
            Rat z(0);
            for (int j = 0; j < k; ++j)
                z += Rat(snf.v.at(i, j)) * make_rat(c[j], snf.d.at(j, j));
            charges[cone[i]] = mod_one(z);
        }
        out.push_back(make_element(std::move(charges)));
        int j = 0;
        while (j < k && c[j] + 1 == snf.d.at(j, j)) c[j++] = 0;
        if (j == k) break;
        c[j] += 1;
    }
    return out;
}

SupportSet support_set(const Fan& f) {
    std::set<std::vector<Rat>> seen;
    for (const std::vector<int>& cone : f.max_cones())
        for (GroupElement& g : stabilizer_of_cone(f, cone))
            seen.insert(std::move(g.charges));
    if (seen.empty())  // fan without maximal cones still has the identity
        seen.insert(std::vector<Rat>(f.ray_count(), Rat(0)));

    SupportSet out;
    Int cond = 1;
    for (const std::vector<Rat>& charges : seen) {
        GroupElement g = make_element(charges);
        cond = int_lcm(cond, Int(g.order));
        out.elements.push_back(std::move(g));
    }
    out.conductor = static_cast<unsigned>(cond.get_ui());
    return out;
}

GroupElement element_inverse(const GroupElement& g) {
    std::vector<Rat> charges = g.charges;
    for (Rat& q : charges)
        if (q != 0) q = Rat(1) - q;
    return make_element(std::move(charges));
}

}  // namespace torictodd
