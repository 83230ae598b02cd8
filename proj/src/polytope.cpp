#include "torictodd/polytope.hpp"

#include <stdexcept>

#include "torictodd/linalg.hpp"

namespace torictodd {

DivisorPolytope polytope_of_divisor(const Fan& f, const Divisor& d) {
    if (static_cast<int>(d.coeffs.size()) != f.ray_count())
        throw std::invalid_argument("divisor length does not match ray count");
    if (!f.is_complete())
        throw incomplete_fan_error("divisor polytope requires a complete fan");

    DivisorPolytope p;
    p.dim = f.dim();
    p.normals = f.rays();
    for (const Int& a : d.coeffs) p.rhs.push_back(-a);

    for (const std::vector<int>& cone : f.max_cones()) {
        RatMatrix a;
        std::vector<Rat> b;
        for (int r : cone) {
            RatRow row(p.dim);
            for (int j = 0; j < p.dim; ++j) row[j] = Rat(f.rays()[r][j]);
            a.push_back(std::move(row));
            b.emplace_back(-d.coeffs[r]);
        }
        std::optional<std::vector<Rat>> v = solve_rational(a, b);
        if (!v) throw std::logic_error("cone-vertex solve must succeed");
        p.vertices.push_back(std::move(*v));
    }

    p.box_lo.assign(p.dim, 0);
    p.box_hi.assign(p.dim, 0);
    for (int j = 0; j < p.dim; ++j) {
        Rat lo = p.vertices[0][j], hi = lo;
        for (const std::vector<Rat>& v : p.vertices) {
            if (v[j] < lo) lo = v[j];
            if (v[j] > hi) hi = v[j];
        }
        p.box_lo[j] = floor_int(lo);
        p.box_hi[j] = ceil_int(hi);
    }
    return p;
}

bool is_nef(const Fan& f, const Divisor& d) {
    DivisorPolytope p = polytope_of_divisor(f, d);
    for (const std::vector<Rat>& v : p.vertices)
        for (size_t i = 0; i < p.normals.size(); ++i) {
            Rat dot(0);
            for (int j = 0; j < p.dim; ++j) dot += v[j] * Rat(p.normals[i][j]);
            if (dot < Rat(p.rhs[i])) return false;
        }
    return true;
}

Int count_lattice_points(const DivisorPolytope& p, bool interior) {
    for (int j = 0; j < p.dim; ++j)
        if (p.box_lo[j] > p.box_hi[j]) return 0;

    Int count = 0;
    std::vector<Int> m = p.box_lo;
    for (;;) {
        bool in = true;
        for (size_t i = 0; in && i < p.normals.size(); ++i) {
            Int dot = 0;
            for (int j = 0; j < p.dim; ++j) dot += m[j] * p.normals[i][j];
            in = interior ? dot > p.rhs[i] : dot >= p.rhs[i];
        }
        if (in) ++count;

        int j = 0;
        while (j < p.dim && m[j] == p.box_hi[j]) m[j++] = p.box_lo[j];
        if (j == p.dim) break;
        m[j] += 1;
    }
    return count;
}

}  // namespace torictodd
