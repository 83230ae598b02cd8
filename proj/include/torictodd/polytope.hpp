#pragma once

#include <vector>

#include "torictodd/fan.hpp"
#include "torictodd/numeric.hpp"

namespace torictodd {

// Integer coefficients a_tau per ray: D = sum a_tau V(tau), with polytope
// P = {m : <m, n_tau> >= -a_tau}.
struct Divisor {
    std::vector<Int> coeffs;

    Divisor scaled(const Int& n) const {
        Divisor out = *this;
        for (Int& a : out.coeffs) a *= n;
        return out;
    }
};

// H-representation of the divisor polytope together with the per-cone
// vertices and an integer bounding box.  For a complete fan the box always
// contains P: the maximum of any linear functional over P is attained at one
// of the cone-vertex solutions.
struct DivisorPolytope {
    int dim = 0;
    std::vector<std::vector<Int>> normals;  // the fan's rays
    std::vector<Int> rhs;                   // -a_tau, aligned with normals
    std::vector<std::vector<Rat>> vertices; // one per maximal cone
    std::vector<Int> box_lo, box_hi;        // componentwise floor/ceil
};

// Requires a complete fan (finite box) and a divisor aligned with the rays.
DivisorPolytope polytope_of_divisor(const Fan& f, const Divisor& d);

// True iff the support function is convex: every cone-vertex functional
// satisfies all the inequalities.
bool is_nef(const Fan& f, const Divisor& d);

// Exact scan of the integer bounding box; strict inequalities when interior.
Int count_lattice_points(const DivisorPolytope& p, bool interior = false);

}  // namespace torictodd
