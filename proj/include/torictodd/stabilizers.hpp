#pragma once

#include <vector>

#include "torictodd/fan.hpp"
#include "torictodd/numeric.hpp"

namespace torictodd {

// Element g of the stabilizer group attached to a cone of the Cox quotient,
// identified by its charge vector over all rays: a_tau(g) = e^(2 pi i q_tau).
struct GroupElement {
    std::vector<Rat> charges;   // one per fan ray, each in [0, 1)
    std::vector<int> support;   // sorted indices with nonzero charge
    unsigned order = 1;         // lcm of charge denominators

    bool is_identity() const { return support.empty(); }
    bool operator==(const GroupElement&) const = default;
};

GroupElement make_element(std::vector<Rat> charges);

// The mult(sigma) elements whose charges are supported on the cone: classes
// of z with sum_j z_j n_j integral, modulo Z^k, enumerated through the Smith
// decomposition of the ray-column matrix.
std::vector<GroupElement> stabilizer_of_cone(const Fan& f,
                                             const std::vector<int>& cone);

// Union of the stabilizers of all cones: the finite set of group elements
// with nonempty fixed locus, indexing the terms of the Todd formula.
struct SupportSet {
    std::vector<GroupElement> elements;  // lexicographic by charge vector
    unsigned conductor = 1;              // lcm of element orders
};

SupportSet support_set(const Fan& f);

// charges q -> (1 - q) mod 1; stays inside the same support set.
GroupElement element_inverse(const GroupElement& g);

}  // namespace torictodd
