#pragma once

#include <map>
#include <string>
#include <vector>

#include "torictodd/errors.hpp"
#include "torictodd/numeric.hpp"

namespace torictodd {

// Cone of a simplicial fan: the sorted ray indices spanning it.  The zero
// cone is the empty list.  Multiplicity is the index of the sublattice
// spanned by the rays inside the lattice points of their span.
struct Cone {
    std::vector<int> rays;
    Int multiplicity;

    int dim() const { return static_cast<int>(rays.size()); }
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Structural checks on raw fan data; reports every violation found.
// When pairwise is set, also certifies that any two maximal cones intersect
// in a common face by finding an exact rational separating functional
// (zero on shared rays, positive on one side, negative on the other).
ValidationReport validate_fan(int dim,
                              const std::vector<std::vector<Int>>& rays,
                              const std::vector<std::vector<int>>& max_cones,
                              bool pairwise = true);

// Immutable simplicial fan.  Ray order is fixed at construction and defines
// the indexing used by divisors, characters and Chow generators throughout.
class Fan {
public:
    // Full validation; throws invalid_fan_error listing every violation.
    static Fan validated(int dim, std::vector<std::vector<Int>> rays,
                         std::vector<std::vector<int>> max_cones,
                         std::string name = "");
    // Skips the quadratic pairwise-intersection check; the cheap structural
    // checks still run.
    static Fan trusted(int dim, std::vector<std::vector<Int>> rays,
                       std::vector<std::vector<int>> max_cones,
                       std::string name = "");

    int dim() const { return dim_; }
    const std::string& name() const { return name_; }
    const std::vector<std::vector<Int>>& rays() const { return rays_; }
    int ray_count() const { return static_cast<int>(rays_.size()); }
    // Sorted ascending, as loaded.
    const std::vector<std::vector<int>>& max_cones() const { return max_cones_; }

    // All cones grouped by dimension: index k lists the k-dimensional cones.
    // Contains the zero cone, all rays, and every face of every maximal cone.
    const std::vector<std::vector<Cone>>& cones_by_dim() const { return by_dim_; }

    bool has_cone(const std::vector<int>& sorted_rays) const;
    // Throws invalid_argument if the index set is not a cone of the fan.
    const Int& multiplicity(const std::vector<int>& sorted_rays) const;

    bool is_complete() const { return complete_; }
    bool is_smooth() const { return smooth_; }

private:
    Fan(int dim, std::vector<std::vector<Int>> rays,
        std::vector<std::vector<int>> max_cones, std::string name,
        bool pairwise);

    int dim_ = 0;
    std::string name_;
    std::vector<std::vector<Int>> rays_;
    std::vector<std::vector<int>> max_cones_;
    std::vector<std::vector<Cone>> by_dim_;
    std::map<std::vector<int>, Int> mult_;
    bool complete_ = false;
    bool smooth_ = false;
};

}  // namespace torictodd
