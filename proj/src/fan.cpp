#include "torictodd/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "torictodd/linalg.hpp"

namespace torictodd {

namespace {

// Closed linear constraint coef . x >= rhs.
struct Constraint {
    std::vector<Rat> coef;
    Rat rhs;

    bool operator<(const Constraint& o) const {
        if (coef != o.coef) return coef < o.coef;
        return rhs < o.rhs;
    }
};

// Divide by the absolute value of the first nonzero coefficient, so rows
// equal up to positive scaling deduplicate.
void normalize(Constraint& c) {
    for (const Rat& x : c.coef) {
        if (x == 0) continue;
        Rat s = abs(x);
        for (Rat& y : c.coef) y /= s;
        c.rhs /= s;
        return;
    }
}

// Exact Fourier-Motzkin feasibility for a system of closed constraints.
bool feasible(std::vector<Constraint> rows, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        std::vector<Constraint> pos, neg;
        std::set<Constraint> next;
        for (Constraint& r : rows) {
            const Rat& c = r.coef[v];
            if (c > 0)
                pos.push_back(std::move(r));
            else if (c < 0)
                neg.push_back(std::move(r));
            else
                next.insert(std::move(r));
        }
        for (const Constraint& p : pos)
            for (const Constraint& n : neg) {
                // Nonnegative combination cancelling variable v.
                Rat a = p.coef[v], b = -n.coef[v];
                Constraint c;
                c.coef.resize(nvars);
                for (int i = 0; i < nvars; ++i)
                    c.coef[i] = b * p.coef[i] + a * n.coef[i];
                c.rhs = b * p.rhs + a * n.rhs;
                normalize(c);
                next.insert(std::move(c));
            }
        rows.assign(next.begin(), next.end());
    }
    for (const Constraint& r : rows)
        if (r.rhs > 0) return false;  // 0 >= positive
    return true;
}

// Is there a functional zero on the shared rays of a and b, >= 1 on the rays
// only in a, and <= -1 on the rays only in b?  Existence certifies that the
// two cones meet exactly along the face spanned by their shared rays.
bool separating_functional_exists(const std::vector<std::vector<Int>>& rays,
                                  const std::vector<int>& a,
                                  const std::vector<int>& b, int dim) {
    std::set<int> in_a(a.begin(), a.end()), in_b(b.begin(), b.end());
    std::vector<Constraint> rows;
    auto row_for = [&](int ray, const Rat& sign, const Rat& rhs) {
        Constraint c;
        c.coef.resize(dim);
        for (int i = 0; i < dim; ++i) c.coef[i] = sign * Rat(rays[ray][i]);
        c.rhs = rhs;
        normalize(c);
        rows.push_back(std::move(c));
    };
    for (int r : a) {
        if (in_b.count(r)) {
            row_for(r, Rat(1), Rat(0));   //  <u, n> >= 0
            row_for(r, Rat(-1), Rat(0));  //  <u, n> <= 0
        } else {
            row_for(r, Rat(1), Rat(1));   //  <u, n> >= 1
        }
    }
    for (int r : b)
        if (!in_a.count(r)) row_for(r, Rat(-1), Rat(1));  //  <u, n> <= -1
    return feasible(std::move(rows), dim);
}

int rank_of(const std::vector<std::vector<Int>>& rays,
            const std::vector<int>& cone, int dim) {
    RatMatrix m;
    for (int r : cone) {
        RatRow row(dim);
        for (int i = 0; i < dim; ++i) row[i] = Rat(rays[r][i]);
        m.push_back(std::move(row));
    }
    return rational_rank(m);
}

Int cone_multiplicity(const std::vector<std::vector<Int>>& rays,
                      const std::vector<int>& cone, int dim) {
    if (cone.empty()) return 1;
    IntMatrix a(dim, static_cast<int>(cone.size()));
    for (size_t j = 0; j < cone.size(); ++j)
        for (int i = 0; i < dim; ++i) a.at(i, static_cast<int>(j)) = rays[cone[j]][i];
    SmithDecomposition snf = smith_normal_form(a);
    Int m = 1;
    for (int i = 0; i < std::min(a.rows(), a.cols()); ++i)
        if (snf.d.at(i, i) != 0) m *= snf.d.at(i, i);
    return m;
}

std::string cone_str(const std::vector<int>& cone) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < cone.size(); ++i)
        os << (i ? "," : "") << cone[i];
    os << "}";
    return os.str();
}

}  // namespace

ValidationReport validate_fan(int dim,
                              const std::vector<std::vector<Int>>& rays,
                              const std::vector<std::vector<int>>& max_cones,
                              bool pairwise) {
    ValidationReport rep;
    auto bad = [&](const std::string& msg) { rep.violations.push_back(msg); };

    if (dim < 1) bad("dimension must be >= 1");
    for (size_t i = 0; i < rays.size(); ++i) {
        if (static_cast<int>(rays[i].size()) != dim) {
            bad("ray " + std::to_string(i) + " has wrong length");
            continue;
        }
        if (!is_primitive(rays[i]))
            bad("ray " + std::to_string(i) + " not primitive");
        for (size_t j = 0; j < i; ++j)
            if (rays[j] == rays[i])
                bad("ray " + std::to_string(i) + " duplicates ray " +
                    std::to_string(j));
    }

    std::vector<bool> used(rays.size(), false);
    bool cones_well_formed = true;
    for (size_t c = 0; c < max_cones.size(); ++c) {
        const std::vector<int>& cone = max_cones[c];
        std::string label = "max cone " + std::to_string(c) + " " + cone_str(cone);
        if (cone.empty()) {
            bad(label + " is empty");
            cones_well_formed = false;
            continue;
        }
        bool in_range = true;
        for (int r : cone)
            if (r < 0 || r >= static_cast<int>(rays.size())) {
                bad(label + " has ray index out of range");
                in_range = false;
            }
        if (!in_range) {
            cones_well_formed = false;
            continue;
        }
        std::set<int> uniq(cone.begin(), cone.end());
        if (uniq.size() != cone.size()) {
            bad(label + " repeats a ray index");
            cones_well_formed = false;
            continue;
        }
        for (int r : cone) used[r] = true;
        if (static_cast<int>(cone.size()) > dim ||
            rank_of(rays, cone, dim) != static_cast<int>(cone.size())) {
            bad(label + " has linearly dependent rays");
            cones_well_formed = false;
        }
    }
    for (size_t r = 0; r < rays.size(); ++r)
        if (!used[r]) bad("ray " + std::to_string(r) + " not used by any cone");

    if (!cones_well_formed || !rep.ok()) return rep;

    std::vector<std::set<int>> sets;
    sets.reserve(max_cones.size());
    for (const std::vector<int>& c : max_cones) sets.emplace_back(c.begin(), c.end());
    for (size_t i = 0; i < sets.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            if (std::includes(sets[i].begin(), sets[i].end(), sets[j].begin(),
                              sets[j].end()) ||
                std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                              sets[i].end())) {
                bad("max cone " + cone_str(max_cones[i]) + " contains max cone " +
                    cone_str(max_cones[j]));
                continue;
            }
            if (pairwise &&
                !separating_functional_exists(rays, max_cones[i], max_cones[j], dim))
                bad("max cones " + cone_str(max_cones[i]) + " and " +
                    cone_str(max_cones[j]) + " overlap without a common face");
        }
    return rep;
}

Fan::Fan(int dim, std::vector<std::vector<Int>> rays,
         std::vector<std::vector<int>> max_cones, std::string name,
         bool pairwise)
    : dim_(dim), name_(std::move(name)), rays_(std::move(rays)) {
    ValidationReport rep = validate_fan(dim_, rays_, max_cones, pairwise);
    if (!rep.ok()) {
        std::string msg = "invalid fan";
        if (!name_.empty()) msg += " \"" + name_ + "\"";
        for (const std::string& v : rep.violations) msg += "\n  " + v;
        throw invalid_fan_error(msg);
    }
    max_cones_.reserve(max_cones.size());
    for (std::vector<int>& c : max_cones) {
        std::sort(c.begin(), c.end());
        max_cones_.push_back(std::move(c));
    }

    // Faces of simplicial cones are exactly the ray subsets.
    std::set<std::vector<int>> seen;
    for (const std::vector<int>& c : max_cones_) {
        const size_t k = c.size();
        for (size_t mask = 0; mask < (size_t{1} << k); ++mask) {
            std::vector<int> face;
            for (size_t b = 0; b < k; ++b)
                if (mask & (size_t{1} << b)) face.push_back(c[b]);
            seen.insert(std::move(face));
        }
    }
    seen.insert(std::vector<int>{});  // zero cone, even for an empty fan
    by_dim_.resize(dim_ + 1);
    for (const std::vector<int>& face : seen) {
        Cone cone{face, cone_multiplicity(rays_, face, dim_)};
        mult_.emplace(face, cone.multiplicity);
        by_dim_[face.size()].push_back(std::move(cone));
    }

    // Wall-pairing completeness: pure full-dimensional and every (d-1)-face
    // shared by exactly two maximal cones.
    complete_ = !max_cones_.empty();
    std::map<std::vector<int>, int> wall_count;
    for (const std::vector<int>& c : max_cones_) {
        if (static_cast<int>(c.size()) != dim_) {
            complete_ = false;
            break;
        }
        for (size_t drop = 0; drop < c.size(); ++drop) {
            std::vector<int> wall;
            for (size_t i = 0; i < c.size(); ++i)
                if (i != drop) wall.push_back(c[i]);
            ++wall_count[wall];
        }
    }
    if (complete_)
        for (const auto& [wall, count] : wall_count)
            if (count != 2) {
                complete_ = false;
                break;
            }

    smooth_ = true;
    for (const std::vector<int>& c : max_cones_)
        if (mult_.at(c) != 1) {
            smooth_ = false;
            break;
        }
}

Fan Fan::validated(int dim, std::vector<std::vector<Int>> rays,
                   std::vector<std::vector<int>> max_cones, std::string name) {
    return Fan(dim, std::move(rays), std::move(max_cones), std::move(name), true);
}

Fan Fan::trusted(int dim, std::vector<std::vector<Int>> rays,
                 std::vector<std::vector<int>> max_cones, std::string name) {
    return Fan(dim, std::move(rays), std::move(max_cones), std::move(name), false);
}

bool Fan::has_cone(const std::vector<int>& sorted_rays) const {
    return mult_.count(sorted_rays) != 0;
}

const Int& Fan::multiplicity(const std::vector<int>& sorted_rays) const {
    auto it = mult_.find(sorted_rays);
    if (it == mult_.end())
        throw std::invalid_argument("multiplicity: not a cone of the fan");
    return it->second;
}

}  // namespace torictodd
