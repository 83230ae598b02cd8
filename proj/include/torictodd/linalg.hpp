#pragma once

#include <optional>
#include <vector>

#include "torictodd/numeric.hpp"

namespace torictodd {

// Dense integer matrix, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const Int& at(int r, int c) const {
        return data_[static_cast<size_t>(r) * cols_ + c];
    }

    bool operator==(const IntMatrix&) const = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Int> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// u * a * v = d with u, v unimodular and d diagonal, every diagonal entry
// nonnegative and dividing the next one.
struct SmithDecomposition {
    IntMatrix u;
    IntMatrix d;
    IntMatrix v;
};

SmithDecomposition smith_normal_form(const IntMatrix& a);

// Determinant by fraction-free (Bareiss) elimination.
Int determinant(const IntMatrix& a);

// gcd of the coordinates is 1.  False for the zero vector.
bool is_primitive(const std::vector<Int>& v);

using RatRow = std::vector<Rat>;
using RatMatrix = std::vector<RatRow>;

// Solves a x = b over the rationals.  Deterministic: reduced row echelon form
// with leftmost pivots, free variables set to 0.  nullopt if inconsistent.
std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a,
                                               const std::vector<Rat>& b);

int rational_rank(const RatMatrix& a);

// Basis of {x : a x = 0}, one vector per free column of the echelon form.
std::vector<std::vector<Rat>> rational_nullspace(const RatMatrix& a);

}  // namespace torictodd
