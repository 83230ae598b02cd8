#include "torictodd/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace torictodd {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product: shape mismatch");
    IntMatrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j)
                out.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return out;
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

// row dst += f * row src
void add_row(IntMatrix& m, int dst, int src, const Int& f) {
    for (int c = 0; c < m.cols(); ++c) m.at(dst, c) += f * m.at(src, c);
}

// col dst += f * col src
void add_col(IntMatrix& m, int dst, int src, const Int& f) {
    for (int r = 0; r < m.rows(); ++r) m.at(r, dst) += f * m.at(r, src);
}

void negate_row(IntMatrix& m, int r) {
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

// Entry of smallest nonzero |value| in the submatrix starting at (i, i).
// Ties break to the lowest row index, then the lowest column index.
bool find_pivot(const IntMatrix& d, int i, int& pr, int& pc) {
    bool found = false;
    Int best;
    for (int r = i; r < d.rows(); ++r)
        for (int c = i; c < d.cols(); ++c) {
            if (d.at(r, c) == 0) continue;
            Int a = abs(d.at(r, c));
            if (!found || a < best) {
                found = true;
                best = a;
                pr = r;
                pc = c;
            }
        }
    return found;
}

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    const int m = a.rows();
    const int n = a.cols();
    SmithDecomposition out{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& d = out.d;

    const int k = std::min(m, n);
    for (int i = 0; i < k; ++i) {
        int pr, pc;
        if (!find_pivot(d, i, pr, pc)) break;  // remaining submatrix is zero
        for (;;) {
            swap_rows(d, i, pr);
            swap_rows(out.u, i, pr);
            swap_cols(d, i, pc);
            swap_cols(out.v, i, pc);
            // Reduce column i and row i modulo the pivot.  Remainders are
            // strictly smaller in absolute value, so re-picking the pivot
            // terminates.
            bool dirty = false;
            for (int r = i + 1; r < m; ++r) {
                if (d.at(r, i) == 0) continue;
                Int q = d.at(r, i) / d.at(i, i);
                add_row(d, r, i, -q);
                add_row(out.u, r, i, -q);
                if (d.at(r, i) != 0) dirty = true;
            }
            for (int c = i + 1; c < n; ++c) {
                if (d.at(i, c) == 0) continue;
                Int q = d.at(i, c) / d.at(i, i);
                add_col(d, c, i, -q);
                add_col(out.v, c, i, -q);
                if (d.at(i, c) != 0) dirty = true;
            }
            if (dirty) {
                find_pivot(d, i, pr, pc);
                continue;
            }
            // Pivot must divide every remaining entry; if not, fold the
            // offending row into row i and keep reducing.
            int br = -1, bc = -1;
            for (int r = i + 1; r < m && br < 0; ++r)
                for (int c = i + 1; c < n; ++c)
                    if (d.at(r, c) % d.at(i, i) != 0) {
                        br = r;
                        bc = c;
                        break;
                    }
            if (br < 0) break;
            add_row(d, i, br, 1);
            add_row(out.u, i, br, 1);
            find_pivot(d, i, pr, pc);
        }
    }
    for (int i = 0; i < k; ++i)
        if (d.at(i, i) < 0) {
            negate_row(d, i);
            negate_row(out.u, i);
        }
    return out;
}

Int determinant(const IntMatrix& a) {
    if (a.rows() != a.cols())
        throw std::invalid_argument("determinant: square matrix required");
    const int n = a.rows();
    if (n == 0) return 1;
    IntMatrix w = a;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            int r = k + 1;
            while (r < n && w.at(r, k) == 0) ++r;
            if (r == n) return 0;
            swap_rows(w, k, r);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                // Bareiss update: division by the previous pivot is exact.
                mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = w.at(k, k);
    }
    return sign > 0 ? w.at(n - 1, n - 1) : Int(-w.at(n - 1, n - 1));
}

bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) g = int_gcd(g, x);
    return g == 1;
}

namespace {

// Reduced row echelon form of an augmented system, in place.  Returns the
// pivot column of each pivot row.  aug = number of trailing columns that
// never produce pivots.
std::vector<int> rref(RatMatrix& w, int aug) {
    const int m = static_cast<int>(w.size());
    const int n = m ? static_cast<int>(w[0].size()) - aug : 0;
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int p = row;
        while (p < m && w[p][col] == 0) ++p;
        if (p == m) continue;
        std::swap(w[p], w[row]);
        Rat lead = w[row][col];
        for (int c = col; c < n + aug; ++c) w[row][c] /= lead;
        for (int r = 0; r < m; ++r) {
            if (r == row || w[r][col] == 0) continue;
            Rat f = w[r][col];
            for (int c = col; c < n + aug; ++c) w[r][c] -= f * w[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<std::vector<Rat>> solve_rational(const RatMatrix& a,
                                               const std::vector<Rat>& b) {
    const int m = static_cast<int>(a.size());
    if (b.size() != a.size())
        throw std::invalid_argument("solve_rational: rhs length mismatch");
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    RatMatrix w(m, RatRow(n + 1));
    for (int r = 0; r < m; ++r) {
        if (static_cast<int>(a[r].size()) != n)
            throw std::invalid_argument("solve_rational: ragged matrix");
        for (int c = 0; c < n; ++c) w[r][c] = a[r][c];
        w[r][n] = b[r];
    }
    std::vector<int> pivots = rref(w, 1);
    for (int r = static_cast<int>(pivots.size()); r < m; ++r)
        if (w[r][n] != 0) return std::nullopt;
    std::vector<Rat> x(n, Rat(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = w[i][n];
    return x;
}

int rational_rank(const RatMatrix& a) {
    RatMatrix w = a;
    return static_cast<int>(rref(w, 0).size());
}

std::vector<std::vector<Rat>> rational_nullspace(const RatMatrix& a) {
    RatMatrix w = a;
    std::vector<int> pivots = rref(w, 0);
    const int n = w.empty() ? 0 : static_cast<int>(w[0].size());
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(n, Rat(0));
        v[f] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w[i][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace torictodd
