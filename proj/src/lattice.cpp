#include "rotorlab/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rotorlab {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntVector IntMatrix::apply(const IntVector& x) const {
    if (static_cast<int>(x.size()) != cols_) {
        throw std::invalid_argument("matrix-vector size mismatch");
    }
    IntVector y(rows_);
    for (int r = 0; r < rows_; ++r) {
        BigInt acc = 0;
        for (int c = 0; c < cols_; ++c) acc += (*this)(r, c) * x[c];
        y[r] = std::move(acc);
    }
    return y;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
}

void IntMatrix::add_row_multiple(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int c = 0; c < cols_; ++c) (*this)(dst, c) += q * (*this)(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const BigInt& q) {
    if (q == 0) return;
    for (int r = 0; r < rows_; ++r) (*this)(r, dst) += q * (*this)(r, src);
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product size mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
    return c;
}

IntMatrix SmithDecomposition::diagonal(int rows, int cols) const {
    IntMatrix d(rows, cols);
    for (int i = 0; i < rank(); ++i) d(i, i) = factors[i];
    return d;
}

namespace {

// Quotient with remainder of minimal absolute value; guarantees the
// remainder shrinks strictly at every elimination step.
BigInt nearest_quotient(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    BigInt r = a - q * b;
    if (2 * abs(r) > abs(b)) {
        q += ((r > 0) == (b > 0)) ? 1 : -1;
    }
    return q;
}

// Position of a minimal-absolute-value nonzero entry of a in the submatrix
// starting at (t, t); {-1, -1} if the submatrix is zero.
std::pair<int, int> min_pivot(const IntMatrix& a, int t) {
    std::pair<int, int> best{-1, -1};
    BigInt best_abs = 0;
    for (int i = t; i < a.rows(); ++i) {
        for (int j = t; j < a.cols(); ++j) {
            if (a(i, j) == 0) continue;
            BigInt v = abs(a(i, j));
            if (best.first == -1 || v < best_abs) {
                best = {i, j};
                best_abs = v;
            }
        }
    }
    return best;
}

}  // namespace

SmithDecomposition smith_normal_form(IntMatrix a) {
    const int m = a.rows();
    const int n = a.cols();
    SmithDecomposition d;
    d.left = IntMatrix::identity(m);
    d.right = IntMatrix::identity(n);

    int t = 0;
    const int bound = std::min(m, n);
    while (t < bound) {
        auto [pi, pj] = min_pivot(a, t);
        if (pi == -1) break;
        a.swap_rows(t, pi);
        d.left.swap_rows(t, pi);
        a.swap_cols(t, pj);
        d.right.swap_cols(t, pj);

        bool settled = false;
        while (!settled) {
            settled = true;
            for (int i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                BigInt q = nearest_quotient(a(i, t), a(t, t));
                a.add_row_multiple(i, t, -q);
                d.left.add_row_multiple(i, t, -q);
                if (a(i, t) != 0) {
                    // Residue is strictly smaller; promote it to the pivot.
                    a.swap_rows(t, i);
                    d.left.swap_rows(t, i);
                    settled = false;
                }
            }
            for (int j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                BigInt q = nearest_quotient(a(t, j), a(t, t));
                a.add_col_multiple(j, t, -q);
                d.right.add_col_multiple(j, t, -q);
                if (a(t, j) != 0) {
                    a.swap_cols(t, j);
                    d.right.swap_cols(t, j);
                    settled = false;
                }
            }
            if (settled) {
                // Enforce divisibility of the remaining block by the pivot.
                for (int i = t + 1; i < m && settled; ++i) {
                    for (int j = t + 1; j < n; ++j) {
                        if (a(i, j) % a(t, t) != 0) {
                            a.add_row_multiple(t, i, 1);
                            d.left.add_row_multiple(t, i, 1);
                            settled = false;
                            break;
                        }
                    }
                }
            }
        }
        if (a(t, t) < 0) {
            a.negate_row(t);
            d.left.negate_row(t);
        }
        d.factors.push_back(a(t, t));
        ++t;
    }
    return d;
}

IntMatrix laplacian(const RibbonDigraph& g) {
    const int n = g.vertex_count();
    IntMatrix l(n, n);
    for (int v = 0; v < n; ++v) {
        l(v, v) = -g.out_degree(v);
        for (auto [w, mult] : g.out_counts(v)) l(w, v) += mult;
    }
    return l;
}

IntVector period_vector(const RibbonDigraph& g) {
    const int n = g.vertex_count();
    IntMatrix l = laplacian(g);

    // Exact rational row reduction to reduced echelon form.
    std::vector<std::vector<BigRat>> a(n, std::vector<BigRat>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = BigRat(l(i, j));
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int p = -1;
        for (int i = row; i < n; ++i) {
            if (a[i][col] != 0) {
                p = i;
                break;
            }
        }
        if (p == -1) continue;
        std::swap(a[row], a[p]);
        BigRat inv = a[row][col];
        for (int j = col; j < n; ++j) a[row][j] /= inv;
        for (int i = 0; i < n; ++i) {
            if (i == row || a[i][col] == 0) continue;
            BigRat f = a[i][col];
            for (int j = col; j < n; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row != n - 1) {
        throw std::logic_error("Laplacian rank is not n - 1");
    }

    // One free column; kernel vector has 1 there and -entry at each pivot.
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    int free_col = -1;
    for (int c = 0; c < n; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    std::vector<BigRat> kernel(n);
    kernel[free_col] = 1;
    for (int r = 0; r < row; ++r) kernel[pivot_col[r]] = -a[r][free_col];

    BigInt denom_lcm = 1;
    for (const BigRat& q : kernel) {
        BigInt den = boost::multiprecision::denominator(q);
        denom_lcm = denom_lcm / big_gcd(denom_lcm, den) * den;
    }
    IntVector per(n);
    for (int v = 0; v < n; ++v) {
        BigRat scaled = kernel[v] * BigRat(denom_lcm);
        per[v] = boost::multiprecision::numerator(scaled);
    }
    BigInt gcd = vector_gcd(per);
    for (BigInt& x : per) x /= gcd;
    if (per[free_col] < 0) {
        for (BigInt& x : per) x = -x;
    }
    for (const BigInt& x : per) {
        if (x <= 0) throw std::logic_error("period vector is not positive");
    }
    return per;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    if (static_cast<int>(b.size()) != a.rows()) {
        throw std::invalid_argument("right-hand side size mismatch");
    }
    SmithDecomposition d = smith_normal_form(a);
    IntVector c = d.left.apply(b);
    IntVector y(a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        if (i < d.rank()) {
            if (c[i] % d.factors[i] != 0) return std::nullopt;
            y[i] = c[i] / d.factors[i];
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return d.right.apply(y);
}

std::optional<IntVector> firing_witness(const RibbonDigraph& g, const Divisor& x,
                                        const Divisor& y) {
    const int n = g.vertex_count();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n) {
        throw std::invalid_argument("divisor size does not match vertex count");
    }
    if (divisor_degree(x) != divisor_degree(y)) return std::nullopt;
    IntVector b(n);
    for (int v = 0; v < n; ++v) b[v] = y[v] - x[v];
    return solve_integer(laplacian(g), b);
}

IntVector nonneg_shift(const RibbonDigraph& g, const IntVector& z) {
    IntVector per = period_vector(g);
    const int n = g.vertex_count();
    if (static_cast<int>(z.size()) != n) {
        throw std::invalid_argument("vector size does not match vertex count");
    }
    BigInt k = 0;
    for (int v = 0; v < n; ++v) {
        if (z[v] < 0) k = std::max(k, ceil_div(-z[v], per[v]));
    }
    IntVector out(n);
    for (int v = 0; v < n; ++v) out[v] = z[v] + k * per[v];
    return out;
}

BigInt picard_order(const RibbonDigraph& g, int deleted_row) {
    const int n = g.vertex_count();
    if (deleted_row < 0 || deleted_row >= n) {
        throw std::invalid_argument("deleted row out of range");
    }
    IntMatrix l = laplacian(g);
    IntMatrix reduced(n - 1, n);
    int r = 0;
    for (int i = 0; i < n; ++i) {
        if (i == deleted_row) continue;
        for (int j = 0; j < n; ++j) reduced(r, j) = l(i, j);
        ++r;
    }
    SmithDecomposition d = smith_normal_form(std::move(reduced));
    if (d.rank() != n - 1) {
        throw std::logic_error("reduced Laplacian rank is not n - 1");
    }
    BigInt order = 1;
    for (const BigInt& f : d.factors) order *= f;
    return order;
}

}  // namespace rotorlab
