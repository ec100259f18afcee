#pragma once
// Integer-lattice algebra for chip-firing: the graph Laplacian, its kernel,
// Smith normal form with unimodular transforms, and divisor equivalence.

#include <optional>
#include <vector>

#include "rotorlab/bigint.hpp"
#include "rotorlab/graph.hpp"

namespace rotorlab {

using IntVector = std::vector<BigInt>;

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static IntMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& operator()(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const BigInt& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    IntVector apply(const IntVector& x) const;  // matrix * column vector

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void add_row_multiple(int dst, int src, const BigInt& q);  // row dst += q * row src
    void add_col_multiple(int dst, int src, const BigInt& q);
    void negate_row(int i);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<BigInt> a_;
};

// A = left^-1 * D * right^-1 with left, right unimodular; equivalently
// left * A * right = D where D is diagonal with the invariant factors
// d1 | d2 | ... | dr (positive) followed by zeros.
struct SmithDecomposition {
    IntMatrix left;
    IntMatrix right;
    std::vector<BigInt> factors;

    int rank() const { return static_cast<int>(factors.size()); }
    IntMatrix diagonal(int rows, int cols) const;
};

SmithDecomposition smith_normal_form(IntMatrix a);

// Laplacian with L(v, v) = -outdeg(v) and L(u, v) = multiplicity of v -> u
// for u != v, so that firing v adds column v to a divisor.  Columns sum to
// zero.
IntMatrix laplacian(const RibbonDigraph& g);

// The primitive period vector: the unique positive integer kernel vector of
// the Laplacian with coprime entries.  All ones exactly when the graph is
// Eulerian.
IntVector period_vector(const RibbonDigraph& g);

// An integer solution z of A z = b, or nullopt if none exists.
std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b);

// A firing vector z with y = x + L z, or nullopt if the divisors are not
// linearly equivalent.
std::optional<IntVector> firing_witness(const RibbonDigraph& g, const Divisor& x,
                                        const Divisor& y);

inline bool divisors_equivalent(const RibbonDigraph& g, const Divisor& x, const Divisor& y) {
    return firing_witness(g, x, y).has_value();
}

// The smallest shift z + k * per along the period vector that is entrywise
// nonnegative.  Leaves L z unchanged.
IntVector nonneg_shift(const RibbonDigraph& g, const IntVector& z);

// Order of the Picard group of degree-zero divisor classes: the product of
// the invariant factors of the Laplacian with one row deleted.
BigInt picard_order(const RibbonDigraph& g, int deleted_row = 0);

}  // namespace rotorlab
