#pragma once

#include "k3cert/rational.hpp"

#include <initializer_list>
#include <vector>

namespace k3cert {

// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix(int rows, int cols);
    static IntMatrix identity(int n);
    static IntMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Int& at(int i, int j) const { return e_[index(i, j)]; }
    Int& at(int i, int j) { return e_[index(i, j)]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    IntMatrix transposed() const;
    IntMatrix negated() const;

    void swap_rows(int i, int j);
    void swap_cols(int i, int j);
    void negate_row(int i);
    // row_dst += c * row_src
    void addmul_row(int dst, int src, const Int& c);
    // col_dst += c * col_src
    void addmul_col(int dst, int src, const Int& c);

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }

private:
    int index(int i, int j) const;
    int rows_, cols_;
    std::vector<Int> e_;
};

// Exact determinant (fraction-free Bareiss elimination). Rejects non-square input.
Int determinant(const IntMatrix& m);

// Inertia of a symmetric integer matrix.
struct Inertia {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;
    friend bool operator==(const Inertia&, const Inertia&) = default;
};

// Exact signature by rational congruence diagonalization (symmetric Gaussian
// elimination; zero diagonals are repaired by a hyperbolic row+column add).
// Rejects asymmetric input.
Inertia signature(const IntMatrix& m);

// U*M*V = D with U, V unimodular and D = diag(d_1 | d_2 | ... ), d_i >= 0,
// trailing zeros last.
struct SmithResult {
    IntMatrix U, D, V;
    std::vector<Int> divisors() const;  // nonzero diagonal entries of D
};
SmithResult smith_normal_form(const IntMatrix& m);

}  // namespace k3cert
