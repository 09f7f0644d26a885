#include "k3cert/int_matrix.hpp"

#include <stdexcept>
#include <utility>

namespace k3cert {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows <= 0 || cols <= 0) throw std::invalid_argument("IntMatrix: dimensions must be positive");
    e_.assign(static_cast<size_t>(rows) * cols, Int(0));
}

int IntMatrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw std::out_of_range("IntMatrix: index out of range");
    return i * cols_ + j;
}

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = static_cast<int>(rows.size());
    if (r == 0) throw std::invalid_argument("IntMatrix: empty row list");
    int c = static_cast<int>(rows.begin()->size());
    IntMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != c)
            throw std::invalid_argument("IntMatrix: ragged row list");
        int j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

bool IntMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::negated() const {
    IntMatrix n(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) n.at(i, j) = -at(i, j);
    return n;
}

void IntMatrix::swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
    for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::addmul_row(int dst, int src, const Int& c) {
    for (int j = 0; j < cols_; ++j) at(dst, j) += c * at(src, j);
}

void IntMatrix::addmul_col(int dst, int src, const Int& c) {
    for (int i = 0; i < rows_; ++i) at(i, dst) += c * at(i, src);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix: size mismatch in product");
    IntMatrix p(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) p.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    return p;
}

Int determinant(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const int n = m.rows();
    IntMatrix a = m;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { piv = i; break; }
            if (piv < 0) return Int(0);
            a.swap_rows(k, piv);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a.at(i, k) = 0;
        }
        prev = a.at(k, k);
    }
    Int det = a.at(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

Inertia signature(const IntMatrix& m) {
    if (!m.is_symmetric()) throw std::invalid_argument("signature: matrix not symmetric");
    const int n = m.rows();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(m.at(i, j));

    auto congruence_swap = [&](int i, int j) {
        std::swap(a[i], a[j]);
        for (int r = 0; r < n; ++r) std::swap(a[r][i], a[r][j]);
    };
    auto congruence_add = [&](int dst, int src) {  // row/col dst += row/col src
        for (int c = 0; c < n; ++c) a[dst][c] += a[src][c];
        for (int r = 0; r < n; ++r) a[r][dst] += a[r][src];
    };

    Inertia in;
    for (int i = 0; i < n; ++i) {
        if (a[i][i].is_zero()) {
            int diag = -1, off = -1;
            for (int j = i + 1; j < n; ++j) {
                if (diag < 0 && !a[j][j].is_zero()) diag = j;
                if (off < 0 && !a[i][j].is_zero()) off = j;
            }
            if (diag >= 0) {
                congruence_swap(i, diag);
            } else if (off >= 0) {
                // Both diagonals vanish, so the hyperbolic pair (i, off) gets a
                // nonzero diagonal 2*a[i][off] after one add.
                congruence_add(i, off);
            } else {
                ++in.n_zero;
                continue;
            }
        }
        const Rat pivot = a[i][i];
        if (pivot.sign() > 0)
            ++in.n_plus;
        else
            ++in.n_minus;
        for (int j = i + 1; j < n; ++j) {
            if (a[j][i].is_zero()) continue;
            Rat f = a[j][i] / pivot;
            for (int c = 0; c < n; ++c) a[j][c] -= f * a[i][c];
            for (int r = 0; r < n; ++r) a[r][j] -= f * a[r][i];
        }
    }
    return in;
}

std::vector<Int> SmithResult::divisors() const {
    std::vector<Int> out;
    int n = std::min(D.rows(), D.cols());
    for (int i = 0; i < n; ++i)
        if (D.at(i, i) != 0) out.push_back(D.at(i, i));
    return out;
}

namespace {

// Position of the entry with smallest nonzero absolute value in D[t.., t..].
bool smallest_nonzero(const IntMatrix& d, int t, int& pi, int& pj) {
    pi = pj = -1;
    for (int i = t; i < d.rows(); ++i)
        for (int j = t; j < d.cols(); ++j) {
            if (d.at(i, j) == 0) continue;
            if (pi < 0 ||
                mpz_cmpabs(d.at(i, j).get_mpz_t(), d.at(pi, pj).get_mpz_t()) < 0) {
                pi = i;
                pj = j;
            }
        }
    return pi >= 0;
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix& m) {
    SmithResult r{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
    IntMatrix& U = r.U;
    IntMatrix& D = r.D;
    IntMatrix& V = r.V;
    const int rank_bound = std::min(m.rows(), m.cols());

    for (int t = 0; t < rank_bound; ++t) {
        int pi, pj;
        if (!smallest_nonzero(D, t, pi, pj)) break;  // rest is zero
        D.swap_rows(t, pi);
        U.swap_rows(t, pi);
        D.swap_cols(t, pj);
        V.swap_cols(t, pj);

        bool again = true;
        while (again) {
            again = false;
            // Clear column t by Euclidean steps; a nonzero remainder becomes
            // the new (strictly smaller) pivot.
            for (int i = t + 1; i < D.rows(); ++i) {
                if (D.at(i, t) == 0) continue;
                Int q = round_div(D.at(i, t), D.at(t, t));
                if (q != 0) {
                    D.addmul_row(i, t, -q);
                    U.addmul_row(i, t, -q);
                }
                if (D.at(i, t) != 0) {
                    D.swap_rows(t, i);
                    U.swap_rows(t, i);
                    i = t;  // rescan the column with the smaller pivot
                }
            }
            // Clear row t; a column swap can dirty the column again.
            for (int j = t + 1; j < D.cols(); ++j) {
                if (D.at(t, j) == 0) continue;
                Int q = round_div(D.at(t, j), D.at(t, t));
                if (q != 0) {
                    D.addmul_col(j, t, -q);
                    V.addmul_col(j, t, -q);
                }
                if (D.at(t, j) != 0) {
                    D.swap_cols(t, j);
                    V.swap_cols(t, j);
                    again = true;
                    j = t;
                }
            }
            if (!again) {
                for (int i = t + 1; i < D.rows(); ++i)
                    if (D.at(i, t) != 0) { again = true; break; }
            }
            if (!again) {
                // Enforce the divisibility chain: pull a bad row up and redo.
                for (int i = t + 1; i < D.rows() && !again; ++i)
                    for (int j = t + 1; j < D.cols() && !again; ++j)
                        if (!mpz_divisible_p(D.at(i, j).get_mpz_t(), D.at(t, t).get_mpz_t())) {
                            D.addmul_row(t, i, Int(1));
                            U.addmul_row(t, i, Int(1));
                            again = true;
                        }
            }
        }
        if (D.at(t, t) < 0) {
            D.negate_row(t);
            U.negate_row(t);
        }
    }
    return r;
}

}  // namespace k3cert
