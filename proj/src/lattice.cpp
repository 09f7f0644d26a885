#include "k3cert/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace k3cert {

namespace {

IntMatrix h_gram() { return IntMatrix::from_rows({{0, 1}, {1, 0}}); }

IntMatrix minus_e8_gram() {
    IntMatrix g(8, 8);
    for (int i = 0; i < 8; ++i) g.at(i, i) = -2;
    // Edges of the E8 diagram on indices 1..8: a path 1-2-...-7 plus 5-8.
    const int edges[7][2] = {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}};
    for (const auto& e : edges) {
        g.at(e[0] - 1, e[1] - 1) = 1;
        g.at(e[1] - 1, e[0] - 1) = 1;
    }
    return g;
}

void place_block(IntMatrix& g, const IntMatrix& block, int offset) {
    for (int i = 0; i < block.rows(); ++i)
        for (int j = 0; j < block.cols(); ++j) g.at(offset + i, offset + j) = block.at(i, j);
}

void check_flags(Lattice& lat) {
    for (int i = 0; i < lat.rank; ++i)
        if (!is_even(lat.gram.at(i, i)))
            throw std::logic_error("standard_lattice: Gram diagonal not even");
    lat.even = true;
    Int det = determinant(lat.gram);
    if (abs(det) != 1) throw std::logic_error("standard_lattice: Gram not unimodular");
    lat.unimodular = true;
}

}  // namespace

Lattice standard_lattice(const std::string& name) {
    Lattice lat;
    if (name == "H") {
        lat.rank = 2;
        lat.gram = h_gram();
        lat.basis_labels = {"x_1", "x_2"};
    } else if (name == "minusE8") {
        lat.rank = 8;
        lat.gram = minus_e8_gram();
        for (int j = 1; j <= 8; ++j) lat.basis_labels.push_back("y_" + std::to_string(j));
    } else if (name == "E8") {
        lat.rank = 8;
        lat.gram = minus_e8_gram().negated();
        for (int j = 1; j <= 8; ++j) lat.basis_labels.push_back("y_" + std::to_string(j));
    } else if (name == "K3") {
        lat.rank = k3basis::RANK;
        lat.gram = IntMatrix(22, 22);
        IntMatrix h = h_gram();
        IntMatrix me8 = minus_e8_gram();
        place_block(lat.gram, h, 0);
        place_block(lat.gram, h, 2);
        place_block(lat.gram, h, 4);
        place_block(lat.gram, me8, 6);
        place_block(lat.gram, me8, 14);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 2; ++j)
                lat.basis_labels.push_back("x_{" + std::to_string(i) + "," + std::to_string(j) + "}");
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 8; ++j)
                lat.basis_labels.push_back("y_{" + std::to_string(i) + "," + std::to_string(j) + "}");
    } else {
        throw std::invalid_argument("standard_lattice: unknown name \"" + name + "\"");
    }
    check_flags(lat);
    return lat;
}

const Lattice& k3_lattice() {
    static const Lattice lat = standard_lattice("K3");
    return lat;
}

AmbientVector AmbientVector::basis(int rank, int index) {
    AmbientVector v(rank);
    v[index] = Rat(1);
    return v;
}

bool AmbientVector::is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_integer(); });
}

bool AmbientVector::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.is_zero(); });
}

AmbientVector AmbientVector::operator-() const {
    AmbientVector r(size());
    for (int i = 0; i < size(); ++i) r[i] = -c_[i];
    return r;
}

AmbientVector operator+(const AmbientVector& a, const AmbientVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("AmbientVector: size mismatch");
    AmbientVector r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

AmbientVector operator-(const AmbientVector& a, const AmbientVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("AmbientVector: size mismatch");
    AmbientVector r(a.size());
    for (int i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

AmbientVector operator*(const Rat& c, const AmbientVector& v) {
    AmbientVector r(v.size());
    for (int i = 0; i < v.size(); ++i) r[i] = c * v[i];
    return r;
}

AmbientVector& AmbientVector::operator+=(const AmbientVector& o) {
    if (size() != o.size()) throw std::invalid_argument("AmbientVector: size mismatch");
    for (int i = 0; i < size(); ++i) c_[i] += o[i];
    return *this;
}

Rat pair_value(const Lattice& lat, const AmbientVector& v, const AmbientVector& w) {
    if (v.size() != lat.rank || w.size() != lat.rank)
        throw std::invalid_argument("pair: dimension mismatch");
    Rat acc;
    for (int i = 0; i < lat.rank; ++i) {
        if (v[i].is_zero()) continue;
        Rat row;
        for (int j = 0; j < lat.rank; ++j) {
            const Int& g = lat.gram.at(i, j);
            if (g == 0 || w[j].is_zero()) continue;
            row += Rat(g) * w[j];
        }
        acc += v[i] * row;
    }
    return acc;
}

namespace {

struct NormSearch {
    int n;
    std::vector<Rat> diag;                  // d_i > 0
    std::vector<std::vector<Rat>> coeff;    // coeff[i][j], j > i
    Rat target;
    std::vector<Int> x;
    std::vector<AmbientVector>* out;

    // Q(x) = sum_i d_i (x_i + s_i)^2 with s_i = sum_{j>i} coeff[i][j] x_j.
    void descend(int i, const Rat& used) {
        if (i < 0) {
            if (used == target) {
                AmbientVector v(n);
                for (int t = 0; t < n; ++t) v[t] = Rat(x[t]);
                out->push_back(v);
            }
            return;
        }
        Rat s;
        for (int j = i + 1; j < n; ++j) {
            if (x[j] == 0 || coeff[i][j].is_zero()) continue;
            s += coeff[i][j] * Rat(x[j]);
        }
        const Rat budget = target - used;
        const Int start = (-s).round_nearest();
        for (Int t = start;; ++t) {
            Rat off = Rat(t) + s;
            Rat val = diag[i] * off * off;
            if (val > budget) break;
            x[i] = t;
            descend(i - 1, used + val);
        }
        for (Int t = start - 1;; --t) {
            Rat off = Rat(t) + s;
            Rat val = diag[i] * off * off;
            if (val > budget) break;
            x[i] = t;
            descend(i - 1, used + val);
        }
        x[i] = 0;
    }
};

}  // namespace

std::vector<AmbientVector> vectors_of_norm(const Lattice& lat, const Int& m) {
    if (m >= 0) throw std::invalid_argument("vectors_of_norm: m must be negative");
    Inertia in = signature(lat.gram);
    if (in.n_minus != lat.rank)
        throw std::invalid_argument("vectors_of_norm: lattice is not negative definite");

    const int n = lat.rank;
    // LDL^T of the positive-definite form -Gram.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rat(-lat.gram.at(i, j));
    NormSearch search;
    search.n = n;
    search.diag.assign(n, Rat());
    search.coeff.assign(n, std::vector<Rat>(n));
    for (int i = 0; i < n; ++i) {
        search.diag[i] = a[i][i];
        for (int j = i + 1; j < n; ++j) search.coeff[i][j] = a[i][j] / a[i][i];
        for (int r = i + 1; r < n; ++r)
            for (int c = i + 1; c < n; ++c)
                a[r][c] -= search.coeff[i][r] * search.diag[i] * search.coeff[i][c];
    }
    search.target = Rat(-m);
    search.x.assign(n, Int(0));
    std::vector<AmbientVector> out;
    search.out = &out;
    search.descend(n - 1, Rat());

    std::sort(out.begin(), out.end(), [](const AmbientVector& p, const AmbientVector& q) {
        for (int i = 0; i < p.size(); ++i) {
            if (p[i] < q[i]) return true;
            if (q[i] < p[i]) return false;
        }
        return false;
    });
    return out;
}

}  // namespace k3cert
