#pragma once

#include "k3cert/int_matrix.hpp"
#include "k3cert/rational.hpp"

#include <string>
#include <vector>

namespace k3cert {

// A lattice with a fixed ordered basis, given by its Gram matrix.
struct Lattice {
    int rank = 0;
    IntMatrix gram = IntMatrix(1, 1);
    std::vector<std::string> basis_labels;
    bool even = false;        // every (v, v) is even; verified for standard lattices
    bool unimodular = false;  // |det gram| = 1; verified for standard lattices
};

// Recognized names: "H", "E8", "minusE8", "K3".
// K3 is the ordered direct sum H + H + H + (-E8) + (-E8) with basis
// x_{1,1}, x_{1,2}, x_{2,1}, x_{2,2}, x_{3,1}, x_{3,2}, y_{1,1..8}, y_{2,1..8}.
Lattice standard_lattice(const std::string& name);

// The K3 lattice, constructed once and shared.
const Lattice& k3_lattice();

// Basis indices of the K3 lattice.
namespace k3basis {
inline constexpr int X11 = 0, X12 = 1, X21 = 2, X22 = 3, X31 = 4, X32 = 5;
inline constexpr int Y1 = 6;   // y_{1,j} -> Y1 + j - 1
inline constexpr int Y2 = 14;  // y_{2,j} -> Y2 + j - 1
inline constexpr int RANK = 22;
}  // namespace k3basis

// Exact-rational coordinate vector in a fixed lattice basis.
class AmbientVector {
public:
    AmbientVector() = default;
    explicit AmbientVector(int rank) : c_(rank) {}
    explicit AmbientVector(std::vector<Rat> coords) : c_(std::move(coords)) {}
    static AmbientVector basis(int rank, int index);

    int size() const { return static_cast<int>(c_.size()); }
    const Rat& operator[](int i) const { return c_[i]; }
    Rat& operator[](int i) { return c_[i]; }
    const std::vector<Rat>& coords() const { return c_; }

    bool is_integral() const;
    bool is_zero() const;

    AmbientVector operator-() const;
    friend AmbientVector operator+(const AmbientVector& a, const AmbientVector& b);
    friend AmbientVector operator-(const AmbientVector& a, const AmbientVector& b);
    friend AmbientVector operator*(const Rat& c, const AmbientVector& v);
    AmbientVector& operator+=(const AmbientVector& o);
    friend bool operator==(const AmbientVector& a, const AmbientVector& b) { return a.c_ == b.c_; }

private:
    std::vector<Rat> c_;
};

// v^T * Gram * w, exact. Rejects dimension mismatches.
Rat pair_value(const Lattice& lat, const AmbientVector& v, const AmbientVector& w);

// The complete finite set of integral vectors v with (v, v) = m, for a
// negative-definite lattice and m < 0. Exhaustive search with bounds from an
// exact rational LDL^T decomposition of -Gram. The result is sorted and
// closed under negation.
std::vector<AmbientVector> vectors_of_norm(const Lattice& lat, const Int& m);

}  // namespace k3cert
