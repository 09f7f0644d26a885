#include "k3cert/lattice.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace k3cert;
using namespace k3cert::k3basis;

namespace {

AmbientVector rv(std::mt19937_64& rng, int rank, bool integral) {
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, integral ? 1 : 4);
    AmbientVector v(rank);
    for (int i = 0; i < rank; ++i) v[i] = Rat(Int(num(rng)), Int(den(rng)));
    return v;
}

// Plain box enumeration oracle: all integer vectors with |x_i| <= bound.
std::vector<AmbientVector> box_norm_vectors(const Lattice& lat, const Int& m, int bound) {
    std::vector<AmbientVector> out;
    std::vector<int> x(lat.rank, -bound);
    while (true) {
        AmbientVector v(lat.rank);
        for (int i = 0; i < lat.rank; ++i) v[i] = Rat(x[i]);
        if (pair_value(lat, v, v) == Rat(m)) out.push_back(v);
        int i = 0;
        while (i < lat.rank && x[i] == bound) x[i++] = -bound;
        if (i == lat.rank) break;
        ++x[i];
    }
    std::sort(out.begin(), out.end(), [](const AmbientVector& p, const AmbientVector& q) {
        for (int i = 0; i < p.size(); ++i) {
            if (p[i] < q[i]) return true;
            if (q[i] < p[i]) return false;
        }
        return false;
    });
    return out;
}

Lattice diagonal_lattice(std::initializer_list<long> diag) {
    Lattice lat;
    lat.rank = static_cast<int>(diag.size());
    lat.gram = IntMatrix(lat.rank, lat.rank);
    int i = 0;
    for (long d : diag) {
        lat.gram.at(i, i) = d;
        lat.basis_labels.push_back("e_" + std::to_string(i + 1));
        ++i;
    }
    return lat;
}

}  // namespace

TEST_CASE("standard lattice H") {
    Lattice h = standard_lattice("H");
    CHECK(h.rank == 2);
    CHECK(h.gram == IntMatrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(h.even);
    CHECK(h.unimodular);
}

TEST_CASE("standard lattice minusE8") {
    Lattice e = standard_lattice("minusE8");
    for (int i = 0; i < 8; ++i) CHECK(e.gram.at(i, i) == -2);
    CHECK(e.gram.at(4, 7) == 1);  // the {5,8} edge
    CHECK(e.gram.at(0, 1) == 1);
    CHECK(e.gram.at(0, 2) == 0);
    CHECK(signature(e.gram) == Inertia{0, 8, 0});
    CHECK(signature(standard_lattice("E8").gram) == Inertia{8, 0, 0});
}

TEST_CASE("K3 lattice invariants") {
    const Lattice& k3 = k3_lattice();
    CHECK(k3.rank == 22);
    CHECK(k3.even);
    CHECK(k3.unimodular);
    CHECK(determinant(k3.gram) == -1);
    CHECK(signature(k3.gram) == Inertia{3, 19, 0});
    CHECK(k3.basis_labels[0] == "x_{1,1}");
    CHECK(k3.basis_labels[6] == "y_{1,1}");
    CHECK(k3.basis_labels[21] == "y_{2,8}");
    CHECK_THROWS_AS(standard_lattice("A1"), std::invalid_argument);
}

TEST_CASE("pairing examples in K3") {
    const Lattice& k3 = k3_lattice();
    AmbientVector x11 = AmbientVector::basis(22, X11);
    AmbientVector x12 = AmbientVector::basis(22, X12);
    CHECK(pair_value(k3, x11, x12) == Rat(1));
    CHECK(pair_value(k3, x11, x11) == Rat(0));

    // kappa = kappa_hat + (1/2) sum d_i for k = 9, B = 2 has norm B + k/2 = 13/2.
    AmbientVector kappa = x11 + Rat(1) * x12;  // kappa_hat with B = 2
    AmbientVector sum_d(22);
    sum_d += AmbientVector::basis(22, X31) - AmbientVector::basis(22, X32) + x12;
    for (int i = 2; i <= 5; ++i) sum_d += AmbientVector::basis(22, Y1 + 2 * (i - 2)) + x12;
    for (int i = 6; i <= 9; ++i) sum_d += AmbientVector::basis(22, Y2 + 2 * (i - 6)) + x12;
    kappa += Rat(Int(1), Int(2)) * sum_d;
    CHECK(pair_value(k3, kappa, kappa) == Rat(Int(13), Int(2)));

    CHECK_THROWS_AS(pair_value(k3, AmbientVector(3), AmbientVector(22)), std::invalid_argument);
}

TEST_CASE("pairing is symmetric and bilinear") {
    const Lattice& k3 = k3_lattice();
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        AmbientVector u = rv(rng, 22, false), v = rv(rng, 22, false), w = rv(rng, 22, false);
        Rat a(Int(rng() % 7) - Int(3)), b(Int(rng() % 7) - Int(3));
        CHECK(pair_value(k3, u, v) == pair_value(k3, v, u));
        Rat lhs = pair_value(k3, a * u + b * v, w);
        Rat rhs = a * pair_value(k3, u, w) + b * pair_value(k3, v, w);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("even lattice: integral vectors have even self-pairing") {
    const Lattice& k3 = k3_lattice();
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        AmbientVector v = rv(rng, 22, true);
        Rat n = pair_value(k3, v, v);
        CHECK(n.is_even_integer());
    }
}

TEST_CASE("vectors_of_norm: rank-1 root lattice") {
    Lattice lat = diagonal_lattice({-2});
    auto roots = vectors_of_norm(lat, Int(-2));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0][0] == Rat(-1));
    CHECK(roots[1][0] == Rat(1));
}

TEST_CASE("vectors_of_norm: -2 identity of rank 9 has exactly 18 roots") {
    Lattice lat = diagonal_lattice({-2, -2, -2, -2, -2, -2, -2, -2, -2});
    auto roots = vectors_of_norm(lat, Int(-2));
    CHECK(roots.size() == 18);
    for (const auto& v : roots) {
        int nonzero = 0;
        for (int i = 0; i < 9; ++i)
            if (!v[i].is_zero()) ++nonzero;
        CHECK(nonzero == 1);
    }
}

TEST_CASE("vectors_of_norm: odd norm in an even lattice is empty") {
    Lattice lat = diagonal_lattice({-2, -2});
    CHECK(vectors_of_norm(lat, Int(-1)).empty());
}

TEST_CASE("vectors_of_norm rejects bad input") {
    CHECK_THROWS_AS(vectors_of_norm(standard_lattice("H"), Int(-2)), std::invalid_argument);
    CHECK_THROWS_AS(vectors_of_norm(diagonal_lattice({-2}), Int(2)), std::invalid_argument);
    CHECK_THROWS_AS(vectors_of_norm(standard_lattice("E8"), Int(-2)), std::invalid_argument);
}

TEST_CASE("vectors_of_norm agrees with box enumeration on small definite lattices") {
    // A1^2, A1^4 scaled, and a rank-2 lattice with off-diagonal pairing.
    std::vector<Lattice> lats;
    lats.push_back(diagonal_lattice({-2, -2}));
    lats.push_back(diagonal_lattice({-2, -4}));
    {
        Lattice a2;
        a2.rank = 2;
        a2.gram = IntMatrix::from_rows({{-2, 1}, {1, -2}});
        lats.push_back(a2);
    }
    lats.push_back(diagonal_lattice({-2, -2, -2, -2}));
    for (const auto& lat : lats) {
        for (long m : {-2L, -4L, -6L}) {
            auto fast = vectors_of_norm(lat, Int(m));
            // |m| >= lambda_min |x|^2 and every Gram here has lambda_min >= 1,
            // so |x_i| <= sqrt(|m|) <= |m|; a box of radius |m| is safe.
            auto slow = box_norm_vectors(lat, Int(m), static_cast<int>(-m));
            CHECK(fast == slow);
        }
    }
}

TEST_CASE("vectors_of_norm output is closed under negation") {
    Lattice a2;
    a2.rank = 2;
    a2.gram = IntMatrix::from_rows({{-2, 1}, {1, -2}});
    for (long m : {-2L, -4L, -6L, -8L}) {
        auto vs = vectors_of_norm(a2, Int(m));
        for (const auto& v : vs) {
            AmbientVector neg = -v;
            CHECK(std::find(vs.begin(), vs.end(), neg) != vs.end());
        }
    }
}
