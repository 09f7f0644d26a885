#include "k3cert/embeddings.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace k3cert;
using namespace k3cert::k3basis;

namespace {

// Independent primitivity oracle: the span of the columns of M is primitive
// exactly if the gcd of all maximal minors is 1 (the product of the
// elementary divisors equals that gcd).
Int maximal_minor_gcd(const IntMatrix& m) {
    const int rows = m.rows(), r = m.cols();
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    Int g(0);
    while (true) {
        IntMatrix sub(r, r);
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub.at(i, j) = m.at(pick[i], j);
        Int d = abs(determinant(sub));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        int i = r - 1;
        while (i >= 0 && pick[i] == rows - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    return g;
}

IntMatrix coordinate_matrix(const std::vector<AmbientVector>& vs) {
    IntMatrix m(22, static_cast<int>(vs.size()));
    for (size_t j = 0; j < vs.size(); ++j)
        for (int i = 0; i < 22; ++i) m.at(i, static_cast<int>(j)) = vs[j][i].num();
    return m;
}

}  // namespace

TEST_CASE("roots_construct: k=9, A=4, B=2 satisfies every pairing identity") {
    const Lattice& L = k3_lattice();
    RootsData rd = roots_construct(9, Int(4), Int(2));
    CHECK(pair_value(L, rd.kappa_hat, rd.kappa_hat) == Rat(2));
    CHECK(pair_value(L, rd.beta, rd.beta) == Rat(4));
    CHECK(pair_value(L, rd.kappa_hat, rd.beta) == Rat(0));
    for (int i = 0; i < 9; ++i) {
        CHECK(pair_value(L, rd.kappa_hat, rd.d[i]) == Rat(1));
        CHECK(pair_value(L, rd.beta, rd.d[i]) == Rat(0));
        for (int j = 0; j < 9; ++j)
            CHECK(pair_value(L, rd.d[i], rd.d[j]) == Rat(i == j ? -2 : 0));
    }
    auto primal = rd.primal_vectors();
    auto dual = rd.dual_vectors();
    for (size_t i = 0; i < primal.size(); ++i)
        for (size_t j = 0; j < dual.size(); ++j)
            CHECK(pair_value(L, primal[i], dual[j]) == Rat(i == j ? 1 : 0));
}

TEST_CASE("roots_construct: kappa norm for k=5, A=2, B=-2 is 1/2") {
    const Lattice& L = k3_lattice();
    RootsData rd = roots_construct(5, Int(2), Int(-2));
    CHECK(pair_value(L, rd.kappa(), rd.kappa()) == Rat(Int(1), Int(2)));
    CHECK(pair_value(L, rd.kappa(), rd.beta) == Rat(0));
    for (int i = 0; i < 5; ++i) CHECK(pair_value(L, rd.kappa(), rd.d[i]) == Rat(0));
}

TEST_CASE("roots_construct: k=0 keeps only kappa_hat and beta") {
    const Lattice& L = k3_lattice();
    RootsData rd = roots_construct(0, Int(2), Int(0));
    CHECK(rd.d.empty());
    CHECK(pair_value(L, rd.kappa_hat, rd.beta) == Rat(0));
    CHECK(rd.kappa() == rd.kappa_hat);
}

TEST_CASE("roots_construct rejects bad parameters") {
    CHECK_THROWS_AS(roots_construct(10, Int(2), Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(roots_construct(-1, Int(2), Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(roots_construct(3, Int(3), Int(0)), std::invalid_argument);
    CHECK_THROWS_AS(roots_construct(3, Int(2), Int(1)), std::invalid_argument);
    CHECK_THROWS_AS(roots_construct(3, Int(-2), Int(0)), std::invalid_argument);
}

TEST_CASE("roots_construct: full parameter grid") {
    const Lattice& L = k3_lattice();
    for (int k = 0; k <= 9; ++k)
        for (long a = 2; a <= 40; a += 2)
            for (long b = -4; b <= 40; b += 2) {
                RootsData rd = roots_construct(k, Int(a), Int(b));
                // The constructor validates all identities; spot-check the
                // two that encode the parameters.
                CHECK(pair_value(L, rd.kappa_hat, rd.kappa_hat) == Rat(Int(b)));
                CHECK(pair_value(L, rd.beta, rd.beta) == Rat(Int(a)));
            }
}

TEST_CASE("is_primitive_span: basis vector and its double") {
    const Lattice& L = k3_lattice();
    AmbientVector x11 = AmbientVector::basis(22, X11);
    PrimitivityCertificate c1 = is_primitive_span(L, {x11});
    CHECK(c1.primitive_snf);
    CHECK(c1.divisors == std::vector<Int>{1});

    PrimitivityCertificate c2 = is_primitive_span(L, {Rat(2) * x11});
    CHECK_FALSE(c2.primitive_snf);
    CHECK(c2.divisors == std::vector<Int>{2});
}

TEST_CASE("is_primitive_span rejects dependent or non-integral input") {
    const Lattice& L = k3_lattice();
    AmbientVector x11 = AmbientVector::basis(22, X11);
    AmbientVector x12 = AmbientVector::basis(22, X12);
    CHECK_THROWS_AS(is_primitive_span(L, {x11, x11 + x11}), std::invalid_argument);
    AmbientVector half(22);
    half[0] = Rat(Int(1), Int(2));
    CHECK_THROWS_AS(is_primitive_span(L, {half}), std::invalid_argument);
    std::vector<AmbientVector> vs{x11};
    std::vector<AmbientVector> wrong_count{x11, x12};
    CHECK_THROWS_AS(is_primitive_span(L, vs, &wrong_count), std::invalid_argument);
}

TEST_CASE("roots span is primitive by both methods, over the grid") {
    const Lattice& L = k3_lattice();
    for (int k : {0, 1, 5, 9})
        for (long a : {2L, 12L, 40L})
            for (long b : {-4L, 0L, 40L}) {
                RootsData rd = roots_construct(k, Int(a), Int(b));
                auto primal = rd.primal_vectors();
                auto dual = rd.dual_vectors();
                PrimitivityCertificate c = is_primitive_span(L, primal, &dual);
                CHECK(c.primitive_snf);
                CHECK(c.dual_witnesses_valid);
                CHECK(c.methods_agree);
            }
}

TEST_CASE("SNF primitivity agrees with the maximal-minor oracle on random spans") {
    const Lattice& L = k3_lattice();
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<int> entry(-2, 2);
    int done = 0;
    while (done < 200) {
        int r = 1 + static_cast<int>(rng() % 4);
        std::vector<AmbientVector> vs;
        for (int j = 0; j < r; ++j) {
            AmbientVector v(22);
            for (int i = 0; i < 22; ++i) v[i] = Rat(entry(rng));
            vs.push_back(v);
        }
        PrimitivityCertificate c;
        try {
            c = is_primitive_span(L, vs);
        } catch (const std::invalid_argument&) {
            continue;  // dependent sample; draw again
        }
        Int g = maximal_minor_gcd(coordinate_matrix(vs));
        CHECK(c.primitive_snf == (g == 1));
        Int prod(1);
        for (const Int& d : c.divisors) prod *= d;
        CHECK(prod == g);
        ++done;
    }
}

TEST_CASE("norm -2 vectors of the exceptional span are exactly the +-d_i") {
    // In the span of d_1..d_k the Gram matrix is -2*identity, so the norm -2
    // vectors of that sublattice are the 2k vectors +-d_i.
    for (int k : {1, 4, 9}) {
        Lattice span;
        span.rank = k;
        span.gram = IntMatrix(k, k);
        for (int i = 0; i < k; ++i) span.gram.at(i, i) = -2;
        auto roots = vectors_of_norm(span, Int(-2));
        CHECK(roots.size() == static_cast<size_t>(2 * k));
        for (const auto& v : roots) {
            int support = 0;
            for (int i = 0; i < k; ++i)
                if (!v[i].is_zero()) {
                    ++support;
                    CHECK((v[i] == Rat(1) || v[i] == Rat(-1)));
                }
            CHECK(support == 1);
        }
    }
}

TEST_CASE("period preconditions: k=5, A=2, B=-2 all pass") {
    RootsData rd = roots_construct(5, Int(2), Int(-2));
    PeriodReport rep = period_preconditions(k3_lattice(), rd.kappa(), rd.beta, rd.d);
    CHECK(rep.all_pass());
    CHECK(rep.items.size() == 7);
}

TEST_CASE("period preconditions: B=-4, k=5 fails positivity of kappa") {
    RootsData rd = roots_construct(5, Int(2), Int(-4));
    PeriodReport rep = period_preconditions(k3_lattice(), rd.kappa(), rd.beta, rd.d);
    CHECK_FALSE(rep.all_pass());
    bool found = false;
    for (const auto& it : rep.items)
        if (it.name == "kappa_norm_positive") {
            found = true;
            CHECK_FALSE(it.pass);
            CHECK(it.witness == "(kappa,kappa) = -3/2");
        } else {
            CHECK(it.pass);
        }
    CHECK(found);
}

TEST_CASE("period preconditions: k=0 reduces to B > 0") {
    RootsData good = roots_construct(0, Int(2), Int(2));
    CHECK(period_preconditions(k3_lattice(), good.kappa(), good.beta, good.d).all_pass());
    RootsData bad = roots_construct(0, Int(2), Int(0));
    PeriodReport rep = period_preconditions(k3_lattice(), bad.kappa(), bad.beta, bad.d);
    CHECK_FALSE(rep.all_pass());
}
