#include "k3cert/embeddings.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3cert {

using namespace k3basis;

AmbientVector RootsData::sum_d() const {
    AmbientVector s(RANK);
    for (const auto& di : d) s += di;
    return s;
}

AmbientVector RootsData::kappa() const { return kappa_hat + Rat(Int(1), Int(2)) * sum_d(); }

std::vector<AmbientVector> RootsData::primal_vectors() const {
    std::vector<AmbientVector> v{kappa_hat, beta};
    v.insert(v.end(), d.begin(), d.end());
    return v;
}

std::vector<AmbientVector> RootsData::dual_vectors() const {
    std::vector<AmbientVector> v{kappa_hat_dual, beta_dual};
    v.insert(v.end(), d_dual.begin(), d_dual.end());
    return v;
}

namespace {

AmbientVector e(int index) { return AmbientVector::basis(RANK, index); }

void validate_roots(const RootsData& rd) {
    const Lattice& L = k3_lattice();
    auto expect = [&](const Rat& got, const Rat& want, const char* what) {
        if (got != want) {
            std::ostringstream os;
            os << "roots_construct: identity " << what << " failed: got " << got.str()
               << ", want " << want.str();
            throw std::logic_error(os.str());
        }
    };
    expect(pair_value(L, rd.kappa_hat, rd.kappa_hat), Rat(rd.B), "(kappa_hat,kappa_hat)=B");
    expect(pair_value(L, rd.beta, rd.beta), Rat(rd.A), "(beta,beta)=A");
    expect(pair_value(L, rd.kappa_hat, rd.beta), Rat(0), "(kappa_hat,beta)=0");
    for (int i = 0; i < rd.k; ++i) {
        expect(pair_value(L, rd.kappa_hat, rd.d[i]), Rat(1), "(kappa_hat,d_i)=1");
        expect(pair_value(L, rd.beta, rd.d[i]), Rat(0), "(beta,d_i)=0");
        for (int j = 0; j < rd.k; ++j)
            expect(pair_value(L, rd.d[i], rd.d[j]), Rat(i == j ? -2 : 0), "(d_i,d_j)=-2delta");
    }
    auto primal = rd.primal_vectors();
    auto dual = rd.dual_vectors();
    for (size_t i = 0; i < primal.size(); ++i)
        for (size_t j = 0; j < dual.size(); ++j)
            expect(pair_value(L, primal[i], dual[j]), Rat(i == j ? 1 : 0), "dual pairing = identity");
}

}  // namespace

RootsData roots_construct(int k, const Int& A, const Int& B) {
    if (k < 0 || k > 9) throw std::invalid_argument("roots_construct: k must be in 0..9");
    if (!is_even(A) || !is_even(B))
        throw std::invalid_argument("roots_construct: A and B must be even");
    if (A <= 0) throw std::invalid_argument("roots_construct: A must be positive");

    RootsData rd;
    rd.k = k;
    rd.A = A;
    rd.B = B;

    rd.kappa_hat = e(X11) + Rat(B, Int(2)) * e(X12);
    rd.beta = e(X21) + Rat(A, Int(2)) * e(X22);

    std::vector<AmbientVector> d9;
    d9.push_back(e(X31) - e(X32) + e(X12));
    for (int i = 2; i <= 5; ++i) d9.push_back(e(Y1 + 2 * (i - 2)) + e(X12));  // y_{1,2i-3}
    for (int i = 6; i <= 9; ++i) d9.push_back(e(Y2 + 2 * (i - 6)) + e(X12));  // y_{2,2i-11}

    rd.kappa_hat_dual = e(X12);
    rd.beta_dual = e(X22);
    std::vector<AmbientVector> dual9;
    dual9.push_back(e(X32));
    dual9.push_back(e(Y1 + 1) - e(Y1 + 3) + e(Y1 + 7));  // y_{1,2} - y_{1,4} + y_{1,8}
    dual9.push_back(e(Y1 + 3) - e(Y1 + 7));              // y_{1,4} - y_{1,8}
    dual9.push_back(e(Y1 + 7));                          // y_{1,8}
    dual9.push_back(e(Y1 + 5) - e(Y1 + 7));              // y_{1,6} - y_{1,8}
    dual9.push_back(e(Y2 + 1) - e(Y2 + 3) + e(Y2 + 7));
    dual9.push_back(e(Y2 + 3) - e(Y2 + 7));
    dual9.push_back(e(Y2 + 7));
    dual9.push_back(e(Y2 + 5) - e(Y2 + 7));

    // For k < 9, keep d_1..d_k (drop from the tail).
    rd.d.assign(d9.begin(), d9.begin() + k);
    rd.d_dual.assign(dual9.begin(), dual9.begin() + k);

    validate_roots(rd);
    return rd;
}

PrimitivityCertificate is_primitive_span(const Lattice& lat,
                                         const std::vector<AmbientVector>& vectors,
                                         const std::vector<AmbientVector>* duals) {
    if (vectors.empty()) throw std::invalid_argument("is_primitive_span: no vectors");
    const int r = static_cast<int>(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != lat.rank) throw std::invalid_argument("is_primitive_span: dimension mismatch");
        if (!v.is_integral()) throw std::invalid_argument("is_primitive_span: non-integral vector");
    }

    IntMatrix coords(lat.rank, r);
    for (int j = 0; j < r; ++j)
        for (int i = 0; i < lat.rank; ++i) coords.at(i, j) = vectors[j][i].num();

    PrimitivityCertificate cert;
    SmithResult snf = smith_normal_form(coords);
    cert.divisors = snf.divisors();
    if (static_cast<int>(cert.divisors.size()) != r)
        throw std::invalid_argument("is_primitive_span: vectors are linearly dependent");
    cert.primitive_snf =
        std::all_of(cert.divisors.begin(), cert.divisors.end(), [](const Int& d) { return d == 1; });

    if (duals != nullptr) {
        cert.has_dual_witnesses = true;
        if (static_cast<int>(duals->size()) != r)
            throw std::invalid_argument("is_primitive_span: witness count mismatch");
        for (const auto& w : *duals)
            if (w.size() != lat.rank || !w.is_integral())
                throw std::invalid_argument("is_primitive_span: bad dual witness");
        cert.dual_witnesses_valid = true;
        for (int i = 0; i < r && cert.dual_witnesses_valid; ++i) {
            for (int j = 0; j < r; ++j)
                if (pair_value(lat, vectors[i], (*duals)[j]) != Rat(i == j ? 1 : 0)) {
                    cert.dual_witnesses_valid = false;
                    break;
                }
        }
        cert.methods_agree = !(cert.dual_witnesses_valid && !cert.primitive_snf);
    }
    return cert;
}

bool PeriodReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.pass; });
}

PeriodReport period_preconditions(const Lattice& lat, const AmbientVector& kappa,
                                  const AmbientVector& beta,
                                  const std::vector<AmbientVector>& K) {
    PeriodReport rep;
    auto add = [&](const std::string& name, bool pass, const std::string& witness) {
        rep.items.push_back({name, pass, witness});
    };
    const int k = static_cast<int>(K.size());

    {
        bool pass = true;
        std::string witness = "vacuous (K empty)";
        if (k > 0) {
            bool integral = std::all_of(K.begin(), K.end(),
                                        [](const AmbientVector& v) { return v.is_integral(); });
            if (!integral) {
                pass = false;
                witness = "K contains a non-integral vector";
            } else {
                IntMatrix g(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) g.at(i, j) = pair_value(lat, K[i], K[j]).to_integer();
                Inertia in = signature(g);
                pass = (in.n_minus == k);
                witness = "inertia (" + std::to_string(in.n_plus) + "," + std::to_string(in.n_minus) +
                          "," + std::to_string(in.n_zero) + ") of rank-" + std::to_string(k) + " Gram";
            }
        }
        add("K_negative_definite", pass, witness);
    }
    {
        bool pass = true;
        std::string witness = "vacuous (K empty)";
        if (k > 0) {
            try {
                PrimitivityCertificate cert = is_primitive_span(lat, K);
                pass = cert.primitive_snf;
                witness = "elementary divisors:";
                for (const auto& d : cert.divisors) witness += " " + d.get_str();
            } catch (const std::exception& ex) {
                pass = false;
                witness = ex.what();
            }
        }
        add("K_primitive", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        for (int i = 0; i < k; ++i) {
            Rat p = pair_value(lat, kappa, K[i]);
            if (!p.is_zero()) {
                pass = false;
                witness = "(kappa, K_" + std::to_string(i + 1) + ") = " + p.str();
                break;
            }
        }
        add("kappa_orthogonal_to_K", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        for (int i = 0; i < k; ++i) {
            Rat p = pair_value(lat, beta, K[i]);
            if (!p.is_zero()) {
                pass = false;
                witness = "(beta, K_" + std::to_string(i + 1) + ") = " + p.str();
                break;
            }
        }
        add("beta_orthogonal_to_K", pass, witness);
    }
    {
        Rat kk = pair_value(lat, kappa, kappa);
        add("kappa_norm_positive", kk.sign() > 0, "(kappa,kappa) = " + kk.str());
    }
    {
        Rat bb = pair_value(lat, beta, beta);
        add("beta_norm_positive", bb.sign() > 0, "(beta,beta) = " + bb.str());
    }
    {
        Rat kb = pair_value(lat, kappa, beta);
        add("kappa_beta_orthogonal", kb.is_zero(), "(kappa,beta) = " + kb.str());
    }
    return rep;
}

}  // namespace k3cert
