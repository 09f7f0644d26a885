#pragma once

#include "k3cert/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3cert {

// Explicit vectors kappa_hat, beta, d_1..d_k in the K3 lattice with
//   (kappa_hat, kappa_hat) = B, (beta, beta) = A, (kappa_hat, beta) = 0,
//   (kappa_hat, d_i) = 1, (beta, d_i) = 0, (d_i, d_j) = -2 delta_ij,
// together with integral dual witnesses pairing to the identity matrix.
struct RootsData {
    int k = 0;
    Int A, B;
    AmbientVector kappa_hat, beta;
    std::vector<AmbientVector> d;
    AmbientVector kappa_hat_dual, beta_dual;
    std::vector<AmbientVector> d_dual;

    // kappa_hat + (1/2) sum d_i, the projection of kappa_hat onto the
    // orthogonal complement of span(d_1..d_k).
    AmbientVector kappa() const;
    AmbientVector sum_d() const;
    std::vector<AmbientVector> primal_vectors() const;  // kappa_hat, beta, d_1..d_k
    std::vector<AmbientVector> dual_vectors() const;
};

// Deterministic construction; requires k in 0..9, A positive even, B even.
// All pairing identities are verified before returning.
RootsData roots_construct(int k, const Int& A, const Int& B);

struct PrimitivityCertificate {
    bool primitive_snf = false;      // all elementary divisors are 1
    std::vector<Int> divisors;
    bool has_dual_witnesses = false;
    bool dual_witnesses_valid = false;  // (v_i, w_j) = delta_ij
    // Never (dual valid && SNF non-primitive); valid witnesses imply primitivity.
    bool methods_agree = true;
    bool verdict() const { return primitive_snf; }
};

// TRUE iff the span of the given integral, linearly independent vectors is a
// primitive sublattice (no elementary divisor exceeds 1). When dual witnesses
// are supplied the sufficient criterion (v_i, w_j) = delta_ij is also checked
// and the two methods are compared. Rejects dependent or non-integral input.
PrimitivityCertificate is_primitive_span(const Lattice& lat,
                                         const std::vector<AmbientVector>& vectors,
                                         const std::vector<AmbientVector>* duals = nullptr);

struct PeriodReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string witness;
    };
    std::vector<Item> items;
    bool all_pass() const;
};

// Checks the preconditions for a polarized period point with prescribed root
// system: K negative definite and primitive, kappa and beta orthogonal to K,
// (kappa, kappa) > 0, (beta, beta) > 0, (kappa, beta) = 0. Failures are
// reported, not thrown.
PeriodReport period_preconditions(const Lattice& lat, const AmbientVector& kappa,
                                  const AmbientVector& beta,
                                  const std::vector<AmbientVector>& K);

}  // namespace k3cert
