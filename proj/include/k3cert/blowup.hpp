#pragma once

#include "k3cert/embeddings.hpp"
#include "k3cert/lattice.hpp"

#include <vector>

namespace k3cert {

// Marked model of the degree-two cohomology of the resolution of a surface
// with k isolated Z_2 singularities: the exceptional classes d_i, the class
// of the symplectic part (nu -> beta), and the polarization image
// (zeta -> kappa = kappa_hat + (1/2) sum d_i). Evaluation convention:
// integrating a class over the i-th exceptional curve pairs it with d_i.
struct MarkedBlowupModel {
    int k = 0;
    std::vector<AmbientVector> exceptional;  // d_1..d_k
    AmbientVector nu_class;                  // beta
    AmbientVector zeta_class;                // kappa
    AmbientVector nu_dual;                   // witness with (nu_class, nu_dual) = 1

    static MarkedBlowupModel from_roots(const RootsData& rd);
    const Lattice& base() const { return k3_lattice(); }
    AmbientVector sum_exceptional() const;
};

// n_i = (c, d_i), the restriction numbers of a class to the exceptional set.
std::vector<Rat> restriction_numbers(const MarkedBlowupModel& model, const AmbientVector& c);

// e_hat + sum_i (1/2) n_i d_i; the result restricts to zero on every
// exceptional class.
AmbientVector euler_descent(const MarkedBlowupModel& model, const AmbientVector& e_hat);

// TRUE iff every restriction number of the integral class e_hat is odd.
bool is_manifold_bundle(const MarkedBlowupModel& model, const AmbientVector& e_hat);

// The outer classes kappa_hat_pm = nu + 2 sum d_i and
// eta_hat_pm = -zeta +- (1/2) sum d_i, with their pairing table.
struct OuterClasses {
    int sign = +1;
    AmbientVector kappa_hat_pm, eta_hat_pm;
    Rat kk;  // (kappa_hat_pm, kappa_hat_pm) = A - 8k
    Rat ee;  // (eta_hat_pm, eta_hat_pm)     = B
    Rat ke;  // (kappa_hat_pm, eta_hat_pm)   = -+ 2k
};
OuterClasses kappa_eta_outer(const MarkedBlowupModel& model, int sign);

// Primitivity bookkeeping for the outer classes:
//  (a) nu + 2*l*zeta is integral and primitive for every l in -4..4, checked
//      by SNF and by the dual witness (nu + 2*l*zeta, nu_dual) = 1;
//  (b) span{kappa_hat_pm, eta_hat_pm} is a primitive rank-2 sublattice.
struct OuterPrimitivity {
    bool shifts_integral = false;
    bool shifts_primitive_snf = false;
    bool shifts_primitive_dual = false;
    bool span_primitive = false;
    PrimitivityCertificate span_cert;
    bool verdict() const {
        return shifts_integral && shifts_primitive_snf && shifts_primitive_dual && span_primitive;
    }
};
OuterPrimitivity outer_primitivity(const MarkedBlowupModel& model, int sign);

}  // namespace k3cert
