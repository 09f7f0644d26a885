#pragma once

#include "k3cert/blowup.hpp"
#include "k3cert/dh.hpp"
#include "k3cert/embeddings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3cert {

// Parameters of a 2k-fixed-point construction: a partition of k into blocks
// k_j in {5..9}, block centers C_j on the circle R/2kZ, one even bound N and
// the per-block leading coefficients A_j = N - 2 k_j (k_j - 4), with B = -2.
struct ConstructionPlan {
    long long k = 0;
    int ell = 0;
    std::vector<long long> parts;  // k_1..k_ell, descending
    std::vector<long long> C;      // C_0..C_ell; C_0 = -k_ell, C_ell - C_0 = 2k
    long long N = 0;
    long long B = -2;
    Rat overlap_width = Rat(Int(1), Int(2));

    long long A_of(int j) const {  // j in 0..ell-1
        return N - 2 * parts[j] * (parts[j] - 4);
    }
};

// Default choices: parts filled with 9s (a short remainder is split across the
// last two parts so every part stays in 5..9), N the least even integer with
// N > 2 k_j (k_j - 4) for all j. Overrides must satisfy the plan invariants.
ConstructionPlan make_plan(long long k,
                           const std::optional<std::vector<long long>>& parts_override = std::nullopt,
                           const std::optional<long long>& n_override = std::nullopt);

// Description of the first violated plan invariant, nullopt when valid.
std::optional<std::string> plan_invalid(const ConstructionPlan& plan);

struct LatticeBlockCert {
    RootsData roots;
    PrimitivityCertificate primitivity;
};

struct BlowupBlockCert {
    OuterClasses plus, minus;
    bool span_primitive_plus = false;
    bool span_primitive_minus = false;
    bool shifts_primitive = false;  // nu + 2*l*zeta primitive for l in -4..4
    bool manifold_odd = false;      // restriction numbers of -kappa_hat all odd
};

struct ConstructionCertificate {
    int format_version = 1;
    ConstructionPlan plan;
    DHProfile profile;
    std::vector<LatticeBlockCert> lattice_certs;
    std::vector<BlowupBlockCert> blowup_certs;
};

// Assembles the full certificate for a valid plan: the period-2k profile with
// ell free and ell fixed-middle pieces and 2*ell walls, one lattice block per
// part, and the outer-class bookkeeping per block.
ConstructionCertificate build_certificate(const ConstructionPlan& plan);

struct VerificationReport {
    struct Check {
        std::string name;
        bool pass = false;
        std::string anchor;   // the mathematical statement being checked
        std::string witness;  // exact offending value on failure
    };
    std::vector<Check> checks;
    std::vector<std::string> warnings;
    std::string note;
    bool pass() const;
    const Check* find(const std::string& name) const;
};

// Runs every check on a structurally valid certificate; never trusts stored
// derived data (tables, divisor lists, verdicts) without recomputing it.
VerificationReport verify_certificate(const ConstructionCertificate& cert);

// Free and fixed-middle piece polynomials of block j in the global coordinate.
QuadPoly free_piece_poly(const ConstructionPlan& plan, int j);
QuadPoly middle_piece_poly(const ConstructionPlan& plan, int j);

}  // namespace k3cert
