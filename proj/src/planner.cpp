#include "k3cert/planner.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace k3cert {

std::optional<std::string> plan_invalid(const ConstructionPlan& plan) {
    if (plan.k < 5) return "k = " + std::to_string(plan.k) + " < 5";
    if (plan.ell < 1 || static_cast<size_t>(plan.ell) != plan.parts.size())
        return "ell does not match the number of parts";
    long long sum = 0;
    for (long long p : plan.parts) {
        if (p < 5 || p > 9) return "part " + std::to_string(p) + " outside 5..9";
        sum += p;
    }
    if (sum != plan.k) return "parts sum to " + std::to_string(sum) + ", not k";
    if (plan.C.size() != static_cast<size_t>(plan.ell) + 1) return "C has wrong length";
    if (plan.C[0] != -plan.parts.back())
        return "C_0 = " + std::to_string(plan.C[0]) + " but -k_ell = " +
               std::to_string(-plan.parts.back());
    long long acc = 0;
    for (int j = 1; j <= plan.ell; ++j) {
        long long expect = plan.parts[j - 1] + acc;
        if (plan.C[j] != expect)
            return "C_" + std::to_string(j) + " = " + std::to_string(plan.C[j]) +
                   ", expected " + std::to_string(expect);
        acc += 2 * plan.parts[j - 1];
    }
    if (plan.C[plan.ell] - plan.C[0] != 2 * plan.k) return "C_ell - C_0 != 2k";
    if (plan.N % 2 != 0) return "N = " + std::to_string(plan.N) + " is odd";
    for (long long p : plan.parts)
        if (plan.N <= 2 * p * (p - 4))
            return "N = " + std::to_string(plan.N) + " does not exceed 2*" + std::to_string(p) +
                   "*(" + std::to_string(p) + "-4)";
    if (plan.B % 2 != 0) return "B = " + std::to_string(plan.B) + " is odd";
    for (long long p : plan.parts)
        if (Rat(make_int(plan.B)) <= Rat(make_int(-p), Int(2)))
            return "B = " + std::to_string(plan.B) + " does not exceed -k_j/2 for k_j = " +
                   std::to_string(p);
    for (int j = 0; j < plan.ell; ++j) {
        long long a = plan.N - 2 * plan.parts[j] * (plan.parts[j] - 4);
        if (a <= 0 || a % 2 != 0)
            return "A_" + std::to_string(j + 1) + " = " + std::to_string(a) +
                   " is not positive even";
    }
    if (!(Rat(0) < plan.overlap_width && plan.overlap_width < Rat(1)))
        return "overlap width " + plan.overlap_width.str() + " outside (0,1)";
    return std::nullopt;
}

ConstructionPlan make_plan(long long k,
                           const std::optional<std::vector<long long>>& parts_override,
                           const std::optional<long long>& n_override) {
    if (k < 5) throw std::invalid_argument("plan: k must be at least 5");
    ConstructionPlan plan;
    plan.k = k;
    if (parts_override) {
        plan.parts = *parts_override;
    } else {
        long long ell = (k + 8) / 9;
        long long rem = k - 9 * (ell - 1);
        plan.parts.assign(static_cast<size_t>(ell - 1), 9);
        if (rem >= 5) {
            plan.parts.push_back(rem);
        } else {
            // Split the last 9 + rem across two parts that stay in 5..9.
            plan.parts.back() = 4 + rem;
            plan.parts.push_back(5);
        }
    }
    plan.ell = static_cast<int>(plan.parts.size());
    if (n_override) {
        plan.N = *n_override;
    } else {
        long long bound = 0;
        for (long long p : plan.parts) bound = std::max(bound, 2 * p * (p - 4));
        plan.N = bound + 2;
    }
    plan.B = -2;
    plan.C.assign(static_cast<size_t>(plan.ell) + 1, 0);
    plan.C[0] = -plan.parts.back();
    long long acc = 0;
    for (int j = 1; j <= plan.ell; ++j) {
        plan.C[j] = plan.parts[j - 1] + acc;
        acc += 2 * plan.parts[j - 1];
    }
    if (auto bad = plan_invalid(plan)) throw std::invalid_argument("plan: " + *bad);
    return plan;
}

QuadPoly free_piece_poly(const ConstructionPlan& plan, int j) {
    // N - 2 (t - (C_j - k_j))^2
    Rat a(make_int(plan.C[j + 1] - plan.parts[j]));
    return QuadPoly{Rat(make_int(plan.N)) - Rat(2) * a * a, Rat(4) * a, Rat(-2)};
}

QuadPoly middle_piece_poly(const ConstructionPlan& plan, int j) {
    // A_j + (B + k_j/2) (t - C_j)^2
    Rat c(make_int(plan.C[j + 1]));
    Rat q = Rat(make_int(plan.B)) + Rat(make_int(plan.parts[j]), Int(2));
    return QuadPoly{Rat(make_int(plan.A_of(j))) + q * c * c, Rat(-2) * q * c, q};
}

ConstructionCertificate build_certificate(const ConstructionPlan& plan) {
    if (auto bad = plan_invalid(plan)) throw std::invalid_argument("build_certificate: " + *bad);

    ConstructionCertificate cert;
    cert.plan = plan;
    cert.profile.is_circle = true;
    cert.profile.period = Rat(make_int(2 * plan.k));

    for (int j = 0; j < plan.ell; ++j) {
        const long long kj = plan.parts[j];
        const Rat lo(make_int(plan.C[j] + 4));
        const Rat wall_lo(make_int(plan.C[j + 1] - 4));
        const Rat wall_hi(make_int(plan.C[j + 1] + 4));
        cert.profile.pieces.push_back({PieceKind::Free, lo, wall_lo, free_piece_poly(plan, j)});
        cert.profile.pieces.push_back(
            {PieceKind::FixedMiddle, wall_lo, wall_hi, middle_piece_poly(plan, j)});
        std::vector<WeightTriple> up(static_cast<size_t>(kj), WeightTriple{2, -1, -1});
        std::vector<WeightTriple> down(static_cast<size_t>(kj), WeightTriple{-2, 1, 1});
        cert.profile.walls.emplace_back(wall_lo, up);
        cert.profile.walls.emplace_back(wall_hi, down);

        LatticeBlockCert lat;
        lat.roots = roots_construct(static_cast<int>(kj), make_int(plan.A_of(j)), make_int(plan.B));
        auto primal = lat.roots.primal_vectors();
        auto dual = lat.roots.dual_vectors();
        lat.primitivity = is_primitive_span(k3_lattice(), primal, &dual);
        cert.lattice_certs.push_back(std::move(lat));

        MarkedBlowupModel model = MarkedBlowupModel::from_roots(cert.lattice_certs.back().roots);
        BlowupBlockCert blow;
        blow.plus = kappa_eta_outer(model, +1);
        blow.minus = kappa_eta_outer(model, -1);
        OuterPrimitivity prim_plus = outer_primitivity(model, +1);
        OuterPrimitivity prim_minus = outer_primitivity(model, -1);
        blow.span_primitive_plus = prim_plus.span_primitive;
        blow.span_primitive_minus = prim_minus.span_primitive;
        blow.shifts_primitive = prim_plus.shifts_integral && prim_plus.shifts_primitive_snf &&
                                prim_plus.shifts_primitive_dual;
        blow.manifold_odd =
            is_manifold_bundle(model, -cert.lattice_certs.back().roots.kappa_hat);
        cert.blowup_certs.push_back(std::move(blow));
    }
    return cert;
}

bool VerificationReport::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const VerificationReport::Check* VerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

}  // namespace k3cert
