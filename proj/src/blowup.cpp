#include "k3cert/blowup.hpp"

#include <stdexcept>

namespace k3cert {

MarkedBlowupModel MarkedBlowupModel::from_roots(const RootsData& rd) {
    MarkedBlowupModel m;
    m.k = rd.k;
    m.exceptional = rd.d;
    m.nu_class = rd.beta;
    m.zeta_class = rd.kappa();
    m.nu_dual = rd.beta_dual;
    return m;
}

AmbientVector MarkedBlowupModel::sum_exceptional() const {
    AmbientVector s(k3basis::RANK);
    for (const auto& d : exceptional) s += d;
    return s;
}

std::vector<Rat> restriction_numbers(const MarkedBlowupModel& model, const AmbientVector& c) {
    if (c.size() != model.base().rank)
        throw std::invalid_argument("restriction_numbers: dimension mismatch");
    std::vector<Rat> n;
    n.reserve(model.exceptional.size());
    for (const auto& d : model.exceptional) n.push_back(pair_value(model.base(), c, d));
    return n;
}

AmbientVector euler_descent(const MarkedBlowupModel& model, const AmbientVector& e_hat) {
    std::vector<Rat> n = restriction_numbers(model, e_hat);
    AmbientVector out = e_hat;
    const Rat half(Int(1), Int(2));
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i].is_zero()) continue;
        out += (half * n[i]) * model.exceptional[i];
    }
    return out;
}

bool is_manifold_bundle(const MarkedBlowupModel& model, const AmbientVector& e_hat) {
    if (!e_hat.is_integral())
        throw std::invalid_argument("is_manifold_bundle: class is not integral");
    for (const Rat& n : restriction_numbers(model, e_hat)) {
        if (!n.is_integer()) throw std::logic_error("is_manifold_bundle: non-integer restriction");
        if (is_even(n.num())) return false;
    }
    return true;
}

OuterClasses kappa_eta_outer(const MarkedBlowupModel& model, int sign) {
    if (sign != 1 && sign != -1) throw std::invalid_argument("kappa_eta_outer: sign must be +-1");
    OuterClasses oc;
    oc.sign = sign;
    AmbientVector sum = model.sum_exceptional();
    oc.kappa_hat_pm = model.nu_class + Rat(2) * sum;
    oc.eta_hat_pm = -model.zeta_class + Rat(Int(sign), Int(2)) * sum;
    if (!oc.kappa_hat_pm.is_integral() || !oc.eta_hat_pm.is_integral())
        throw std::logic_error("kappa_eta_outer: outer class is not integral");
    const Lattice& L = model.base();
    oc.kk = pair_value(L, oc.kappa_hat_pm, oc.kappa_hat_pm);
    oc.ee = pair_value(L, oc.eta_hat_pm, oc.eta_hat_pm);
    oc.ke = pair_value(L, oc.kappa_hat_pm, oc.eta_hat_pm);
    return oc;
}

OuterPrimitivity outer_primitivity(const MarkedBlowupModel& model, int sign) {
    OuterPrimitivity res;
    const Lattice& L = model.base();

    res.shifts_integral = true;
    res.shifts_primitive_snf = true;
    res.shifts_primitive_dual = true;
    for (int l = -4; l <= 4; ++l) {
        AmbientVector v = model.nu_class + Rat(2 * l) * model.zeta_class;
        if (!v.is_integral()) {
            res.shifts_integral = false;
            res.shifts_primitive_snf = false;
            res.shifts_primitive_dual = false;
            break;
        }
        PrimitivityCertificate cert = is_primitive_span(L, {v});
        if (!cert.primitive_snf) res.shifts_primitive_snf = false;
        if (pair_value(L, v, model.nu_dual) != Rat(1)) res.shifts_primitive_dual = false;
    }

    OuterClasses oc = kappa_eta_outer(model, sign);
    res.span_cert = is_primitive_span(L, {oc.kappa_hat_pm, oc.eta_hat_pm});
    res.span_primitive = res.span_cert.primitive_snf;
    return res;
}

}  // namespace k3cert
