#include "k3cert/planner.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace k3cert {

namespace {

const char* kJumpNote =
    "wall jump Delta(t) = sum (t-c)^2/(w1*w2*w3): inferred normalization, "
    "locked by the reference profiles";

struct CheckRunner {
    VerificationReport rep;

    void run(const std::string& name, const std::string& anchor,
             const std::function<std::pair<bool, std::string>()>& body) {
        VerificationReport::Check c;
        c.name = name;
        c.anchor = anchor;
        try {
            auto [pass, witness] = body();
            c.pass = pass;
            c.witness = witness;
        } catch (const std::exception& ex) {
            c.pass = false;
            c.witness = std::string("exception: ") + ex.what();
        }
        rep.checks.push_back(std::move(c));
    }
};

std::pair<bool, std::string> ok() { return {true, std::string()}; }
std::pair<bool, std::string> fail(const std::string& w) { return {false, w}; }

std::string poly_pair(const QuadPoly& got, const QuadPoly& want) {
    return "got " + got.str() + ", want " + want.str();
}

}  // namespace

VerificationReport verify_certificate(const ConstructionCertificate& cert) {
    CheckRunner r;
    r.rep.note = kJumpNote;
    const ConstructionPlan& plan = cert.plan;
    const Lattice& L = k3_lattice();
    const int ell = static_cast<int>(plan.parts.size());

    if (plan.B != -2)
        r.rep.warnings.push_back("B = " + std::to_string(plan.B) +
                                 " differs from the fixed choice -2; accepted with warning");

    r.run("plan_invariants",
          "k >= 5 partitioned into k_j in {5..9}; C_0 = -k_ell, C_j = k_j + sum_{i<j} 2k_i; "
          "N even with N > 2 k_j (k_j - 4); B even with B > -k_j/2; "
          "A_j = N - 2 k_j (k_j - 4) positive even; overlap width in (0,1)",
          [&]() {
              if (auto bad = plan_invalid(plan)) return fail(*bad);
              return ok();
          });

    // Structural agreement between the profile, the plan, and the block lists.
    bool structure_ok = false;
    r.run("profile_structure",
          "period 2k; free pieces on [C_{j-1}+4, C_j-4] and fixed-middle pieces on "
          "[C_j-4, C_j+4]; walls at C_j -+ 4 carrying k_j weight triples; one lattice "
          "and one blow-up block per part",
          [&]() {
              if (auto bad = profile_malformed(cert.profile))
                  return fail("malformed profile: " + *bad);
              if (!cert.profile.is_circle) return fail("profile domain is not a circle");
              if (cert.profile.period != Rat(make_int(2 * plan.k)))
                  return fail("period " + cert.profile.period.str() + ", want " +
                              std::to_string(2 * plan.k));
              if (cert.profile.pieces.size() != static_cast<size_t>(2 * ell))
                  return fail("piece count " + std::to_string(cert.profile.pieces.size()) +
                              ", want " + std::to_string(2 * ell));
              if (cert.profile.walls.size() != static_cast<size_t>(2 * ell))
                  return fail("wall count " + std::to_string(cert.profile.walls.size()) +
                              ", want " + std::to_string(2 * ell));
              for (int j = 0; j < ell; ++j) {
                  const Piece& fp = cert.profile.pieces[2 * j];
                  const Piece& mp = cert.profile.pieces[2 * j + 1];
                  if (fp.kind != PieceKind::Free || mp.kind != PieceKind::FixedMiddle)
                      return fail("block " + std::to_string(j + 1) +
                                  " pieces are not free + fixed-middle");
                  if (fp.lo != Rat(make_int(plan.C[j] + 4)) || fp.hi != Rat(make_int(plan.C[j + 1] - 4)))
                      return fail("free piece " + std::to_string(j + 1) + " spans [" +
                                  fp.lo.str() + ", " + fp.hi.str() + "]");
                  if (mp.lo != Rat(make_int(plan.C[j + 1] - 4)) || mp.hi != Rat(make_int(plan.C[j + 1] + 4)))
                      return fail("fixed-middle piece " + std::to_string(j + 1) + " spans [" +
                                  mp.lo.str() + ", " + mp.hi.str() + "]");
                  const Wall& wl = cert.profile.walls[2 * j];
                  const Wall& wh = cert.profile.walls[2 * j + 1];
                  if (wl.level != Rat(make_int(plan.C[j + 1] - 4)) ||
                      wh.level != Rat(make_int(plan.C[j + 1] + 4)))
                      return fail("block " + std::to_string(j + 1) + " walls at " +
                                  wl.level.str() + ", " + wh.level.str());
                  if (wl.points.size() != static_cast<size_t>(plan.parts[j]) ||
                      wh.points.size() != static_cast<size_t>(plan.parts[j]))
                      return fail("block " + std::to_string(j + 1) + " wall point counts " +
                                  std::to_string(wl.points.size()) + ", " +
                                  std::to_string(wh.points.size()));
              }
              if (cert.lattice_certs.size() != static_cast<size_t>(ell))
                  return fail("lattice block count " + std::to_string(cert.lattice_certs.size()));
              if (cert.blowup_certs.size() != static_cast<size_t>(ell))
                  return fail("blow-up block count " + std::to_string(cert.blowup_certs.size()));
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  if (rd.k != plan.parts[j])
                      return fail("lattice block " + std::to_string(j + 1) + " has k = " +
                                  std::to_string(rd.k));
                  if (rd.A != make_int(plan.A_of(j)))
                      return fail("lattice block " + std::to_string(j + 1) + " has A = " +
                                  rd.A.get_str() + ", want " + std::to_string(plan.A_of(j)));
                  if (rd.B != make_int(plan.B))
                      return fail("lattice block " + std::to_string(j + 1) + " has B = " +
                                  rd.B.get_str());
                  if (rd.kappa_hat.size() != L.rank || rd.beta.size() != L.rank ||
                      static_cast<int>(rd.d.size()) != rd.k ||
                      static_cast<int>(rd.d_dual.size()) != rd.k ||
                      rd.kappa_hat_dual.size() != L.rank || rd.beta_dual.size() != L.rank)
                      return fail("lattice block " + std::to_string(j + 1) +
                                  " vector shapes are wrong");
              }
              structure_ok = true;
              return ok();
          });

    // Profile-level checks (shared with the standalone profile checker).
    {
        ProfileReport prof;
        bool have = false;
        if (structure_ok) {
            prof = check_profile(cert.profile);
            have = true;
        }
        auto lift = [&](const std::string& item, const std::string& name,
                        const std::string& anchor) {
            r.run(name, anchor, [&]() -> std::pair<bool, std::string> {
                if (!have) return fail("not evaluated: profile structure invalid");
                for (const auto& it : prof.items)
                    if (it.name == item) return {it.pass, it.witness};
                return fail("missing profile check " + item);
            });
        };
        lift("continuity", "profile_continuity",
             "the Duistermaat-Heckman function is continuous, including across the period wrap");
        lift("wall_jumps", "profile_wall_jumps",
             "across each wall the profile jumps by sum (t-c)^2/(w1*w2*w3)");
        lift("positivity", "profile_positivity",
             "each piece is strictly positive on its closed interval");
        lift("even_coefficients", "profile_even_coefficients",
             "free pieces have degree at most two with even integer coefficients");
        lift("outer_gluing", "profile_outer_gluing",
             "free and fixed-outer pieces glued without a wall agree as polynomials");
    }

    r.run("piece_formulas",
          "free piece j is N - 2(t - C_j + k_j)^2; fixed-middle piece j is "
          "A_j + (B + k_j/2)(t - C_j)^2",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: profile structure invalid");
              for (int j = 0; j < ell; ++j) {
                  QuadPoly f = free_piece_poly(plan, j);
                  QuadPoly m = middle_piece_poly(plan, j);
                  if (cert.profile.pieces[2 * j].poly != f)
                      return fail("free piece " + std::to_string(j + 1) + ": " +
                                  poly_pair(cert.profile.pieces[2 * j].poly, f));
                  if (cert.profile.pieces[2 * j + 1].poly != m)
                      return fail("fixed-middle piece " + std::to_string(j + 1) + ": " +
                                  poly_pair(cert.profile.pieces[2 * j + 1].poly, m));
              }
              return ok();
          });

    r.run("overlap_identities",
          "N - 2(t - C_j + k_j)^2 = A_j - 8k_j - 4k_j(t - C_j) + B(t - C_j)^2, and the "
          "ascending-side identity with the next free piece (period-shifted on the last block)",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: profile structure invalid");
              for (int j = 0; j < ell; ++j) {
                  Rat a(make_int(plan.A_of(j))), b(make_int(plan.B)), kj(make_int(plan.parts[j]));
                  Rat cj(make_int(plan.C[j + 1]));
                  QuadPoly outer_minus =
                      QuadPoly{a - Rat(8) * kj, Rat(-4) * kj, b}.shifted(cj);
                  QuadPoly outer_plus = QuadPoly{a - Rat(8) * kj, Rat(4) * kj, b}.shifted(cj);
                  const QuadPoly& free_j = cert.profile.pieces[2 * j].poly;
                  QuadPoly next_free =
                      (j + 1 < ell)
                          ? cert.profile.pieces[2 * (j + 1)].poly
                          : cert.profile.pieces[0].poly.shifted(Rat(make_int(2 * plan.k)));
                  if (outer_minus != free_j)
                      return fail("descending overlap, block " + std::to_string(j + 1) + ": " +
                                  poly_pair(free_j, outer_minus));
                  if (outer_plus != next_free)
                      return fail("ascending overlap, block " + std::to_string(j + 1) + ": " +
                                  poly_pair(next_free, outer_plus));
              }
              return ok();
          });

    r.run("lattice_pairings",
          "(kappa_hat,kappa_hat) = B, (beta,beta) = A_j, (kappa_hat,beta) = 0, "
          "(kappa_hat,d_i) = 1, (beta,d_i) = 0, (d_i,d_j) = -2 delta_ij",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  auto expect = [&](const Rat& got, const Rat& want,
                                    const std::string& what) -> std::optional<std::string> {
                      if (got != want)
                          return "block " + std::to_string(j + 1) + ": " + what + " = " +
                                 got.str() + ", want " + want.str();
                      return std::nullopt;
                  };
                  std::optional<std::string> bad;
                  if (!bad) bad = expect(pair_value(L, rd.kappa_hat, rd.kappa_hat), Rat(rd.B),
                                         "(kappa_hat,kappa_hat)");
                  if (!bad) bad = expect(pair_value(L, rd.beta, rd.beta), Rat(rd.A), "(beta,beta)");
                  if (!bad)
                      bad = expect(pair_value(L, rd.kappa_hat, rd.beta), Rat(0), "(kappa_hat,beta)");
                  for (int i = 0; i < rd.k && !bad; ++i) {
                      bad = expect(pair_value(L, rd.kappa_hat, rd.d[i]), Rat(1),
                                   "(kappa_hat,d_" + std::to_string(i + 1) + ")");
                      if (!bad)
                          bad = expect(pair_value(L, rd.beta, rd.d[i]), Rat(0),
                                       "(beta,d_" + std::to_string(i + 1) + ")");
                      for (int i2 = 0; i2 < rd.k && !bad; ++i2)
                          bad = expect(pair_value(L, rd.d[i], rd.d[i2]), Rat(i == i2 ? -2 : 0),
                                       "(d_" + std::to_string(i + 1) + ",d_" +
                                           std::to_string(i2 + 1) + ")");
                  }
                  if (bad) return fail(*bad);
              }
              return ok();
          });

    r.run("lattice_dual_identity",
          "the dual-pairing matrix of {kappa_hat, beta, d_i} against the stored witnesses "
          "is the identity",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  auto primal = rd.primal_vectors();
                  auto dual = rd.dual_vectors();
                  for (size_t i = 0; i < primal.size(); ++i)
                      for (size_t i2 = 0; i2 < dual.size(); ++i2) {
                          Rat got = pair_value(L, primal[i], dual[i2]);
                          Rat want(i == i2 ? 1 : 0);
                          if (got != want)
                              return fail("block " + std::to_string(j + 1) + ": entry (" +
                                          std::to_string(i) + "," + std::to_string(i2) + ") = " +
                                          got.str());
                      }
              }
              return ok();
          });

    r.run("lattice_canonical_construction",
          "stored vectors equal the deterministic basis construction for (k_j, A_j, B)",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  RootsData want = roots_construct(rd.k, rd.A, rd.B);
                  auto same = [](const AmbientVector& a, const AmbientVector& b) { return a == b; };
                  bool match = same(rd.kappa_hat, want.kappa_hat) && same(rd.beta, want.beta) &&
                               same(rd.kappa_hat_dual, want.kappa_hat_dual) &&
                               same(rd.beta_dual, want.beta_dual) && rd.d == want.d &&
                               rd.d_dual == want.d_dual;
                  if (!match)
                      return fail("block " + std::to_string(j + 1) +
                                  " differs from the canonical construction");
              }
              return ok();
          });

    r.run("primitivity_snf",
          "the span of {kappa_hat, beta, d_1..d_k} has all elementary divisors equal to 1",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  PrimitivityCertificate c = is_primitive_span(L, rd.primal_vectors());
                  if (!c.primitive_snf) {
                      std::string ds;
                      for (const auto& d : c.divisors) ds += " " + d.get_str();
                      return fail("block " + std::to_string(j + 1) + " divisors:" + ds);
                  }
              }
              return ok();
          });

    r.run("primitivity_dual_witness",
          "integral dual witnesses pairing to the identity certify the span is primitive",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  auto primal = rd.primal_vectors();
                  auto dual = rd.dual_vectors();
                  PrimitivityCertificate c = is_primitive_span(L, primal, &dual);
                  if (!c.dual_witnesses_valid)
                      return fail("block " + std::to_string(j + 1) + " witnesses invalid");
              }
              return ok();
          });

    r.run("primitivity_methods_agree",
          "the SNF route and the dual-witness route return the same verdict",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  auto primal = rd.primal_vectors();
                  auto dual = rd.dual_vectors();
                  PrimitivityCertificate c = is_primitive_span(L, primal, &dual);
                  if (!c.methods_agree || c.primitive_snf != c.dual_witnesses_valid)
                      return fail("block " + std::to_string(j + 1) + ": snf says " +
                                  (c.primitive_snf ? "primitive" : "non-primitive") +
                                  ", witnesses " + (c.dual_witnesses_valid ? "valid" : "invalid"));
              }
              return ok();
          });

    r.run("period_point_preconditions",
          "K = span(d_i) negative definite and primitive; kappa, beta orthogonal to K; "
          "(kappa,kappa) = B + k_j/2 > 0; (beta,beta) > 0; (kappa,beta) = 0",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  PeriodReport pr = period_preconditions(L, rd.kappa(), rd.beta, rd.d);
                  for (const auto& item : pr.items)
                      if (!item.pass)
                          return fail("block " + std::to_string(j + 1) + ": " + item.name + " (" +
                                      item.witness + ")");
                  Rat kk = pair_value(L, rd.kappa(), rd.kappa());
                  Rat want = Rat(rd.B) + Rat(Int(rd.k), Int(2));
                  if (kk != want)
                      return fail("block " + std::to_string(j + 1) + ": (kappa,kappa) = " +
                                  kk.str() + ", want B + k/2 = " + want.str());
              }
              return ok();
          });

    r.run("outer_classes_canonical",
          "kappa_hat_pm = beta + 2 sum d_i and eta_hat_pm = -kappa +- (1/2) sum d_i, "
          "both integral",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  const BlowupBlockCert& bc = cert.blowup_certs[j];
                  MarkedBlowupModel model = MarkedBlowupModel::from_roots(rd);
                  OuterClasses plus = kappa_eta_outer(model, +1);
                  OuterClasses minus = kappa_eta_outer(model, -1);
                  if (bc.plus.kappa_hat_pm != plus.kappa_hat_pm ||
                      bc.plus.eta_hat_pm != plus.eta_hat_pm ||
                      bc.minus.kappa_hat_pm != minus.kappa_hat_pm ||
                      bc.minus.eta_hat_pm != minus.eta_hat_pm)
                      return fail("block " + std::to_string(j + 1) +
                                  " stored outer classes differ from recomputation");
                  if (!bc.plus.kappa_hat_pm.is_integral() || !bc.plus.eta_hat_pm.is_integral() ||
                      !bc.minus.kappa_hat_pm.is_integral() || !bc.minus.eta_hat_pm.is_integral())
                      return fail("block " + std::to_string(j + 1) +
                                  " outer classes are not integral");
              }
              return ok();
          });

    r.run("outer_pairing_tables",
          "(kappa_hat_pm,kappa_hat_pm) = A_j - 8k_j, (eta_hat_pm,eta_hat_pm) = B, "
          "(kappa_hat_pm,eta_hat_pm) = -+2k_j, and (eta_hat_pm, d_i) = -+1",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  const BlowupBlockCert& bc = cert.blowup_certs[j];
                  Rat a(rd.A), b(rd.B), kj(rd.k);
                  for (int sign : {+1, -1}) {
                      const OuterClasses& oc = sign > 0 ? bc.plus : bc.minus;
                      Rat kk = pair_value(L, oc.kappa_hat_pm, oc.kappa_hat_pm);
                      Rat ee = pair_value(L, oc.eta_hat_pm, oc.eta_hat_pm);
                      Rat ke = pair_value(L, oc.kappa_hat_pm, oc.eta_hat_pm);
                      if (kk != a - Rat(8) * kj || ee != b ||
                          ke != Rat(-2 * sign) * kj)
                          return fail("block " + std::to_string(j + 1) + " sign " +
                                      (sign > 0 ? "+" : "-") + ": table (" + kk.str() + ", " +
                                      ee.str() + ", " + ke.str() + ")");
                      for (int i = 0; i < rd.k; ++i)
                          if (pair_value(L, oc.eta_hat_pm, rd.d[i]) != Rat(-sign))
                              return fail("block " + std::to_string(j + 1) +
                                          ": (eta_hat, d_" + std::to_string(i + 1) + ") != " +
                                          std::to_string(-sign));
                  }
              }
              return ok();
          });

    r.run("outer_shifts_primitive",
          "beta + 2l*kappa is integral and primitive for every l in -4..4, by SNF and by "
          "the dual witness pairing to 1",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  MarkedBlowupModel model = MarkedBlowupModel::from_roots(cert.lattice_certs[j].roots);
                  OuterPrimitivity op = outer_primitivity(model, +1);
                  if (!op.shifts_integral || !op.shifts_primitive_snf || !op.shifts_primitive_dual)
                      return fail("block " + std::to_string(j + 1) + ": integral=" +
                                  std::to_string(op.shifts_integral) + " snf=" +
                                  std::to_string(op.shifts_primitive_snf) + " dual=" +
                                  std::to_string(op.shifts_primitive_dual));
              }
              return ok();
          });

    r.run("outer_span_primitive",
          "kappa_hat_pm and eta_hat_pm span a primitive rank-2 sublattice (both signs)",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const BlowupBlockCert& bc = cert.blowup_certs[j];
                  for (int sign : {+1, -1}) {
                      const OuterClasses& oc = sign > 0 ? bc.plus : bc.minus;
                      PrimitivityCertificate c =
                          is_primitive_span(L, {oc.kappa_hat_pm, oc.eta_hat_pm});
                      if (!c.primitive_snf) {
                          std::string ds;
                          for (const auto& d : c.divisors) ds += " " + d.get_str();
                          return fail("block " + std::to_string(j + 1) + " sign " +
                                      (sign > 0 ? "+" : "-") + " divisors:" + ds);
                      }
                  }
              }
              return ok();
          });

    r.run("dh_class_branch_agreement",
          "(kappa - t eta, kappa - t eta) reproduces the adjacent profile branch for the "
          "middle pair (beta, -kappa) and the outer pairs (kappa_hat_pm, eta_hat_pm)",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  const BlowupBlockCert& bc = cert.blowup_certs[j];
                  Rat cj(make_int(plan.C[j + 1]));
                  QuadPoly mid = dh_from_classes(L, rd.beta, -rd.kappa()).shifted(cj);
                  if (mid != cert.profile.pieces[2 * j + 1].poly)
                      return fail("block " + std::to_string(j + 1) + " middle branch: " +
                                  poly_pair(cert.profile.pieces[2 * j + 1].poly, mid));
                  QuadPoly plus =
                      dh_from_classes(L, bc.plus.kappa_hat_pm, bc.plus.eta_hat_pm).shifted(cj);
                  QuadPoly minus =
                      dh_from_classes(L, bc.minus.kappa_hat_pm, bc.minus.eta_hat_pm).shifted(cj);
                  const QuadPoly& free_j = cert.profile.pieces[2 * j].poly;
                  QuadPoly next_free =
                      (j + 1 < ell)
                          ? cert.profile.pieces[2 * (j + 1)].poly
                          : cert.profile.pieces[0].poly.shifted(Rat(make_int(2 * plan.k)));
                  if (minus != free_j)
                      return fail("block " + std::to_string(j + 1) + " descending branch: " +
                                  poly_pair(free_j, minus));
                  if (plus != next_free)
                      return fail("block " + std::to_string(j + 1) + " ascending branch: " +
                                  poly_pair(next_free, plus));
              }
              return ok();
          });

    r.run("manifold_bundle_oddness",
          "every restriction number of -kappa_hat on the exceptional classes is odd",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const RootsData& rd = cert.lattice_certs[j].roots;
                  MarkedBlowupModel model = MarkedBlowupModel::from_roots(rd);
                  if (!is_manifold_bundle(model, -rd.kappa_hat))
                      return fail("block " + std::to_string(j + 1) +
                                  ": some restriction number of -kappa_hat is even");
              }
              return ok();
          });

    r.run("fixed_point_census", "the walls carry 2k fixed points in total",
          [&]() -> std::pair<bool, std::string> {
              size_t total = 0;
              for (const auto& w : cert.profile.walls) total += w.points.size();
              if (total != static_cast<size_t>(2 * plan.k))
                  return fail(std::to_string(total) + " fixed points, want " +
                              std::to_string(2 * plan.k));
              return ok();
          });

    r.run("non_hamiltonian_mixed_signs",
          "every fixed-point weight triple contains a positive and a negative weight",
          [&]() -> std::pair<bool, std::string> {
              for (const auto& w : cert.profile.walls)
                  for (const auto& p : w.points) {
                      bool has_pos = false, has_neg = false;
                      for (long long wt : p) (wt > 0 ? has_pos : has_neg) = true;
                      if (!has_pos || !has_neg) {
                          std::ostringstream os;
                          os << "wall at " << w.level.str() << " has triple {" << p[0] << ","
                             << p[1] << "," << p[2] << "}";
                          return fail(os.str());
                      }
                  }
              return ok();
          });

    r.run("stored_data_consistency",
          "stored divisor lists, pairing tables and verdict flags match recomputation",
          [&]() -> std::pair<bool, std::string> {
              if (!structure_ok) return fail("not evaluated: structure invalid");
              for (int j = 0; j < ell; ++j) {
                  const LatticeBlockCert& lc = cert.lattice_certs[j];
                  auto primal = lc.roots.primal_vectors();
                  auto dual = lc.roots.dual_vectors();
                  PrimitivityCertificate c = is_primitive_span(L, primal, &dual);
                  if (lc.primitivity.divisors != c.divisors ||
                      lc.primitivity.primitive_snf != c.primitive_snf ||
                      lc.primitivity.dual_witnesses_valid != c.dual_witnesses_valid)
                      return fail("block " + std::to_string(j + 1) +
                                  " stored primitivity certificate is stale");
                  const BlowupBlockCert& bc = cert.blowup_certs[j];
                  MarkedBlowupModel model = MarkedBlowupModel::from_roots(lc.roots);
                  for (int sign : {+1, -1}) {
                      const OuterClasses& stored = sign > 0 ? bc.plus : bc.minus;
                      OuterClasses fresh = kappa_eta_outer(model, sign);
                      if (stored.kk != fresh.kk || stored.ee != fresh.ee || stored.ke != fresh.ke)
                          return fail("block " + std::to_string(j + 1) +
                                      " stored pairing table is stale");
                      OuterPrimitivity op = outer_primitivity(model, sign);
                      bool span = sign > 0 ? bc.span_primitive_plus : bc.span_primitive_minus;
                      if (span != op.span_primitive)
                          return fail("block " + std::to_string(j + 1) +
                                      " stored span verdict is stale");
                      if (sign > 0 &&
                          bc.shifts_primitive != (op.shifts_integral && op.shifts_primitive_snf &&
                                                  op.shifts_primitive_dual))
                          return fail("block " + std::to_string(j + 1) +
                                      " stored shift verdict is stale");
                  }
                  if (bc.manifold_odd != is_manifold_bundle(model, -lc.roots.kappa_hat))
                      return fail("block " + std::to_string(j + 1) +
                                  " stored manifold-oddness flag is stale");
              }
              return ok();
          });

    return r.rep;
}

}  // namespace k3cert
