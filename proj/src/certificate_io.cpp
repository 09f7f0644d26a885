#include "k3cert/certificate_io.hpp"

#include <json.hpp>

#include <set>

namespace k3cert {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rat_json(const Rat& r) { return r.str(); }

ordered_json vector_json(const AmbientVector& v) {
    ordered_json arr = ordered_json::array();
    for (int i = 0; i < v.size(); ++i) arr.push_back(v[i].str());
    return arr;
}

ordered_json poly_json(const QuadPoly& p) {
    return ordered_json::array({p.c0.str(), p.c1.str(), p.c2.str()});
}

ordered_json pieces_json(const DHProfile& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& piece : p.pieces) {
        ordered_json o;
        o["kind"] = piece_kind_name(piece.kind);
        o["interval"] = ordered_json::array({piece.lo.str(), piece.hi.str()});
        o["poly"] = poly_json(piece.poly);
        arr.push_back(std::move(o));
    }
    return arr;
}

ordered_json walls_json(const DHProfile& p) {
    ordered_json arr = ordered_json::array();
    for (const auto& w : p.walls) {
        ordered_json o;
        o["level"] = w.level.str();
        ordered_json pts = ordered_json::array();
        for (const auto& t : w.points) pts.push_back(ordered_json::array({t[0], t[1], t[2]}));
        o["points"] = std::move(pts);
        arr.push_back(std::move(o));
    }
    return arr;
}

ordered_json profile_json(const DHProfile& p) {
    ordered_json o;
    if (p.is_circle)
        o["period"] = p.period.str();
    else
        o["interval"] = ordered_json::array({p.start().str(), p.end().str()});
    o["pieces"] = pieces_json(p);
    o["walls"] = walls_json(p);
    return o;
}

ordered_json roots_json(const RootsData& rd, const PrimitivityCertificate& prim) {
    ordered_json o;
    o["k"] = rd.k;
    o["A"] = rd.A.get_str();
    o["B"] = rd.B.get_str();
    o["kappa_hat"] = vector_json(rd.kappa_hat);
    o["beta"] = vector_json(rd.beta);
    ordered_json d = ordered_json::array();
    for (const auto& v : rd.d) d.push_back(vector_json(v));
    o["d"] = std::move(d);
    o["kappa_hat_dual"] = vector_json(rd.kappa_hat_dual);
    o["beta_dual"] = vector_json(rd.beta_dual);
    ordered_json dd = ordered_json::array();
    for (const auto& v : rd.d_dual) dd.push_back(vector_json(v));
    o["d_dual"] = std::move(dd);
    ordered_json divs = ordered_json::array();
    for (const auto& dv : prim.divisors) divs.push_back(dv.get_str());
    o["snf_divisors"] = std::move(divs);
    o["dual_identity"] = prim.dual_witnesses_valid;
    o["primitive"] = prim.primitive_snf;
    return o;
}

ordered_json blowup_json(const BlowupBlockCert& bc) {
    ordered_json o;
    o["kappa_hat_plus"] = vector_json(bc.plus.kappa_hat_pm);
    o["eta_hat_plus"] = vector_json(bc.plus.eta_hat_pm);
    o["kappa_hat_minus"] = vector_json(bc.minus.kappa_hat_pm);
    o["eta_hat_minus"] = vector_json(bc.minus.eta_hat_pm);
    ordered_json pr;
    pr["kk_plus"] = bc.plus.kk.str();
    pr["ee_plus"] = bc.plus.ee.str();
    pr["ke_plus"] = bc.plus.ke.str();
    pr["kk_minus"] = bc.minus.kk.str();
    pr["ee_minus"] = bc.minus.ee.str();
    pr["ke_minus"] = bc.minus.ke.str();
    o["pairings"] = std::move(pr);
    o["span_primitive_plus"] = bc.span_primitive_plus;
    o["span_primitive_minus"] = bc.span_primitive_minus;
    o["shifts_primitive"] = bc.shifts_primitive;
    o["manifold_odd"] = bc.manifold_odd;
    return o;
}

// ---- parsing helpers (strict schema; values may be semantically wrong) ----

[[noreturn]] void bad(const std::string& what) { throw CertificateError(what); }

const ordered_json& field(const ordered_json& o, const char* key) {
    if (!o.is_object() || !o.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return o.at(key);
}

void expect_keys(const ordered_json& o, std::initializer_list<const char*> keys,
                 const char* where) {
    if (!o.is_object()) bad(std::string(where) + ": not an object");
    std::set<std::string> allowed;
    for (const char* k : keys) allowed.insert(k);
    for (auto it = o.begin(); it != o.end(); ++it)
        if (!allowed.count(it.key()))
            bad(std::string(where) + ": unexpected field \"" + it.key() + "\"");
    for (const char* k : keys)
        if (!o.contains(k)) bad(std::string(where) + ": missing field \"" + k + "\"");
}

long long get_int(const ordered_json& v, const char* what) {
    if (!v.is_number_integer()) bad(std::string(what) + ": not an integer");
    return v.get<long long>();
}

Rat get_rat(const ordered_json& v, const char* what) {
    if (!v.is_string()) bad(std::string(what) + ": not a rational string");
    const std::string s = v.get<std::string>();
    Rat r;
    try {
        r = Rat::parse(s);
    } catch (const std::exception&) {
        bad(std::string(what) + ": cannot parse rational \"" + s + "\"");
    }
    if (r.str() != s) bad(std::string(what) + ": rational \"" + s + "\" is not canonical");
    return r;
}

Int get_bigint(const ordered_json& v, const char* what) {
    Rat r = get_rat(v, what);
    if (!r.is_integer()) bad(std::string(what) + ": \"" + r.str() + "\" is not an integer");
    return r.num();
}

AmbientVector get_vector(const ordered_json& v, const char* what) {
    if (!v.is_array() || v.size() != static_cast<size_t>(k3basis::RANK))
        bad(std::string(what) + ": not a 22-entry array");
    AmbientVector out(k3basis::RANK);
    for (int i = 0; i < k3basis::RANK; ++i) out[i] = get_rat(v.at(i), what);
    return out;
}

QuadPoly get_poly(const ordered_json& v, const char* what) {
    if (!v.is_array() || v.size() != 3) bad(std::string(what) + ": not a coefficient triple");
    return QuadPoly{get_rat(v.at(0), what), get_rat(v.at(1), what), get_rat(v.at(2), what)};
}

bool get_bool(const ordered_json& v, const char* what) {
    if (!v.is_boolean()) bad(std::string(what) + ": not a boolean");
    return v.get<bool>();
}

DHProfile parse_profile(const ordered_json& o) {
    expect_keys(o, {"period", "pieces", "walls"}, "profile");
    DHProfile p;
    p.is_circle = true;
    p.period = get_rat(field(o, "period"), "profile.period");
    const ordered_json& pieces = field(o, "pieces");
    if (!pieces.is_array() || pieces.empty()) bad("profile.pieces: not a nonempty array");
    for (const auto& pj : pieces) {
        expect_keys(pj, {"kind", "interval", "poly"}, "piece");
        const ordered_json& kind = field(pj, "kind");
        if (!kind.is_string()) bad("piece.kind: not a string");
        auto k = piece_kind_from_name(kind.get<std::string>());
        if (!k) bad("piece.kind: unknown kind \"" + kind.get<std::string>() + "\"");
        const ordered_json& iv = field(pj, "interval");
        if (!iv.is_array() || iv.size() != 2) bad("piece.interval: not a pair");
        Piece piece;
        piece.kind = *k;
        piece.lo = get_rat(iv.at(0), "piece.interval");
        piece.hi = get_rat(iv.at(1), "piece.interval");
        piece.poly = get_poly(field(pj, "poly"), "piece.poly");
        p.pieces.push_back(std::move(piece));
    }
    const ordered_json& walls = field(o, "walls");
    if (!walls.is_array()) bad("profile.walls: not an array");
    for (const auto& wj : walls) {
        expect_keys(wj, {"level", "points"}, "wall");
        Rat level = get_rat(field(wj, "level"), "wall.level");
        const ordered_json& pts = field(wj, "points");
        if (!pts.is_array()) bad("wall.points: not an array");
        std::vector<WeightTriple> triples;
        for (const auto& tj : pts) {
            if (!tj.is_array() || tj.size() != 3) bad("wall point: not a weight triple");
            WeightTriple t{get_int(tj.at(0), "weight"), get_int(tj.at(1), "weight"),
                           get_int(tj.at(2), "weight")};
            for (long long w : t)
                if (w == 0) bad("wall point: zero weight");
            triples.push_back(t);
        }
        p.walls.emplace_back(std::move(level), std::move(triples));
    }
    return p;
}

LatticeBlockCert parse_lattice_block(const ordered_json& o) {
    expect_keys(o,
                {"k", "A", "B", "kappa_hat", "beta", "d", "kappa_hat_dual", "beta_dual", "d_dual",
                 "snf_divisors", "dual_identity", "primitive"},
                "lattice block");
    LatticeBlockCert lc;
    long long k = get_int(field(o, "k"), "lattice.k");
    if (k < 0 || k > 9) bad("lattice.k: out of range 0..9");
    lc.roots.k = static_cast<int>(k);
    lc.roots.A = get_bigint(field(o, "A"), "lattice.A");
    lc.roots.B = get_bigint(field(o, "B"), "lattice.B");
    lc.roots.kappa_hat = get_vector(field(o, "kappa_hat"), "lattice.kappa_hat");
    lc.roots.beta = get_vector(field(o, "beta"), "lattice.beta");
    const ordered_json& d = field(o, "d");
    if (!d.is_array() || d.size() != static_cast<size_t>(k)) bad("lattice.d: wrong length");
    for (const auto& v : d) lc.roots.d.push_back(get_vector(v, "lattice.d"));
    lc.roots.kappa_hat_dual = get_vector(field(o, "kappa_hat_dual"), "lattice.kappa_hat_dual");
    lc.roots.beta_dual = get_vector(field(o, "beta_dual"), "lattice.beta_dual");
    const ordered_json& dd = field(o, "d_dual");
    if (!dd.is_array() || dd.size() != static_cast<size_t>(k)) bad("lattice.d_dual: wrong length");
    for (const auto& v : dd) lc.roots.d_dual.push_back(get_vector(v, "lattice.d_dual"));
    const ordered_json& divs = field(o, "snf_divisors");
    if (!divs.is_array()) bad("lattice.snf_divisors: not an array");
    for (const auto& v : divs) lc.primitivity.divisors.push_back(get_bigint(v, "snf divisor"));
    lc.primitivity.has_dual_witnesses = true;
    lc.primitivity.dual_witnesses_valid = get_bool(field(o, "dual_identity"), "dual_identity");
    lc.primitivity.primitive_snf = get_bool(field(o, "primitive"), "primitive");
    return lc;
}

BlowupBlockCert parse_blowup_block(const ordered_json& o) {
    expect_keys(o,
                {"kappa_hat_plus", "eta_hat_plus", "kappa_hat_minus", "eta_hat_minus", "pairings",
                 "span_primitive_plus", "span_primitive_minus", "shifts_primitive", "manifold_odd"},
                "blowup block");
    BlowupBlockCert bc;
    bc.plus.sign = +1;
    bc.minus.sign = -1;
    bc.plus.kappa_hat_pm = get_vector(field(o, "kappa_hat_plus"), "blowup.kappa_hat_plus");
    bc.plus.eta_hat_pm = get_vector(field(o, "eta_hat_plus"), "blowup.eta_hat_plus");
    bc.minus.kappa_hat_pm = get_vector(field(o, "kappa_hat_minus"), "blowup.kappa_hat_minus");
    bc.minus.eta_hat_pm = get_vector(field(o, "eta_hat_minus"), "blowup.eta_hat_minus");
    const ordered_json& pr = field(o, "pairings");
    expect_keys(pr, {"kk_plus", "ee_plus", "ke_plus", "kk_minus", "ee_minus", "ke_minus"},
                "blowup pairings");
    bc.plus.kk = get_rat(field(pr, "kk_plus"), "pairings.kk_plus");
    bc.plus.ee = get_rat(field(pr, "ee_plus"), "pairings.ee_plus");
    bc.plus.ke = get_rat(field(pr, "ke_plus"), "pairings.ke_plus");
    bc.minus.kk = get_rat(field(pr, "kk_minus"), "pairings.kk_minus");
    bc.minus.ee = get_rat(field(pr, "ee_minus"), "pairings.ee_minus");
    bc.minus.ke = get_rat(field(pr, "ke_minus"), "pairings.ke_minus");
    bc.span_primitive_plus = get_bool(field(o, "span_primitive_plus"), "span_primitive_plus");
    bc.span_primitive_minus = get_bool(field(o, "span_primitive_minus"), "span_primitive_minus");
    bc.shifts_primitive = get_bool(field(o, "shifts_primitive"), "shifts_primitive");
    bc.manifold_odd = get_bool(field(o, "manifold_odd"), "manifold_odd");
    return bc;
}

}  // namespace

std::string emit_certificate(const ConstructionCertificate& cert) {
    ordered_json o;
    o["format_version"] = cert.format_version;
    o["k"] = cert.plan.k;
    o["ell"] = cert.plan.ell;
    o["parts"] = cert.plan.parts;
    o["C"] = cert.plan.C;
    o["N"] = cert.plan.N;
    o["B"] = cert.plan.B;
    o["overlap_width"] = cert.plan.overlap_width.str();
    o["profile"] = profile_json(cert.profile);
    ordered_json lats = ordered_json::array();
    for (const auto& lc : cert.lattice_certs) lats.push_back(roots_json(lc.roots, lc.primitivity));
    o["lattice_certs"] = std::move(lats);
    ordered_json blows = ordered_json::array();
    for (const auto& bc : cert.blowup_certs) blows.push_back(blowup_json(bc));
    o["blowup_certs"] = std::move(blows);
    return o.dump(2) + "\n";
}

ConstructionCertificate parse_certificate(const std::string& text) {
    ordered_json o;
    try {
        o = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        bad(std::string("invalid JSON: ") + ex.what());
    }
    expect_keys(o,
                {"format_version", "k", "ell", "parts", "C", "N", "B", "overlap_width", "profile",
                 "lattice_certs", "blowup_certs"},
                "certificate");
    ConstructionCertificate cert;
    long long version = get_int(field(o, "format_version"), "format_version");
    if (version != 1) bad("unsupported format_version " + std::to_string(version));
    cert.format_version = 1;
    cert.plan.k = get_int(field(o, "k"), "k");
    cert.plan.ell = static_cast<int>(get_int(field(o, "ell"), "ell"));
    const ordered_json& parts = field(o, "parts");
    if (!parts.is_array() || parts.empty()) bad("parts: not a nonempty array");
    for (const auto& v : parts) cert.plan.parts.push_back(get_int(v, "parts entry"));
    const ordered_json& centers = field(o, "C");
    if (!centers.is_array()) bad("C: not an array");
    for (const auto& v : centers) cert.plan.C.push_back(get_int(v, "C entry"));
    cert.plan.N = get_int(field(o, "N"), "N");
    cert.plan.B = get_int(field(o, "B"), "B");
    cert.plan.overlap_width = get_rat(field(o, "overlap_width"), "overlap_width");
    cert.profile = parse_profile(field(o, "profile"));
    const ordered_json& lats = field(o, "lattice_certs");
    if (!lats.is_array()) bad("lattice_certs: not an array");
    for (const auto& v : lats) cert.lattice_certs.push_back(parse_lattice_block(v));
    const ordered_json& blows = field(o, "blowup_certs");
    if (!blows.is_array()) bad("blowup_certs: not an array");
    for (const auto& v : blows) cert.blowup_certs.push_back(parse_blowup_block(v));
    return cert;
}

std::string emit_profile(const DHProfile& profile) { return profile_json(profile).dump(2) + "\n"; }

std::string emit_roots(const RootsData& roots, const PrimitivityCertificate& prim) {
    return roots_json(roots, prim).dump(2) + "\n";
}

std::string report_to_json(const VerificationReport& rep) {
    ordered_json o;
    o["pass"] = rep.pass();
    o["note"] = rep.note;
    o["warnings"] = rep.warnings;
    ordered_json checks = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        cj["anchor"] = c.anchor;
        cj["witness"] = c.witness;
        checks.push_back(std::move(cj));
    }
    o["checks"] = std::move(checks);
    return o.dump(2) + "\n";
}

namespace {
std::string escape_pipes(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '|') out += "\\|";
        else out += ch;
    }
    return out;
}
}  // namespace

std::string report_to_markdown(const VerificationReport& rep) {
    std::string md = "# Construction certificate verification\n\n";
    md += std::string("Overall: **") + (rep.pass() ? "PASS" : "FAIL") + "**\n\n";
    if (!rep.note.empty()) md += "Note: " + rep.note + "\n\n";
    for (const auto& w : rep.warnings) md += "Warning: " + w + "\n\n";
    md += "| check | result | statement | witness |\n";
    md += "|---|---|---|---|\n";
    for (const auto& c : rep.checks)
        md += "| " + c.name + " | " + (c.pass ? "PASS" : "FAIL") + " | " + escape_pipes(c.anchor) +
              " | " + escape_pipes(c.witness) + " |\n";
    return md;
}

std::string report_to_text(const VerificationReport& rep) {
    std::string out;
    for (const auto& c : rep.checks)
        out += std::string(c.pass ? "[PASS] " : "[FAIL] ") + c.name +
               (c.witness.empty() ? "" : " -- " + c.witness) + "\n";
    for (const auto& w : rep.warnings) out += "[WARN] " + w + "\n";
    out += std::string("overall: ") + (rep.pass() ? "PASS" : "FAIL") + "\n";
    return out;
}

}  // namespace k3cert
