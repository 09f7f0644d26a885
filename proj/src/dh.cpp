#include "k3cert/dh.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3cert {

std::string QuadPoly::str() const {
    std::ostringstream os;
    os << c0.str();
    if (!c1.is_zero()) os << (c1.sign() > 0 ? " + " : " - ") << (c1.sign() > 0 ? c1 : -c1).str() << " t";
    if (!c2.is_zero()) os << (c2.sign() > 0 ? " + " : " - ") << (c2.sign() > 0 ? c2 : -c2).str() << " t^2";
    return os.str();
}

Wall::Wall(Rat lvl, std::vector<WeightTriple> pts) : level(std::move(lvl)), points(std::move(pts)) {
    for (auto& p : points) {
        for (long long w : p)
            if (w == 0) throw std::invalid_argument("Wall: zero weight");
        std::sort(p.begin(), p.end(), std::greater<long long>());
    }
    std::sort(points.begin(), points.end(), std::greater<WeightTriple>());
}

QuadPoly wall_jump(const Wall& w) {
    QuadPoly jump;
    for (const auto& p : w.points) {
        Int prod = make_int(p[0]) * make_int(p[1]) * make_int(p[2]);
        if (prod == 0) throw std::invalid_argument("wall_jump: zero weight");
        Rat inv(Int(1), prod);
        jump.c2 += inv;
        jump.c1 += Rat(-2) * w.level * inv;
        jump.c0 += w.level * w.level * inv;
    }
    return jump;
}

QuadPoly dh_from_classes(const Lattice& lat, const AmbientVector& kappa,
                         const AmbientVector& eta) {
    // (kappa - t eta, kappa - t eta) = (k,k) - 2t (k,e) + t^2 (e,e)
    QuadPoly p;
    p.c0 = pair_value(lat, kappa, kappa);
    p.c1 = Rat(-2) * pair_value(lat, kappa, eta);
    p.c2 = pair_value(lat, eta, eta);
    return p;
}

std::string piece_kind_name(PieceKind k) {
    switch (k) {
        case PieceKind::Free: return "free";
        case PieceKind::FixedMiddle: return "fixed_middle";
        case PieceKind::FixedOuter: return "fixed_outer";
    }
    return "?";
}

std::optional<PieceKind> piece_kind_from_name(const std::string& s) {
    if (s == "free") return PieceKind::Free;
    if (s == "fixed_middle") return PieceKind::FixedMiddle;
    if (s == "fixed_outer") return PieceKind::FixedOuter;
    return std::nullopt;
}

std::optional<std::string> profile_malformed(const DHProfile& p) {
    if (p.pieces.empty()) return "no pieces";
    for (size_t i = 0; i < p.pieces.size(); ++i) {
        if (!(p.pieces[i].lo < p.pieces[i].hi))
            return "piece " + std::to_string(i) + " has empty interval";
        if (i > 0 && p.pieces[i - 1].hi != p.pieces[i].lo)
            return "pieces " + std::to_string(i - 1) + " and " + std::to_string(i) +
                   " do not share an endpoint";
    }
    if (p.is_circle) {
        if (!(p.period > Rat(0))) return "circle period is not positive";
        if (p.end() - p.start() != p.period)
            return "pieces span " + (p.end() - p.start()).str() + " but the period is " +
                   p.period.str();
    }
    for (size_t i = 0; i < p.walls.size(); ++i) {
        if (i > 0 && !(p.walls[i - 1].level < p.walls[i].level))
            return "wall levels are not strictly increasing";
        const Rat& c = p.walls[i].level;
        bool at_boundary = false;
        for (size_t j = 1; j < p.pieces.size(); ++j)
            if (p.pieces[j].lo == c) at_boundary = true;
        if (p.is_circle && c == p.end()) at_boundary = true;
        if (!at_boundary)
            return "wall at " + c.str() + " is not at a piece boundary";
    }
    return std::nullopt;
}

bool positive_on_interval(const QuadPoly& p, const Rat& lo, const Rat& hi) {
    if (!(lo <= hi)) throw std::invalid_argument("positive_on_interval: empty interval");
    Rat min_val = p.eval(lo);
    Rat at_hi = p.eval(hi);
    if (at_hi < min_val) min_val = at_hi;
    if (!p.c2.is_zero()) {
        Rat vertex = -p.c1 / (Rat(2) * p.c2);
        if (lo <= vertex && vertex <= hi) {
            Rat at_v = p.eval(vertex);
            if (at_v < min_val) min_val = at_v;
        }
    }
    return min_val.sign() > 0;
}

bool ProfileReport::all_pass() const {
    return std::all_of(items.begin(), items.end(), [](const Item& it) { return it.pass; });
}

namespace {

const char* kJumpNote =
    "wall jump Delta(t) = sum (t-c)^2/(w1*w2*w3): inferred normalization, "
    "locked by the reference profiles";

const Wall* wall_at(const DHProfile& p, const Rat& level) {
    for (const auto& w : p.walls)
        if (w.level == level) return &w;
    return nullptr;
}

}  // namespace

ProfileReport check_profile(const DHProfile& p) {
    if (auto bad = profile_malformed(p))
        throw std::invalid_argument("check_profile: malformed profile: " + *bad);

    ProfileReport rep;
    rep.note = kJumpNote;
    auto add = [&](const std::string& name, bool pass, const std::string& witness) {
        rep.items.push_back({name, pass, witness});
    };
    const size_t m = p.pieces.size();

    {
        bool pass = true;
        std::string witness;
        for (size_t i = 1; i < m && pass; ++i) {
            const Rat& b = p.pieces[i].lo;
            Rat left = p.pieces[i - 1].poly.eval(b);
            Rat right = p.pieces[i].poly.eval(b);
            if (left != right) {
                pass = false;
                witness = "at t = " + b.str() + ": " + left.str() + " vs " + right.str();
            }
        }
        if (pass && p.is_circle) {
            Rat left = p.pieces.back().poly.eval(p.end());
            Rat right = p.pieces.front().poly.eval(p.start());
            if (left != right) {
                pass = false;
                witness = "period wrap: " + left.str() + " at " + p.end().str() + " vs " +
                          right.str() + " at " + p.start().str();
            }
        }
        add("continuity", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        auto check_boundary = [&](const Rat& level, const QuadPoly& lower, const QuadPoly& upper) {
            QuadPoly diff = upper - lower;
            const Wall* w = wall_at(p, level);
            QuadPoly expected = w ? wall_jump(*w) : QuadPoly{};
            if (diff != expected) {
                pass = false;
                witness = "at t = " + level.str() + ": difference " + diff.str() +
                          (w ? " but jump " + expected.str() : " without a wall");
            }
        };
        for (size_t i = 1; i < m && pass; ++i)
            check_boundary(p.pieces[i].lo, p.pieces[i - 1].poly, p.pieces[i].poly);
        if (pass && p.is_circle)
            check_boundary(p.end(), p.pieces.back().poly,
                           p.pieces.front().poly.shifted(p.period));
        add("wall_jumps", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        for (size_t i = 0; i < m && pass; ++i) {
            const Piece& piece = p.pieces[i];
            if (!positive_on_interval(piece.poly, piece.lo, piece.hi)) {
                pass = false;
                witness = "piece " + std::to_string(i) + " (" + piece.poly.str() +
                          ") is not positive on [" + piece.lo.str() + ", " + piece.hi.str() + "]";
            }
        }
        add("positivity", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        for (size_t i = 0; i < m && pass; ++i) {
            const Piece& piece = p.pieces[i];
            if (piece.kind != PieceKind::Free) continue;
            if (!piece.poly.c0.is_even_integer() || !piece.poly.c1.is_even_integer() ||
                !piece.poly.c2.is_even_integer()) {
                pass = false;
                witness = "free piece " + std::to_string(i) + " has coefficients (" +
                          piece.poly.c0.str() + ", " + piece.poly.c1.str() + ", " +
                          piece.poly.c2.str() + ")";
            }
        }
        add("even_coefficients", pass, witness);
    }
    {
        bool pass = true;
        std::string witness;
        auto is_glue_pair = [](PieceKind a, PieceKind b) {
            return (a == PieceKind::Free && b == PieceKind::FixedOuter) ||
                   (a == PieceKind::FixedOuter && b == PieceKind::Free);
        };
        for (size_t i = 1; i < m && pass; ++i) {
            if (!is_glue_pair(p.pieces[i - 1].kind, p.pieces[i].kind)) continue;
            if (wall_at(p, p.pieces[i].lo) != nullptr) continue;
            if (p.pieces[i - 1].poly != p.pieces[i].poly) {
                pass = false;
                witness = "pieces " + std::to_string(i - 1) + " and " + std::to_string(i) +
                          " glue at t = " + p.pieces[i].lo.str() + " but differ as polynomials";
            }
        }
        add("outer_gluing", pass, witness);
    }
    return rep;
}

DHProfile theorem2_profile() {
    DHProfile p;
    p.is_circle = true;
    p.period = Rat(10);
    QuadPoly free_piece{Rat(12), Rat(0), Rat(-2)};
    // 2 + (t-5)^2/2 = 27/2 - 5t + t^2/2
    QuadPoly mid{Rat(Int(29), Int(2)), Rat(-5), Rat(Int(1), Int(2))};
    p.pieces.push_back({PieceKind::Free, Rat(-1), Rat(1), free_piece});
    p.pieces.push_back({PieceKind::FixedMiddle, Rat(1), Rat(9), mid});
    std::vector<WeightTriple> up(5, WeightTriple{2, -1, -1});
    std::vector<WeightTriple> down(5, WeightTriple{-2, 1, 1});
    p.walls.emplace_back(Rat(1), up);
    p.walls.emplace_back(Rat(9), down);
    return p;
}

DHProfile prop61_profile(int k, const Int& A, const Int& B, const Rat& width) {
    if (k < 1 || k > 9) throw std::invalid_argument("prop61_profile: k must be in 1..9");
    if (!is_even(A) || A <= 0) throw std::invalid_argument("prop61_profile: A must be positive even");
    if (!is_even(B)) throw std::invalid_argument("prop61_profile: B must be even");
    if (Rat(B) <= Rat(Int(-k), Int(2)))
        throw std::invalid_argument("prop61_profile: B must exceed -k/2");
    if (!(Rat(0) < width && width < Rat(1)))
        throw std::invalid_argument("prop61_profile: width must be in (0,1)");

    const Rat a(A), b(B), kk(k);
    DHProfile p;
    QuadPoly outer_minus{a - Rat(8) * kk, Rat(-4) * kk, b};
    QuadPoly middle{a, Rat(0), b + kk / Rat(2)};
    QuadPoly outer_plus{a - Rat(8) * kk, Rat(4) * kk, b};
    p.pieces.push_back({PieceKind::FixedOuter, Rat(-4) - width, Rat(-4), outer_minus});
    p.pieces.push_back({PieceKind::FixedMiddle, Rat(-4), Rat(4), middle});
    p.pieces.push_back({PieceKind::FixedOuter, Rat(4), Rat(4) + width, outer_plus});
    std::vector<WeightTriple> up(static_cast<size_t>(k), WeightTriple{2, -1, -1});
    std::vector<WeightTriple> down(static_cast<size_t>(k), WeightTriple{-2, 1, 1});
    p.walls.emplace_back(Rat(-4), up);
    p.walls.emplace_back(Rat(4), down);
    return p;
}

}  // namespace k3cert
