#pragma once

#include "k3cert/lattice.hpp"
#include "k3cert/rational.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3cert {

// c0 + c1*t + c2*t^2 with exact rational coefficients.
struct QuadPoly {
    Rat c0, c1, c2;

    Rat eval(const Rat& t) const { return c0 + t * (c1 + t * c2); }
    // The polynomial t -> p(t - s).
    QuadPoly shifted(const Rat& s) const {
        return QuadPoly{c0 - c1 * s + c2 * s * s, c1 - Rat(2) * c2 * s, c2};
    }
    std::string str() const;

    QuadPoly operator-() const { return {-c0, -c1, -c2}; }
    friend QuadPoly operator+(const QuadPoly& a, const QuadPoly& b) {
        return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2};
    }
    friend QuadPoly operator-(const QuadPoly& a, const QuadPoly& b) {
        return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2};
    }
    friend bool operator==(const QuadPoly&, const QuadPoly&) = default;
};

using WeightTriple = std::array<long long, 3>;

// A critical level with the weight triples of the fixed points on it.
// Triples are stored sorted descending; the list of triples is kept in
// descending lexicographic order. All weights must be nonzero.
struct Wall {
    Rat level;
    std::vector<WeightTriple> points;

    Wall() = default;
    Wall(Rat lvl, std::vector<WeightTriple> pts);
    friend bool operator==(const Wall&, const Wall&) = default;
};

// Jump of the Duistermaat-Heckman profile across a wall:
//   Delta(t) = sum over points of (t - c)^2 / (w1*w2*w3).
QuadPoly wall_jump(const Wall& w);

// (kappa - t*eta, kappa - t*eta) expanded in t.
QuadPoly dh_from_classes(const Lattice& lat, const AmbientVector& kappa,
                         const AmbientVector& eta);

enum class PieceKind { Free, FixedMiddle, FixedOuter };
std::string piece_kind_name(PieceKind k);
std::optional<PieceKind> piece_kind_from_name(const std::string& s);

struct Piece {
    PieceKind kind = PieceKind::Free;
    Rat lo, hi;  // closed interval, lo < hi
    QuadPoly poly;
    friend bool operator==(const Piece&, const Piece&) = default;
};

// Piecewise-quadratic profile over an interval or a circle R/TZ. Pieces tile
// [start, end] consecutively; on a circle end - start = T and the wrap wall
// is stored at the right edge.
struct DHProfile {
    bool is_circle = false;
    Rat period;  // meaningful when is_circle
    std::vector<Piece> pieces;
    std::vector<Wall> walls;

    Rat start() const { return pieces.front().lo; }
    Rat end() const { return pieces.back().hi; }
    friend bool operator==(const DHProfile&, const DHProfile&) = default;
};

// Description of the defect when the tiling is malformed, nullopt otherwise.
std::optional<std::string> profile_malformed(const DHProfile& p);

struct ProfileReport {
    struct Item {
        std::string name;
        bool pass = false;
        std::string witness;
    };
    std::vector<Item> items;
    std::string note;
    bool all_pass() const;
};

// Independent checks on a well-formed profile: continuity (with the period
// shift at the wrap), wall jumps as polynomial identities, strict positivity
// of every piece decided exactly, even integer coefficients of free pieces,
// and polynomial agreement of free/fixed-outer pieces glued without a wall.
// Throws std::invalid_argument on a malformed tiling.
ProfileReport check_profile(const DHProfile& p);

// Exact strict positivity of p on [lo, hi].
bool positive_on_interval(const QuadPoly& p, const Rat& lo, const Rat& hi);

// The reference circle profile of period 10: 12 - 2t^2 on [-1,1] and
// 2 + (t-5)^2/2 on [1,9], with five fixed points of weights {2,-1,-1} at 1
// and five of weights {-2,1,1} at 9.
DHProfile theorem2_profile();

// Interval profile with k fixed points of weights {2,-1,-1} at -4 and k of
// weights {-2,1,1} at +4: branches A-8k-4kt+Bt^2 / A+(B+k/2)t^2 /
// A-8k+4kt+Bt^2 on [-4-width,-4] / [-4,4] / [4,4+width].
// Requires k in 1..9, A positive even, B even with B > -k/2, width in (0,1).
DHProfile prop61_profile(int k, const Int& A, const Int& B, const Rat& width);

}  // namespace k3cert
