#include "k3cert/rational.hpp"

#include <ostream>

namespace k3cert {

Int round_div(const Int& a, const Int& b) {
    if (b == 0) throw std::invalid_argument("round_div: zero divisor");
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int two_abs_r = 2 * abs(r);
    if (two_abs_r > abs(b)) {
        // Move one step so the remainder flips to the smaller side.
        if (sgn(r) == sgn(b))
            q += 1;
        else
            q -= 1;
    }
    return q;
}

Rat Rat::parse(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rat: cannot parse \"" + text + "\"");
    }
}

std::string Rat::str() const {
    std::string s = num().get_str();
    if (den() != 1) s += "/" + den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace k3cert
