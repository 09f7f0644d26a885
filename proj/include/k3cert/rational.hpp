#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <utility>
#include <stdexcept>
#include <string>

namespace k3cert {

using Int = mpz_class;

inline bool is_even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

// mpz_class has no long long constructor; long is 64-bit here.
static_assert(sizeof(long) >= sizeof(long long), "64-bit long expected");
inline Int make_int(long long v) { return Int(static_cast<long>(v)); }

// Quotient rounded to the nearest integer (ties toward zero), so that
// |a - q*b| <= |b|/2.
Int round_div(const Int& a, const Int& b);

// Exact rational, always canonical: denominator > 0 and gcd(|num|, den) = 1.
class Rat {
public:
    Rat() : q_(0) {}
    Rat(int n) : q_(n) {}
    Rat(long n) : q_(n) {}
    Rat(const Int& n) : q_(n) {}
    Rat(const Int& num, const Int& den) : q_(num, den) {
        if (den == 0) throw std::invalid_argument("Rat: zero denominator");
        q_.canonicalize();
    }

    // Accepts "p" or "p/q"; the result is canonicalized.
    static Rat parse(const std::string& text);

    Int num() const { return q_.get_num(); }
    Int den() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    bool is_even_integer() const { return is_integer() && k3cert::is_even(q_.get_num()); }

    Int to_integer() const {
        if (!is_integer()) throw std::domain_error("Rat: not an integer: " + str());
        return q_.get_num();
    }

    Int floor() const {
        Int r;
        mpz_fdiv_q(r.get_mpz_t(), q_.get_num().get_mpz_t(), q_.get_den().get_mpz_t());
        return r;
    }
    Int round_nearest() const { return (*this + Rat(Int(1), Int(2))).floor(); }

    // "p/q" in canonical form, "p" when q = 1.
    std::string str() const;

    Rat operator-() const { return Rat(mpq_class(-q_), canonical_tag{}); }
    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ + b.q_), canonical_tag{}); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ - b.q_), canonical_tag{}); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.q_ * b.q_), canonical_tag{}); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::invalid_argument("Rat: division by zero");
        return Rat(mpq_class(a.q_ / b.q_), canonical_tag{});
    }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.q_ >= b.q_; }

private:
    struct canonical_tag {};
    Rat(mpq_class q, canonical_tag) : q_(std::move(q)) {}
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace k3cert
