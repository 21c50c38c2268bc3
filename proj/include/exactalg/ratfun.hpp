#pragma once

#include <string>

#include "exactalg/laurent.hpp"

namespace exactalg {

// Quotient of two Laurent elements with nonzero denominator. Equality is
// decided by cross-multiplication; no multivariate gcd is attempted beyond
// stripping common monomial content and a cheap exact-division probe.
class RatFun {
  public:
    explicit RatFun(int rank = 0) : num_(rank), den_(Laurent::one(rank)) {}
    RatFun(Laurent num, Laurent den);
    /* implicit */ RatFun(const Laurent& numerator)
        : num_(numerator), den_(Laurent::one(numerator.rank())) {}

    static RatFun constant(const Rational& c, int rank = 0) {
        return RatFun(Laurent::constant(c, rank));
    }
    static RatFun one(int rank = 0) { return RatFun(Laurent::one(rank)); }
    static RatFun zero(int rank = 0) { return RatFun(rank); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }
    int rank() const { return num_.rank(); }
    bool is_zero() const { return num_.is_zero(); }

    RatFun operator-() const;
    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    RatFun inverse() const;

    bool operator==(const RatFun& o) const;
    bool operator!=(const RatFun& o) const { return !(*this == o); }

    Rational eval(const Rational& v_val, const std::vector<Rational>& z_vals) const;
    Rational eval_q(const Rational& q_val, const std::vector<Rational>& z_vals) const;

    // True if den divides num as Laurent elements; sets quotient.
    bool exact_laurent(Laurent& quotient) const;

    std::string str() const;

  private:
    Laurent num_, den_;
    void normalize();
};

}  // namespace exactalg
