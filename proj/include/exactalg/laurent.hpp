#pragma once

#include <map>
#include <string>
#include <vector>

#include "base/error.hpp"
#include "exactalg/rational.hpp"

namespace exactalg {

// Exponent vector of a Laurent monomial: entry 0 is the v-exponent, entries
// 1..rank are the z-exponents (one per coweight-lattice basis vector).
using Exp = std::vector<int>;

// Finite Laurent combination over Q in v and z_1..z_rank with no stored zero
// coefficients. rank is the number of z variables; elements of different
// rank never mix.
class Laurent {
  public:
    explicit Laurent(int rank = 0) : rank_(rank) {}

    static Laurent zero(int rank = 0) { return Laurent(rank); }
    static Laurent constant(const Rational& c, int rank = 0);
    static Laurent one(int rank = 0) { return constant(Rational(1), rank); }
    // c * v^ve * z^(ze)
    static Laurent monomial(const Rational& c, int ve, const std::vector<int>& ze);
    // q = v^2 as an element of the given rank
    static Laurent q(int rank = 0) { return monomial(Rational(1), 2, std::vector<int>(rank, 0)); }
    static Laurent z(int which, int rank);

    int rank() const { return rank_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // requires is_constant()
    std::size_t term_count() const { return terms_.size(); }

    const std::map<Exp, Rational>& terms() const { return terms_; }
    Rational coeff(const Exp& e) const;

    Laurent& add_term(const Exp& e, const Rational& c);

    Laurent operator-() const;
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    Laurent scale(const Rational& c) const;
    Laurent pow(long n) const;  // n >= 0

    bool operator==(const Laurent& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
    bool operator!=(const Laurent& o) const { return !(*this == o); }

    int v_degree_min() const;
    int v_degree_max() const;
    // min/max z-exponent over terms, per coordinate; requires nonzero
    std::vector<int> z_min() const;
    std::vector<int> z_max() const;
    bool depends_on_z() const;

    // substitute numeric values: v -> v_val, z_i -> z_vals[i]
    Rational eval(const Rational& v_val, const std::vector<Rational>& z_vals) const;
    // substitute q for v^2 (requires all v-exponents even), z_i -> z_vals[i]
    Rational eval_q(const Rational& q_val, const std::vector<Rational>& z_vals) const;

    // Canonical text form, lexicographic on exponent vectors, e.g.
    // "3*v^2*z1^-1 + 1".
    std::string str() const;

  private:
    int rank_;
    std::map<Exp, Rational> terms_;
    void check_rank(const Laurent& o) const;
};

}  // namespace exactalg
