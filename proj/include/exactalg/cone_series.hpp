#pragma once

#include <map>
#include <optional>
#include <vector>

#include "exactalg/ratfun.hpp"

namespace exactalg {

// Finitely generated sub-monoid of the coweight lattice, given by its
// generators. Series arithmetic requires a pointed cone (a strictly positive
// integer grading exists); the full-line rank-1 cone is accepted only by the
// opposed-pair expansion.
struct Cone {
    int rank = 1;
    std::vector<std::vector<int>> gens;

    static Cone positive(int rank);
    static Cone negative_line();
    static Cone full_line();

    bool pointed() const;
    // integer functional w with <w, g> >= 1 for every generator
    std::vector<int> grading() const;
    long grade(const std::vector<int>& pt) const;
    // pt lies in the monoid (simplicial cones: nonneg integer coordinates)
    bool contains(const std::vector<int>& pt) const;

    bool operator==(const Cone& o) const { return rank == o.rank && gens == o.gens; }
};

// Cone-supported Laurent series in the z-variables with coefficients in
// Q(v), truncated at a recorded grading order. Support stays inside
// offset + cone; mixing cones is an error.
class ConeSeries {
  public:
    ConeSeries(Cone cone, std::vector<int> offset, int order);

    const Cone& cone() const { return cone_; }
    const std::vector<int>& offset() const { return offset_; }
    int order() const { return order_; }
    const std::map<std::vector<int>, RatFun>& coeffs() const { return coeffs_; }

    RatFun coeff(const std::vector<int>& e) const;
    void set_coeff(const std::vector<int>& e, const RatFun& c);

    ConeSeries operator+(const ConeSeries& o) const;
    ConeSeries operator*(const ConeSeries& o) const;
    ConeSeries scale(const RatFun& c) const;

    bool same_window_equal(const ConeSeries& o) const;

    // coefficient of z^0; requires the window to cover exponent 0
    RatFun const_term() const;

  private:
    Cone cone_;
    std::vector<int> offset_;
    int order_;
    std::map<std::vector<int>, RatFun> coeffs_;
    void check_compatible(const ConeSeries& o) const;
};

// Unique cone-supported expansion of f with f * den = num up to the given
// grading order. Denominator must have a unit minimal part in the cone
// direction; otherwise NotExpandable.
ConeSeries cone_expand(const RatFun& f, const Cone& cone, int order);

// Rank-1 window expansion of num / ((1 - a z)(1 - b z^-1)) on the full line,
// each factor inverted as a geometric series in its own direction and the
// diagonal resummed in closed form. Window is |exponent| <= order.
ConeSeries cone_expand_opposed(const Laurent& num, const RatFun& a, const RatFun& b, int order);

inline RatFun const_term(const ConeSeries& s) { return s.const_term(); }

}  // namespace exactalg
