#pragma once

#include <map>
#include <string>
#include <vector>

#include "exactalg/laurent.hpp"
#include "rootdata/root_datum.hpp"

namespace hecke {

using exactalg::Laurent;
using rootdata::AffineElement;
using rootdata::Coweight;
using rootdata::Letter;

// Finite combination of T_w over the extended affine Weyl group with
// coefficients Laurent in v (q = v^2). No zero coefficients are stored.
using HeckeElement = std::map<AffineElement, Laurent>;

// Extended affine Hecke algebra in the T-basis, convolution normalized by
// vol(I) = 1: T_w is the indicator of IwI and T_e the unit. The paper's
// vol(K_0) = 1 convention enters only through the [K_0 : I] factor in
// value_at_identity.
class HeckeAlgebra {
  public:
    explicit HeckeAlgebra(rootdata::RootDatum datum);

    const rootdata::RootDatum& datum() const { return datum_; }

    HeckeElement zero() const { return {}; }
    HeckeElement unit() const;
    HeckeElement basis(const AffineElement& x) const;  // T_x

    HeckeElement add(const HeckeElement& a, const HeckeElement& b) const;
    HeckeElement scale(const HeckeElement& a, const Laurent& c) const;
    HeckeElement mul(const HeckeElement& a, const HeckeElement& b) const;

    // T_{t_nu} for dominant nu; NotDominant otherwise
    HeckeElement e(const Coweight& nu) const;
    HeckeElement e_inverse(const Coweight& nu) const;

    // Bernstein element, any decomposition lambda = mu - nu with both parts
    // dominant gives the same result
    HeckeElement theta(const Coweight& lambda) const;
    HeckeElement theta_decomposed(const Coweight& mu, const Coweight& nu) const;

    Laurent coeff(const HeckeElement& h, const AffineElement& x) const;
    Laurent coeff_identity(const HeckeElement& h) const;
    // (coefficient of T_e) * [K_0 : I](q); rank one: q + 1
    Laurent value_at_identity(const HeckeElement& h) const;
    Laurent iwahori_index_poly() const;

    // {k in [lo, hi] : coefficient of T_e in h * theta(k basis) != 0}
    std::vector<long> bstar_support(const HeckeElement& h, long lo, long hi) const;

    struct BnfTerm {
        Coweight lambda;
        bool finite_s;
        Laurent coeff;
    };
    // h = sum theta_lambda T_w coeff (left form), or with the antidominant
    // translation family on the right when minus_family is set:
    // h = sum T_w thetabar_lambda coeff. Reconstruction is verified.
    std::vector<BnfTerm> bernstein_normal_form(const HeckeElement& h,
                                               bool minus_family = false) const;
    HeckeElement from_bnf(const std::vector<BnfTerm>& terms, bool minus_family = false) const;

    // antidominant translation family: ebar(nu) = T_{t_{-nu}} (nu dominant)
    HeckeElement ebar(const Coweight& nu) const;
    HeckeElement thetabar(const Coweight& lambda) const;

    std::string str(const HeckeElement& h) const;

  private:
    rootdata::RootDatum datum_;
    HeckeElement mul_letter(const HeckeElement& h, Letter l, bool inverted) const;
    HeckeElement mul_basis(const HeckeElement& h, const AffineElement& x) const;
};

}  // namespace hecke
