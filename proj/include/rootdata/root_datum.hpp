#pragma once

#include <memory>
#include <string>
#include <vector>

#include "base/error.hpp"
#include "exactalg/rational.hpp"

namespace rootdata {

using Coweight = std::vector<int>;

// Split root datum with a chosen coweight-lattice basis. pairing[i][j] is
// the pairing of the j-th basis covector with the i-th simple root, and
// coroots are written in the same basis. Presets: SL2 (lattice Z a^vee) and
// PGL2 (lattice Z omega, a^vee = 2 omega).
class RootDatum {
  public:
    static RootDatum SL2();
    static RootDatum PGL2();
    static RootDatum from_cartan(const std::vector<std::vector<int>>& cartan,
                                 const std::string& name);
    static RootDatum by_name(const std::string& name);

    const std::string& name() const { return name_; }
    int rank() const { return rank_; }
    int num_simple() const { return static_cast<int>(coroots_.size()); }
    const Coweight& coroot(int i) const { return coroots_[i]; }
    // <lambda, alpha_i>
    long pair(const Coweight& lambda, int i) const;
    // size of the length-zero subgroup Omega of the extended group
    int omega_order() const { return omega_order_; }

    bool is_dominant(const Coweight& lambda) const;
    // mu - lambda is a nonnegative integer combination of simple coroots
    bool dominance_leq(const Coweight& lambda, const Coweight& mu) const;
    // membership in conv(W(mu)) intersected with mu + coroot lattice
    bool conv_hull_member(const Coweight& eta, const Coweight& mu) const;

    Coweight zero() const { return Coweight(rank_, 0); }

  private:
    std::string name_;
    int rank_ = 1;
    std::vector<std::vector<int>> pairing_;  // pairing_[i][k]: <e_k, alpha_i>
    std::vector<Coweight> coroots_;
    int omega_order_ = 1;
};

// Element of the extended affine Weyl group, stored as translation part plus
// finite part. Rank one only: the finite Weyl group is {e, s}.
class AffineElement {
  public:
    AffineElement() : finite_(false) {}
    AffineElement(Coweight translation, bool finite_s)
        : translation_(std::move(translation)), finite_(finite_s) {}

    static AffineElement identity(const RootDatum& d) { return AffineElement(d.zero(), false); }
    static AffineElement s1(const RootDatum& d) { return AffineElement(d.zero(), true); }
    // affine reflection s0 = t_{-a^vee} s1
    static AffineElement s0(const RootDatum& d);
    // length-zero generator (PGL2)
    static AffineElement omega(const RootDatum& d);

    const Coweight& translation() const { return translation_; }
    bool finite_s() const { return finite_; }

    bool operator==(const AffineElement& o) const {
        return translation_ == o.translation_ && finite_ == o.finite_;
    }
    bool operator<(const AffineElement& o) const {
        return translation_ != o.translation_ ? translation_ < o.translation_
                                              : finite_ < o.finite_;
    }

    AffineElement operator*(const AffineElement& o) const;
    AffineElement inverse() const;

    std::string str() const;

  private:
    Coweight translation_;
    bool finite_;  // false: e, true: s
};

// Closed-formula length, cross-checked against word reduction at
// construction of reduced words; a discrepancy is a hard error.
long length(const RootDatum& d, const AffineElement& x);

enum class Letter { S0, S1, Omega };

// reduced word (length letters, then a trailing run of omegas)
std::vector<Letter> reduced_word(const RootDatum& d, const AffineElement& x);

AffineElement letter_element(const RootDatum& d, Letter l);

// t_lambda with a reduced word; lambda need not be dominant
AffineElement translation_element(const RootDatum& d, const Coweight& lambda);

}  // namespace rootdata
