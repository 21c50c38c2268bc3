#include "rootdata/root_datum.hpp"

#include <algorithm>
#include <sstream>

#include "exactalg/rational.hpp"

namespace rootdata {

using exactalg::Rational;

RootDatum RootDatum::SL2() {
    RootDatum d;
    d.name_ = "SL2";
    d.rank_ = 1;
    d.pairing_ = {{2}};
    d.coroots_ = {{1}};
    d.omega_order_ = 1;
    return d;
}

RootDatum RootDatum::PGL2() {
    RootDatum d;
    d.name_ = "PGL2";
    d.rank_ = 1;
    d.pairing_ = {{1}};
    d.coroots_ = {{2}};
    d.omega_order_ = 2;
    return d;
}

RootDatum RootDatum::from_cartan(const std::vector<std::vector<int>>& cartan,
                                 const std::string& name) {
    RootDatum d;
    d.name_ = name;
    d.rank_ = static_cast<int>(cartan.size());
    for (int i = 0; i < d.rank_; ++i) {
        if (static_cast<int>(cartan[i].size()) != d.rank_)
            throw base::ConfigError("from_cartan: matrix not square");
        if (cartan[i][i] != 2) throw base::ConfigError("from_cartan: diagonal must be 2");
    }
    // coweight basis = simple coroots, so the pairing matrix is the Cartan
    // matrix transposed into <e_k, alpha_i> position
    d.pairing_.assign(d.rank_, std::vector<int>(d.rank_, 0));
    for (int i = 0; i < d.rank_; ++i)
        for (int k = 0; k < d.rank_; ++k) d.pairing_[i][k] = cartan[k][i];
    for (int i = 0; i < d.rank_; ++i) {
        Coweight c(d.rank_, 0);
        c[i] = 1;
        d.coroots_.push_back(c);
    }
    d.omega_order_ = 1;
    return d;
}

RootDatum RootDatum::by_name(const std::string& name) {
    if (name == "SL2") return SL2();
    if (name == "PGL2") return PGL2();
    throw base::ConfigError("unknown root datum: " + name);
}

long RootDatum::pair(const Coweight& lambda, int i) const {
    if (static_cast<int>(lambda.size()) != rank_) throw base::Error("pair: rank mismatch");
    long s = 0;
    for (int k = 0; k < rank_; ++k) s += static_cast<long>(pairing_[i][k]) * lambda[k];
    return s;
}

bool RootDatum::is_dominant(const Coweight& lambda) const {
    for (int i = 0; i < num_simple(); ++i)
        if (pair(lambda, i) < 0) return false;
    return true;
}

namespace {

// solve sum_i n_i coroot_i = delta exactly (coroots are independent)
bool coroot_coordinates(const std::vector<Coweight>& coroots, const Coweight& delta,
                        std::vector<Rational>& n) {
    int rank = static_cast<int>(delta.size());
    int m = static_cast<int>(coroots.size());
    // augmented system, Gaussian elimination over Q
    std::vector<std::vector<Rational>> a(rank, std::vector<Rational>(m + 1));
    for (int r = 0; r < rank; ++r) {
        for (int c = 0; c < m; ++c) a[r][c] = Rational(coroots[c][r]);
        a[r][m] = Rational(delta[r]);
    }
    int row = 0;
    std::vector<int> pivot_col(m, -1);
    for (int c = 0; c < m && row < rank; ++c) {
        int pr = -1;
        for (int r = row; r < rank; ++r)
            if (a[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(a[row], a[pr]);
        Rational inv = Rational(1) / a[row][c];
        for (int k = c; k <= m; ++k) a[row][k] *= inv;
        for (int r = 0; r < rank; ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (int k = c; k <= m; ++k) a[r][k] -= f * a[row][k];
        }
        pivot_col[c] = row;
        ++row;
    }
    for (int r = row; r < rank; ++r)
        if (a[r][m] != 0) return false;
    n.assign(m, Rational(0));
    for (int c = 0; c < m; ++c)
        if (pivot_col[c] >= 0) n[c] = a[pivot_col[c]][m];
    return true;
}

}  // namespace

bool RootDatum::dominance_leq(const Coweight& lambda, const Coweight& mu) const {
    Coweight delta(rank_);
    for (int k = 0; k < rank_; ++k) delta[k] = mu[k] - lambda[k];
    std::vector<Rational> n;
    if (!coroot_coordinates(coroots_, delta, n)) return false;
    for (const auto& c : n)
        if (c < 0 || c.get_den() != 1) return false;
    return true;
}

bool RootDatum::conv_hull_member(const Coweight& eta, const Coweight& mu) const {
    if (rank_ != 1) throw base::Error("conv_hull_member: rank-one data only");
    if (!is_dominant(mu)) throw base::Error("conv_hull_member: mu must be dominant");
    // W(mu) = {mu, -mu}; hull is the segment
    if (std::abs(eta[0]) > mu[0]) return false;
    int c = coroots_[0][0];
    return (mu[0] - eta[0]) % c == 0;
}

AffineElement AffineElement::s0(const RootDatum& d) {
    Coweight t = d.coroot(0);
    for (auto& v : t) v = -v;
    return AffineElement(t, true);
}

AffineElement AffineElement::omega(const RootDatum& d) {
    if (d.omega_order() != 2) throw base::Error("omega: datum has trivial length-zero group");
    return AffineElement(Coweight{-1}, true);
}

AffineElement AffineElement::operator*(const AffineElement& o) const {
    // rank one: the finite reflection acts by -1 on the lattice
    Coweight t = translation_;
    for (std::size_t k = 0; k < t.size(); ++k) t[k] += finite_ ? -o.translation_[k] : o.translation_[k];
    return AffineElement(t, finite_ != o.finite_);
}

AffineElement AffineElement::inverse() const {
    if (finite_) return *this;
    Coweight t = translation_;
    for (auto& v : t) v = -v;
    return AffineElement(t, false);
}

std::string AffineElement::str() const {
    std::ostringstream os;
    os << "t[";
    for (std::size_t k = 0; k < translation_.size(); ++k) {
        if (k) os << ",";
        os << translation_[k];
    }
    os << "]";
    if (finite_) os << "*s";
    return os.str();
}

long length(const RootDatum& d, const AffineElement& x) {
    // rank one: a single positive root; chi term counts the inversion of s
    long p = d.pair(x.translation(), 0);
    return std::labs(p + (x.finite_s() ? 1 : 0));
}

AffineElement letter_element(const RootDatum& d, Letter l) {
    switch (l) {
        case Letter::S0:
            return AffineElement::s0(d);
        case Letter::S1:
            return AffineElement::s1(d);
        default:
            return AffineElement::omega(d);
    }
}

std::vector<Letter> reduced_word(const RootDatum& d, const AffineElement& x) {
    // strip the length-zero part (PGL2 only)
    AffineElement y = x;
    bool needs_omega = false;
    if (d.omega_order() == 2) {
        // W_aff = <s0, s1> consists of the elements whose translation
        // coordinate is even; omega = (-omega, s) is an involution
        long t = y.translation()[0];
        if (((t % 2) + 2) % 2 != 0) {
            y = y * AffineElement::omega(d);
            needs_omega = true;
        }
    }
    std::vector<Letter> rev;
    long guard = length(d, y) + 4;
    while (length(d, y) > 0) {
        if (guard-- < 0) throw base::Error("reduced_word: no descent found (length formula bug)");
        bool found = false;
        for (Letter l : {Letter::S1, Letter::S0}) {
            AffineElement ys = y * letter_element(d, l);
            if (length(d, ys) < length(d, y)) {
                rev.push_back(l);
                y = ys;
                found = true;
                break;
            }
        }
        if (!found) throw base::Error("reduced_word: stuck without descent");
    }
    if (!(y == AffineElement::identity(d)))
        throw base::Error("reduced_word: length zero but not the identity in W_aff");
    std::vector<Letter> word(rev.rbegin(), rev.rend());
    if (needs_omega) word.push_back(Letter::Omega);
    if (static_cast<long>(word.size()) - (needs_omega ? 1 : 0) != length(d, x))
        throw base::Error("reduced_word: word length disagrees with the closed formula");
    return word;
}

AffineElement translation_element(const RootDatum& d, const Coweight& lambda) {
    AffineElement t(lambda, false);
    reduced_word(d, t);  // validates the length bookkeeping
    return t;
}

}  // namespace rootdata
