#include "hecke/hecke.hpp"

#include <algorithm>
#include <sstream>

#include "exactalg/ratfun.hpp"

namespace hecke {

using exactalg::RatFun;
using exactalg::Rational;
using rootdata::length;
using rootdata::Letter;

namespace {

Laurent q_lau() { return Laurent::q(0); }
Laurent one_lau() { return Laurent::one(0); }

void add_term(HeckeElement& h, const AffineElement& x, const Laurent& c) {
    if (c.is_zero()) return;
    auto it = h.find(x);
    if (it == h.end()) {
        h.emplace(x, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) h.erase(it);
    }
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(rootdata::RootDatum datum) : datum_(std::move(datum)) {
    if (datum_.rank() != 1)
        throw base::Error("HeckeAlgebra: rank-one data only in this build");
}

HeckeElement HeckeAlgebra::unit() const {
    HeckeElement h;
    h.emplace(AffineElement::identity(datum_), one_lau());
    return h;
}

HeckeElement HeckeAlgebra::basis(const AffineElement& x) const {
    HeckeElement h;
    h.emplace(x, one_lau());
    return h;
}

HeckeElement HeckeAlgebra::add(const HeckeElement& a, const HeckeElement& b) const {
    HeckeElement r = a;
    for (const auto& [x, c] : b) add_term(r, x, c);
    return r;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& a, const Laurent& c) const {
    HeckeElement r;
    for (const auto& [x, k] : a) add_term(r, x, k * c);
    return r;
}

HeckeElement HeckeAlgebra::mul_letter(const HeckeElement& h, Letter l, bool inverted) const {
    AffineElement g = rootdata::letter_element(datum_, l);
    HeckeElement r;
    if (l == Letter::Omega) {
        // length-zero generator: plain relabeling either way
        for (const auto& [x, c] : h) add_term(r, x * g, c);
        return r;
    }
    const Laurent q = q_lau();
    const Laurent qinv = Laurent::monomial(Rational(1), -2, {});
    for (const auto& [x, c] : h) {
        AffineElement xs = x * g;
        bool up = length(datum_, xs) > length(datum_, x);
        if (!inverted) {
            if (up) {
                add_term(r, xs, c);
            } else {
                add_term(r, x, c * (q - one_lau()));
                add_term(r, xs, c * q);
            }
        } else {
            // T_s^{-1} = q^{-1} T_s - (1 - q^{-1}) T_e
            if (up) {
                add_term(r, xs, c * qinv);
                add_term(r, x, c * (qinv - one_lau()));
            } else {
                // T_x T_s^{-1} with xs shorter: expand T_x = T_{xs} T_s first
                add_term(r, xs, c);
            }
        }
    }
    return r;
}

HeckeElement HeckeAlgebra::mul_basis(const HeckeElement& h, const AffineElement& x) const {
    HeckeElement acc = h;
    for (Letter l : rootdata::reduced_word(datum_, x)) acc = mul_letter(acc, l, false);
    return acc;
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& a, const HeckeElement& b) const {
    HeckeElement r;
    for (const auto& [x, c] : b) {
        HeckeElement part = mul_basis(a, x);
        for (const auto& [y, k] : part) add_term(r, y, k * c);
    }
    return r;
}

HeckeElement HeckeAlgebra::e(const Coweight& nu) const {
    if (!datum_.is_dominant(nu)) throw base::NotDominant("e(nu): nu must be dominant");
    return basis(rootdata::translation_element(datum_, nu));
}

HeckeElement HeckeAlgebra::ebar(const Coweight& nu) const {
    if (!datum_.is_dominant(nu)) throw base::NotDominant("ebar(nu): nu must be dominant");
    Coweight m = nu;
    for (auto& v : m) v = -v;
    return basis(rootdata::translation_element(datum_, m));
}

HeckeElement HeckeAlgebra::e_inverse(const Coweight& nu) const {
    if (!datum_.is_dominant(nu)) throw base::NotDominant("e_inverse(nu): nu must be dominant");
    AffineElement t = rootdata::translation_element(datum_, nu);
    auto word = rootdata::reduced_word(datum_, t);
    HeckeElement acc = unit();
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul_letter(acc, *it, true);
    return acc;
}

HeckeElement HeckeAlgebra::theta_decomposed(const Coweight& mu, const Coweight& nu) const {
    return mul(e(mu), e_inverse(nu));
}

HeckeElement HeckeAlgebra::theta(const Coweight& lambda) const {
    Coweight mu = lambda, nu = lambda;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        mu[k] = std::max(lambda[k], 0);
        nu[k] = mu[k] - lambda[k];
    }
    return theta_decomposed(mu, nu);
}

HeckeElement HeckeAlgebra::thetabar(const Coweight& lambda) const {
    // ebar(mu) ebar(nu)^{-1}; inverse computed through the word of t_{-nu}
    Coweight mu = lambda, nu = lambda;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        mu[k] = std::max(lambda[k], 0);
        nu[k] = mu[k] - lambda[k];
    }
    Coweight nneg = nu;
    for (auto& v : nneg) v = -v;
    AffineElement t = rootdata::translation_element(datum_, nneg);
    auto word = rootdata::reduced_word(datum_, t);
    HeckeElement acc = ebar(mu);
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = mul_letter(acc, *it, true);
    return acc;
}

Laurent HeckeAlgebra::coeff(const HeckeElement& h, const AffineElement& x) const {
    auto it = h.find(x);
    return it == h.end() ? Laurent(0) : it->second;
}

Laurent HeckeAlgebra::coeff_identity(const HeckeElement& h) const {
    return coeff(h, AffineElement::identity(datum_));
}

Laurent HeckeAlgebra::iwahori_index_poly() const {
    // rank one: |P^1(F_q)| = q + 1
    return q_lau() + one_lau();
}

Laurent HeckeAlgebra::value_at_identity(const HeckeElement& h) const {
    return coeff_identity(h) * iwahori_index_poly();
}

std::vector<long> HeckeAlgebra::bstar_support(const HeckeElement& h, long lo, long hi) const {
    std::vector<long> out;
    for (long k = lo; k <= hi; ++k) {
        Coweight nu(datum_.rank(), 0);
        nu[0] = static_cast<int>(k);
        if (!coeff_identity(mul(h, theta(nu))).is_zero()) out.push_back(k);
    }
    return out;
}

std::vector<HeckeAlgebra::BnfTerm> HeckeAlgebra::bernstein_normal_form(const HeckeElement& h,
                                                                       bool minus_family) const {
    std::vector<BnfTerm> out;
    HeckeElement rest = h;
    long guard = 20000;
    while (!rest.empty()) {
        if (guard-- < 0) throw base::Error("bernstein_normal_form: no progress");
        // longest term; ties broken by the map order
        auto best = rest.begin();
        long blen = length(datum_, best->first);
        for (auto it = rest.begin(); it != rest.end(); ++it) {
            long l = length(datum_, it->first);
            if (l > blen) {
                best = it;
                blen = l;
            }
        }
        AffineElement x = best->first;
        Laurent cx = best->second;
        Coweight lambda = x.translation();
        bool w = x.finite_s();
        if (minus_family && !w) {
            // x = w t_{w^{-1} tau} and thetabar_lambda leads with t_{-lambda}
            for (auto& v : lambda) v = -v;
        }
        HeckeElement g;
        if (!minus_family) {
            g = theta(lambda);
            if (w) g = mul(g, basis(AffineElement::s1(datum_)));
        } else {
            g = w ? basis(AffineElement::s1(datum_)) : unit();
            g = mul(g, thetabar(lambda));
        }
        Laurent cg = coeff(g, x);
        if (cg.is_zero())
            throw base::Error("bernstein_normal_form: expected leading term missing");
        RatFun gamma_rf(cx, cg);
        Laurent gamma(0);
        if (!gamma_rf.exact_laurent(gamma))
            throw base::Error("bernstein_normal_form: non-Laurent peeling ratio");
        out.push_back(BnfTerm{lambda, w, gamma});
        rest = add(rest, scale(g, -gamma));
        if (rest.count(x)) throw base::Error("bernstein_normal_form: peel did not cancel");
    }
    // reconstruction check
    HeckeElement back = from_bnf(out, minus_family);
    if (!(back == h)) throw base::Error("bernstein_normal_form: reconstruction mismatch");
    return out;
}

HeckeElement HeckeAlgebra::from_bnf(const std::vector<BnfTerm>& terms, bool minus_family) const {
    HeckeElement acc = zero();
    for (const auto& t : terms) {
        HeckeElement g;
        if (!minus_family) {
            g = theta(t.lambda);
            if (t.finite_s) g = mul(g, basis(AffineElement::s1(datum_)));
        } else {
            g = t.finite_s ? basis(AffineElement::s1(datum_)) : unit();
            g = mul(g, thetabar(t.lambda));
        }
        acc = add(acc, scale(g, t.coeff));
    }
    return acc;
}

std::string HeckeAlgebra::str(const HeckeElement& h) const {
    if (h.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [x, c] : h) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*T(" << x.str() << ")";
    }
    return os.str();
}

}  // namespace hecke
