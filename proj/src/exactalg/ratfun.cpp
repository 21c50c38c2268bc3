#include "exactalg/ratfun.hpp"

#include <algorithm>

namespace exactalg {
namespace {

Exp support_valuation(const Laurent& a) {
    Exp m = a.terms().begin()->first;
    for (const auto& [e, c] : a.terms())
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

Laurent shift_by(const Laurent& a, const Exp& s) {
    Laurent r(a.rank());
    for (const auto& [e, c] : a.terms()) {
        Exp f(e.size());
        for (std::size_t i = 0; i < e.size(); ++i) f[i] = e[i] + s[i];
        r.add_term(f, c);
    }
    return r;
}

// exact long division with lex-max leading terms; both args nonzero
bool divide_exact(const Laurent& f_in, const Laurent& g_in, Laurent& h) {
    Exp vf = support_valuation(f_in), vg = support_valuation(g_in);
    Exp sf(vf.size()), sg(vg.size()), sh(vf.size());
    for (std::size_t i = 0; i < vf.size(); ++i) {
        sf[i] = -vf[i];
        sg[i] = -vg[i];
        sh[i] = vf[i] - vg[i];
    }
    Laurent f = shift_by(f_in, sf);
    Laurent g = shift_by(g_in, sg);
    Laurent quo(f.rank());
    const auto& gt = *g.terms().rbegin();
    // for an exact quotient every monomial lies in the Newton box of f
    std::size_t guard = 64;
    {
        Exp lo = support_valuation(f), hi = lo;
        for (const auto& [e, c] : f.terms())
            for (std::size_t i = 0; i < hi.size(); ++i) hi[i] = std::max(hi[i], e[i]);
        std::size_t box = 1;
        for (std::size_t i = 0; i < hi.size(); ++i) {
            box *= static_cast<std::size_t>(hi[i] - lo[i] + 1);
            if (box > 1000000) {
                box = 1000000;
                break;
            }
        }
        guard += box;
    }
    while (!f.is_zero()) {
        if (guard-- == 0) return false;
        const auto& ft = *f.terms().rbegin();
        Exp d(ft.first.size());
        for (std::size_t i = 0; i < d.size(); ++i) {
            d[i] = ft.first[i] - gt.first[i];
            if (d[i] < 0) return false;
        }
        Rational c = ft.second / gt.second;
        Laurent t(f.rank());
        t.add_term(d, c);
        quo += t;
        f -= t * g;
    }
    h = shift_by(quo, sh);
    return true;
}

}  // namespace

RatFun::RatFun(Laurent num, Laurent den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw base::Error("RatFun: zero denominator");
    if (num_.rank() != den_.rank()) throw base::Error("RatFun: rank mismatch");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = Laurent::one(num_.rank());
        return;
    }
    Exp vd = support_valuation(den_);
    for (auto& k : vd) k = -k;
    den_ = shift_by(den_, vd);
    num_ = shift_by(num_, vd);
    Rational lead = den_.terms().begin()->second;
    den_ = den_.scale(Rational(1) / lead);
    num_ = num_.scale(Rational(1) / lead);
    if (den_.term_count() > 1) {
        Laurent h(num_.rank());
        if (divide_exact(num_, den_, h)) {
            num_ = h;
            den_ = Laurent::one(num_.rank());
        }
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& o) const {
    if (den_ == o.den_) return RatFun(num_ + o.num_, den_);
    return RatFun(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFun RatFun::operator-(const RatFun& o) const { return *this + (-o); }

RatFun RatFun::operator*(const RatFun& o) const { return RatFun(num_ * o.num_, den_ * o.den_); }

RatFun RatFun::operator/(const RatFun& o) const { return *this * o.inverse(); }

RatFun RatFun::inverse() const {
    if (num_.is_zero()) throw base::Error("RatFun::inverse of zero");
    return RatFun(den_, num_);
}

bool RatFun::operator==(const RatFun& o) const {
    return (num_ * o.den_) == (o.num_ * den_);
}

Rational RatFun::eval(const Rational& v_val, const std::vector<Rational>& z_vals) const {
    Rational d = den_.eval(v_val, z_vals);
    if (d == 0) throw base::NonInvertibleAtPoint("RatFun::eval: denominator vanishes");
    return num_.eval(v_val, z_vals) / d;
}

Rational RatFun::eval_q(const Rational& q_val, const std::vector<Rational>& z_vals) const {
    Rational d = den_.eval_q(q_val, z_vals);
    if (d == 0) throw base::NonInvertibleAtPoint("RatFun::eval_q: denominator vanishes");
    return num_.eval_q(q_val, z_vals) / d;
}

bool RatFun::exact_laurent(Laurent& quotient) const {
    if (num_.is_zero()) {
        quotient = Laurent::zero(num_.rank());
        return true;
    }
    if (den_.is_constant()) {
        quotient = num_.scale(Rational(1) / den_.constant_value());
        return true;
    }
    return divide_exact(num_, den_, quotient);
}

std::string RatFun::str() const {
    if (den_ == Laurent::one(den_.rank())) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace exactalg
