#include "exactalg/cone_series.hpp"

#include <algorithm>

namespace exactalg {

Cone Cone::positive(int rank) {
    Cone c;
    c.rank = rank;
    for (int i = 0; i < rank; ++i) {
        std::vector<int> g(rank, 0);
        g[i] = 1;
        c.gens.push_back(g);
    }
    return c;
}

Cone Cone::negative_line() {
    Cone c;
    c.rank = 1;
    c.gens = {{-1}};
    return c;
}

Cone Cone::full_line() {
    Cone c;
    c.rank = 1;
    c.gens = {{1}, {-1}};
    return c;
}

bool Cone::pointed() const { return !grading().empty(); }

std::vector<int> Cone::grading() const {
    if (gens.empty()) return std::vector<int>(rank, 0);
    // small exhaustive search; prefer the functional closest to 1 on the
    // generators so orders count generator steps
    std::vector<int> w(rank, -4), best;
    long best_score = 0;
    while (true) {
        long worst = 1, total = 0;
        bool ok = true;
        for (const auto& g : gens) {
            long s = 0;
            for (int i = 0; i < rank; ++i) s += static_cast<long>(w[i]) * g[i];
            if (s < 1) {
                ok = false;
                break;
            }
            worst = std::max(worst, s);
            total += s;
        }
        if (ok) {
            long score = worst * 1000 + total;
            if (best.empty() || score < best_score) {
                best = w;
                best_score = score;
            }
        }
        int i = 0;
        while (i < rank && w[i] == 4) w[i++] = -4;
        if (i == rank) return best;
        ++w[i];
    }
}

long Cone::grade(const std::vector<int>& pt) const {
    std::vector<int> w = grading();
    if (w.empty()) {
        long s = 0;
        for (int v : pt) s += std::abs(v);
        return s;
    }
    long s = 0;
    for (int i = 0; i < rank; ++i) s += static_cast<long>(w[i]) * pt[i];
    return s;
}

bool Cone::contains(const std::vector<int>& pt) const {
    bool zero = std::all_of(pt.begin(), pt.end(), [](int v) { return v == 0; });
    if (zero) return true;
    if (!pointed()) {
        // full-line style cones: membership is lattice membership
        return true;
    }
    // bounded search over nonnegative integer combinations of the generators
    long bound = grade(pt);
    if (bound < 0) return false;
    std::vector<std::vector<int>> reach = {std::vector<int>(rank, 0)};
    std::map<std::vector<int>, bool> seen;
    seen[reach[0]] = true;
    for (std::size_t i = 0; i < reach.size(); ++i) {
        if (reach[i] == pt) return true;
        for (const auto& g : gens) {
            std::vector<int> nxt(rank);
            for (int k = 0; k < rank; ++k) nxt[k] = reach[i][k] + g[k];
            if (grade(nxt) > bound || seen.count(nxt)) continue;
            seen[nxt] = true;
            reach.push_back(nxt);
        }
    }
    return false;
}

ConeSeries::ConeSeries(Cone cone, std::vector<int> offset, int order)
    : cone_(std::move(cone)), offset_(std::move(offset)), order_(order) {
    if (static_cast<int>(offset_.size()) != cone_.rank)
        throw base::Error("ConeSeries: offset rank mismatch");
}

RatFun ConeSeries::coeff(const std::vector<int>& e) const {
    auto it = coeffs_.find(e);
    return it == coeffs_.end() ? RatFun::zero(0) : it->second;
}

void ConeSeries::set_coeff(const std::vector<int>& e, const RatFun& c) {
    if (static_cast<int>(e.size()) != cone_.rank) throw base::Error("ConeSeries: exponent rank");
    std::vector<int> rel(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) rel[i] = e[i] - offset_[i];
    if (!cone_.contains(rel)) throw base::Error("ConeSeries: exponent outside offset + cone");
    if (c.is_zero())
        coeffs_.erase(e);
    else
        coeffs_[e] = c;
}

void ConeSeries::check_compatible(const ConeSeries& o) const {
    if (!(cone_ == o.cone_)) throw base::Error("ConeSeries: cone mismatch");
}

ConeSeries ConeSeries::operator+(const ConeSeries& o) const {
    check_compatible(o);
    std::vector<int> off(cone_.rank);
    for (int i = 0; i < cone_.rank; ++i) off[i] = std::min(offset_[i], o.offset_[i]);
    ConeSeries r(cone_, off, std::min(order_, o.order_));
    for (const auto& [e, c] : coeffs_)
        if (cone_.grade(e) <= r.order_) r.set_coeff(e, c);
    for (const auto& [e, c] : o.coeffs_)
        if (cone_.grade(e) <= r.order_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

ConeSeries ConeSeries::operator*(const ConeSeries& o) const {
    check_compatible(o);
    if (!cone_.pointed()) throw base::NotExpandable("ConeSeries::mul needs a pointed cone");
    std::vector<int> off(cone_.rank);
    for (int i = 0; i < cone_.rank; ++i) off[i] = offset_[i] + o.offset_[i];
    ConeSeries r(cone_, off, std::min(order_, o.order_));
    for (const auto& [e1, c1] : coeffs_) {
        for (const auto& [e2, c2] : o.coeffs_) {
            std::vector<int> e(cone_.rank);
            for (int i = 0; i < cone_.rank; ++i) e[i] = e1[i] + e2[i];
            if (cone_.grade(e) > r.order_) continue;
            r.set_coeff(e, r.coeff(e) + c1 * c2);
        }
    }
    return r;
}

ConeSeries ConeSeries::scale(const RatFun& c) const {
    ConeSeries r(cone_, offset_, order_);
    for (const auto& [e, v] : coeffs_) r.set_coeff(e, v * c);
    return r;
}

bool ConeSeries::same_window_equal(const ConeSeries& o) const {
    check_compatible(o);
    int ord = std::min(order_, o.order_);
    auto collect = [&](const ConeSeries& s, std::map<std::vector<int>, RatFun>& out) {
        for (const auto& [e, c] : s.coeffs_)
            if (cone_.grade(e) <= ord && !c.is_zero()) out[e] = c;
    };
    std::map<std::vector<int>, RatFun> a, b;
    collect(*this, a);
    collect(o, b);
    if (a.size() != b.size()) return false;
    for (const auto& [e, c] : a) {
        auto it = b.find(e);
        if (it == b.end() || !(it->second == c)) return false;
    }
    return true;
}

RatFun ConeSeries::const_term() const {
    std::vector<int> zero(cone_.rank, 0);
    if (order_ < 0 || cone_.grade(zero) > order_)
        throw base::InsufficientOrder("const_term: exponent 0 not covered by the window");
    return coeff(zero);
}

namespace {

// v-only part of a rank-r Laurent element, grouped by z-exponent
std::map<std::vector<int>, Laurent> group_by_z(const Laurent& a) {
    std::map<std::vector<int>, Laurent> out;
    for (const auto& [e, c] : a.terms()) {
        std::vector<int> ze(e.begin() + 1, e.end());
        auto it = out.find(ze);
        if (it == out.end()) it = out.emplace(ze, Laurent(0)).first;
        it->second.add_term(Exp{e[0]}, c);
    }
    return out;
}

}  // namespace

ConeSeries cone_expand(const RatFun& f, const Cone& cone, int order) {
    if (!cone.pointed())
        throw base::NotExpandable("cone_expand: cone is not pointed; use the opposed-pair form");
    if (cone.rank != f.rank()) throw base::Error("cone_expand: rank mismatch");
    if (f.is_zero()) return ConeSeries(cone, std::vector<int>(cone.rank, 0), order);

    auto den = group_by_z(f.den());
    auto num = group_by_z(f.num());

    // minimal z-exponent of the denominator in the cone order
    std::optional<std::vector<int>> g0;
    for (const auto& [ze, c] : den) {
        bool minimal = true;
        for (const auto& [ze2, c2] : den) {
            std::vector<int> d(cone.rank);
            for (int i = 0; i < cone.rank; ++i) d[i] = ze2[i] - ze[i];
            if (!cone.contains(d)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            g0 = ze;
            break;
        }
    }
    if (!g0)
        throw base::NotExpandable("cone_expand: denominator has no unit part in this cone");

    RatFun c0 = RatFun(den.at(*g0));
    // E = sum over d != 0 of (c_d / c0) z^d, d in cone \ {0}
    std::map<std::vector<int>, RatFun> E;
    for (const auto& [ze, c] : den) {
        if (ze == *g0) continue;
        std::vector<int> d(cone.rank);
        for (int i = 0; i < cone.rank; ++i) d[i] = ze[i] - g0->at(i);
        E[d] = RatFun(c) / c0;
    }

    long n_min = 0;
    for (const auto& [ze, c] : num) n_min = std::min(n_min, cone.grade(ze));
    long inv_order = order + cone.grade(*g0) - n_min;
    if (inv_order < 0) inv_order = 0;

    // (1 + E)^-1 by fixed point: inv <- 1 - E * inv, exact after inv_order steps
    std::map<std::vector<int>, RatFun> inv;
    inv[std::vector<int>(cone.rank, 0)] = RatFun::one(0);
    for (long step = 0; step < inv_order; ++step) {
        std::map<std::vector<int>, RatFun> nxt;
        nxt[std::vector<int>(cone.rank, 0)] = RatFun::one(0);
        for (const auto& [d, ec] : E) {
            for (const auto& [e, ic] : inv) {
                std::vector<int> s(cone.rank);
                for (int i = 0; i < cone.rank; ++i) s[i] = d[i] + e[i];
                if (cone.grade(s) > inv_order) continue;
                RatFun add = -(ec * ic);
                auto it = nxt.find(s);
                if (it == nxt.end())
                    nxt.emplace(s, add);
                else
                    it->second += add;
            }
        }
        if (nxt == inv) break;
        inv = std::move(nxt);
    }

    // assemble; exponent offset comes from generator coordinates of the support
    std::map<std::vector<int>, RatFun> out;
    for (const auto& [be, nc] : num) {
        RatFun base = RatFun(nc) / c0;
        for (const auto& [d, ic] : inv) {
            std::vector<int> e(cone.rank);
            for (int i = 0; i < cone.rank; ++i) e[i] = be[i] - g0->at(i) + d[i];
            if (cone.grade(e) > order) continue;
            RatFun add = base * ic;
            auto it = out.find(e);
            if (it == out.end())
                out.emplace(e, add);
            else
                it->second += add;
        }
    }

    // offset: componentwise floor of the support in generator coordinates
    // (cones here are simplicial with one generator per axis)
    std::vector<int> offset(cone.rank, 0);
    std::vector<long> tmin(cone.rank, 0);
    bool first = true;
    for (const auto& [e, c] : out) {
        if (c.is_zero()) continue;
        for (int i = 0; i < cone.rank; ++i) {
            long gi = 0;
            for (const auto& g : cone.gens)
                if (g[i] != 0) gi = g[i];
            long t = gi == 0 ? 0 : e[i] / gi - ((e[i] % gi != 0 && (e[i] ^ gi) < 0) ? 1 : 0);
            if (first || t < tmin[i]) tmin[i] = t;
        }
        first = false;
    }
    for (int i = 0; i < cone.rank; ++i) {
        long gi = 0;
        for (const auto& g : cone.gens)
            if (g[i] != 0) gi = g[i];
        offset[i] = static_cast<int>(tmin[i] * gi);
    }

    ConeSeries s(cone, offset, order);
    for (const auto& [e, c] : out)
        if (!c.is_zero()) s.set_coeff(e, c);
    return s;
}

ConeSeries cone_expand_opposed(const Laurent& num, const RatFun& a, const RatFun& b, int order) {
    if (num.rank() != 1) throw base::Error("cone_expand_opposed: rank-1 only");
    RatFun ab1 = RatFun::one(0) - a * b;
    if (ab1.is_zero()) throw base::NotExpandable("cone_expand_opposed: 1 - ab vanishes");
    // window coefficient of z^k in 1/((1-az)(1-b/z)): a^k/(1-ab) for k >= 0,
    // b^-k/(1-ab) for k < 0 (double geometric sum over the diagonal)
    auto G = [&](long k) {
        RatFun p = RatFun::one(0);
        if (k >= 0)
            for (long i = 0; i < k; ++i) p *= a;
        else
            for (long i = 0; i < -k; ++i) p *= b;
        return p / ab1;
    };
    ConeSeries s(Cone::full_line(), std::vector<int>{-order}, order);
    auto grouped = group_by_z(num);
    for (long k = -order; k <= order; ++k) {
        RatFun c = RatFun::zero(0);
        for (const auto& [be, nc] : grouped) c += RatFun(nc) * G(k - be[0]);
        if (!c.is_zero()) s.set_coeff(std::vector<int>{static_cast<int>(k)}, c);
    }
    return s;
}

}  // namespace exactalg
