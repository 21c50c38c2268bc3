#include "exactalg/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace exactalg {

Laurent Laurent::constant(const Rational& c, int rank) {
    Laurent r(rank);
    r.add_term(Exp(1 + rank, 0), c);
    return r;
}

Laurent Laurent::monomial(const Rational& c, int ve, const std::vector<int>& ze) {
    Laurent r(static_cast<int>(ze.size()));
    Exp e(1 + ze.size());
    e[0] = ve;
    std::copy(ze.begin(), ze.end(), e.begin() + 1);
    r.add_term(e, c);
    return r;
}

Laurent Laurent::z(int which, int rank) {
    std::vector<int> ze(rank, 0);
    ze.at(which) = 1;
    return monomial(Rational(1), 0, ze);
}

bool Laurent::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    const Exp& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
}

Rational Laurent::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant()) throw base::Error("Laurent::constant_value: not a constant");
    return terms_.begin()->second;
}

Rational Laurent::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Laurent& Laurent::add_term(const Exp& e, const Rational& c) {
    if (static_cast<int>(e.size()) != 1 + rank_)
        throw base::Error("Laurent::add_term: exponent size mismatch");
    if (c == 0) return *this;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

void Laurent::check_rank(const Laurent& o) const {
    if (rank_ != o.rank_) throw base::Error("Laurent: rank mismatch");
}

Laurent Laurent::operator-() const {
    Laurent r(rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Laurent Laurent::operator+(const Laurent& o) const {
    check_rank(o);
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
    check_rank(o);
    Laurent r(rank_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exp e(e1.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

Laurent Laurent::scale(const Rational& c) const {
    Laurent r(rank_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

Laurent Laurent::pow(long n) const {
    if (n < 0) throw base::Error("Laurent::pow: negative exponent");
    Laurent acc = one(rank_);
    Laurent b = *this;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

int Laurent::v_degree_min() const {
    if (terms_.empty()) throw base::Error("v_degree_min of zero");
    int m = terms_.begin()->first[0];
    for (const auto& [e, c] : terms_) m = std::min(m, e[0]);
    return m;
}

int Laurent::v_degree_max() const {
    if (terms_.empty()) throw base::Error("v_degree_max of zero");
    int m = terms_.begin()->first[0];
    for (const auto& [e, c] : terms_) m = std::max(m, e[0]);
    return m;
}

std::vector<int> Laurent::z_min() const {
    if (terms_.empty()) throw base::Error("z_min of zero");
    std::vector<int> m(terms_.begin()->first.begin() + 1, terms_.begin()->first.end());
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < rank_; ++i) m[i] = std::min(m[i], e[1 + i]);
    return m;
}

std::vector<int> Laurent::z_max() const {
    if (terms_.empty()) throw base::Error("z_max of zero");
    std::vector<int> m(terms_.begin()->first.begin() + 1, terms_.begin()->first.end());
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < rank_; ++i) m[i] = std::max(m[i], e[1 + i]);
    return m;
}

bool Laurent::depends_on_z() const {
    for (const auto& [e, c] : terms_)
        for (int i = 1; i <= rank_; ++i)
            if (e[i] != 0) return true;
    return false;
}

Rational Laurent::eval(const Rational& v_val, const std::vector<Rational>& z_vals) const {
    if (static_cast<int>(z_vals.size()) != rank_) throw base::Error("Laurent::eval: z arity");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c * rational_pow(v_val, e[0]);
        for (int i = 0; i < rank_; ++i) t *= rational_pow(z_vals[i], e[1 + i]);
        acc += t;
    }
    return acc;
}

Rational Laurent::eval_q(const Rational& q_val, const std::vector<Rational>& z_vals) const {
    if (static_cast<int>(z_vals.size()) != rank_) throw base::Error("Laurent::eval_q: z arity");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        if (e[0] % 2 != 0) throw base::Error("Laurent::eval_q: odd v-exponent, value not in Q(q)");
        Rational t = c * rational_pow(q_val, e[0] / 2);
        for (int i = 0; i < rank_; ++i) t *= rational_pow(z_vals[i], e[1 + i]);
        acc += t;
    }
    return acc;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        std::ostringstream mono;
        if (e[0] != 0) mono << "v^" << e[0];
        for (int i = 0; i < rank_; ++i) {
            if (e[1 + i] != 0) {
                if (mono.tellp() > 0) mono << "*";
                mono << "z" << (i + 1) << "^" << e[1 + i];
            }
        }
        std::string m = mono.str();
        if (m.empty()) {
            os << to_string(a);
        } else if (a == 1) {
            os << m;
        } else if (a == -1 && first) {
            os << "-" << m;
        } else {
            os << to_string(a) << "*" << m;
        }
    }
    return os.str();
}

}  // namespace exactalg
