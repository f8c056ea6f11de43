// Exact coefficient arithmetic: Laurent polynomials in q over Q, and the
// fraction field needed by the deformed inner product.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace ribbon {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(const Rational& c) { if (c != 0) terms_[0] = c; }

    static LaurentPoly q(int e = 1) { return term(e, 1); }
    static LaurentPoly term(int e, const Rational& c) {
        LaurentPoly p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const std::map<int, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(int e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Rational(0) : it->second;
    }
    int min_exp() const { return terms_.begin()->first; }   // pre: nonzero
    int max_exp() const { return terms_.rbegin()->first; }

    void add_term(int e, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (auto& [ea, ca] : a.terms_)
            for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }
    friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ < b.terms_;
    }

    LaurentPoly pow(int k) const {
        if (k < 0) throw std::invalid_argument("pow: negative exponent");
        LaurentPoly r(1);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    // q -> q^{-1}
    LaurentPoly bar() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }
    // q -> -q^{-1}
    LaurentPoly subst_neg_qinv() const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[-e] = (e % 2 == 0) ? c : -c;
        return r;
    }
    Rational eval_at_one() const {
        Rational s = 0;
        for (auto& [e, c] : terms_) s += c;
        return s;
    }
    // shift exponents by d (multiply by q^d)
    LaurentPoly shifted(int d) const {
        LaurentPoly r;
        for (auto& [e, c] : terms_) r.terms_[e + d] = c;
        return r;
    }
    bool nonneg_integral() const {
        for (auto& [e, c] : terms_)
            if (denominator(c) != 1 || c < 0) return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Rational c = it->second;
            int e = it->first;
            if (!first) os << (c < 0 ? " - " : " + ");
            else if (c < 0) os << "-";
            Rational a = c < 0 ? Rational(-c) : c;
            if (a != 1 || e == 0) os << a.str();
            if (e != 0) {
                if (a != 1) os << "*";
                os << "q";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

private:
    std::map<int, Rational> terms_;
};

inline LaurentPoly bar_q(const LaurentPoly& p) { return p.bar(); }
inline LaurentPoly subst_neg_qinv(const LaurentPoly& p) { return p.subst_neg_qinv(); }
inline Rational eval_at_one(const LaurentPoly& p) { return p.eval_at_one(); }

// 1 + q^{2k} + ... + q^{2k(n-1)}
inline LaurentPoly geometric_sum(int n, int k) {
    LaurentPoly r;
    for (int i = 0; i < n; ++i) r += LaurentPoly::q(2 * k * i);
    return r;
}

// (-q)^e as a LaurentPoly
inline LaurentPoly neg_q_pow(int e) {
    return LaurentPoly::term(e, (e % 2 == 0) ? 1 : -1);
}

namespace detail {

// polynomial division helpers on nonneg-exponent polys (min_exp >= 0)
inline LaurentPoly poly_mod(LaurentPoly a, const LaurentPoly& b) {
    while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
        Rational f = a.coeff(a.max_exp()) / b.coeff(b.max_exp());
        int d = a.max_exp() - b.max_exp();
        a -= b.shifted(d) * LaurentPoly(f);
    }
    return a;
}

inline LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    while (!b.is_zero()) {
        LaurentPoly r = poly_mod(a, b);
        a = b;
        b = r;
    }
    if (a.is_zero()) return a;
    // monic
    Rational lead = a.coeff(a.max_exp());
    LaurentPoly r;
    for (auto& [e, c] : a.terms()) r += LaurentPoly::term(e, c / lead);
    return r;
}

inline std::pair<LaurentPoly, bool> poly_divide_exact(const LaurentPoly& a, const LaurentPoly& b) {
    // a, b with min_exp >= 0; returns (a/b, true) if division is exact
    LaurentPoly quot, rem = a;
    while (!rem.is_zero() && rem.max_exp() >= b.max_exp()) {
        Rational f = rem.coeff(rem.max_exp()) / b.coeff(b.max_exp());
        int d = rem.max_exp() - b.max_exp();
        quot += LaurentPoly::term(d, f);
        rem -= b.shifted(d) * LaurentPoly(f);
    }
    return {quot, rem.is_zero()};
}

}  // namespace detail

// Fraction field element num/den; kept reduced with a canonical (monic,
// lowest-exponent-zero) denominator so equality is structural.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) { reduce(); }
    RatFunc(int c) : num_(c), den_(1) {}

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_ == LaurentPoly(1); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const {
        if (is_poly()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void reduce() {
        if (den_.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
        if (num_.is_zero()) { den_ = LaurentPoly(1); return; }
        int sn = num_.min_exp(), sd = den_.min_exp();
        LaurentPoly n = num_.shifted(-sn), d = den_.shifted(-sd);
        LaurentPoly g = detail::poly_gcd(n, d);
        if (!g.is_zero() && g.max_exp() > 0) {
            n = detail::poly_divide_exact(n, g).first;
            d = detail::poly_divide_exact(d, g).first;
        }
        Rational lead = d.coeff(d.max_exp());
        LaurentPoly dm;
        for (auto& [e, c] : d.terms()) dm += LaurentPoly::term(e, c / lead);
        LaurentPoly nm;
        for (auto& [e, c] : n.terms()) nm += LaurentPoly::term(e, c / lead);
        num_ = nm.shifted(sn - sd);
        den_ = dm;
    }

    LaurentPoly num_, den_;
};

}  // namespace ribbon
