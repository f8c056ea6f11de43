// Expanded multivariate polynomials over LaurentPoly coefficients. Used to
// check identities in finitely many variables (Cauchy kernels, series
// oracles); not a general-purpose polynomial ring.
#pragma once

#include "ribbon/symfunc.hpp"

namespace ribbon {

struct MultiPoly {
    std::map<std::vector<int>, LaurentPoly> terms;  // exponent vector -> coeff

    void add_term(const std::vector<int>& e, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = terms.find(e);
        if (it == terms.end()) {
            terms[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (auto& [e, c] : o.terms) add_term(e, c);
        return *this;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (auto& [ea, ca] : a.terms)
            for (auto& [eb, cb] : b.terms) {
                std::vector<int> e(std::max(ea.size(), eb.size()), 0);
                for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.terms == b.terms;
    }

    static MultiPoly constant(const LaurentPoly& c) {
        MultiPoly r;
        r.add_term({}, c);
        return r;
    }
    static MultiPoly monomial(const std::vector<int>& e, const LaurentPoly& c = LaurentPoly(1)) {
        MultiPoly r;
        std::vector<int> ee = e;
        while (!ee.empty() && ee.back() == 0) ee.pop_back();
        r.add_term(ee, c);
        return r;
    }

    int degree_over(size_t lo, size_t hi, const std::vector<int>& e) const {
        int d = 0;
        for (size_t i = lo; i < hi && i < e.size(); ++i) d += e[i];
        return d;
    }
    // drop terms whose exponent sum over vars [lo,hi) exceeds maxdeg
    MultiPoly truncated(int maxdeg, size_t lo, size_t hi) const {
        MultiPoly r;
        for (auto& [e, c] : terms)
            if (degree_over(lo, hi, e) <= maxdeg) r.add_term(e, c);
        return r;
    }
};

// expand f in variables x_{base+1..base+nvars} of a width-wide variable list
inline MultiPoly expand(const SymFunc& f, int nvars, int base = 0, int width = -1) {
    if (width < 0) width = base + nvars;
    SymFunc fm = convert(f, Basis::monomial);
    MultiPoly out;
    for (auto& [lam, c] : fm.coeffs()) {
        if (lam.length() > nvars) continue;
        std::vector<int> exps = lam.parts();
        exps.resize(nvars, 0);
        std::sort(exps.begin(), exps.end());
        do {
            std::vector<int> e(width, 0);
            for (int i = 0; i < nvars; ++i) e[base + i] = exps[i];
            while (!e.empty() && e.back() == 0) e.pop_back();
            out.add_term(e, c);
        } while (std::next_permutation(exps.begin(), exps.end()));
    }
    return out;
}

}  // namespace ribbon
