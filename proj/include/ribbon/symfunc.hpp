// Symmetric functions with LaurentPoly coefficients: five standard bases,
// exact basis transitions (cached per degree), products, the plethysm
// upsilon_{q,n}, the involutions omega_n and bar, inner products, skewing,
// and finite-variable specialization.
#pragma once

#include <mutex>

#include "ribbon/laurent.hpp"
#include "ribbon/partition.hpp"

namespace ribbon {

enum class Basis { monomial, homogeneous, elementary, powersum, schur };

inline std::string basis_name(Basis b) {
    switch (b) {
        case Basis::monomial: return "monomial";
        case Basis::homogeneous: return "homogeneous";
        case Basis::elementary: return "elementary";
        case Basis::powersum: return "powersum";
        case Basis::schur: return "schur";
    }
    return "?";
}

inline Basis parse_basis(const std::string& s) {
    if (s == "monomial" || s == "m") return Basis::monomial;
    if (s == "homogeneous" || s == "h") return Basis::homogeneous;
    if (s == "elementary" || s == "e") return Basis::elementary;
    if (s == "powersum" || s == "p") return Basis::powersum;
    if (s == "schur" || s == "s") return Basis::schur;
    throw std::invalid_argument("unknown basis: " + s);
}

class SymFunc {
public:
    explicit SymFunc(Basis b = Basis::monomial) : basis_(b) {}

    static SymFunc zero(Basis b) { return SymFunc(b); }
    static SymFunc one(Basis b) { return basis_elem(b, Partition()); }
    static SymFunc basis_elem(Basis b, const Partition& lam) {
        SymFunc f(b);
        f.coeffs_[lam] = LaurentPoly(1);
        return f;
    }
    static SymFunc m(const Partition& l) { return basis_elem(Basis::monomial, l); }
    static SymFunc h(const Partition& l) { return basis_elem(Basis::homogeneous, l); }
    static SymFunc e(const Partition& l) { return basis_elem(Basis::elementary, l); }
    static SymFunc p(const Partition& l) { return basis_elem(Basis::powersum, l); }
    static SymFunc s(const Partition& l) { return basis_elem(Basis::schur, l); }

    Basis basis() const { return basis_; }
    const std::map<Partition, LaurentPoly>& coeffs() const { return coeffs_; }
    LaurentPoly coeff(const Partition& lam) const {
        auto it = coeffs_.find(lam);
        return it == coeffs_.end() ? LaurentPoly() : it->second;
    }
    bool is_zero() const { return coeffs_.empty(); }

    void add_term(const Partition& lam, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = coeffs_.find(lam);
        if (it == coeffs_.end()) {
            coeffs_[lam] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    SymFunc& operator+=(const SymFunc& o) {
        if (o.basis_ != basis_) throw std::invalid_argument("basis mismatch in +");
        for (auto& [l, c] : o.coeffs_) add_term(l, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        if (o.basis_ != basis_) throw std::invalid_argument("basis mismatch in -");
        for (auto& [l, c] : o.coeffs_) add_term(l, -c);
        return *this;
    }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const LaurentPoly& c, const SymFunc& f) {
        SymFunc r(f.basis_);
        for (auto& [l, d] : f.coeffs_) r.add_term(l, c * d);
        return r;
    }
    friend bool operator==(const SymFunc& a, const SymFunc& b) {
        return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
    }

    std::string str() const {
        if (coeffs_.empty()) return "0";
        const char* tag = "mheps";
        std::ostringstream os;
        bool first = true;
        for (auto& [l, c] : coeffs_) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")*" << tag[(int)basis_] << "[" << l.str() << "]";
            first = false;
        }
        return os.str();
    }

private:
    Basis basis_;
    std::map<Partition, LaurentPoly> coeffs_;  // no zero entries
};

inline Rational z_lambda(const Partition& lam) {
    Rational z = 1;
    std::map<int, int> mult;
    for (int p : lam.parts()) mult[p]++;
    for (auto& [p, m] : mult) {
        for (int i = 1; i <= m; ++i) z *= i;
        for (int i = 0; i < m; ++i) z *= p;
    }
    return z;
}

namespace detail {

using Matrix = std::vector<std::vector<Rational>>;

inline Matrix matrix_inverse(Matrix a) {
    int n = (int)a.size();
    Matrix inv(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i) inv[i][i] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("singular transition matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (int j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// number of column-strict tableaux of shape lam and weight mu
inline Integer kostka_number(const Partition& lam, const std::vector<int>& mu, size_t upto) {
    if (upto == 0) return lam.empty() ? 1 : 0;
    static std::map<std::pair<Partition, std::vector<int>>, Integer> cache;
    static std::mutex mx;
    std::vector<int> key(mu.begin(), mu.begin() + upto);
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = cache.find({lam, key});
        if (it != cache.end()) return it->second;
    }
    Integer total = 0;
    for (auto& [nu, s] : remove_horizontal_strips(lam, 1, mu[upto - 1]))
        total += kostka_number(nu, mu, upto - 1);
    std::lock_guard<std::mutex> lk(mx);
    cache[{lam, key}] = total;
    return total;
}

// irreducible character chi^lam_mu via border-strip recursion
inline Integer sym_character(const Partition& lam, const Partition& mu) {
    if (lam.empty()) return mu.empty() ? 1 : 0;
    static std::map<std::pair<Partition, Partition>, Integer> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = cache.find({lam, mu});
        if (it != cache.end()) return it->second;
    }
    int k = mu.part(1);
    std::vector<int> rest(mu.parts().begin() + 1, mu.parts().end());
    Partition mrest(rest);
    Integer total = 0;
    for (auto& [nu, h] : remove_ribbons(lam, k))
        total += (h % 2 == 0 ? 1 : -1) * sym_character(nu, mrest);
    std::lock_guard<std::mutex> lk(mx);
    cache[{lam, mu}] = total;
    return total;
}

struct DegreeTables {
    std::vector<Partition> parts;
    std::map<Partition, int> index;
    Matrix kostka;      // K[lam][mu]
    Matrix inv_kostka;  // kappa[lam][mu]: m_mu = sum_lam kappa[lam][mu] s_lam
    Matrix chi;         // chi[lam][mu]
    Matrix h2p, e2p;    // h_lam = sum_mu h2p[lam][mu] p_mu
    Matrix p2h, p2e;
};

inline const DegreeTables& degree_tables(int d) {
    static std::map<int, DegreeTables> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    DegreeTables t;
    t.parts = partitions_of(d);
    int n = (int)t.parts.size();
    for (int i = 0; i < n; ++i) t.index[t.parts[i]] = i;
    t.kostka.assign(n, std::vector<Rational>(n, 0));
    t.chi.assign(n, std::vector<Rational>(n, 0));
    t.h2p.assign(n, std::vector<Rational>(n, 0));
    t.e2p.assign(n, std::vector<Rational>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            t.kostka[i][j] = Rational(kostka_number(t.parts[i], t.parts[j].parts(),
                                                    t.parts[j].parts().size()));
            t.chi[i][j] = Rational(sym_character(t.parts[i], t.parts[j]));
        }
    // h_lam and e_lam in the powersum basis, built multiplicatively from
    // h_k = sum_{rho |- k} p_rho / z_rho, e_k = sum_{rho} eps_rho p_rho / z_rho
    for (int i = 0; i < n; ++i) {
        std::map<Partition, Rational> hacc{{Partition(), 1}}, eacc{{Partition(), 1}};
        for (int part : t.parts[i].parts()) {
            std::map<Partition, Rational> hnext, enext;
            for (auto& rho : partitions_of(part)) {
                Rational w = 1 / z_lambda(rho);
                int eps = (part - rho.length()) % 2 == 0 ? 1 : -1;
                for (auto& [mu, c] : hacc) {
                    std::vector<int> cat = mu.parts();
                    for (int x : rho.parts()) cat.push_back(x);
                    hnext[Partition(cat)] += c * w;
                }
                for (auto& [mu, c] : eacc) {
                    std::vector<int> cat = mu.parts();
                    for (int x : rho.parts()) cat.push_back(x);
                    enext[Partition(cat)] += c * w * eps;
                }
            }
            hacc = std::move(hnext);
            eacc = std::move(enext);
        }
        for (auto& [mu, c] : hacc) t.h2p[i][t.index.at(mu)] = c;
        for (auto& [mu, c] : eacc) t.e2p[i][t.index.at(mu)] = c;
    }
    // kappa[lam][mu] with m_mu = sum_lam kappa[lam][mu] s_lam is the
    // transpose of the matrix inverse of K
    Matrix kinv = matrix_inverse(t.kostka);
    t.inv_kostka.assign(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t.inv_kostka[i][j] = kinv[j][i];
    t.p2h = matrix_inverse(t.h2p);
    t.p2e = matrix_inverse(t.e2p);
    return cache.emplace(d, std::move(t)).first->second;
}

}  // namespace detail

// --- basis conversion -------------------------------------------------------

namespace detail {

// apply m: out_mu = sum_lam in_lam * m[lam][mu]
inline std::map<Partition, LaurentPoly> apply_transition(
    const std::map<Partition, LaurentPoly>& in, const Matrix& m, const DegreeTables& t) {
    std::map<Partition, LaurentPoly> out;
    for (auto& [lam, c] : in) {
        int i = t.index.at(lam);
        for (int j = 0; j < (int)t.parts.size(); ++j) {
            if (m[i][j] == 0) continue;
            auto& slot = out[t.parts[j]];
            slot += c * LaurentPoly(m[i][j]);
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

inline std::map<Partition, LaurentPoly> convert_degree(
    const std::map<Partition, LaurentPoly>& in, Basis from, Basis to, int d) {
    if (from == to) return in;
    const DegreeTables& t = degree_tables(d);
    int n = (int)t.parts.size();
    // to powersum first
    std::map<Partition, LaurentPoly> pc;
    switch (from) {
        case Basis::powersum:
            pc = in;
            break;
        case Basis::homogeneous:
            pc = apply_transition(in, t.h2p, t);
            break;
        case Basis::elementary:
            pc = apply_transition(in, t.e2p, t);
            break;
        case Basis::schur: {
            // s_lam = sum_mu chi[lam][mu]/z_mu p_mu
            Matrix m(n, std::vector<Rational>(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) m[i][j] = t.chi[i][j] / z_lambda(t.parts[j]);
            pc = apply_transition(in, m, t);
            break;
        }
        case Basis::monomial: {
            // m_mu = sum_lam kappa[lam][mu] s_lam, then schur -> powersum
            std::map<Partition, LaurentPoly> sc;
            for (auto& [mu, c] : in) {
                int j = t.index.at(mu);
                for (int i = 0; i < n; ++i) {
                    if (t.inv_kostka[i][j] == 0) continue;
                    sc[t.parts[i]] += c * LaurentPoly(t.inv_kostka[i][j]);
                }
            }
            for (auto it = sc.begin(); it != sc.end();)
                it = it->second.is_zero() ? sc.erase(it) : std::next(it);
            return convert_degree(sc, Basis::schur, to, d);
        }
    }
    switch (to) {
        case Basis::powersum:
            return pc;
        case Basis::homogeneous:
            return apply_transition(pc, t.p2h, t);
        case Basis::elementary:
            return apply_transition(pc, t.p2e, t);
        case Basis::schur: {
            // p_mu = sum_lam chi[lam][mu] s_lam
            std::map<Partition, LaurentPoly> sc;
            for (auto& [mu, c] : pc) {
                int j = t.index.at(mu);
                for (int i = 0; i < n; ++i) {
                    if (t.chi[i][j] == 0) continue;
                    sc[t.parts[i]] += c * LaurentPoly(t.chi[i][j]);
                }
            }
            for (auto it = sc.begin(); it != sc.end();)
                it = it->second.is_zero() ? sc.erase(it) : std::next(it);
            return sc;
        }
        case Basis::monomial: {
            auto sc = convert_degree(pc, Basis::powersum, Basis::schur, d);
            return apply_transition(sc, t.kostka, t);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace detail

inline SymFunc convert(const SymFunc& f, Basis target) {
    if (f.basis() == target) return f;
    std::map<int, std::map<Partition, LaurentPoly>> bydeg;
    for (auto& [lam, c] : f.coeffs()) bydeg[lam.size()][lam] = c;
    SymFunc out(target);
    for (auto& [d, comp] : bydeg)
        for (auto& [lam, c] : detail::convert_degree(comp, f.basis(), target, d))
            out.add_term(lam, c);
    return out;
}

// equality as abstract elements, regardless of basis
inline bool same_element(const SymFunc& f, const SymFunc& g) {
    return convert(f, Basis::powersum) == convert(g, Basis::powersum);
}

inline SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::powersum), gp = convert(g, Basis::powersum);
    SymFunc out(Basis::powersum);
    for (auto& [l1, c1] : fp.coeffs())
        for (auto& [l2, c2] : gp.coeffs()) {
            std::vector<int> cat = l1.parts();
            for (int x : l2.parts()) cat.push_back(x);
            out.add_term(Partition(cat), c1 * c2);
        }
    return convert(out, f.basis());
}

// Upsilon_{q,n}: p_k -> (1 + q^{2k} + ... + q^{2k(n-1)}) p_k
inline SymFunc upsilon(const SymFunc& f, int n) {
    SymFunc fp = convert(f, Basis::powersum);
    SymFunc out(Basis::powersum);
    for (auto& [lam, c] : fp.coeffs()) {
        LaurentPoly w = c;
        for (int k : lam.parts()) w *= geometric_sum(n, k);
        out.add_term(lam, w);
    }
    return convert(out, f.basis());
}

// omega_n: semilinear (q -> q^{-1}) with s_lam -> q^{(n-1)|lam|} s_{lam'}
inline SymFunc omega_n(const SymFunc& f, int n) {
    SymFunc fs = convert(f, Basis::schur);
    SymFunc out(Basis::schur);
    for (auto& [lam, c] : fs.coeffs())
        out.add_term(lam.conjugate(), bar_q(c) * LaurentPoly::q((n - 1) * lam.size()));
    return convert(out, f.basis());
}

// bar: semilinear with p_k -> q^{2(n-1)k} p_k
inline SymFunc bar_lambda(const SymFunc& f, int n) {
    SymFunc fp = convert(f, Basis::powersum);
    SymFunc out(Basis::powersum);
    for (auto& [lam, c] : fp.coeffs())
        out.add_term(lam, bar_q(c) * LaurentPoly::q(2 * (n - 1) * lam.size()));
    return convert(out, f.basis());
}

inline LaurentPoly hall_inner(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::powersum), gp = convert(g, Basis::powersum);
    LaurentPoly out;
    for (auto& [lam, c] : fp.coeffs()) {
        auto d = gp.coeff(lam);
        if (!d.is_zero()) out += c * d * LaurentPoly(z_lambda(lam));
    }
    return out;
}

// deformed pairing with <upsilon(p_lam), p_mu>_n = z_lam delta
inline RatFunc inner_n(const SymFunc& f, const SymFunc& g, int n) {
    SymFunc fp = convert(f, Basis::powersum), gp = convert(g, Basis::powersum);
    RatFunc out;
    for (auto& [lam, c] : fp.coeffs()) {
        auto d = gp.coeff(lam);
        if (d.is_zero()) continue;
        LaurentPoly den(1);
        for (int k : lam.parts()) den *= geometric_sum(n, k);
        out = out + RatFunc(c * d * LaurentPoly(z_lambda(lam)), den);
    }
    return out;
}

// f^perp: adjoint of multiplication by f, via p_k -> k d/dp_k
inline SymFunc perp(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::powersum), gp = convert(g, Basis::powersum);
    SymFunc out(Basis::powersum);
    for (auto& [lam, c] : fp.coeffs()) {
        std::map<Partition, LaurentPoly> cur;
        for (auto& [mu, d] : gp.coeffs()) cur[mu] = d;
        for (int k : lam.parts()) {
            std::map<Partition, LaurentPoly> next;
            for (auto& [mu, d] : cur) {
                int mult = (int)std::count(mu.parts().begin(), mu.parts().end(), k);
                if (mult == 0) continue;
                std::vector<int> rest = mu.parts();
                rest.erase(std::find(rest.begin(), rest.end(), k));
                next[Partition(rest)] += d * LaurentPoly(Rational(k) * mult);
            }
            cur = std::move(next);
        }
        for (auto& [mu, d] : cur) out.add_term(mu, c * d);
    }
    return convert(out, g.basis());
}

// substitute x_1..x_m = values, other variables 0
inline LaurentPoly specialize(const SymFunc& f, const std::vector<LaurentPoly>& values) {
    SymFunc fm = convert(f, Basis::monomial);
    int m = (int)values.size();
    LaurentPoly out;
    for (auto& [lam, c] : fm.coeffs()) {
        if (lam.length() > m) continue;
        std::vector<int> exps = lam.parts();
        exps.resize(m, 0);
        std::sort(exps.begin(), exps.end());
        LaurentPoly msum;
        do {
            LaurentPoly term(1);
            for (int i = 0; i < m; ++i)
                if (exps[i] > 0) term *= values[i].pow(exps[i]);
            msum += term;
        } while (std::next_permutation(exps.begin(), exps.end()));
        out += c * msum;
    }
    return out;
}

inline SymFunc bold_h(int k, int n) {
    return upsilon(SymFunc::h(Partition(std::vector<int>{k})), n);
}
inline SymFunc bold_e(int k, int n) {
    return upsilon(SymFunc::e(Partition(std::vector<int>{k})), n);
}

}  // namespace ribbon
