// The level-one Fock space: vectors indexed by partitions with LaurentPoly
// coefficients, the quantum affine sl_n action (e_i, f_i, q^{h_i}, q^D), the
// Heisenberg operators V/U (horizontal strips), their vertical analogues, the
// bosons B_k (border ribbon strips), the elements S_lambda, the conjugation
// involution, and the map phi onto symmetric functions.
#pragma once

#include "ribbon/ribbonfn.hpp"

namespace ribbon {

struct FockVector {
    int n = 2;
    std::map<Partition, LaurentPoly> entries;  // no zero entries

    FockVector() = default;
    explicit FockVector(int n_) : n(n_) {}

    static FockVector basis(int n, const Partition& lam) {
        FockVector v(n);
        v.entries[lam] = LaurentPoly(1);
        return v;
    }
    static FockVector vacuum(int n) { return basis(n, Partition()); }

    bool is_zero() const { return entries.empty(); }
    LaurentPoly coeff(const Partition& lam) const {
        auto it = entries.find(lam);
        return it == entries.end() ? LaurentPoly() : it->second;
    }
    void add_term(const Partition& lam, const LaurentPoly& c) {
        if (c.is_zero()) return;
        auto it = entries.find(lam);
        if (it == entries.end()) {
            entries[lam] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) entries.erase(it);
        }
    }

    FockVector& operator+=(const FockVector& o) {
        if (o.n != n) throw std::invalid_argument("mixed n in Fock sum");
        for (auto& [l, c] : o.entries) add_term(l, c);
        return *this;
    }
    FockVector& operator-=(const FockVector& o) {
        if (o.n != n) throw std::invalid_argument("mixed n in Fock sum");
        for (auto& [l, c] : o.entries) add_term(l, -c);
        return *this;
    }
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    friend FockVector operator*(const LaurentPoly& c, const FockVector& v) {
        FockVector r(v.n);
        for (auto& [l, d] : v.entries) r.add_term(l, c * d);
        return r;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        return a.n == b.n && a.entries == b.entries;
    }

    std::string str() const {
        if (entries.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [l, c] : entries) {
            if (!first) os << " + ";
            os << "(" << c.str() << ")*|" << l.str() << ">";
            first = false;
        }
        return os.str();
    }
};

// --- quantum affine sl_n action ---------------------------------------------

namespace detail {

inline int cell_residue(int r, int c, int n) { return ((r - c) % n + n) % n; }

// addable cells (r, lam_r + 1) of residue i, listed by increasing column
inline std::vector<Cell> addable_nodes(const Partition& lam, int n, int i) {
    std::vector<Cell> out;
    for (int r = lam.length() + 1; r >= 1; --r) {
        int c = lam.part(r) + 1;
        if (r > 1 && lam.part(r - 1) < c) continue;
        if (cell_residue(r, c, n) == i) out.push_back({r, c});
    }
    return out;
}

// removable cells (r, lam_r) of residue i, listed by increasing column
inline std::vector<Cell> removable_nodes(const Partition& lam, int n, int i) {
    std::vector<Cell> out;
    for (int r = lam.length(); r >= 1; --r) {
        int c = lam.part(r);
        if (lam.part(r + 1) == c) continue;
        if (cell_residue(r, c, n) == i) out.push_back({r, c});
    }
    return out;
}

inline Partition with_added_cell(const Partition& lam, const Cell& d) {
    std::vector<int> p = lam.parts();
    if (d.first == (int)p.size() + 1)
        p.push_back(1);
    else
        p[d.first - 1]++;
    return Partition(p);
}

inline Partition with_removed_cell(const Partition& lam, const Cell& d) {
    std::vector<int> p = lam.parts();
    p[d.first - 1]--;
    return Partition(p);
}

}  // namespace detail

// N_i(lam) = #addable - #removable i-nodes
inline int node_count_diff(const Partition& lam, int n, int i) {
    return (int)detail::addable_nodes(lam, n, i).size() -
           (int)detail::removable_nodes(lam, n, i).size();
}

// number of cells of lam with residue 0
inline int zero_residue_cells(const Partition& lam, int n) {
    int count = 0;
    for (auto& [r, c] : lam.cells())
        if (detail::cell_residue(r, c, n) == 0) count++;
    return count;
}

// f_i |lam> = sum_mu q^{N_i^r(lam,mu)} |mu> over additions of an i-node,
// where N_i^r counts addable minus removable i-nodes of lam strictly to the
// right (larger column) of the new node
inline FockVector apply_f(const FockVector& v, int i) {
    int n = v.n;
    FockVector out(n);
    for (auto& [lam, coeff] : v.entries) {
        auto add = detail::addable_nodes(lam, n, i);
        auto rem = detail::removable_nodes(lam, n, i);
        for (auto& d : add) {
            int nr = 0;
            for (auto& a : add)
                if (a.second > d.second) nr++;
            for (auto& r : rem)
                if (r.second > d.second) nr--;
            out.add_term(detail::with_added_cell(lam, d), coeff * LaurentPoly::q(nr));
        }
    }
    return out;
}

// e_i |lam> = sum_mu q^{-N_i^l(lam,mu)} |mu> over removals of an i-node,
// where N_i^l counts addable minus removable i-nodes of lam strictly to the
// left (smaller column) of the removed node
inline FockVector apply_e(const FockVector& v, int i) {
    int n = v.n;
    FockVector out(n);
    for (auto& [lam, coeff] : v.entries) {
        auto add = detail::addable_nodes(lam, n, i);
        auto rem = detail::removable_nodes(lam, n, i);
        for (auto& d : rem) {
            int nl = 0;
            for (auto& a : add)
                if (a.second < d.second) nl++;
            for (auto& r : rem)
                if (r.second < d.second) nl--;
            out.add_term(detail::with_removed_cell(lam, d), coeff * LaurentPoly::q(-nl));
        }
    }
    return out;
}

// q^{c h_i} |lam> = q^{c N_i(lam)} |lam>
inline FockVector apply_qh(const FockVector& v, int i, int c = 1) {
    FockVector out(v.n);
    for (auto& [lam, coeff] : v.entries)
        out.add_term(lam, coeff * LaurentPoly::q(c * node_count_diff(lam, v.n, i)));
    return out;
}

// q^{c D} |lam> = q^{c N^0(lam)} |lam>
inline FockVector apply_qD(const FockVector& v, int c = 1) {
    FockVector out(v.n);
    for (auto& [lam, coeff] : v.entries)
        out.add_term(lam, coeff * LaurentPoly::q(c * zero_residue_cells(lam, v.n)));
    return out;
}

// --- Heisenberg operators ----------------------------------------------------

// V_k |lam> = sum (-q)^{-spin} |mu> over horizontal n-ribbon strips of size k
inline FockVector apply_V(const FockVector& v, int k) {
    FockVector out(v.n);
    for (auto& [lam, coeff] : v.entries)
        for (auto& [mu, s] : add_horizontal_strips(lam, v.n, k))
            out.add_term(mu, coeff * neg_q_pow(-s));
    return out;
}

inline FockVector apply_U(const FockVector& v, int k) {
    FockVector out(v.n);
    for (auto& [lam, coeff] : v.entries)
        for (auto& [mu, s] : remove_horizontal_strips(lam, v.n, k))
            out.add_term(mu, coeff * neg_q_pow(-s));
    return out;
}

inline FockVector apply_Vtilde(const FockVector& v, int k) {
    FockVector out(v.n);
    for (auto& [lam, coeff] : v.entries)
        for (auto& [mu, s] : add_vertical_strips(lam, v.n, k))
            out.add_term(mu, coeff * neg_q_pow(-s));
    return out;
}

inline FockVector apply_Utilde(const FockVector& v, int k) {
    FockVector out(v.n);
    for (auto& [lam, coeff] : v.entries)
        for (auto& [mu, s] : remove_vertical_strips(lam, v.n, k))
            out.add_term(mu, coeff * neg_q_pow(-s));
    return out;
}

// B_{-k} |lam> = sum_mu X_k^{mu/lam}(-q^{-1}) |mu> (k > 0 adds ribbons);
// B_k |lam> = sum_mu X_k^{lam/mu}(-q^{-1}) |mu> removes them
inline FockVector apply_B(const FockVector& v, int k) {
    if (k == 0) throw std::invalid_argument("B_0 is not defined");
    FockVector out(v.n);
    for (auto& [lam, coeff] : v.entries) {
        if (k < 0) {
            for (auto& b : enumerate_border_ribbon_strips(lam, v.n, -k))
                out.add_term(b.outer, coeff * neg_q_pow(-b.spin) *
                                          LaurentPoly(b.height % 2 == 0 ? 1 : -1));
        } else {
            int d = v.n * k;
            if (lam.size() < d) continue;
            for (auto& mu : partitions_of(lam.size() - d)) {
                if (!lam.contains(mu)) continue;
                LaurentPoly x = X_poly(SkewShape(lam, mu), v.n, {k});
                out.add_term(mu, coeff * subst_neg_qinv(x));
            }
        }
    }
    return out;
}

// S_lambda via the inverse Kostka matrix: S_lambda = sum_rho kappa_{lambda,rho} V_rho
inline FockVector apply_S_via_V(const FockVector& v, const Partition& lam) {
    SymFunc sh = convert(SymFunc::s(lam), Basis::homogeneous);
    FockVector out(v.n);
    for (auto& [rho, c] : sh.coeffs()) {
        FockVector w = v;
        for (int k : rho.parts()) w = apply_V(w, k);
        out += c * w;
    }
    return out;
}

// S_lambda via characters: S_lambda = sum_mu z_mu^{-1} chi^lambda_mu B_{-mu}
inline FockVector apply_S_via_B(const FockVector& v, const Partition& lam) {
    FockVector out(v.n);
    for (auto& mu : partitions_of(lam.size())) {
        Rational c = Rational(detail::sym_character(lam, mu)) / z_lambda(mu);
        if (c == 0) continue;
        FockVector w = v;
        for (int k : mu.parts()) w = apply_B(w, -k);
        out += LaurentPoly(c) * w;
    }
    return out;
}

inline FockVector apply_S(const FockVector& v, const Partition& lam) {
    return apply_S_via_B(v, lam);
}

// semilinear involution: q -> q^{-1}, |lam> -> |lam'>
inline FockVector prime(const FockVector& v) {
    FockVector out(v.n);
    for (auto& [lam, c] : v.entries) out.add_term(lam.conjugate(), bar_q(c));
    return out;
}

// phi: F -> Lambda(q), |lam> -> G_{lam/core}(X;q), semilinear over q -> -q^{-1}
inline SymFunc phi(const FockVector& v) {
    SymFunc out(Basis::schur);
    for (auto& [lam, c] : v.entries)
        out += subst_neg_qinv(c) * convert(G_of(lam, v.n), Basis::schur);
    return out;
}

}  // namespace ribbon
