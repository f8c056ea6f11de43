// Ribbon tableaux and their generating functions: spin Kostka polynomials K,
// column versions L, the symmetric functions G_{lambda/mu}(X;q), q-analogue
// Littlewood-Richardson coefficients, signed border-strip polynomials X, and
// super ribbon functions.
#pragma once

#include "ribbon/partition.hpp"
#include "ribbon/symfunc.hpp"

namespace ribbon {

using Composition = std::vector<int>;  // nonnegative entries

struct RibbonTableau {
    std::vector<Partition> chain;  // inner = chain.front(), outer = chain.back()
    int n = 1;
    Composition weight;  // ribbons per step
    int spin = 0;
};

inline std::vector<RibbonTableau> enumerate_tableaux(const SkewShape& shape, int n, int max_label) {
    std::vector<RibbonTableau> out;
    if (shape.size() % n != 0) return out;
    std::vector<Partition> chain{shape.inner};
    Composition weight;
    auto rec = [&](auto&& self, const Partition& cur, int label, int spin) -> void {
        if (label == max_label) {
            if (cur == shape.outer) {
                RibbonTableau t;
                t.chain = chain;
                t.n = n;
                t.weight = weight;
                t.spin = spin;
                out.push_back(t);
            }
            return;
        }
        int maxk = (shape.outer.size() - cur.size()) / n;
        for (int k = 0; k <= maxk; ++k)
            for (auto& [rho, s] : add_horizontal_strips(cur, n, k)) {
                if (!shape.outer.contains(rho)) continue;
                chain.push_back(rho);
                weight.push_back(k);
                self(self, rho, label + 1, spin + s);
                chain.pop_back();
                weight.pop_back();
            }
    };
    rec(rec, shape.inner, 0, 0);
    return out;
}

// spin generating function over semistandard ribbon tableaux of weight alpha
inline LaurentPoly K_poly(const SkewShape& shape, int n, const Composition& alpha) {
    int total = 0;
    for (int a : alpha) {
        if (a < 0) throw std::invalid_argument("negative weight entry");
        total += a;
    }
    if (shape.size() != n * total) return LaurentPoly();
    std::map<std::pair<Partition, size_t>, LaurentPoly> memo;
    auto rec = [&](auto&& self, const Partition& cur, size_t i) -> LaurentPoly {
        if (i == alpha.size()) return cur == shape.outer ? LaurentPoly(1) : LaurentPoly();
        auto it = memo.find({cur, i});
        if (it != memo.end()) return it->second;
        LaurentPoly sum;
        for (auto& [rho, s] : add_horizontal_strips(cur, n, alpha[i])) {
            if (!shape.outer.contains(rho)) continue;
            sum += LaurentPoly::q(s) * self(self, rho, i + 1);
        }
        return memo.emplace(std::make_pair(cur, i), sum).first->second;
    };
    return rec(rec, shape.inner, 0);
}

// G_{lambda/mu}(X;q) in the monomial basis; degree = (#cells)/n
inline SymFunc G(const SkewShape& shape, int n) {
    static std::map<std::pair<SkewShape, int>, SymFunc> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = cache.find({shape, n});
        if (it != cache.end()) return it->second;
    }
    SymFunc out(Basis::monomial);
    if (shape.size() % n == 0) {
        int r = shape.size() / n;
        for (auto& alpha : partitions_of(r))
            out.add_term(alpha, K_poly(shape, n, alpha.parts()));
    }
    std::lock_guard<std::mutex> lk(mx);
    return cache.emplace(std::make_pair(shape, n), std::move(out)).first->second;
}

// G_lambda := G_{lambda/core}
inline SymFunc G_of(const Partition& lam, int n) {
    return G(SkewShape(lam, n_core(lam, n)), n);
}

// column-semistandard version, via conjugation and the spin complement
inline LaurentPoly L_poly(const SkewShape& shape, int n, const Composition& alpha) {
    int r = shape.size() / n;
    return bar_q(K_poly(shape.conjugate(), n, alpha)) * LaurentPoly::q(r * (n - 1));
}

// Schur expansion coefficients of G(shape, n)
inline std::map<Partition, LaurentPoly> q_lr(const SkewShape& shape, int n) {
    return convert(G(shape, n), Basis::schur).coeffs();
}

// X^{outer/inner}_type(q) = sum over border ribbon strip tableaux of
// (-1)^height q^spin
inline LaurentPoly X_poly(const SkewShape& shape, int n, const Composition& type) {
    int total = 0;
    for (int a : type) {
        if (a <= 0) throw std::invalid_argument("type entries must be positive");
        total += a;
    }
    if (shape.size() != n * total) return LaurentPoly();
    std::map<std::pair<Partition, size_t>, LaurentPoly> memo;
    auto rec = [&](auto&& self, const Partition& cur, size_t i) -> LaurentPoly {
        if (i == type.size()) return cur == shape.outer ? LaurentPoly(1) : LaurentPoly();
        auto it = memo.find({cur, i});
        if (it != memo.end()) return it->second;
        LaurentPoly sum;
        for (auto& b : enumerate_border_ribbon_strips(cur, n, type[i])) {
            if (!shape.outer.contains(b.outer)) continue;
            LaurentPoly c = LaurentPoly::term(b.spin, b.height % 2 == 0 ? 1 : -1);
            sum += c * self(self, b.outer, i + 1);
        }
        return memo.emplace(std::make_pair(cur, i), sum).first->second;
    };
    return rec(rec, shape.inner, 0);
}

// --- super ribbon functions --------------------------------------------------

struct SuperLetter {
    bool primed = false;
    int label = 1;  // within its alphabet
};

// default order 1 < 1' < 2 < 2' < ...
inline std::vector<SuperLetter> default_super_order(int unprimed, int primed) {
    std::vector<SuperLetter> order;
    for (int i = 1; i <= std::max(unprimed, primed); ++i) {
        if (i <= unprimed) order.push_back({false, i});
        if (i <= primed) order.push_back({true, i});
    }
    return order;
}

// coefficient table of G_{shape}(X/Y;q): weight pair -> spin polynomial
inline std::map<std::pair<Composition, Composition>, LaurentPoly> super_G(
    const SkewShape& shape, int n, int unprimed, int primed,
    const std::vector<SuperLetter>& order) {
    std::map<std::pair<Composition, Composition>, LaurentPoly> out;
    if (shape.size() % n != 0) return out;
    Composition wx(unprimed, 0), wy(primed, 0);
    auto rec = [&](auto&& self, const Partition& cur, size_t i, int spin) -> void {
        if (i == order.size()) {
            if (cur == shape.outer) out[{wx, wy}] += LaurentPoly::q(spin);
            return;
        }
        int maxk = (shape.outer.size() - cur.size()) / n;
        const SuperLetter& let = order[i];
        for (int k = 0; k <= maxk; ++k) {
            auto strips = let.primed ? add_vertical_strips(cur, n, k)
                                     : add_horizontal_strips(cur, n, k);
            for (auto& [rho, s] : strips) {
                if (!shape.outer.contains(rho)) continue;
                int& slot = let.primed ? wy[let.label - 1] : wx[let.label - 1];
                slot = k;
                self(self, rho, i + 1, spin + s);
                slot = 0;
            }
        }
    };
    rec(rec, shape.inner, 0, 0);
    return out;
}

inline std::map<std::pair<Composition, Composition>, LaurentPoly> super_G(
    const SkewShape& shape, int n, int unprimed, int primed) {
    return super_G(shape, n, unprimed, primed, default_super_order(unprimed, primed));
}

}  // namespace ribbon
