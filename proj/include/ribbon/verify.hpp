// Identity checkers shared by the CLI and the acceptance harness. Each
// checker sweeps a parameter grid, compares both sides of one exact
// polynomial identity per cell, and reports the first counterexample.
#pragma once

#include <chrono>
#include <functional>
#include <optional>

#include "ribbon/fock.hpp"
#include "ribbon/multipoly.hpp"

namespace ribbon {

struct VerifyCell {
    std::string params;
    bool pass = true;
    std::string detail;  // serialized counterexample when pass is false
};

struct VerifyReport {
    std::string identity;
    std::vector<VerifyCell> cells;
    long long wall_ms = 0;

    bool all_pass() const {
        for (auto& c : cells)
            if (!c.pass) return false;
        return true;
    }
    const VerifyCell* first_failure() const {
        for (auto& c : cells)
            if (!c.pass) return &c;
        return nullptr;
    }
};

struct VerifyGrid {
    std::vector<int> ns{2, 3};
    int kmax = 3;
    std::optional<int> k;             // restrict to one k
    int sizemax = 8;                  // bound on |nu| (or |lambda|) in sweeps
    std::optional<Partition> nu;      // restrict to one partition
    int lammax = 2;                   // bound on |lambda| for LR-type sweeps
    int degree = 3;                   // truncation degree for Cauchy kernels
    int vars = 3;                     // variables per alphabet
    std::vector<Partition> cores{Partition()};
};

namespace detail {

inline std::vector<Partition> grid_partitions(const VerifyGrid& g) {
    if (g.nu) return {*g.nu};
    return partitions_of_size_at_most(g.sizemax);
}

inline std::vector<int> grid_ks(const VerifyGrid& g) {
    if (g.k) return {*g.k};
    std::vector<int> out;
    for (int k = 1; k <= g.kmax; ++k) out.push_back(k);
    return out;
}

template <class Fill>
VerifyReport run_report(const std::string& identity, Fill&& fill) {
    VerifyReport rep;
    rep.identity = identity;
    auto t0 = std::chrono::steady_clock::now();
    fill(rep);
    auto t1 = std::chrono::steady_clock::now();
    rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return rep;
}

inline void push_sym_cell(VerifyReport& rep, const std::string& params, const SymFunc& lhs,
                          const SymFunc& rhs) {
    VerifyCell cell{params, true, ""};
    if (!same_element(lhs, rhs)) {
        cell.pass = false;
        cell.detail = "lhs = " + convert(lhs, Basis::schur).str() +
                      "; rhs = " + convert(rhs, Basis::schur).str();
    }
    rep.cells.push_back(std::move(cell));
}

inline std::vector<Partition> sub_partitions(const Partition& lam) {
    std::vector<Partition> out;
    for (auto& mu : partitions_of_size_at_most(lam.size()))
        if (lam.contains(mu)) out.push_back(mu);
    return out;
}

// partitions of |delta| + n*d with the given n-core
inline std::vector<Partition> core_class(const Partition& delta, int n, int d) {
    std::vector<Partition> out;
    for (auto& lam : partitions_containing(delta.size() + n * d, delta))
        if (n_core(lam, n) == delta) out.push_back(lam);
    return out;
}

// truncation of prod_{i,j<v} prod_{k<n} 1/(1 - x_i y_j q^{2k}) to x-degree <= D
inline MultiPoly cauchy_kernel(int n, int D, int v) {
    MultiPoly out = MultiPoly::constant(LaurentPoly(1));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            for (int k = 0; k < n; ++k) {
                MultiPoly factor;
                for (int t = 0; t <= D; ++t) {
                    std::vector<int> e(2 * v, 0);
                    e[i] = t;
                    e[v + j] = t;
                    factor += MultiPoly::monomial(e, LaurentPoly::q(2 * k * t));
                }
                out = (out * factor).truncated(D, 0, v);
            }
    return out;
}

// truncation of prod_{i,j<v} prod_{k<n} (1 + x_i y_j q^{2k}) to x-degree <= D
inline MultiPoly dual_cauchy_kernel(int n, int D, int v) {
    MultiPoly out = MultiPoly::constant(LaurentPoly(1));
    for (int i = 0; i < v; ++i)
        for (int j = 0; j < v; ++j)
            for (int k = 0; k < n; ++k) {
                std::vector<int> e(2 * v, 0);
                e[i] = 1;
                e[v + j] = 1;
                MultiPoly factor = MultiPoly::constant(LaurentPoly(1));
                factor += MultiPoly::monomial(e, LaurentPoly::q(2 * k));
                out = (out * factor).truncated(D, 0, v);
            }
    return out;
}

inline MultiPoly bar_coeffs(const MultiPoly& p) {
    MultiPoly out;
    for (auto& [e, c] : p.terms) out.add_term(e, bar_q(c));
    return out;
}

inline std::string poly_pair(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    return "lhs = " + lhs.str() + "; rhs = " + rhs.str();
}

}  // namespace detail

// K_{lam/core, alpha}(q) is invariant under permutations of alpha
inline VerifyReport verify_symmetry(const VerifyGrid& g) {
    return detail::run_report("symmetry", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& lam : detail::grid_partitions(g)) {
                SkewShape shape(lam, n_core(lam, n));
                int r = shape.size() / n;
                VerifyCell cell{"n=" + std::to_string(n) + " lambda=" + lam.str(), true, ""};
                for (auto& alpha : partitions_of(r)) {
                    Composition a = alpha.parts();
                    std::sort(a.begin(), a.end());
                    LaurentPoly ref = K_poly(shape, n, a);
                    do {
                        LaurentPoly got = K_poly(shape, n, a);
                        if (got != ref) {
                            cell.pass = false;
                            cell.detail = "alpha permutation changes K: " +
                                          detail::poly_pair(got, ref);
                        }
                    } while (cell.pass && std::next_permutation(a.begin(), a.end()));
                    if (!cell.pass) break;
                }
                rep.cells.push_back(std::move(cell));
            }
    });
}

// bold_h_k G_nu = sum over horizontal ribbon strip additions of q^spin G_mu
inline VerifyReport verify_pieri(const VerifyGrid& g) {
    return detail::run_report("pieri", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& nu : detail::grid_partitions(g))
                for (int k : detail::grid_ks(g)) {
                    SymFunc lhs = multiply(bold_h(k, n), G_of(nu, n));
                    SymFunc rhs(Basis::monomial);
                    for (auto& [mu, s] : add_horizontal_strips(nu, n, k))
                        rhs += LaurentPoly::q(s) * G_of(mu, n);
                    detail::push_sym_cell(rep,
                                          "n=" + std::to_string(n) + " nu=" + nu.str() +
                                              " k=" + std::to_string(k),
                                          lhs, rhs);
                }
    });
}

// bold_e_k G_nu = sum over vertical ribbon strip additions of q^spin G_mu
inline VerifyReport verify_dual_pieri(const VerifyGrid& g) {
    return detail::run_report("dual-pieri", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& nu : detail::grid_partitions(g))
                for (int k : detail::grid_ks(g)) {
                    SymFunc lhs = multiply(bold_e(k, n), G_of(nu, n));
                    SymFunc rhs(Basis::monomial);
                    for (auto& [mu, s] : add_vertical_strips(nu, n, k))
                        rhs += LaurentPoly::q(s) * G_of(mu, n);
                    detail::push_sym_cell(rep,
                                          "n=" + std::to_string(n) + " nu=" + nu.str() +
                                              " k=" + std::to_string(k),
                                          lhs, rhs);
                }
    });
}

// h_k^perp and e_k^perp act by spin-weighted strip removals
inline VerifyReport verify_lowering_pieri(const VerifyGrid& g) {
    return detail::run_report("lowering-pieri", [&](VerifyReport& rep) {
        Partition one1(std::vector<int>{1});
        for (int n : g.ns)
            for (auto& nu : detail::grid_partitions(g))
                for (int k : detail::grid_ks(g)) {
                    std::string base = "n=" + std::to_string(n) + " nu=" + nu.str() +
                                       " k=" + std::to_string(k);
                    Partition kp(std::vector<int>{k});
                    SymFunc g_nu = G_of(nu, n);
                    SymFunc lhs_h = perp(SymFunc::h(kp), g_nu);
                    SymFunc rhs_h(Basis::monomial);
                    for (auto& [mu, s] : remove_horizontal_strips(nu, n, k))
                        rhs_h += LaurentPoly::q(s) * G_of(mu, n);
                    detail::push_sym_cell(rep, base + " op=h_perp", lhs_h, rhs_h);

                    SymFunc lhs_e = perp(SymFunc::e(kp), g_nu);
                    SymFunc rhs_e(Basis::monomial);
                    for (auto& [mu, s] : remove_vertical_strips(nu, n, k))
                        rhs_e += LaurentPoly::q(s) * G_of(mu, n);
                    detail::push_sym_cell(rep, base + " op=e_perp", lhs_e, rhs_e);
                }
    });
}

// (1 + q^{2k} + ... + q^{2k(n-1)}) p_k G_nu = sum_mu X^{mu/nu}_k(q) G_mu
inline VerifyReport verify_mn(const VerifyGrid& g) {
    return detail::run_report("mn", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& nu : detail::grid_partitions(g))
                for (int k : detail::grid_ks(g)) {
                    Partition kp(std::vector<int>{k});
                    SymFunc lhs = multiply(upsilon(SymFunc::p(kp), n), G_of(nu, n));
                    SymFunc rhs(Basis::monomial);
                    for (auto& mu : partitions_containing(nu.size() + n * k, nu)) {
                        LaurentPoly x = X_poly(SkewShape(mu, nu), n, {k});
                        if (!x.is_zero()) rhs += x * G_of(mu, n);
                    }
                    detail::push_sym_cell(rep,
                                          "n=" + std::to_string(n) + " nu=" + nu.str() +
                                              " k=" + std::to_string(k),
                                          lhs, rhs);
                }
    });
}

// k d/dp_k G_nu = sum_mu X^{nu/mu}_k(q) G_mu
inline VerifyReport verify_lowering_mn(const VerifyGrid& g) {
    return detail::run_report("lowering-mn", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& nu : detail::grid_partitions(g))
                for (int k : detail::grid_ks(g)) {
                    Partition kp(std::vector<int>{k});
                    SymFunc lhs = perp(SymFunc::p(kp), G_of(nu, n));
                    SymFunc rhs(Basis::monomial);
                    if (nu.size() >= n * k)
                        for (auto& mu : partitions_of(nu.size() - n * k)) {
                            if (!nu.contains(mu)) continue;
                            LaurentPoly x = X_poly(SkewShape(nu, mu), n, {k});
                            if (!x.is_zero()) rhs += x * G_of(mu, n);
                        }
                    detail::push_sym_cell(rep,
                                          "n=" + std::to_string(n) + " nu=" + nu.str() +
                                              " k=" + std::to_string(k),
                                          lhs, rhs);
                }
    });
}

// sum over a fixed core class of G_lam(X) G_lam(Y) equals the Cauchy kernel
inline VerifyReport verify_cauchy(const VerifyGrid& g) {
    return detail::run_report("cauchy", [&](VerifyReport& rep) {
        int D = g.degree, v = g.vars;
        for (int n : g.ns)
            for (auto& delta : g.cores) {
                if (n_core(delta, n) != delta) continue;
                MultiPoly lhs;
                for (int d = 0; d <= D; ++d)
                    for (auto& lam : detail::core_class(delta, n, d)) {
                        SymFunc gl = G(SkewShape(lam, delta), n);
                        lhs += expand(gl, v, 0, 2 * v) * expand(gl, v, v, 2 * v);
                    }
                MultiPoly rhs = detail::cauchy_kernel(n, D, v);
                VerifyCell cell{"n=" + std::to_string(n) + " core=(" + delta.str() + ")",
                                lhs == rhs, ""};
                if (!cell.pass) cell.detail = "truncated kernel mismatch";
                rep.cells.push_back(std::move(cell));
            }
    });
}

// sum of q^{(n-1)d} G_{lam'}(X;q) G_lam(Y;q^{-1}) over core classes, with d the
// number of ribbons of lam/core, equals the dual kernel
inline VerifyReport verify_dual_cauchy(const VerifyGrid& g) {
    return detail::run_report("dual-cauchy", [&](VerifyReport& rep) {
        int D = g.degree, v = g.vars;
        for (int n : g.ns)
            for (auto& delta : g.cores) {
                if (n_core(delta, n) != delta) continue;
                MultiPoly lhs;
                for (int d = 0; d <= D; ++d)
                    for (auto& lam : detail::core_class(delta, n, d)) {
                        Partition lamc = lam.conjugate();
                        MultiPoly x = expand(G(SkewShape(lamc, n_core(lamc, n)), n), v, 0, 2 * v);
                        MultiPoly y =
                            detail::bar_coeffs(expand(G(SkewShape(lam, delta), n), v, v, 2 * v));
                        MultiPoly prod = x * y;
                        MultiPoly scaled;
                        for (auto& [e, c] : prod.terms)
                            scaled.add_term(e, c * LaurentPoly::q((n - 1) * d));
                        lhs += scaled;
                    }
                MultiPoly rhs = detail::dual_cauchy_kernel(n, D, v);
                VerifyCell cell{"n=" + std::to_string(n) + " core=(" + delta.str() + ")",
                                lhs == rhs, ""};
                if (!cell.pass) cell.detail = "truncated dual kernel mismatch";
                rep.cells.push_back(std::move(cell));
            }
    });
}

// omega_n maps G of a skew shape to G of the conjugate shape, and is an involution
inline VerifyReport verify_omega(const VerifyGrid& g) {
    return detail::run_report("omega", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& lam : detail::grid_partitions(g)) {
                VerifyCell cell{"n=" + std::to_string(n) + " lambda=" + lam.str(), true, ""};
                for (auto& mu : detail::sub_partitions(lam)) {
                    SkewShape shape(lam, mu);
                    SymFunc gs = G(shape, n);
                    SymFunc w = omega_n(gs, n);
                    if (!same_element(w, G(shape.conjugate(), n))) {
                        cell.pass = false;
                        cell.detail = "shape " + shape.str() + ": omega image differs";
                        break;
                    }
                    if (!same_element(omega_n(w, n), gs)) {
                        cell.pass = false;
                        cell.detail = "shape " + shape.str() + ": omega is not an involution";
                        break;
                    }
                }
                rep.cells.push_back(std::move(cell));
            }
        // q^{2(n-1)k} omega_n(upsilon(f)) = upsilon(omega_n(f)) for deg(f) = k
        for (int n : g.ns)
            for (auto& lam : partitions_of_size_at_most(g.degree + 1)) {
                int k = lam.size();
                SymFunc f = SymFunc::s(lam);
                SymFunc lhs = LaurentPoly::q(2 * (n - 1) * k) * omega_n(upsilon(f, n), n);
                SymFunc rhs = upsilon(omega_n(f, n), n);
                detail::push_sym_cell(
                    rep, "wncommute n=" + std::to_string(n) + " lambda=" + lam.str(), lhs, rhs);
            }
    });
}

// [B_k, B_{-l}] = delta_{kl} k (1 + q^{-2k} + ... + q^{-2k(n-1)}) Id
inline VerifyReport verify_heisenberg(const VerifyGrid& g) {
    return detail::run_report("heisenberg", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (int k : detail::grid_ks(g))
                for (int l = 1; l <= g.kmax; ++l) {
                    VerifyCell cell{"n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                        " l=" + std::to_string(l),
                                    true, ""};
                    for (auto& lam : detail::grid_partitions(g)) {
                        FockVector v = FockVector::basis(n, lam);
                        FockVector lhs = apply_B(apply_B(v, -l), k) - apply_B(apply_B(v, k), -l);
                        FockVector rhs(n);
                        if (k == l) rhs = LaurentPoly(k) * bar_q(geometric_sum(n, k)) * v;
                        if (!(lhs == rhs)) {
                            cell.pass = false;
                            cell.detail = "lambda=" + lam.str() + ": [B_k,B_-l] = " + lhs.str();
                            break;
                        }
                    }
                    rep.cells.push_back(std::move(cell));
                }
    });
}

// Newton identity between operators: k V_k = sum_{i=1}^k V_{k-i} B_{-i}
inline VerifyReport verify_mn_pieri_equiv(const VerifyGrid& g) {
    return detail::run_report("mn-pieri-equiv", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (int k : detail::grid_ks(g)) {
                VerifyCell cell{"n=" + std::to_string(n) + " k=" + std::to_string(k), true, ""};
                for (auto& lam : detail::grid_partitions(g)) {
                    FockVector v = FockVector::basis(n, lam);
                    FockVector rhs(n);
                    for (int i = 1; i <= k; ++i) {
                        FockVector w = apply_B(v, -i);
                        if (k - i > 0) w = apply_V(w, k - i);
                        rhs += w;
                    }
                    if (!(LaurentPoly(k) * apply_V(v, k) == rhs)) {
                        cell.pass = false;
                        cell.detail = "lambda=" + lam.str();
                        break;
                    }
                }
                rep.cells.push_back(std::move(cell));
            }
    });
}

// upsilon(s_lam) G_mu = sum_nu c^lam_{nu/mu}(q) G_nu
inline VerifyReport verify_littlewood_richardson(const VerifyGrid& g) {
    return detail::run_report("littlewood-richardson", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& mu : detail::grid_partitions(g))
                for (auto& lam : partitions_of_size_at_most(g.lammax)) {
                    if (lam.empty()) continue;
                    SymFunc lhs = multiply(upsilon(SymFunc::s(lam), n), G_of(mu, n));
                    SymFunc rhs(Basis::monomial);
                    for (auto& nu : partitions_containing(mu.size() + n * lam.size(), mu)) {
                        auto coeffs = q_lr(SkewShape(nu, mu), n);
                        auto it = coeffs.find(lam);
                        if (it != coeffs.end()) rhs += it->second * G_of(nu, n);
                    }
                    detail::push_sym_cell(rep,
                                          "n=" + std::to_string(n) + " mu=" + mu.str() +
                                              " lambda=" + lam.str(),
                                          lhs, rhs);
                }
    });
}

// G_mu(X) * kernel = sum_lam G_lam(X) G_{lam/mu}(Y) over the core class of mu
inline VerifyReport verify_skew_cauchy(const VerifyGrid& g) {
    return detail::run_report("skew-cauchy", [&](VerifyReport& rep) {
        int D = g.degree, v = g.vars;
        for (int n : g.ns)
            for (auto& mu : detail::grid_partitions(g)) {
                Partition delta = n_core(mu, n);
                MultiPoly lhs = expand(G_of(mu, n), v, 0, 2 * v) * detail::cauchy_kernel(n, D, v);
                MultiPoly rhs;
                for (int d = 0; d <= D; ++d)
                    for (auto& lam : partitions_containing(mu.size() + n * d, mu)) {
                        if (n_core(lam, n) != delta) continue;
                        rhs += expand(G(SkewShape(lam, delta), n), v, 0, 2 * v) *
                               expand(G(SkewShape(lam, mu), n), v, v, 2 * v);
                    }
                VerifyCell cell{"n=" + std::to_string(n) + " mu=" + mu.str(), lhs == rhs, ""};
                if (!cell.pass) cell.detail = "truncated skew kernel mismatch";
                rep.cells.push_back(std::move(cell));
            }
    });
}

// sum over standard-weight tableaux of q^{mspin(shape)+spin} equals
// sum_{|mu|=k} s_mu(1, q^2, ..., q^{2(n-1)}) f^mu
inline VerifyReport verify_mspin_identity(const VerifyGrid& g) {
    return detail::run_report("mspin-identity", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (int k : detail::grid_ks(g)) {
                Composition ones(k, 1);
                LaurentPoly lhs;
                for (auto& lam : partitions_of(n * k)) {
                    if (lam.length() > n || !n_core(lam, n).empty()) continue;
                    SkewShape shape(lam, Partition());
                    auto ms = mspin(shape, n);
                    if (!ms) continue;
                    for (auto& t : enumerate_tableaux(shape, n, k))
                        if (t.weight == ones) lhs += LaurentPoly::q(*ms + t.spin);
                }
                LaurentPoly rhs;
                std::vector<LaurentPoly> values;
                for (int i = 0; i < n; ++i) values.push_back(LaurentPoly::q(2 * i));
                for (auto& mu : partitions_of(k)) {
                    int f = 0;
                    for (auto& t : enumerate_tableaux(SkewShape(mu, Partition()), 1, k))
                        if (t.weight == ones) f++;
                    rhs += specialize(SymFunc::s(mu), values) * LaurentPoly(f);
                }
                VerifyCell cell{"n=" + std::to_string(n) + " k=" + std::to_string(k),
                                lhs == rhs, ""};
                if (!cell.pass) cell.detail = detail::poly_pair(lhs, rhs);
                rep.cells.push_back(std::move(cell));
            }
    });
}

// both expansions of s_lam[(1 + q^2 + ... + q^{2n-2})X] over a fixed core class
inline VerifyReport verify_phican(const VerifyGrid& g) {
    return detail::run_report("phican", [&](VerifyReport& rep) {
        for (int n : g.ns)
            for (auto& delta : g.cores) {
                if (n_core(delta, n) != delta) continue;
                for (auto& lam : partitions_of_size_at_most(g.lammax)) {
                    if (lam.empty()) continue;
                    std::string params = "n=" + std::to_string(n) + " core=(" + delta.str() +
                                         ") lambda=" + lam.str();
                    SymFunc target = upsilon(SymFunc::s(lam), n);
                    SymFunc first(Basis::monomial);
                    SymFunc second(Basis::schur);
                    for (auto& mu : detail::core_class(delta, n, lam.size())) {
                        auto coeffs = q_lr(SkewShape(mu, delta), n);
                        auto it = coeffs.find(lam);
                        if (it == coeffs.end()) continue;
                        first += it->second * G(SkewShape(mu, delta), n);
                        for (auto& [nu, c] : coeffs)
                            second.add_term(nu, it->second * c);
                    }
                    detail::push_sym_cell(rep, params + " form=ribbon", first, target);
                    detail::push_sym_cell(rep, params + " form=schur", second, target);
                }
            }
    });
}

using VerifyFn = std::function<VerifyReport(const VerifyGrid&)>;

inline const std::map<std::string, VerifyFn>& verify_registry() {
    static const std::map<std::string, VerifyFn> reg{
        {"symmetry", verify_symmetry},
        {"pieri", verify_pieri},
        {"dual-pieri", verify_dual_pieri},
        {"lowering-pieri", verify_lowering_pieri},
        {"mn", verify_mn},
        {"lowering-mn", verify_lowering_mn},
        {"cauchy", verify_cauchy},
        {"dual-cauchy", verify_dual_cauchy},
        {"omega", verify_omega},
        {"heisenberg", verify_heisenberg},
        {"mn-pieri-equiv", verify_mn_pieri_equiv},
        {"littlewood-richardson", verify_littlewood_richardson},
        {"skew-cauchy", verify_skew_cauchy},
        {"mspin-identity", verify_mspin_identity},
        {"phican", verify_phican},
    };
    return reg;
}

}  // namespace ribbon
