// Partition and skew-shape combinatorics: conjugation, n-cores and
// n-quotients via beta numbers, ribbon strips with spin, border ribbon
// strips, mspin.
#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ribbon {

using Cell = std::pair<int, int>;  // (row, col), 1-indexed

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("negative part");
    }

    static Partition parse(const std::string& s) {
        std::vector<int> parts;
        std::string t = s;
        if (t == "()" || t == "-") t.clear();
        std::stringstream ss(t);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            parts.push_back(std::stoi(item));
        }
        return Partition(parts);
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return (int)parts_.size(); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    int part(int i) const {  // 1-indexed row length, 0 beyond
        return (i >= 1 && i <= (int)parts_.size()) ? parts_[i - 1] : 0;
    }
    bool empty() const { return parts_.empty(); }
    bool has_cell(int r, int c) const { return r >= 1 && c >= 1 && c <= part(r); }

    bool contains(const Partition& o) const {
        for (int i = 1; i <= o.length(); ++i)
            if (part(i) < o.part(i)) return false;
        return true;
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (parts_.empty()) return Partition();
        c.resize(parts_[0], 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) c[j]++;
        return Partition(c);
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> cs;
        for (int r = 1; r <= length(); ++r)
            for (int c = 1; c <= part(r); ++c) cs.push_back({r, c});
        return cs;
    }

    std::string str() const {
        std::ostringstream os;
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) os << ",";
            os << parts_[i];
        }
        return os.str();
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<int> parts_;  // weakly decreasing, positive
};

struct SkewShape {
    Partition outer, inner;
    SkewShape() = default;
    SkewShape(Partition o, Partition i) : outer(std::move(o)), inner(std::move(i)) {
        if (!outer.contains(inner)) throw std::invalid_argument("inner not contained in outer");
    }
    static SkewShape parse(const std::string& s) {
        auto slash = s.find('/');
        if (slash == std::string::npos) return SkewShape(Partition::parse(s), Partition());
        return SkewShape(Partition::parse(s.substr(0, slash)), Partition::parse(s.substr(slash + 1)));
    }
    int size() const { return outer.size() - inner.size(); }
    bool has_cell(int r, int c) const { return outer.has_cell(r, c) && !inner.has_cell(r, c); }
    std::vector<Cell> cells() const {
        std::vector<Cell> cs;
        for (int r = 1; r <= outer.length(); ++r)
            for (int c = inner.part(r) + 1; c <= outer.part(r); ++c) cs.push_back({r, c});
        return cs;
    }
    SkewShape conjugate() const { return SkewShape(outer.conjugate(), inner.conjugate()); }
    std::string str() const {
        if (inner.empty()) return outer.str();
        return outer.str() + "/" + inner.str();
    }
    friend bool operator==(const SkewShape& a, const SkewShape& b) {
        return a.outer == b.outer && a.inner == b.inner;
    }
    friend bool operator<(const SkewShape& a, const SkewShape& b) {
        if (a.outer != b.outer) return a.outer < b.outer;
        return a.inner < b.inner;
    }
};

// --- beta numbers ---------------------------------------------------------

namespace detail {

inline std::vector<int> beta_numbers(const Partition& lam, int len) {
    // len >= lam.length(); strictly decreasing
    std::vector<int> b;
    for (int i = 1; i <= len; ++i) b.push_back(lam.part(i) + len - i);
    return b;
}

inline Partition from_beta(std::vector<int> b) {
    std::sort(b.begin(), b.end(), std::greater<int>());
    int len = (int)b.size();
    std::vector<int> parts;
    for (int i = 1; i <= len; ++i) parts.push_back(b[i - 1] - (len - i));
    return Partition(parts);
}

}  // namespace detail

// A ribbon placed in the plane.
struct Ribbon {
    std::vector<Cell> cells;  // sorted
    int spin = 0;             // rows - 1
    Cell head{0, 0};          // top-right-most cell (min row = max col)
};

namespace detail {

inline Ribbon make_ribbon(const std::vector<Cell>& cs) {
    Ribbon r;
    r.cells = cs;
    std::sort(r.cells.begin(), r.cells.end());
    std::set<int> rows;
    for (auto& c : r.cells) rows.insert(c.first);
    r.spin = (int)rows.size() - 1;
    r.head = r.cells[0];
    for (auto& c : r.cells)
        if (c.second > r.head.second) r.head = c;
    return r;
}

inline std::vector<Cell> diagram_diff(const Partition& big, const Partition& small) {
    std::vector<Cell> cs;
    for (int r = 1; r <= big.length(); ++r)
        for (int c = small.part(r) + 1; c <= big.part(r); ++c) cs.push_back({r, c});
    return cs;
}

}  // namespace detail

// All mu = lambda + one n-ribbon, with the ribbon's height (= rows-1 = spin).
inline std::vector<std::pair<Partition, int>> add_ribbons(const Partition& lam, int n) {
    int len = lam.length() + n;
    auto beta = detail::beta_numbers(lam, len);
    std::set<int> bs(beta.begin(), beta.end());
    std::vector<std::pair<Partition, int>> out;
    for (int b : beta) {
        if (bs.count(b + n)) continue;
        int h = 0;
        for (int x = b + 1; x < b + n; ++x)
            if (bs.count(x)) ++h;
        auto nb = beta;
        for (int& x : nb)
            if (x == b) x = b + n;
        out.push_back({detail::from_beta(nb), h});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<Partition, int>> remove_ribbons(const Partition& lam, int n) {
    int len = std::max(lam.length(), 1);
    auto beta = detail::beta_numbers(lam, len);
    std::set<int> bs(beta.begin(), beta.end());
    std::vector<std::pair<Partition, int>> out;
    for (int b : beta) {
        if (b < n || bs.count(b - n)) continue;
        int h = 0;
        for (int x = b - n + 1; x < b; ++x)
            if (bs.count(x)) ++h;
        auto nb = beta;
        for (int& x : nb)
            if (x == b) x = b - n;
        out.push_back({detail::from_beta(nb), h});
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline Partition n_core(const Partition& lam, int n) {
    Partition cur = lam;
    for (;;) {
        auto rem = remove_ribbons(cur, n);
        if (rem.empty()) return cur;
        cur = rem[0].first;
    }
}

inline std::vector<Partition> n_quotient(const Partition& lam, int n) {
    int len = lam.length();
    len += (n - len % n) % n;
    if (len == 0) len = n;
    auto beta = detail::beta_numbers(lam, len);
    std::vector<std::vector<int>> cls(n);
    for (int b : beta) cls[b % n].push_back(b / n);
    std::vector<Partition> quot;
    for (int r = 0; r < n; ++r) quot.push_back(detail::from_beta(cls[r]));
    return quot;
}

// --- partition generation --------------------------------------------------

inline const std::vector<Partition>& partitions_of(int m) {
    static std::map<int, std::vector<Partition>> cache;
    static std::mutex mx;
    std::lock_guard<std::mutex> lk(mx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    std::vector<Partition> out;
    if (m >= 0) {
        std::vector<int> cur;
        auto rec = [&](auto&& self, int rem, int maxp) -> void {
            if (rem == 0) {
                out.push_back(Partition(cur));
                return;
            }
            for (int p = std::min(rem, maxp); p >= 1; --p) {
                cur.push_back(p);
                self(self, rem - p, p);
                cur.pop_back();
            }
        };
        rec(rec, m, m == 0 ? 1 : m);
    }
    return cache.emplace(m, std::move(out)).first->second;
}

inline std::vector<Partition> partitions_of_size_at_most(int m) {
    std::vector<Partition> out;
    for (int s = 0; s <= m; ++s)
        for (auto& p : partitions_of(s)) out.push_back(p);
    return out;
}

inline std::vector<Partition> partitions_containing(int m, const Partition& inner) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(m))
        if (p.contains(inner)) out.push_back(p);
    return out;
}

// --- horizontal ribbon strips ----------------------------------------------

struct StripTiling {
    std::vector<Ribbon> ribbons;
    int spin = 0;
};

namespace detail {

struct StripKey {
    Partition outer, inner;
    int n;
    bool operator<(const StripKey& o) const {
        if (outer != o.outer) return outer < o.outer;
        if (inner != o.inner) return inner < o.inner;
        return n < o.n;
    }
};

// head of a removable ribbon must have no shape-cell (of the skew region)
// directly above it
inline bool head_on_northern_edge(const Cell& head, const Partition& outer, const Partition& inner) {
    int r = head.first - 1, c = head.second;
    if (r < 1) return true;
    return !(outer.has_cell(r, c) && !inner.has_cell(r, c));
}

inline bool find_strip_tiling(const Partition& cur, const Partition& inner,
                              const Partition& outer, int n,
                              std::vector<Ribbon>& acc, std::set<Partition>& dead) {
    if (cur == inner) return true;
    if (dead.count(cur)) return false;
    for (auto& [mu, h] : remove_ribbons(cur, n)) {
        if (!mu.contains(inner)) continue;
        Ribbon rib = make_ribbon(diagram_diff(cur, mu));
        if (!head_on_northern_edge(rib.head, outer, inner)) continue;
        acc.push_back(rib);
        if (find_strip_tiling(mu, inner, outer, n, acc, dead)) return true;
        acc.pop_back();
    }
    dead.insert(cur);
    return false;
}

}  // namespace detail

// The unique horizontal-n-ribbon-strip tiling of outer/inner, if one exists.
inline std::optional<StripTiling> horizontal_strip_tiling(const Partition& outer,
                                                          const Partition& inner, int n) {
    static std::map<detail::StripKey, std::optional<StripTiling>> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = cache.find({outer, inner, n});
        if (it != cache.end()) return it->second;
    }
    std::optional<StripTiling> result;
    if (outer.contains(inner) && (outer.size() - inner.size()) % n == 0) {
        std::vector<Ribbon> acc;
        std::set<Partition> dead;
        if (detail::find_strip_tiling(outer, inner, outer, n, acc, dead)) {
            StripTiling t;
            t.ribbons = acc;
            for (auto& r : acc) t.spin += r.spin;
            result = t;
        }
    }
    std::lock_guard<std::mutex> lk(mx);
    return cache.emplace(detail::StripKey{outer, inner, n}, result).first->second;
}

inline std::optional<int> horizontal_strip_spin(const SkewShape& s, int n) {
    auto t = horizontal_strip_tiling(s.outer, s.inner, n);
    if (!t) return std::nullopt;
    return t->spin;
}

inline std::optional<int> vertical_strip_spin(const SkewShape& s, int n) {
    auto t = horizontal_strip_spin(s.conjugate(), n);
    if (!t) return std::nullopt;
    return (n - 1) * (s.size() / n) - *t;
}

// All lambda with lambda/mu a horizontal n-ribbon strip of exactly k ribbons.
inline std::vector<std::pair<Partition, int>> add_horizontal_strips(const Partition& mu, int n, int k) {
    static std::map<std::tuple<Partition, int, int>, std::vector<std::pair<Partition, int>>> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = cache.find({mu, n, k});
        if (it != cache.end()) return it->second;
    }
    std::vector<std::pair<Partition, int>> out;
    if (k == 0) {
        out.push_back({mu, 0});
    } else if (k > 0) {
        for (auto& lam : partitions_containing(mu.size() + n * k, mu)) {
            auto s = horizontal_strip_spin(SkewShape(lam, mu), n);
            if (s) out.push_back({lam, *s});
        }
    }
    std::lock_guard<std::mutex> lk(mx);
    return cache.emplace(std::make_tuple(mu, n, k), std::move(out)).first->second;
}

inline std::vector<std::pair<Partition, int>> remove_horizontal_strips(const Partition& lam, int n, int k) {
    std::vector<std::pair<Partition, int>> out;
    if (k == 0) {
        out.push_back({lam, 0});
        return out;
    }
    int m = lam.size() - n * k;
    if (m < 0) return out;
    for (auto& mu : partitions_of(m)) {
        if (!lam.contains(mu)) continue;
        auto s = horizontal_strip_spin(SkewShape(lam, mu), n);
        if (s) out.push_back({mu, *s});
    }
    return out;
}

inline std::vector<std::pair<Partition, int>> add_vertical_strips(const Partition& mu, int n, int k) {
    std::vector<std::pair<Partition, int>> out;
    for (auto& [lamc, s] : add_horizontal_strips(mu.conjugate(), n, k))
        out.push_back({lamc.conjugate(), (n - 1) * k - s});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::pair<Partition, int>> remove_vertical_strips(const Partition& lam, int n, int k) {
    std::vector<std::pair<Partition, int>> out;
    for (auto& [muc, s] : remove_horizontal_strips(lam.conjugate(), n, k))
        out.push_back({muc.conjugate(), (n - 1) * k - s});
    std::sort(out.begin(), out.end());
    return out;
}

// --- border ribbon strips ---------------------------------------------------

// One layer of a border ribbon strip: a horizontal strip with its tiling.
struct Layer {
    std::vector<Ribbon> ribbons;
    std::set<Cell> cells;
    int components = 0;
    int spin = 0;
};

struct BorderRibbonStrip {
    Partition outer;
    int height = 0;
    int spin = 0;
    std::vector<Layer> layers;
};

namespace detail {

inline bool cells_adjacent(const Cell& a, const Cell& b) {
    return (a.first == b.first && std::abs(a.second - b.second) == 1) ||
           (a.second == b.second && std::abs(a.first - b.first) == 1);
}

inline bool connected_cells(const std::vector<Cell>& cs) {
    if (cs.empty()) return true;
    std::set<Cell> rest(cs.begin() + 1, cs.end());
    std::vector<Cell> frontier{cs[0]};
    while (!frontier.empty()) {
        Cell c = frontier.back();
        frontier.pop_back();
        for (auto it = rest.begin(); it != rest.end();) {
            if (cells_adjacent(c, *it)) {
                frontier.push_back(*it);
                it = rest.erase(it);
            } else {
                ++it;
            }
        }
    }
    return rest.empty();
}

// "touches": the union of the two tilings fails the northern-edge condition,
// i.e. some ribbon head in one has a cell of the other directly above it.
inline bool tilings_touch(const std::vector<Ribbon>& a, const std::set<Cell>& acells,
                          const std::vector<Ribbon>& b, const std::set<Cell>& bcells) {
    for (auto& r : a)
        if (bcells.count({r.head.first - 1, r.head.second})) return true;
    for (auto& r : b)
        if (acells.count({r.head.first - 1, r.head.second})) return true;
    return false;
}

// Is nu plus this cell set a partition?
inline std::optional<Partition> union_partition(const Partition& nu, const std::set<Cell>& cells) {
    std::map<int, std::vector<int>> byrow;
    for (auto& c : cells) {
        if (nu.has_cell(c.first, c.second)) return std::nullopt;
        byrow[c.first].push_back(c.second);
    }
    int maxrow = nu.length();
    if (!byrow.empty()) maxrow = std::max(maxrow, byrow.rbegin()->first);
    std::vector<int> parts;
    for (int r = 1; r <= maxrow; ++r) {
        int len = nu.part(r);
        auto it = byrow.find(r);
        if (it != byrow.end()) {
            std::sort(it->second.begin(), it->second.end());
            for (int c : it->second) {
                if (c != len + 1) return std::nullopt;
                ++len;
            }
        }
        parts.push_back(len);
    }
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i] > parts[i - 1]) return std::nullopt;
    return Partition(parts);
}

}  // namespace detail

// Connected components C addable on top of nu as layer i (i >= 2), given the
// previous layer: C is a connected horizontal strip, C touches prev, and no
// proper addable sub-strip of C touches prev.
inline std::vector<Layer> addable_components(const Partition& nu, const Layer& prev, int n, int maxribbons) {
    std::vector<Layer> out;
    for (int j = 1; j <= maxribbons; ++j) {
        for (auto& [rho, spin] : add_horizontal_strips(nu, n, j)) {
            auto tiling = horizontal_strip_tiling(rho, nu, n);
            std::vector<Cell> all;
            for (auto& r : tiling->ribbons)
                for (auto& c : r.cells) all.push_back(c);
            if (!detail::connected_cells(all)) continue;
            Layer comp;
            comp.ribbons = tiling->ribbons;
            comp.cells = std::set<Cell>(all.begin(), all.end());
            comp.components = 1;
            comp.spin = spin;
            if (!detail::tilings_touch(comp.ribbons, comp.cells, prev.ribbons, prev.cells)) continue;
            // condition (2): no proper addable sub-strip already touches
            int m = (int)comp.ribbons.size();
            bool bad = false;
            for (int mask = 1; mask < (1 << m) - 1 && !bad; ++mask) {
                std::vector<Ribbon> sub;
                std::set<Cell> subcells;
                for (int t = 0; t < m; ++t)
                    if (mask & (1 << t)) {
                        sub.push_back(comp.ribbons[t]);
                        for (auto& c : comp.ribbons[t].cells) subcells.insert(c);
                    }
                if (!detail::union_partition(nu, subcells)) continue;
                if (detail::tilings_touch(sub, subcells, prev.ribbons, prev.cells)) bad = true;
            }
            if (bad) continue;
            out.push_back(std::move(comp));
        }
    }
    return out;
}

namespace detail {

inline void border_strip_rec(const Partition& nu, const Layer& prev, int n, int remaining,
                             int height_acc, int spin_acc, std::vector<Layer>& layers,
                             std::vector<BorderRibbonStrip>& out) {
    if (remaining == 0) {
        BorderRibbonStrip b;
        b.outer = nu;
        b.height = height_acc;
        b.spin = spin_acc;
        b.layers = layers;
        out.push_back(std::move(b));
        return;
    }
    auto comps = addable_components(nu, prev, n, remaining);
    int m = (int)comps.size();
    // choose a nonempty compatible subset of components as the next layer
    for (int mask = 1; mask < (1 << m); ++mask) {
        std::vector<int> idx;
        int ribbons = 0;
        for (int t = 0; t < m; ++t)
            if (mask & (1 << t)) {
                idx.push_back(t);
                ribbons += (int)comps[t].ribbons.size();
            }
        if (ribbons > remaining) continue;
        // pairwise disjoint and non-adjacent (stay distinct components)
        bool ok = true;
        std::set<Cell> allcells;
        for (int t : idx)
            for (auto& c : comps[t].cells) {
                if (!allcells.insert(c).second) ok = false;
            }
        if (!ok) continue;
        for (size_t a = 0; a < idx.size() && ok; ++a)
            for (size_t b = a + 1; b < idx.size() && ok; ++b)
                for (auto& ca : comps[idx[a]].cells) {
                    for (auto& cb : comps[idx[b]].cells)
                        if (cells_adjacent(ca, cb)) { ok = false; break; }
                    if (!ok) break;
                }
        if (!ok) continue;
        auto up = union_partition(nu, allcells);
        if (!up) continue;
        Layer layer;
        layer.cells = allcells;
        layer.components = (int)idx.size();
        for (int t : idx) {
            for (auto& r : comps[t].ribbons) layer.ribbons.push_back(r);
            layer.spin += comps[t].spin;
        }
        layers.push_back(layer);
        border_strip_rec(*up, layer, n, remaining - ribbons,
                         height_acc + layer.components, spin_acc + layer.spin, layers, out);
        layers.pop_back();
    }
}

}  // namespace detail

// Every border ribbon strip of size k on top of lam; one entry per
// distinguished tiling. height = (sum of component counts) - 1.
inline std::vector<BorderRibbonStrip> enumerate_border_ribbon_strips(const Partition& lam, int n, int k) {
    static std::map<std::tuple<Partition, int, int>, std::vector<BorderRibbonStrip>> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = cache.find({lam, n, k});
        if (it != cache.end()) return it->second;
    }
    std::vector<BorderRibbonStrip> out;
    // first layer: connected horizontal strip
    for (int j = 1; j <= k; ++j) {
        for (auto& [rho, spin] : add_horizontal_strips(lam, n, j)) {
            auto tiling = horizontal_strip_tiling(rho, lam, n);
            std::vector<Cell> all;
            for (auto& r : tiling->ribbons)
                for (auto& c : r.cells) all.push_back(c);
            if (!detail::connected_cells(all)) continue;
            Layer first;
            first.ribbons = tiling->ribbons;
            first.cells = std::set<Cell>(all.begin(), all.end());
            first.components = 1;
            first.spin = spin;
            std::vector<Layer> layers{first};
            detail::border_strip_rec(rho, first, n, k - j, 0, spin, layers, out);
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const BorderRibbonStrip& a, const BorderRibbonStrip& b) {
                         return a.outer < b.outer;
                     });
    std::lock_guard<std::mutex> lk(mx);
    return cache.emplace(std::make_tuple(lam, n, k), std::move(out)).first->second;
}

// Border ribbon strips of shape outer/inner only (all sizes fixed by shape).
inline std::vector<BorderRibbonStrip> border_ribbon_strips_between(const Partition& outer,
                                                                   const Partition& inner, int n) {
    std::vector<BorderRibbonStrip> out;
    int d = outer.size() - inner.size();
    if (d <= 0 || d % n != 0) return out;
    for (auto& b : enumerate_border_ribbon_strips(inner, n, d / n))
        if (b.outer == outer) out.push_back(b);
    return out;
}

// --- mspin -------------------------------------------------------------

namespace detail {

inline std::optional<int> mspin_rec(const Partition& cur, const Partition& outer, int n,
                                    std::map<Partition, std::optional<int>>& memo) {
    if (cur == outer) return 0;
    auto it = memo.find(cur);
    if (it != memo.end()) return it->second;
    std::optional<int> best;
    for (auto& [rho, h] : add_ribbons(cur, n)) {
        if (!outer.contains(rho)) continue;
        auto rest = mspin_rec(rho, outer, n, memo);
        if (rest && (!best || h + *rest > *best)) best = h + *rest;
    }
    memo[cur] = best;
    return best;
}

}  // namespace detail

// Maximum spin over all n-ribbon tilings (equivalently, ribbon tableaux) of s.
inline std::optional<int> mspin(const SkewShape& s, int n) {
    static std::map<std::pair<SkewShape, int>, std::optional<int>> cache;
    static std::mutex mx;
    {
        std::lock_guard<std::mutex> lk(mx);
        auto it = cache.find({s, n});
        if (it != cache.end()) return it->second;
    }
    std::optional<int> result;
    if (s.size() % n == 0) {
        std::map<Partition, std::optional<int>> memo;
        result = detail::mspin_rec(s.inner, s.outer, n, memo);
    }
    std::lock_guard<std::mutex> lk(mx);
    return cache.emplace(std::make_pair(s, n), result).first->second;
}

}  // namespace ribbon
