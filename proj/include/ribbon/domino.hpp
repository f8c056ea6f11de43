// n=2 combinatorics: semistandard domino tableaux, Garfinkle insertion with
// the Shimozono-White semistandard extension, colored-biword RSK and its
// inverse, and the increasing-insertion predicate.
#pragma once

#include <climits>

#include "ribbon/partition.hpp"

namespace ribbon {

struct Domino {
    int label = 0;
    Cell a, b;  // a < b: vertical has a above b, horizontal has a left of b

    bool vertical() const { return a.second == b.second; }
    int min_col() const { return a.second; }
    int max_col() const { return b.second; }
    friend bool operator==(const Domino& x, const Domino& y) {
        return x.label == y.label && x.a == y.a && x.b == y.b;
    }
    friend bool operator<(const Domino& x, const Domino& y) {
        return std::tie(x.label, x.a, x.b) < std::tie(y.label, y.a, y.b);
    }
};

inline Domino make_domino(int label, Cell a, Cell b) {
    if (b < a) std::swap(a, b);
    bool vert = a.second == b.second && b.first == a.first + 1;
    bool horiz = a.first == b.first && b.second == a.second + 1;
    if (!vert && !horiz) throw std::invalid_argument("cells do not form a domino");
    return Domino{label, a, b};
}

namespace detail {

// growing shape tracked as row lengths; cells must extend rows on the right
struct ShapeAcc {
    std::vector<int> rows;

    explicit ShapeAcc(const Partition& p) : rows(p.parts()) {}

    int row_len(int r) const { return r >= 1 && r <= (int)rows.size() ? rows[r - 1] : 0; }
    int col_len(int c) const {
        int len = 0;
        while (row_len(len + 1) >= c) len++;
        return len;
    }
    bool in(const Cell& cell) const { return cell.second <= row_len(cell.first); }

    void add_cell(const Cell& cell) {
        auto [r, c] = cell;
        if ((int)rows.size() < r) rows.resize(r, 0);
        if (rows[r - 1] + 1 != c || (r > 1 && rows[r - 2] < c))
            throw std::runtime_error("cell does not extend the shape");
        rows[r - 1] = c;
    }
    void add(const Domino& d) {
        add_cell(d.a);
        add_cell(d.b);
    }
    Partition partition() const { return Partition(rows); }
};

// insertion order on dominoes: verticals first with larger labels smaller,
// then horizontals by label
inline std::pair<int, int> domino_rank(int c, int j) { return {c == 1 ? 0 : 1, c == 1 ? -j : j}; }

// shape spanned by core plus cells, or nullopt if they do not stack properly
inline std::optional<Partition> cells_to_shape(const Partition& core, std::vector<Cell> cells) {
    std::sort(cells.begin(), cells.end());
    std::vector<int> rows = core.parts();
    for (auto& [r, c] : cells) {
        if ((int)rows.size() < r) rows.resize(r, 0);
        rows[r - 1]++;
        if (rows[r - 1] != c) return std::nullopt;
    }
    for (size_t t = 1; t < rows.size(); ++t)
        if (rows[t] > rows[t - 1]) return std::nullopt;
    while (!rows.empty() && rows.back() == 0) rows.pop_back();
    return Partition(rows);
}

}  // namespace detail

struct DominoTableau {
    Partition core;  // 2-core
    std::vector<Domino> dominoes;  // sorted by (label, column)

    DominoTableau() = default;
    explicit DominoTableau(Partition core_) : core(std::move(core_)) {}

    void normalize() {
        std::sort(dominoes.begin(), dominoes.end(), [](const Domino& x, const Domino& y) {
            return std::tie(x.label, x.a.second, x.a.first) <
                   std::tie(y.label, y.a.second, y.a.first);
        });
    }

    Partition shape() const {
        std::vector<Cell> cells;
        for (auto& d : dominoes) {
            cells.push_back(d.a);
            cells.push_back(d.b);
        }
        auto p = detail::cells_to_shape(core, cells);
        if (!p) throw std::runtime_error("dominoes do not tile a shape");
        return *p;
    }

    int spin() const {
        int s = 0;
        for (auto& d : dominoes)
            if (d.vertical()) s++;
        return s;
    }

    std::vector<int> weight() const {
        std::vector<int> w;
        for (auto& d : dominoes) {
            if ((int)w.size() < d.label) w.resize(d.label, 0);
            w[d.label - 1]++;
        }
        return w;
    }

    // every label's sub-shape difference must be a horizontal 2-ribbon strip
    bool semistandard() const {
        std::map<int, std::vector<Cell>> bylabel;
        for (auto& d : dominoes) {
            bylabel[d.label].push_back(d.a);
            bylabel[d.label].push_back(d.b);
        }
        Partition prev = core;
        std::vector<Cell> sofar;
        for (auto& [label, cells] : bylabel) {
            for (auto& c : cells) sofar.push_back(c);
            auto cur = detail::cells_to_shape(core, sofar);
            if (!cur || !cur->contains(prev)) return false;
            if (!horizontal_strip_spin(SkewShape(*cur, prev), 2).has_value()) return false;
            prev = *cur;
        }
        return true;
    }

    friend bool operator==(const DominoTableau& x, const DominoTableau& y) {
        return x.core == y.core && x.dominoes == y.dominoes;
    }
};

// Garfinkle insertion of a horizontal (c=0) or vertical (c=1) domino labelled
// j, with the Shimozono-White relabeling for repeated labels
inline DominoTableau insert(const DominoTableau& T, int c, int j) {
    if (c != 0 && c != 1) throw std::invalid_argument("color must be 0 or 1");
    if (j < 1) throw std::invalid_argument("label must be positive");
    std::vector<Domino> order = T.dominoes;  // already (label, column) sorted
    std::sort(order.begin(), order.end(), [](const Domino& x, const Domino& y) {
        return std::tie(x.label, x.a.second, x.a.first) < std::tie(y.label, y.a.second, y.a.first);
    });
    // the new label sits after all existing j's when c=0, before them when c=1
    size_t pos = 0;
    while (pos < order.size() &&
           (order[pos].label < j || (order[pos].label == j && c == 0)))
        pos++;

    detail::ShapeAcc acc(T.core);
    DominoTableau out(T.core);
    for (size_t t = 0; t < pos; ++t) {
        acc.add(order[t]);
        out.dominoes.push_back(order[t]);
    }
    Domino cur;
    if (c == 0) {
        int m = acc.row_len(1);
        cur = make_domino(j, {1, m + 1}, {1, m + 2});
    } else {
        int l = acc.col_len(1);
        cur = make_domino(j, {l + 1, 1}, {l + 2, 1});
    }
    acc.add(cur);
    out.dominoes.push_back(cur);

    for (size_t t = pos; t < order.size(); ++t) {
        Domino g = order[t];
        bool ain = acc.in(g.a), bin = acc.in(g.b);
        Domino placed = g;
        if (!ain && !bin) {
            // case 1: untouched
        } else if (ain && bin) {
            if (!g.vertical()) {
                // case 2: horizontal in row k bumps to the end of row k+1
                int k = g.a.first;
                int m = acc.row_len(k + 1);
                placed = make_domino(g.label, {k + 1, m + 1}, {k + 1, m + 2});
            } else {
                // case 3: vertical in column k bumps to the end of column k+1
                int k = g.a.second;
                int l = acc.col_len(k + 1);
                placed = make_domino(g.label, {l + 1, k + 1}, {l + 2, k + 1});
            }
        } else {
            // case 4: exactly the top-left cell (l,m) remains covered
            if (!ain) throw std::logic_error("unexpected overlap pattern");
            auto [l, m] = g.a;
            if (!g.vertical())
                placed = make_domino(g.label, {l, m + 1}, {l + 1, m + 1});
            else
                placed = make_domino(g.label, {l + 1, m}, {l + 1, m + 1});
        }
        acc.add(placed);
        out.dominoes.push_back(placed);
    }
    out.normalize();
    return out;
}

// --- colored biwords and RSK --------------------------------------------------

struct BiLetter {
    int c = 0, i = 1, j = 1;
    friend bool operator==(const BiLetter& x, const BiLetter& y) {
        return x.c == y.c && x.i == y.i && x.j == y.j;
    }
    friend bool operator<(const BiLetter& x, const BiLetter& y) {
        return std::tie(x.c, x.i, x.j) < std::tie(y.c, y.i, y.j);
    }
};

using ColoredBiword = std::vector<BiLetter>;

inline ColoredBiword canonical_order(ColoredBiword w) {
    std::sort(w.begin(), w.end());
    return w;
}

// insertion processing order: by recording letter i, then by domino order
inline ColoredBiword insertion_order(ColoredBiword w) {
    std::sort(w.begin(), w.end(), [](const BiLetter& x, const BiLetter& y) {
        return std::make_pair(x.i, detail::domino_rank(x.c, x.j)) <
               std::make_pair(y.i, detail::domino_rank(y.c, y.j));
    });
    return w;
}

inline std::pair<DominoTableau, DominoTableau> rsk(const ColoredBiword& w,
                                                   const Partition& core = Partition()) {
    DominoTableau P(core), Q(core);
    for (auto& letter : insertion_order(w)) {
        Partition before = P.shape();
        P = insert(P, letter.c, letter.j);
        Partition after = P.shape();
        std::vector<Cell> added;
        for (int r = 1; r <= after.length(); ++r)
            for (int col = before.part(r) + 1; col <= after.part(r); ++col)
                added.push_back({r, col});
        if (added.size() != 2) throw std::logic_error("insertion did not add one domino");
        Q.dominoes.push_back(make_domino(letter.i, added[0], added[1]));
    }
    Q.normalize();
    return {P, Q};
}

// twice the color sum
inline int tc(const ColoredBiword& w) {
    int s = 0;
    for (auto& letter : w) s += 2 * letter.c;
    return s;
}

// --- reverse insertion ---------------------------------------------------------

namespace detail {

// all semistandard domino tableaux of the given shape and weight, each label
// block carrying the distinguished tiling of its strip
inline std::vector<DominoTableau> domino_tableaux(const Partition& core, const Partition& mu,
                                                  const std::vector<int>& w) {
    std::vector<DominoTableau> out;
    std::vector<Domino> acc;
    auto rec = [&](auto&& self, const Partition& cur, size_t i) -> void {
        if (i == w.size()) {
            if (cur == mu) {
                DominoTableau t;
                t.core = core;
                t.dominoes = acc;
                t.normalize();
                out.push_back(t);
            }
            return;
        }
        for (auto& [rho, s] : add_horizontal_strips(cur, 2, w[i])) {
            (void)s;
            if (!mu.contains(rho)) continue;
            auto tiling = horizontal_strip_tiling(rho, cur, 2);
            size_t base = acc.size();
            for (auto& r : tiling->ribbons)
                acc.push_back(make_domino((int)i + 1, r.cells[0], r.cells[1]));
            self(self, rho, i + 1);
            acc.resize(base);
        }
    };
    rec(rec, core, 0);
    return out;
}

}  // namespace detail

// undo the last insertion given the shape of the previous tableau; returns
// that tableau and the inserted letter, found by exhausting candidate
// predecessors and checking them by forward insertion
inline std::optional<std::tuple<DominoTableau, int, int>> reverse_insert(
    const DominoTableau& T, const Partition& prev_shape) {
    std::vector<int> w = T.weight();
    for (int c = 0; c <= 1; ++c)
        for (int j = 1; j <= (int)w.size(); ++j) {
            if (w[j - 1] == 0) continue;
            std::vector<int> wp = w;
            wp[j - 1]--;
            for (auto& cand : detail::domino_tableaux(T.core, prev_shape, wp))
                if (insert(cand, c, j) == T) return std::make_tuple(cand, c, j);
        }
    return std::nullopt;
}

inline ColoredBiword inverse_rsk(const DominoTableau& P, const DominoTableau& Q) {
    if (P.core != Q.core) throw std::invalid_argument("core mismatch");
    if (P.shape() != Q.shape()) throw std::invalid_argument("shape mismatch");
    DominoTableau p = P, q = Q;
    ColoredBiword w;
    while (!q.dominoes.empty()) {
        // undo the last insertion: largest recording label, rightmost domino
        size_t pick = 0;
        for (size_t t = 1; t < q.dominoes.size(); ++t) {
            const Domino &best = q.dominoes[pick], &cand = q.dominoes[t];
            if (std::tie(cand.label, cand.a.second) > std::tie(best.label, best.a.second))
                pick = t;
        }
        Domino d = q.dominoes[pick];
        q.dominoes.erase(q.dominoes.begin() + pick);
        auto res = reverse_insert(p, q.shape());
        if (!res) throw std::invalid_argument("pair is not in the image of insertion");
        auto& [prev, c, j] = *res;
        w.push_back({c, d.label, j});
        p = prev;
    }
    return canonical_order(w);
}

// increasing-insertion predicate: inserting d1 then d2 adds the first shape
// strictly to the left of the second exactly when d1 <= d2 in domino order
inline bool check_increasing_insertion(const DominoTableau& T, std::pair<int, int> d1,
                                       std::pair<int, int> d2) {
    DominoTableau T1 = insert(T, d1.first, d1.second);
    DominoTableau T2 = insert(T1, d2.first, d2.second);
    auto added = [](const Partition& big, const Partition& small) {
        std::vector<Cell> cells;
        for (int r = 1; r <= big.length(); ++r)
            for (int col = small.part(r) + 1; col <= big.part(r); ++col)
                cells.push_back({r, col});
        return cells;
    };
    auto a1 = added(T1.shape(), T.shape());
    auto a2 = added(T2.shape(), T1.shape());
    int maxc1 = 0, minc2 = INT_MAX;
    for (auto& [r, c] : a1) maxc1 = std::max(maxc1, c);
    for (auto& [r, c] : a2) minc2 = std::min(minc2, c);
    bool left = maxc1 < minc2;
    bool leq = !(detail::domino_rank(d2.first, d2.second) <
                 detail::domino_rank(d1.first, d1.second));
    return left == leq;
}

}  // namespace ribbon
