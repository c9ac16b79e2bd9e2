#include "kr/rowtab.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

namespace kr {

Slot canonical_tableau(Kind kind, const Partition& delta, int n) {
    if (!in_diamond_set(kind, delta)) throw std::invalid_argument("shape not in the tiling set");
    Slot s;
    s.shape = delta;
    for (int r = 1; r <= delta.length(); ++r) {
        int len = delta.part(r);
        switch (kind) {
            case Kind::One: {
                int a = len / 2;
                for (int c = 1; c <= len; ++c) {
                    int v = c <= a ? n : (c <= len - a ? 0 : -n);
                    s.letters.push_back(static_cast<Letter>(v));
                }
                break;
            }
            case Kind::Two: {
                int a = len / 2;
                for (int c = 1; c <= len; ++c)
                    s.letters.push_back(static_cast<Letter>(c <= a ? n : -n));
                break;
            }
            case Kind::OneOne: {
                for (int c = 1; c <= len; ++c)
                    s.letters.push_back(static_cast<Letter>(r % 2 ? -n : n));
                break;
            }
            case Kind::None: throw std::invalid_argument("no canonical tableau for kind empty");
        }
    }
    return s;
}

Element rows_of(const Slot& tableau) {
    Element out;
    for (int r = 1; r <= tableau.shape.length(); ++r) {
        std::vector<int> row;
        for (int c = 1; c <= tableau.shape.part(r); ++c) row.push_back(tableau.at(r, c));
        out.slots.push_back(single_row_slot(row));
    }
    return out;
}

Element min_dual_row_tableau(Kind kind, const Partition& lambda, int n, int r, int s) {
    Partition delta = rotated_complement(lambda, r, s);
    delta = Partition(std::vector<int>(delta.parts()));  // already a partition
    if (!in_diamond_set(kind, delta)) throw std::invalid_argument("complement not tileable");
    Slot grid;
    grid.shape = Partition(std::vector<int>(r, s));
    grid.letters.assign(r * s, 0);
    auto set = [&](int row, int col, int v) { grid.letters[(row - 1) * s + col - 1] = static_cast<Letter>(v); };
    // delta part on top.
    Slot cd = canonical_tableau(kind, delta, n);
    for (int row = 1; row <= delta.length(); ++row)
        for (int col = 1; col <= delta.part(row); ++col) set(row, col, cd.at(row, col));
    // Yamanouchi barred filling outside: column c rows delta'_c+1..r, with
    // nbar in the first skew cell and then n-1 bar, n-2 bar, ... downward.
    for (int col = 1; col <= s; ++col) {
        int top = delta.col_height(col);
        for (int row = top + 1; row <= r; ++row) set(row, col, -(n - (row - top - 1)));
    }
    return rows_of(grid);
}

RowTabEmbedding rowtab_embedding(const CrystalGraph& source, int highest_vertex,
                                 const Partition& nu) {
    const ClassicalType& t = source.type();
    // Target highest: 1^{nu_1} (x) 2^{nu_2} (x) ...
    Element target;
    for (int i = 1; i <= nu.length(); ++i)
        target.slots.push_back(single_row_slot(std::vector<int>(nu.part(i), i)));

    RowTabEmbedding emb;
    emb.forward.assign(source.size(), -1);
    auto intern = [&](const Element& el) {
        auto k = el.key();
        auto it = emb.image_index.find(k);
        if (it != emb.image_index.end()) return it->second;
        int id = static_cast<int>(emb.image_elements.size());
        emb.image_index.emplace(std::move(k), id);
        emb.image_elements.push_back(el);
        emb.backward.push_back(-1);
        return id;
    };
    int t0 = intern(target);
    emb.forward[highest_vertex] = t0;
    emb.backward[t0] = highest_vertex;

    std::deque<int> work{highest_vertex};
    auto colors = source.classical_colors();
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        int img = emb.forward[v];
        Element img_el = emb.image_elements[img];  // copy: intern may reallocate
        for (int c : colors) {
            int w = source.f(c, v);
            auto fi = apply_f(t, c, img_el);
            if ((w >= 0) != fi.has_value())
                throw std::logic_error("rowtab embedding: component mismatch at color " +
                                       std::to_string(c));
            if (w < 0) continue;
            int fid = intern(*fi);
            if (emb.forward[w] == -1) {
                emb.forward[w] = fid;
                emb.backward[fid] = w;
                work.push_back(w);
            } else if (emb.forward[w] != fid) {
                throw std::logic_error("rowtab embedding: propagation conflict");
            }
            // Also check e-direction compatibility lazily via f-edges only;
            // generation covers the component since it is connected by f from
            // the highest vertex only when... use both directions:
        }
        for (int c : colors) {
            int w = source.e(c, v);
            auto ei = apply_e(t, c, img_el);
            if ((w >= 0) != ei.has_value())
                throw std::logic_error("rowtab embedding: component mismatch (e) at color " +
                                       std::to_string(c));
            if (w < 0) continue;
            int eid = intern(*ei);
            if (emb.forward[w] == -1) {
                emb.forward[w] = eid;
                emb.backward[eid] = w;
                work.push_back(w);
            } else if (emb.forward[w] != eid) {
                throw std::logic_error("rowtab embedding: propagation conflict (e)");
            }
        }
    }
    return emb;
}

std::vector<Element> l_set(Kind kind, const Partition& nu, const Partition& delta, int n) {
    std::vector<Element> out;
    if (!nu.contains(delta) || !in_diamond_set(kind, delta)) return out;
    // Fill nu/delta with barred letters, semistandard; letters nbar..1bar with
    // order nbar < (n-1)bar < ... < 1bar encoded as -n < -(n-1) < ... < -1.
    int rows = nu.length();
    Slot grid;
    grid.shape = nu;
    grid.letters.assign(nu.size(), 0);
    Slot cd = canonical_tableau(kind, delta, n);
    for (int r = 1; r <= delta.length(); ++r)
        for (int c = 1; c <= delta.part(r); ++c) grid.set(r, c, cd.at(r, c));
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r <= rows; ++r)
        for (int c = delta.part(r) + 1; c <= nu.part(r); ++c) cells.push_back({r, c});
    // Order: row by row left to right so constraints look up and left.
    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == cells.size()) {
            out.push_back(rows_of(grid));
            return;
        }
        auto [r, c] = cells[idx];
        for (int v = -n; v <= -1; ++v) {
            // Semistandardness is internal to the skew shape nu/delta; the
            // canonical subtableau does not constrain it.
            if (c > delta.part(r) + 1 && grid.at(r, c - 1) > v) continue;
            if (r > 1 && nu.part(r - 1) >= c && c > delta.part(r - 1)) {
                if (grid.at(r - 1, c) >= v) continue;
            }
            grid.set(r, c, static_cast<Letter>(v));
            rec(idx + 1);
            grid.set(r, c, 0);
        }
    };
    rec(0);
    return out;
}

std::vector<int> a_colors(const ClassicalType& t) {
    std::vector<int> out;
    int top = t.family == Family::A ? t.num_colors() : t.n - 1;
    for (int c = 1; c <= top; ++c) out.push_back(c);
    return out;
}

namespace {

std::vector<int> union_components(const CrystalGraph& g, const std::vector<int>& roots,
                                  const std::vector<int>& colors) {
    std::set<int> acc;
    for (int v : roots) {
        if (acc.count(v)) continue;
        for (int x : g.component(colors, v)) acc.insert(x);
    }
    return {acc.begin(), acc.end()};
}

}  // namespace

std::vector<int> tops_vertices(const CrystalGraph& g) {
    auto hw = g.highest_vertices(g.classical_colors());
    return union_components(g, hw, a_colors(g.type()));
}

std::vector<int> hat_vertices(const CrystalGraph& g) {
    std::vector<int> roots;
    for (int v : g.highest_vertices(a_colors(g.type()))) {
        Partition lam;
        if (is_bar_of_partition(g.weight(v), &lam)) roots.push_back(v);
    }
    return union_components(g, roots, a_colors(g.type()));
}

std::vector<int> max_vertices(const CrystalGraph& g) {
    auto hw = g.highest_vertices(g.classical_colors());
    int best = 0;
    for (int v : hw) {
        int s = 0;
        for (int x : g.weight(v)) s += x;
        best = std::max(best, s);
    }
    std::vector<int> roots;
    for (int v : hw) {
        int s = 0;
        for (int x : g.weight(v)) s += x;
        if (s == best) roots.push_back(v);
    }
    return union_components(g, roots, g.classical_colors());
}

std::vector<int> bar_weight(const Partition& lambda, int n) {
    std::vector<int> out(n);
    for (int i = 0; i < n; ++i) out[i] = -lambda.part(n - i);
    return out;
}

bool is_bar_of_partition(const std::vector<int>& w, Partition* lambda_out) {
    std::vector<int> parts;
    int n = static_cast<int>(w.size());
    for (int i = n - 1; i >= 0; --i) parts.push_back(-w[i]);
    for (size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) return false;
    for (int p : parts)
        if (p < 0) return false;
    if (lambda_out) *lambda_out = Partition(parts);
    return true;
}

}  // namespace kr
