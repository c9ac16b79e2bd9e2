#include "kr/pm.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace kr {

namespace {

bool horizontal_strip(const Partition& in, const Partition& out) {
    if (!out.contains(in)) return false;
    int width = out.part(1);
    for (int c = 1; c <= width; ++c)
        if (out.col_height(c) - in.col_height(c) > 1) return false;
    return true;
}

}  // namespace

bool PMDiagram::valid() const {
    return mid.contains(inner) && outer.contains(mid) && horizontal_strip(inner, mid) &&
           horizontal_strip(mid, outer);
}

std::string PMDiagram::to_string() const {
    return inner.to_string() + "<=" + mid.to_string() + "<=" + outer.to_string();
}

std::string PMDiagram::key() const { return to_string(); }

bool PMDiagram::has_plus_at(int col) const { return mid.col_height(col) == inner.col_height(col) + 1; }

bool PMDiagram::has_minus_at(int col) const { return outer.col_height(col) == mid.col_height(col) + 1; }

std::vector<int> PMDiagram::minus_heights() const {
    std::vector<int> out;
    int width = outer.empty() ? 0 : outer.part(1);
    for (int c = 1; c <= width; ++c)
        if (has_minus_at(c)) out.push_back(outer.col_height(c));
    return out;
}

std::vector<int> PMDiagram::plus_addable_columns() const {
    std::vector<int> out;
    int width = inner.empty() ? 0 : inner.part(1);
    for (int c = 1; c <= width; ++c) {
        int h = inner.col_height(c);
        if (h >= 1 && inner.col_height(c + 1) < h && mid.col_height(c) == h) out.push_back(c);
    }
    return out;
}

PMDiagram PMDiagram::with_plus_added(int col) const {
    PMDiagram p{inner.remove_box_in_column(col), mid, outer};
    if (!p.valid()) throw std::logic_error("plus addition produced an invalid diagram");
    return p;
}

std::vector<PMDiagram> diagrams_with_outer(const Partition& outer) {
    std::vector<PMDiagram> out;
    // mid interleaves outer; inner interleaves mid.
    std::function<void(std::vector<int>&, const Partition&, std::vector<Partition>&)> interleave =
        [&](std::vector<int>& cur, const Partition& big, std::vector<Partition>& sink) {
            int i = static_cast<int>(cur.size()) + 1;
            if (i > big.length()) {
                sink.emplace_back(cur);
                return;
            }
            int lo = big.part(i + 1);
            int hi = std::min(big.part(i), i > 1 ? cur[i - 2] : big.part(i));
            for (int v = lo; v <= hi; ++v) {
                cur.push_back(v);
                interleave(cur, big, sink);
                cur.pop_back();
            }
        };
    std::vector<Partition> mids;
    {
        std::vector<int> cur;
        interleave(cur, outer, mids);
    }
    for (const auto& mid : mids) {
        std::vector<Partition> inners;
        std::vector<int> cur;
        interleave(cur, mid, inners);
        for (const auto& inner : inners) {
            PMDiagram p{inner, mid, outer};
            if (p.valid()) out.push_back(p);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PMDiagram& a, const PMDiagram& b) { return a.key() < b.key(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

PMDiagram diagram_from_class_counts(const Partition& inner, int r, int s,
                                    const std::vector<int>& plus_or_pair,
                                    const std::vector<int>& minus) {
    // Column data; classes indexed by inner height 0..r-1; height-r columns bare.
    std::vector<int> midh(s + 1, 0), outh(s + 1, 0);
    std::vector<int> used(r, 0);
    for (int c = 1; c <= s; ++c) {
        int h = inner.col_height(c);
        if (h >= r) {
            midh[c] = h;
            outh[c] = h;
            continue;
        }
        int idx = used[h]++;
        if (((h - (r - 1)) % 2 + 2) % 2 == 0) {
            // single-sign class: pluses on the left, then minuses
            if (idx < plus_or_pair[h]) {
                midh[c] = h + 1;
                outh[c] = h + 1;
            } else if (idx < plus_or_pair[h] + minus[h]) {
                midh[c] = h;
                outh[c] = h + 1;
            } else {
                throw std::invalid_argument("single-sign class count mismatch");
            }
        } else {
            // pair class: pairs on the left, then bare
            if (idx < plus_or_pair[h]) {
                midh[c] = h + 1;
                outh[c] = h + 2;
            } else {
                midh[c] = h;
                outh[c] = h;
            }
        }
    }
    auto from_heights = [&](const std::vector<int>& hh) {
        std::vector<int> rows;
        for (int row = 1; row <= r + 2; ++row) {
            int len = 0;
            for (int c = 1; c <= s; ++c)
                if (hh[c] >= row) len = c;
            if (len == 0) break;
            rows.push_back(len);
        }
        return Partition(rows);
    };
    PMDiagram p{inner, from_heights(midh), from_heights(outh)};
    if (!p.valid()) throw std::logic_error("class counts produced an invalid diagram");
    return p;
}

PMDiagram s_involution(const PMDiagram& p, int r, int s) {
    const Partition& inner = p.inner;
    std::vector<int> csize(r, 0), plus(r, 0), pairs(r, 0), minus(r, 0);
    for (int c = 1; c <= s; ++c) {
        int h = inner.col_height(c);
        if (h >= r) continue;
        ++csize[h];
        bool hasplus = p.has_plus_at(c);
        bool hasminus = p.has_minus_at(c);
        if (((h - (r - 1)) % 2 + 2) % 2 == 0) {
            if (hasplus == hasminus)
                throw std::invalid_argument("single-sign class column without exactly one sign");
            if (hasplus)
                ++plus[h];
            else
                ++minus[h];
        } else {
            if (hasplus != hasminus) throw std::invalid_argument("pair class column with one sign");
            if (hasplus) ++pairs[h];
        }
    }
    std::vector<int> new_first(r, 0), new_minus(r, 0);
    for (int h = 0; h < r; ++h) {
        if (((h - (r - 1)) % 2 + 2) % 2 == 0) {
            new_first[h] = minus[h];
            new_minus[h] = plus[h];
        } else {
            new_first[h] = csize[h] - pairs[h];
        }
    }
    return diagram_from_class_counts(inner, r, s, new_first, new_minus);
}

std::vector<int> base_lowering_sequence(Family fam, int n, int c0,
                                        const std::vector<int>& minus_heights) {
    int R = 0;
    for (int h : minus_heights) R = std::max(R, h);
    std::vector<int> seq;  // application order (first entry applied first)
    if (R == 0) return seq;
    std::vector<int> cum(R + 1, 0);
    for (int h : minus_heights) ++cum[h];
    for (int j = 1; j <= R; ++j) cum[j] += cum[j - 1];
    int aR = cum[R];
    auto push = [&](int color, int times) {
        for (int k = 0; k < times; ++k) seq.push_back(color);
    };
    // climb with cumulative exponents
    for (int j = 1; j <= R; ++j) push(c0 - 1 + j, cum[j]);
    // continue climbing with the full exponent
    int climb_top = fam == Family::D ? n - 2 : n - 1;
    for (int color = c0 + R; color <= climb_top; ++color) push(color, aR);
    // the turn
    push(n, fam == Family::B ? 2 * aR : aR);
    // descend
    for (int color = n - 1; color >= c0; --color) push(color, aR);
    return seq;
}

Element phi_walk(const ClassicalType& t, const Element& start, const PMDiagram& p, int c0) {
    auto walk = [&](Element el, const std::vector<int>& seq) {
        for (int color : seq) {
            auto dn = apply_f(t, color, el);
            if (!dn)
                throw std::logic_error("phi walk died at color " + std::to_string(color) +
                                       " for " + p.to_string());
            el = std::move(*dn);
        }
        return el;
    };
    auto addable = p.plus_addable_columns();
    if (addable.empty()) {
        return walk(start, base_lowering_sequence(t.family, t.n, c0, p.minus_heights()));
    }
    int c = addable.back();
    int h = p.inner.col_height(c);
    Element base = phi_walk(t, start, p.with_plus_added(c), c0);
    std::vector<int> seq;
    for (int color = c0 + h - 1; color >= c0; --color) seq.push_back(color);
    return walk(base, seq);
}

PhiTable::PhiTable(const CrystalGraph& graph, int component_hw, const Partition& outer,
                   int color_offset) {
    const ClassicalType& t = graph.type();
    int n = t.n;
    const int c0 = color_offset;
    diagrams_ = diagrams_with_outer(outer);

    auto walk_f = [&](int v, const std::vector<int>& seq, const std::string& what) {
        for (int color : seq) {
            v = graph.f(color, v);
            if (v < 0)
                throw std::logic_error("phi lowering died at color " + std::to_string(color) +
                                       " for " + what);
        }
        return v;
    };

    std::unordered_map<std::string, int> memo;
    std::function<int(const PMDiagram&)> phi = [&](const PMDiagram& p) -> int {
        auto it = memo.find(p.key());
        if (it != memo.end()) return it->second;
        auto addable = p.plus_addable_columns();
        int v;
        if (addable.empty()) {
            auto seq = base_lowering_sequence(t.family, n, c0, p.minus_heights());
            v = walk_f(component_hw, seq, p.to_string());
        } else {
            int c = addable.back();
            int h = p.inner.col_height(c);
            int base = phi(p.with_plus_added(c));
            std::vector<int> seq;  // written (c0..c0+h-1): apply the top color first
            for (int color = c0 + h - 1; color >= c0; --color) seq.push_back(color);
            v = walk_f(base, seq, p.to_string());
        }
        memo.emplace(p.key(), v);
        return v;
    };

    for (const auto& p : diagrams_) {
        int v = phi(p);
        for (int j = c0 + 1; j <= n; ++j)
            if (graph.e(j, v) >= 0)
                throw std::logic_error("phi image not J-highest for " + p.to_string());
        const auto& w = graph.weight(v);
        for (int j = 1; j + c0 <= n; ++j)
            if (w[c0 + j - 1] != p.inner.part(j))
                throw std::logic_error("phi image has wrong J-weight for " + p.to_string());
        if (from_vertex_.count(v)) throw std::logic_error("phi not injective at " + p.to_string());
        to_vertex_[p.key()] = v;
        from_vertex_.emplace(v, p);
    }

    // Completeness: the diagrams exhaust the J-highest vertices of the
    // J-component of component_hw.
    std::vector<int> jcolors;
    for (int j = c0; j <= n; ++j) jcolors.push_back(j);
    auto comp = graph.component(jcolors, component_hw);
    int count = 0;
    for (int v : comp) {
        bool hw = true;
        for (int j = c0 + 1; j <= n; ++j)
            if (graph.e(j, v) >= 0) {
                hw = false;
                break;
            }
        if (hw) ++count;
    }
    if (count != static_cast<int>(diagrams_.size()))
        throw std::logic_error("phi table incomplete: " + std::to_string(diagrams_.size()) +
                               " diagrams vs " + std::to_string(count) + " J-highest vertices");
}

int PhiTable::image(const PMDiagram& p) const {
    auto it = to_vertex_.find(p.key());
    if (it == to_vertex_.end()) throw std::invalid_argument("unknown diagram " + p.to_string());
    return it->second;
}

std::optional<PMDiagram> PhiTable::preimage(int v) const {
    auto it = from_vertex_.find(v);
    if (it == from_vertex_.end()) return std::nullopt;
    return it->second;
}

}  // namespace kr
