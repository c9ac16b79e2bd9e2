#include "kr/kr.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace kr {

namespace {

std::map<std::string, std::shared_ptr<const KRCrystal>>& registry() {
    static std::map<std::string, std::shared_ptr<const KRCrystal>> reg;
    return reg;
}
std::mutex& registry_mutex() {
    static std::mutex m;
    return m;
}

Partition scale_rows(const Partition& p, int k) {
    std::vector<int> out;
    for (int x : p.parts()) out.push_back(x * k);
    return Partition(out);
}

Partition unscale_rows(const Partition& p, int k) {
    std::vector<int> out;
    for (int x : p.parts()) {
        if (x % k) throw std::logic_error("row halving failed: odd row length");
        out.push_back(x / k);
    }
    return Partition(out);
}

}  // namespace

int sigma_color(const AffineType& t, int color) { return t.top_color() - color; }

int raise_recording(const CrystalGraph& g, int v, const std::vector<int>& colors,
                    std::vector<int>* path) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (int c : colors) {
            int w = g.e(c, v);
            if (w >= 0) {
                if (path) path->push_back(c);
                v = w;
                moved = true;
                break;
            }
        }
    }
    return v;
}

Slot promote_rectangle(const Slot& t, int n) {
    int rows = t.shape.length();
    int cols = rows ? t.shape.part(1) : 0;
    for (int i = 1; i <= rows; ++i)
        if (t.shape.part(i) != cols) throw std::invalid_argument("promotion needs a rectangle");
    // grid[i][j], 0-based; kNoLetter marks holes.
    std::vector<std::vector<int>> g(rows, std::vector<int>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) g[i][j] = t.at(i + 1, j + 1);
    // The letters n occupy a suffix of the bottom row.
    int first_n = cols;
    for (int j = 0; j < cols; ++j)
        if (g[rows - 1][j] == n) {
            first_n = j;
            break;
        }
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (g[i][j] == n && (i != rows - 1 || j < first_n))
                throw std::logic_error("letters n not confined to a bottom-row suffix");
    for (int j = first_n; j < cols; ++j) g[rows - 1][j] = kNoLetter;
    // Slide each hole to the upper left, leftmost hole first.
    for (int j = first_n; j < cols; ++j) {
        int hi = rows - 1, hj = j;
        while (true) {
            bool has_up = hi > 0 && g[hi - 1][hj] != kNoLetter;
            bool has_left = hj > 0 && g[hi][hj - 1] != kNoLetter;
            if (has_up && (!has_left || g[hi - 1][hj] >= g[hi][hj - 1])) {
                g[hi][hj] = g[hi - 1][hj];
                g[hi - 1][hj] = kNoLetter;
                --hi;
            } else if (has_left) {
                g[hi][hj] = g[hi][hj - 1];
                g[hi][hj - 1] = kNoLetter;
                --hj;
            } else {
                break;
            }
        }
    }
    Slot out;
    out.shape = t.shape;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            out.letters.push_back(static_cast<Letter>(g[i][j] == kNoLetter ? 1 : g[i][j] + 1));
    return out;
}

std::shared_ptr<const KRCrystal> KRCrystal::get(AffineType type, int r, int s, bool with_affine) {
    std::ostringstream key;
    key << type.name() << "_" << r << "x" << s << (with_affine ? "_a" : "_c");
    {
        std::lock_guard<std::mutex> lock(registry_mutex());
        auto it = registry().find(key.str());
        if (it != registry().end()) return it->second;
    }
    std::shared_ptr<const KRCrystal> built(new KRCrystal(build(type, r, s, with_affine)));
    std::lock_guard<std::mutex> lock(registry_mutex());
    auto [it, inserted] = registry().emplace(key.str(), built);
    return it->second;
}

KRCrystal KRCrystal::build(AffineType type, int r, int s, bool with_affine) {
    KRCrystal k;
    k.type = type;
    k.r = r;
    k.s = s;
    k.level = type.level(r, s);
    k.is_perfect = type.perfect(r, s);
    ClassicalType ct = type.classical();
    if (type.kind != Kind::None && ct.n < 4)
        throw std::invalid_argument("reversible kinds need rank >= 4");
    if (type.kind == Kind::None && r > ct.n - 1)
        throw std::invalid_argument("type A row index exceeds rank");
    k.build_classical();
    k.build_phi();
    if (type.kind == Kind::OneOne) k.build_varsigma();
    if (with_affine) {
        k.affine = true;
        switch (type.kind) {
            case Kind::None: k.build_zero_arrows_promotion(); break;
            case Kind::OneOne: k.build_zero_arrows_oneone(); break;
            default: k.build_zero_arrows_transport(); break;
        }
        k.find_special_elements();
        if (type.kind != Kind::None) k.build_sigma();
    }
    return k;
}

void KRCrystal::build_classical() {
    ClassicalType ct = type.classical();
    component_shapes = kr_component_shapes(type.kind, ct.n, r, s);
    std::vector<Element> seeds;
    for (const auto& lam : component_shapes) seeds.push_back(Element{{highest_weight_tableau(lam)}});
    std::vector<int> colors;
    for (int c = 1; c <= ct.num_colors(); ++c) colors.push_back(c);
    graph = CrystalGraph::generate(ct, seeds, colors);
    component_of.assign(graph.size(), -1);
    hw_of_component.assign(component_shapes.size(), -1);
    for (size_t ci = 0; ci < component_shapes.size(); ++ci) {
        Element seed{{highest_weight_tableau(component_shapes[ci])}};
        int hw = graph.index_of(seed);
        if (hw < 0) throw std::logic_error("component seed missing from graph");
        hw_of_component[ci] = hw;
        for (int v : graph.component(colors, hw)) {
            if (component_of[v] != -1) throw std::logic_error("components merged");
            component_of[v] = static_cast<int>(ci);
        }
    }
    for (int v = 0; v < graph.size(); ++v)
        if (component_of[v] < 0) throw std::logic_error("stray vertex outside all components");
    // u: unique vertex of weight s w_r = (s^r).
    Partition rect(std::vector<int>(r, s));
    std::vector<int> want(graph.rank(), 0);
    for (int i = 0; i < r; ++i) want[i] = s;
    u_vertex = -1;
    for (int v = 0; v < graph.size(); ++v)
        if (graph.weight(v) == want) {
            if (u_vertex >= 0) throw std::logic_error("u not unique");
            u_vertex = v;
        }
    if (u_vertex < 0) throw std::logic_error("u not found");
    // Rowtab embedding of the rectangle component; dual-min anchors.
    if (type.kind != Kind::None) {
        int rect_ci = component_index(rect);
        rect_rowtab_ = rowtab_embedding(graph, hw_of_component[rect_ci], rect);
        for (const auto& lam : component_shapes) {
            Element mdual = min_dual_row_tableau(type.kind, lam, graph.rank(), r, s);
            int v = rect_rowtab_.preimage_by_key(mdual.key());
            if (v < 0) throw std::logic_error("dual anchor not in the rowtab image");
            bbar_by_shape_[lam.to_string()] = v;
        }
    }
}

void KRCrystal::build_phi() {
    if (type.kind == Kind::None) return;
    for (size_t ci = 0; ci < component_shapes.size(); ++ci) {
        PhiTable table(graph, hw_of_component[ci], component_shapes[ci], 1);
        for (const auto& p : table.diagrams()) {
            int v = table.image(p);
            phi_to_vertex_[p.key()] = v;
            phi_from_vertex_.emplace(v, p);
        }
    }
}

void KRCrystal::build_varsigma() {
    // The diagram involution conjugated through phi, per vertex.
    std::vector<int> jcolors;
    for (int c = 2; c <= graph.rank(); ++c) jcolors.push_back(c);
    varsigma.assign(graph.size(), -1);
    for (int v = 0; v < graph.size(); ++v) {
        std::vector<int> path;
        int h = raise_recording(graph, v, jcolors, &path);
        auto p = phi_preimage(h);
        if (!p) throw std::logic_error("J-highest vertex without a diagram");
        PMDiagram flipped = s_involution(*p, r, s);
        int h2 = phi_image(flipped);
        int w = h2;
        for (auto it = path.rbegin(); it != path.rend(); ++it) {
            w = graph.f(*it, w);
            if (w < 0) throw std::logic_error("varsigma lowering died");
        }
        varsigma[v] = w;
    }
    for (int v = 0; v < graph.size(); ++v)
        if (varsigma[varsigma[v]] != v) throw std::logic_error("varsigma is not an involution");
}

void KRCrystal::finish_zero_arrows(std::vector<int> e0t) {
    e0 = std::move(e0t);
    f0.assign(graph.size(), -1);
    for (int v = 0; v < graph.size(); ++v)
        if (e0[v] >= 0) {
            if (f0[e0[v]] != -1) throw std::logic_error("e0 not injective");
            f0[e0[v]] = v;
        }
    graph.set_zero_edges(e0, f0);
    eps0.assign(graph.size(), 0);
    phi0.assign(graph.size(), 0);
    for (int v = 0; v < graph.size(); ++v) {
        int x = v, k = 0;
        while (e0[x] >= 0) {
            x = e0[x];
            ++k;
        }
        eps0[v] = k;
        x = v;
        k = 0;
        while (f0[x] >= 0) {
            x = f0[x];
            ++k;
        }
        phi0[v] = k;
    }
    // String axiom at color 0 and weight rule.
    auto theta = type.theta_over_a0();
    for (int v = 0; v < graph.size(); ++v) {
        if (phi0[v] - eps0[v] != pair_coroot(type, 0, graph.weight(v)))
            throw std::logic_error("color-0 string axiom failed");
        if (e0[v] >= 0) {
            auto w = graph.weight(v);
            for (size_t i = 0; i < w.size(); ++i) w[i] -= theta[i];
            if (graph.weight(e0[v]) != w) throw std::logic_error("color-0 weight rule failed");
        }
    }
    if (!graph.connected(graph.all_colors_with_zero()))
        throw std::logic_error("KR crystal is not I-connected");
}

void KRCrystal::build_zero_arrows_promotion() {
    int n = graph.rank();
    // pr as a vertex permutation; e0 = pr^{-1} . e1 . pr.
    std::vector<int> pr(graph.size(), -1), prinv(graph.size(), -1);
    for (int v = 0; v < graph.size(); ++v) {
        Element el = graph.element(v);
        Element out{{promote_rectangle(el.slots[0], n)}};
        int w = graph.index_of(out);
        if (w < 0) throw std::logic_error("promotion left the crystal");
        pr[v] = w;
        if (prinv[w] != -1) throw std::logic_error("promotion not injective");
        prinv[w] = v;
    }
    std::vector<int> e0t(graph.size(), -1);
    for (int v = 0; v < graph.size(); ++v) {
        int x = graph.e(1, pr[v]);
        e0t[v] = x >= 0 ? prinv[x] : -1;
    }
    finish_zero_arrows(std::move(e0t));
}

void KRCrystal::build_zero_arrows_oneone() {
    std::vector<int> e0t(graph.size(), -1);
    for (int v = 0; v < graph.size(); ++v) {
        int x = graph.e(1, varsigma[v]);
        e0t[v] = x >= 0 ? varsigma[x] : -1;
    }
    finish_zero_arrows(std::move(e0t));
}

const KRCrystal::ModelTables& KRCrystal::model1(const Partition& outer) const {
    auto it = model1_.find(outer.to_string());
    if (it != model1_.end()) return it->second;
    ClassicalType mt = model_type();
    ModelTables tables;
    Element start{{highest_weight_tableau(outer)}};
    for (const auto& d : diagrams_with_outer(outer)) {
        Element el = phi_walk(mt, start, d, 1);
        for (int j = 2; j <= mt.n; ++j)
            if (apply_e(mt, j, el)) throw std::logic_error("model phi image not J-highest");
        auto w = el.gl_weight(mt.n);
        for (int j = 1; j + 1 <= mt.n; ++j)
            if (w[j] != d.inner.part(j)) throw std::logic_error("model phi J-weight mismatch");
        if (!tables.to_diagram.emplace(el.key(), d).second)
            throw std::logic_error("model phi not injective");
        tables.to_element.emplace(d.key(), std::move(el));
    }
    return model1_.emplace(outer.to_string(), std::move(tables)).first->second;
}

const KRCrystal::ModelTables& KRCrystal::model2(const Element& hw, const Partition& outer) const {
    auto it = model2_.find(hw.key());
    if (it != model2_.end()) return it->second;
    ClassicalType mt = model_type();
    ModelTables tables;
    for (const auto& d : diagrams_with_outer(outer)) {
        Element el = phi_walk(mt, hw, d, 2);
        for (int j = 3; j <= mt.n; ++j)
            if (apply_e(mt, j, el)) throw std::logic_error("model lower image not highest");
        auto w = el.gl_weight(mt.n);
        for (int j = 1; j + 2 <= mt.n; ++j)
            if (w[j + 1] != d.inner.part(j))
                throw std::logic_error("model lower J-weight mismatch");
        if (!tables.to_diagram.emplace(el.key(), d).second)
            throw std::logic_error("model lower phi not injective");
        tables.to_element.emplace(d.key(), std::move(el));
    }
    return model2_.emplace(hw.key(), std::move(tables)).first->second;
}

Element KRCrystal::model_varsigma(const Element& x) const {
    ClassicalType mt = model_type();
    int gamma = 2 / kind_cells(type.kind);
    // Raise to J-highest over colors 2..n_model, recording the path.
    Element h = x;
    std::vector<int> path;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int c = 2; c <= mt.n; ++c) {
            if (auto up = apply_e(mt, c, h)) {
                h = std::move(*up);
                path.push_back(c);
                moved = true;
                break;
            }
        }
    }
    Partition outer = h.slots[0].shape;
    const ModelTables& m1 = model1(outer);
    auto it = m1.to_diagram.find(h.key());
    if (it == m1.to_diagram.end()) throw std::logic_error("model varsigma: unknown J-highest");
    PMDiagram flipped = s_involution(it->second, r, gamma * s);
    Element h2 = model1(flipped.outer).to_element.at(flipped.key());
    for (auto pit = path.rbegin(); pit != path.rend(); ++pit) {
        auto dn = apply_f(mt, *pit, h2);
        if (!dn) throw std::logic_error("model varsigma lowering died");
        h2 = std::move(*dn);
    }
    return h2;
}

int KRCrystal::transport_zero(int jhw, bool raising) const {
    // Acts on a J-highest vertex of this crystal through the D-type model:
    // encode as a diagram pair, realize as a model element, apply e_1 (f_1),
    // the sign-flip involution, e_1 (f_1) again, and read the lower diagram
    // back off. The result is rank-stable; the raised model rank keeps every
    // lowering sequence inside its validity range.
    ClassicalType mt = model_type();
    int gamma = 2 / kind_cells(type.kind);
    auto p = phi_preimage(jhw);
    if (!p) throw std::logic_error("transport: not a diagram vertex");
    PMDiagram phat{scale_rows(p->inner, gamma), scale_rows(p->mid, gamma),
                   scale_rows(p->outer, gamma)};
    // Canonical upper diagram over inner = outer(phat): pair classes get half
    // pairs and half empty columns, split classes half pluses, half minuses.
    const Partition& nu = phat.outer;
    int S = gamma * s;
    std::vector<int> first(r, 0), minus(r, 0);
    std::vector<int> csize(r, 0);
    for (int c = 1; c <= S; ++c) {
        int h = nu.col_height(c);
        if (h < r) ++csize[h];
    }
    for (int h = 0; h < r; ++h) {
        if (csize[h] % 2) throw std::logic_error("transport: odd column class");
        first[h] = csize[h] / 2;
        if (((h - r) % 2 + 2) % 2 != 0) minus[h] = csize[h] / 2;
    }
    PMDiagram upper = diagram_from_class_counts(nu, r, S, first, minus);
    const Element& hwP = model1(upper.outer).to_element.at(upper.key());
    Element x = model2(hwP, upper.inner).to_element.at(phat.key());
    auto step = [&](const Element& el) { return raising ? apply_e(mt, 1, el) : apply_f(mt, 1, el); };
    auto x1 = step(x);
    if (!x1) return -1;
    Element x2 = model_varsigma(*x1);
    auto x3 = step(x2);
    if (!x3) return -1;
    for (int j = 3; j <= mt.n; ++j)
        if (apply_e(mt, j, *x3)) throw std::logic_error("transport: result not lower-highest");
    // Raise over J to identify the upper diagram of the result.
    Element h3 = *x3;
    bool moved = true;
    while (moved) {
        moved = false;
        for (int c = 2; c <= mt.n; ++c) {
            if (auto up = apply_e(mt, c, h3)) {
                h3 = std::move(*up);
                moved = true;
                break;
            }
        }
    }
    const ModelTables& m13 = model1(h3.slots[0].shape);
    auto p3 = m13.to_diagram.find(h3.key());
    if (p3 == m13.to_diagram.end()) throw std::logic_error("transport: unknown result component");
    const ModelTables& m23 = model2(h3, p3->second.inner);
    auto phat3 = m23.to_diagram.find(x3->key());
    if (phat3 == m23.to_diagram.end())
        throw std::logic_error("transport: result not in the lower table");
    PMDiagram pout{unscale_rows(phat3->second.inner, gamma),
                   unscale_rows(phat3->second.mid, gamma),
                   unscale_rows(phat3->second.outer, gamma)};
    return phi_image(pout);
}

void KRCrystal::build_zero_arrows_transport() {
    std::vector<int> jcolors;
    for (int c = 2; c <= graph.rank(); ++c) jcolors.push_back(c);
    // Zero arrows on J-highest vertices, then pull back along J-raising.
    std::unordered_map<int, int> e0_at_hw, f0_at_hw;
    for (int v = 0; v < graph.size(); ++v) {
        if (phi_from_vertex_.count(v)) {
            e0_at_hw[v] = transport_zero(v, true);
            f0_at_hw[v] = transport_zero(v, false);
        }
    }
    std::vector<int> e0t(graph.size(), -1), f0t(graph.size(), -1);
    for (int v = 0; v < graph.size(); ++v) {
        std::vector<int> path;
        int h = raise_recording(graph, v, jcolors, &path);
        auto lower_back = [&](int w) {
            if (w < 0) return -1;
            for (auto it = path.rbegin(); it != path.rend(); ++it) {
                w = graph.f(*it, w);
                if (w < 0) throw std::logic_error("transport pullback died");
            }
            return w;
        };
        e0t[v] = lower_back(e0_at_hw.at(h));
        f0t[v] = lower_back(f0_at_hw.at(h));
    }
    // f0t must be the inverse of e0t.
    for (int v = 0; v < graph.size(); ++v) {
        if (e0t[v] >= 0 && f0t[e0t[v]] != v) throw std::logic_error("transport e0/f0 mismatch");
        if (f0t[v] >= 0 && e0t[f0t[v]] != v) throw std::logic_error("transport f0/e0 mismatch");
    }
    finish_zero_arrows(std::move(e0t));
}

void KRCrystal::find_special_elements() {
    auto classical = graph.classical_colors();
    m_vertex = -1;
    for (int v : graph.highest_vertices(classical)) {
        if (eps0[v] == level) {
            if (m_vertex >= 0) throw std::logic_error("m not unique");
            m_vertex = v;
        }
    }
    if (m_vertex < 0) throw std::logic_error("m not found");
    if (type.kind != Kind::None && m_vertex != b_vertex(lambda_min(type.kind, r, s)))
        throw std::logic_error("m disagrees with the minimal component anchor");
    mprime_vertex = -1;
    for (int v = 0; v < graph.size(); ++v) {
        bool lowest = true;
        for (int c : classical)
            if (graph.f(c, v) >= 0) {
                lowest = false;
                break;
            }
        if (lowest && phi0[v] == level) {
            if (mprime_vertex >= 0) throw std::logic_error("m' not unique");
            mprime_vertex = v;
        }
    }
    if (mprime_vertex < 0) throw std::logic_error("m' not found");
}

void KRCrystal::build_sigma() {
    sigma_map.assign(graph.size(), -1);
    int anchor = bbar_vertex(lambda_min(type.kind, r, s));
    sigma_map[m_vertex] = anchor;
    std::deque<int> work{m_vertex};
    auto op_f = [&](int color, int v) { return color == 0 ? f0[v] : graph.f(color, v); };
    auto op_e = [&](int color, int v) { return color == 0 ? e0[v] : graph.e(color, v); };
    int covered = 1;
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        int sv = sigma_map[v];
        for (int c = 0; c <= graph.type().num_colors(); ++c) {
            int sc = sigma_color(type, c);
            if (good_f_arrow(v, c)) {
                int w = op_f(c, v);
                if (w >= 0) {
                    int sw = op_f(sc, sv);
                    if (sw < 0) throw std::logic_error("sigma propagation died (f)");
                    if (sigma_map[w] == -1) {
                        sigma_map[w] = sw;
                        ++covered;
                        work.push_back(w);
                    } else if (sigma_map[w] != sw) {
                        throw std::logic_error("sigma propagation conflict (f)");
                    }
                }
            }
            if (good_e_arrow(v, c)) {
                int w = op_e(c, v);
                if (w >= 0) {
                    int sw = op_e(sc, sv);
                    if (sw < 0) throw std::logic_error("sigma propagation died (e)");
                    if (sigma_map[w] == -1) {
                        sigma_map[w] = sw;
                        ++covered;
                        work.push_back(w);
                    } else if (sigma_map[w] != sw) {
                        throw std::logic_error("sigma propagation conflict (e)");
                    }
                }
            }
        }
    }
    if (covered != graph.size())
        throw std::logic_error("good arrows do not span the crystal");
}

bool KRCrystal::good_f_arrow(int v, int color) const {
    if (color != 0) return true;
    return eps0[v] >= level;
}

bool KRCrystal::good_e_arrow(int v, int color) const {
    if (color != 0) return true;
    return eps0[v] > level;
}

int KRCrystal::b_vertex(const Partition& lambda) const {
    return hw_of_component[component_index(lambda)];
}

int KRCrystal::component_index(const Partition& lambda) const {
    for (size_t i = 0; i < component_shapes.size(); ++i)
        if (component_shapes[i] == lambda) return static_cast<int>(i);
    throw std::invalid_argument("no component of shape " + lambda.to_string());
}

int KRCrystal::bbar_vertex(const Partition& lambda) const {
    auto it = bbar_by_shape_.find(lambda.to_string());
    if (it == bbar_by_shape_.end())
        throw std::invalid_argument("no dual anchor for " + lambda.to_string());
    return it->second;
}

int KRCrystal::phi_image(const PMDiagram& p) const {
    auto it = phi_to_vertex_.find(p.key());
    if (it == phi_to_vertex_.end())
        throw std::invalid_argument("diagram not in the table: " + p.to_string());
    return it->second;
}

std::optional<PMDiagram> KRCrystal::phi_preimage(int v) const {
    auto it = phi_from_vertex_.find(v);
    if (it == phi_from_vertex_.end()) return std::nullopt;
    return it->second;
}

Element rotation_rule_row_tableau(const PMDiagram& p, int n, int r, int s) {
    Slot grid;
    grid.shape = Partition(std::vector<int>(r, s));
    grid.letters.assign(r * s, 0);
    for (int c = 1; c <= s; ++c) {
        int j0 = s + 1 - c;  // column of P before rotation
        int lam = p.inner.col_height(j0);
        int mu = p.mid.col_height(j0);
        // inner block: rows r-lam+1 .. r
        for (int row = r - lam + 1; row <= r; ++row)
            grid.set(row, c, static_cast<Letter>(-(n - 1 - (row - (r - lam + 1)))));
        // the plus cell sits directly above the inner block
        if (mu > lam) grid.set(r - lam, c, static_cast<Letter>(-n));
        // the rest (complement plus the minus cells): rows 1 .. r-mu,
        // alternating n, nbar upward from the bottom of the block
        int t = r - mu;
        for (int row = 1; row <= t; ++row)
            grid.set(row, c, static_cast<Letter>((t - row) % 2 == 0 ? n : -n));
    }
    // Row substitution on the n/nbar prefix.
    for (int row = 1; row <= r; ++row) {
        int pre = 0, kplus = 0, kminus = 0;
        for (int c = 1; c <= s; ++c) {
            int v = grid.at(row, c);
            if (v == n || v == -n) {
                if (pre != c - 1) throw std::logic_error("n letters not a row prefix");
                pre = c;
                if (v == n)
                    ++kplus;
                else
                    ++kminus;
            }
        }
        std::vector<int> repl;
        if (kplus >= kminus) {
            repl.insert(repl.end(), kminus, n - 1);
            repl.insert(repl.end(), kplus - kminus, n);
            repl.insert(repl.end(), kminus, -(n - 1));
        } else {
            repl.insert(repl.end(), kplus, n - 1);
            repl.insert(repl.end(), kminus - kplus, -n);
            repl.insert(repl.end(), kplus, -(n - 1));
        }
        for (int c = 1; c <= pre; ++c) grid.set(row, c, static_cast<Letter>(repl[c - 1]));
    }
    return rows_of(grid);
}

}  // namespace kr
