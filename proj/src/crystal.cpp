#include "kr/crystal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace kr {

int f_letter(const ClassicalType& t, int color, int x) {
    int n = t.n;
    switch (t.family) {
        case Family::A:
            if (x == color) return color + 1;
            return kNoLetter;
        case Family::B:
            if (color < n) {
                if (x == color) return color + 1;
                if (x == -(color + 1)) return -color;
                return kNoLetter;
            }
            if (x == n) return 0;
            if (x == 0) return -n;
            return kNoLetter;
        case Family::C:
            if (color < n) {
                if (x == color) return color + 1;
                if (x == -(color + 1)) return -color;
                return kNoLetter;
            }
            if (x == n) return -n;
            return kNoLetter;
        case Family::D:
            if (color < n - 1) {
                if (x == color) return color + 1;
                if (x == -(color + 1)) return -color;
                return kNoLetter;
            }
            if (color == n - 1) {
                if (x == n - 1) return n;
                if (x == -n) return -(n - 1);
                return kNoLetter;
            }
            // color == n
            if (x == n - 1) return -n;
            if (x == n) return -(n - 1);
            return kNoLetter;
    }
    return kNoLetter;
}

int e_letter(const ClassicalType& t, int color, int x) {
    int n = t.n;
    switch (t.family) {
        case Family::A:
            if (x == color + 1) return color;
            return kNoLetter;
        case Family::B:
            if (color < n) {
                if (x == color + 1) return color;
                if (x == -color) return -(color + 1);
                return kNoLetter;
            }
            if (x == 0) return n;
            if (x == -n) return 0;
            return kNoLetter;
        case Family::C:
            if (color < n) {
                if (x == color + 1) return color;
                if (x == -color) return -(color + 1);
                return kNoLetter;
            }
            if (x == -n) return n;
            return kNoLetter;
        case Family::D:
            if (color < n - 1) {
                if (x == color + 1) return color;
                if (x == -color) return -(color + 1);
                return kNoLetter;
            }
            if (color == n - 1) {
                if (x == n) return n - 1;
                if (x == -(n - 1)) return -n;
                return kNoLetter;
            }
            if (x == -n) return n - 1;
            if (x == -(n - 1)) return n;
            return kNoLetter;
    }
    return kNoLetter;
}

int eps_letter(const ClassicalType& t, int color, int x) {
    int k = 0;
    while ((x = e_letter(t, color, x)) != kNoLetter) ++k;
    return k;
}

int phi_letter(const ClassicalType& t, int color, int x) {
    int k = 0;
    while ((x = f_letter(t, color, x)) != kNoLetter) ++k;
    return k;
}

std::vector<int> all_letters(const ClassicalType& t) {
    std::vector<int> out;
    for (int i = 1; i <= t.n; ++i) out.push_back(i);
    if (t.family == Family::B) out.push_back(0);
    if (t.family != Family::A)
        for (int i = t.n; i >= 1; --i) out.push_back(-i);
    return out;
}

std::vector<int> letter_weight(const ClassicalType& t, int letter) {
    std::vector<int> w(t.n, 0);
    if (letter > 0) w[letter - 1] = 1;
    if (letter < 0) w[-letter - 1] = -1;
    return w;
}

std::string letter_str(int letter) {
    if (letter == 0) return "0";
    if (letter > 0) return std::to_string(letter);
    return std::to_string(-letter) + "b";
}

Letter Slot::at(int row, int col) const {
    int idx = 0;
    for (int r = 1; r < row; ++r) idx += shape.part(r);
    return letters[idx + col - 1];
}

void Slot::set(int row, int col, Letter v) {
    int idx = 0;
    for (int r = 1; r < row; ++r) idx += shape.part(r);
    letters[idx + col - 1] = v;
}

Slot highest_weight_tableau(const Partition& shape) {
    Slot s;
    s.shape = shape;
    for (int r = 1; r <= shape.length(); ++r)
        for (int c = 1; c <= shape.part(r); ++c) s.letters.push_back(static_cast<Letter>(r));
    return s;
}

Slot single_row_slot(const std::vector<int>& letters) {
    Slot s;
    s.shape = letters.empty() ? Partition() : Partition({static_cast<int>(letters.size())});
    for (int x : letters) s.letters.push_back(static_cast<Letter>(x));
    return s;
}

Slot single_letter_slot(int letter) { return single_row_slot({letter}); }

std::string Element::key() const {
    std::string out;
    out.push_back(static_cast<char>(slots.size()));
    for (const auto& s : slots) {
        out.push_back(static_cast<char>(s.shape.length()));
        for (int p : s.shape.parts()) out.push_back(static_cast<char>(p));
        for (Letter l : s.letters) out.push_back(static_cast<char>(l + 64));
    }
    return out;
}

std::string Element::pretty() const {
    std::ostringstream os;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (i) os << " (x) ";
        const Slot& s = slots[i];
        if (s.shape.empty()) {
            os << "[]";
            continue;
        }
        for (int r = 1; r <= s.shape.length(); ++r) {
            if (r > 1) os << "/";
            for (int c = 1; c <= s.shape.part(r); ++c) {
                if (c > 1) os << " ";
                os << letter_str(s.at(r, c));
            }
        }
    }
    return os.str();
}

std::vector<int> Element::gl_weight(int n) const {
    std::vector<int> w(n, 0);
    for (const auto& s : slots)
        for (Letter l : s.letters) {
            if (l > 0) ++w[l - 1];
            if (l < 0) --w[-l - 1];
        }
    return w;
}

std::vector<BoxRef> reading_order(const Element& b) {
    std::vector<BoxRef> order;
    for (int si = 0; si < static_cast<int>(b.slots.size()); ++si) {
        const Slot& s = b.slots[si];
        int width = s.shape.empty() ? 0 : s.shape.part(1);
        for (int c = width; c >= 1; --c) {
            int h = s.shape.col_height(c);
            for (int r = 1; r <= h; ++r) order.push_back({si, r, c});
        }
    }
    return order;
}

namespace {

// Kashiwara tensor-rule signature scan. Returns the box index (into the
// reading order) acted on by e (rightmost unmatched eps) or f (leftmost
// unmatched phi); -1 if none.
struct SignatureResult {
    int e_box = -1;
    int f_box = -1;
    int eps = 0;
    int phi = 0;
};

SignatureResult scan_signature(const ClassicalType& t, int color, const Element& b,
                               const std::vector<BoxRef>& order) {
    SignatureResult res;
    std::vector<int> open;  // boxes with unmatched phi-brackets
    std::vector<int> minus; // boxes with unmatched eps-brackets
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        const auto& ref = order[i];
        int x = b.slots[ref.slot].at(ref.row, ref.col);
        for (int k = 0; k < eps_letter(t, color, x); ++k) {
            if (!open.empty())
                open.pop_back();
            else
                minus.push_back(i);
        }
        for (int k = 0; k < phi_letter(t, color, x); ++k) open.push_back(i);
    }
    res.eps = static_cast<int>(minus.size());
    res.phi = static_cast<int>(open.size());
    if (!minus.empty()) res.e_box = minus.back();
    if (!open.empty()) res.f_box = open.front();
    return res;
}

}  // namespace

std::optional<Element> apply_f(const ClassicalType& t, int color, const Element& b) {
    auto order = reading_order(b);
    auto sig = scan_signature(t, color, b, order);
    if (sig.f_box < 0) return std::nullopt;
    Element out = b;
    const auto& ref = order[sig.f_box];
    int x = out.slots[ref.slot].at(ref.row, ref.col);
    int y = f_letter(t, color, x);
    if (y == kNoLetter) throw std::logic_error("signature chose a dead box");
    out.slots[ref.slot].set(ref.row, ref.col, static_cast<Letter>(y));
    return out;
}

std::optional<Element> apply_e(const ClassicalType& t, int color, const Element& b) {
    auto order = reading_order(b);
    auto sig = scan_signature(t, color, b, order);
    if (sig.e_box < 0) return std::nullopt;
    Element out = b;
    const auto& ref = order[sig.e_box];
    int x = out.slots[ref.slot].at(ref.row, ref.col);
    int y = e_letter(t, color, x);
    if (y == kNoLetter) throw std::logic_error("signature chose a dead box");
    out.slots[ref.slot].set(ref.row, ref.col, static_cast<Letter>(y));
    return out;
}

int eps_classical(const ClassicalType& t, int color, const Element& b) {
    auto order = reading_order(b);
    return scan_signature(t, color, b, order).eps;
}

int phi_classical(const ClassicalType& t, int color, const Element& b) {
    auto order = reading_order(b);
    return scan_signature(t, color, b, order).phi;
}

CrystalGraph CrystalGraph::generate(const ClassicalType& t, const std::vector<Element>& seeds,
                                    const std::vector<int>& colors, size_t max_vertices) {
    // BFS closure.
    std::unordered_map<std::string, int> idx;
    std::vector<Element> verts;
    std::deque<int> work;
    auto intern = [&](const Element& el) {
        auto k = el.key();
        auto it = idx.find(k);
        if (it != idx.end()) return it->second;
        if (verts.size() >= max_vertices)
            throw std::runtime_error("vertex cap exceeded (" + std::to_string(max_vertices) + ")");
        int id = static_cast<int>(verts.size());
        idx.emplace(std::move(k), id);
        verts.push_back(el);
        work.push_back(id);
        return id;
    };
    for (const auto& s : seeds) intern(s);
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        Element el = verts[v];
        for (int c : colors) {
            if (auto up = apply_e(t, c, el)) intern(*up);
            if (auto dn = apply_f(t, c, el)) intern(*dn);
        }
    }
    // Canonical order.
    std::vector<int> perm(verts.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    std::sort(perm.begin(), perm.end(),
              [&](int a, int b) { return verts[a].key() < verts[b].key(); });

    CrystalGraph g;
    g.type_ = t;
    g.colors_ = colors;
    g.verts_.resize(verts.size());
    for (size_t i = 0; i < perm.size(); ++i) g.verts_[i] = verts[perm[i]];
    for (size_t i = 0; i < g.verts_.size(); ++i) g.index_[g.verts_[i].key()] = static_cast<int>(i);
    int top = t.num_colors();
    g.fEdge_.assign(top + 1, std::vector<int>(g.verts_.size(), -1));
    g.eEdge_.assign(top + 1, std::vector<int>(g.verts_.size(), -1));
    for (size_t i = 0; i < g.verts_.size(); ++i) {
        for (int c : colors) {
            if (auto dn = apply_f(t, c, g.verts_[i])) {
                auto it = g.index_.find(dn->key());
                if (it == g.index_.end()) throw std::logic_error("closure missed an f-image");
                g.fEdge_[c][i] = it->second;
                g.eEdge_[c][it->second] = static_cast<int>(i);
            }
        }
    }
    // Verify e-edge consistency.
    for (size_t i = 0; i < g.verts_.size(); ++i)
        for (int c : colors) {
            auto up = apply_e(t, c, g.verts_[i]);
            int expect = up ? g.index_.at(up->key()) : -1;
            if (g.eEdge_[c][i] != expect) throw std::logic_error("e/f edges inconsistent");
        }
    g.weights_.resize(g.verts_.size());
    for (size_t i = 0; i < g.verts_.size(); ++i) g.weights_[i] = g.verts_[i].gl_weight(t.n);
    return g;
}

int CrystalGraph::index_of(const Element& b) const { return index_of_key(b.key()); }

int CrystalGraph::index_of_key(const std::string& key) const {
    auto it = index_.find(key);
    return it == index_.end() ? -1 : it->second;
}

void CrystalGraph::set_zero_edges(const std::vector<int>& e0, const std::vector<int>& f0) {
    if (static_cast<int>(e0.size()) != size() || static_cast<int>(f0.size()) != size())
        throw std::invalid_argument("zero-edge table size mismatch");
    eEdge_[0] = e0;
    fEdge_[0] = f0;
    for (int v = 0; v < size(); ++v) {
        if (e0[v] >= 0 && f0[e0[v]] != v) throw std::logic_error("e0/f0 not mutually inverse");
        if (f0[v] >= 0 && e0[f0[v]] != v) throw std::logic_error("f0/e0 not mutually inverse");
    }
    has_zero_ = true;
    if (std::find(colors_.begin(), colors_.end(), 0) == colors_.end()) {
        colors_.insert(colors_.begin(), 0);
    }
}

int CrystalGraph::eps(int color, int v) const {
    int k = 0;
    while ((v = eEdge_[color][v]) >= 0) ++k;
    return k;
}

int CrystalGraph::phi(int color, int v) const {
    int k = 0;
    while ((v = fEdge_[color][v]) >= 0) ++k;
    return k;
}

std::vector<int> CrystalGraph::highest_vertices(const std::vector<int>& colors) const {
    std::vector<int> out;
    for (int v = 0; v < size(); ++v) {
        bool hw = true;
        for (int c : colors)
            if (eEdge_[c][v] >= 0) {
                hw = false;
                break;
            }
        if (hw) out.push_back(v);
    }
    return out;
}

std::vector<int> CrystalGraph::highest_vertices(const std::vector<int>& colors,
                                                const std::vector<int>& weight) const {
    std::vector<int> out;
    for (int v : highest_vertices(colors))
        if (weights_[v] == weight) out.push_back(v);
    return out;
}

std::vector<int> CrystalGraph::component(const std::vector<int>& colors, int v) const {
    std::vector<char> seen(size(), 0);
    std::deque<int> work{v};
    seen[v] = 1;
    std::vector<int> out;
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        out.push_back(x);
        for (int c : colors) {
            for (int y : {fEdge_[c][x], eEdge_[c][x]})
                if (y >= 0 && !seen[y]) {
                    seen[y] = 1;
                    work.push_back(y);
                }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool CrystalGraph::connected(const std::vector<int>& colors) const {
    if (size() == 0) return true;
    return static_cast<int>(component(colors, 0).size()) == size();
}

std::vector<int> CrystalGraph::classical_colors() const {
    std::vector<int> out;
    for (int c = 1; c <= type_.num_colors(); ++c) out.push_back(c);
    return out;
}

std::vector<int> CrystalGraph::all_colors_with_zero() const {
    std::vector<int> out{0};
    for (int c : classical_colors()) out.push_back(c);
    return out;
}

CrystalGraph vector_crystal(const ClassicalType& t) {
    std::vector<int> colors;
    for (int c = 1; c <= t.num_colors(); ++c) colors.push_back(c);
    Element seed{{single_letter_slot(1)}};
    return CrystalGraph::generate(t, {seed}, colors);
}

CrystalGraph classical_crystal(const ClassicalType& t, const Partition& shape,
                               size_t max_vertices) {
    if (t.family == Family::D && t.n < 4) throw std::invalid_argument("type D needs rank >= 4");
    if (t.n < 2) throw std::invalid_argument("rank >= 2 required");
    std::vector<int> colors;
    for (int c = 1; c <= t.num_colors(); ++c) colors.push_back(c);
    Element seed{{highest_weight_tableau(shape)}};
    return CrystalGraph::generate(t, {seed}, colors, max_vertices);
}

}  // namespace kr
