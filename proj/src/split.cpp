#include "kr/split.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace kr {

namespace {

std::mutex& split_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

std::shared_ptr<const RowSplit> RowSplit::get(std::shared_ptr<const KRCrystal> k) {
    static std::map<std::string, std::shared_ptr<const RowSplit>> registry;
    std::ostringstream os;
    os << k->type.name() << "_" << k->r << "x" << k->s;
    std::string key = os.str();
    {
        std::lock_guard<std::mutex> lock(split_mutex());
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
    }
    if (k->r < 2) throw std::invalid_argument("row split needs r >= 2");
    auto rs = std::shared_ptr<RowSplit>(new RowSplit());
    rs->source = k;
    auto top = KRCrystal::get(k->type, k->r - 1, k->s);
    auto row = KRCrystal::get(k->type, 1, k->s);
    rs->target = TensorProduct::get({top, row});
    // Anchor: u -> u(B^{r-1,s}) (x) r^s (the unique element of weight s eps_r).
    int rowu = row->graph.index_of(Element{{single_row_slot(std::vector<int>(k->s, k->r))}});
    if (rowu < 0) throw std::logic_error("row anchor missing");
    int anchor = rs->target->vertex_of_parts({top->u_vertex, rowu});
    rs->image.assign(k->graph.size(), -1);
    rs->image[k->u_vertex] = anchor;
    std::deque<int> work{k->u_vertex};
    int covered = 1;
    auto visit = [&](int w, int wi) {
        if (rs->image[w] == -1) {
            rs->image[w] = wi;
            ++covered;
            work.push_back(w);
        } else if (rs->image[w] != wi) {
            throw std::logic_error("row split propagation conflict");
        }
    };
    const TensorProduct& T = *rs->target;
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        int iv = rs->image[v];
        for (int c = 0; c <= k->graph.type().num_colors(); ++c) {
            if (k->good_f_arrow(v, c)) {
                int w = c == 0 ? k->f0[v] : k->graph.f(c, v);
                if (w >= 0) {
                    int wi = T.graph.f(c, iv);
                    if (wi < 0) throw std::logic_error("row split propagation died (f)");
                    visit(w, wi);
                }
            }
            if (k->good_e_arrow(v, c)) {
                int w = c == 0 ? k->e0[v] : k->graph.e(c, v);
                if (w >= 0) {
                    int wi = T.graph.e(c, iv);
                    if (wi < 0) throw std::logic_error("row split propagation died (e)");
                    visit(w, wi);
                }
            }
        }
    }
    if (covered != k->graph.size()) throw std::logic_error("row split propagation incomplete");
    // Injectivity.
    {
        std::vector<int> seen(T.graph.size(), 0);
        for (int v = 0; v < k->graph.size(); ++v) {
            if (seen[rs->image[v]]++) throw std::logic_error("row split not injective");
        }
    }
    std::lock_guard<std::mutex> lock(split_mutex());
    auto [it, inserted] = registry.emplace(key, rs);
    return it->second;
}

namespace {

SplitMap identity_map(std::shared_ptr<const TensorProduct> t) {
    SplitMap m;
    m.source = t;
    m.target = t;
    m.image.resize(t->graph.size());
    for (int v = 0; v < t->graph.size(); ++v) m.image[v] = v;
    return m;
}

// Applies one step to every current image tuple: given a function that maps
// (types, parts) to (types', parts'), rebuilds the map onto the new target.
SplitMap retarget(const SplitMap& m,
                  const std::vector<std::shared_ptr<const KRCrystal>>& new_types,
                  const std::vector<std::vector<int>>& new_parts) {
    SplitMap out;
    out.source = m.source;
    out.target = TensorProduct::get(new_types);
    out.image.resize(m.image.size());
    for (size_t v = 0; v < m.image.size(); ++v)
        out.image[v] = out.target->vertex_of_parts(new_parts[v]);
    return out;
}

}  // namespace

SplitMap full_row_split(std::shared_ptr<const TensorProduct> t) {
    SplitMap cur = identity_map(t);
    while (true) {
        auto types = cur.target->factors;
        int tall = -1;
        for (size_t i = 0; i < types.size(); ++i)
            if (types[i]->r > 1) {
                tall = static_cast<int>(i);
                break;
            }
        if (tall < 0) break;
        // Swap the tall factor to the front, split, keep the rest.
        auto split = RowSplit::get(types[tall]);
        std::vector<std::vector<int>> np(cur.image.size());
        std::vector<std::shared_ptr<const KRCrystal>> base_types;
        for (size_t v = 0; v < cur.image.size(); ++v) {
            auto tys = types;
            auto parts = cur.target->parts_of(cur.image[v]);
            move_factor_left(tys, parts, tall, 0);
            int img = split->image[parts[0]];
            const auto& two = split->target->parts_of(img);
            std::vector<int> parts2{two[0], two[1]};
            for (size_t i = 1; i < parts.size(); ++i) parts2.push_back(parts[i]);
            np[v] = std::move(parts2);
            if (v == 0) {
                base_types = {split->target->factors[0], split->target->factors[1]};
                for (size_t i = 1; i < tys.size(); ++i) base_types.push_back(tys[i]);
            }
        }
        cur = retarget(cur, base_types, np);
    }
    // Reorder to rows(R): for each original factor, r copies of its width.
    std::vector<int> want_widths;
    for (const auto& f : t->factors)
        for (int i = 0; i < f->r; ++i) want_widths.push_back(f->s);
    auto types = cur.target->factors;
    std::vector<std::vector<int>> np(cur.image.size());
    for (size_t v = 0; v < cur.image.size(); ++v) np[v] = cur.target->parts_of(cur.image[v]);
    for (size_t pos = 0; pos < want_widths.size(); ++pos) {
        if (types[pos]->s == want_widths[pos]) continue;
        size_t src = pos + 1;
        while (src < types.size() && types[src]->s != want_widths[pos]) ++src;
        if (src == types.size()) throw std::logic_error("row profile mismatch");
        for (size_t v = 0; v < np.size(); ++v) {
            auto tys = types;
            move_factor_left(tys, np[v], static_cast<int>(src), static_cast<int>(pos));
            if (v + 1 == np.size()) types = tys;
        }
    }
    return retarget(cur, types, np);
}

std::vector<int> box_split_parts(const KRCrystal& k, int v, const KRCrystal& box_crystal) {
    if (k.r != 1) throw std::invalid_argument("box split needs a single-row factor");
    const Element& el = k.graph.element(v);
    const Slot& slot = el.slots[0];
    int p = slot.shape.empty() ? 0 : slot.shape.part(1);
    int s = k.s;
    int m = (s - p) / 2;
    int kk = (s - p) % 2;
    std::vector<int> letters;
    for (int c = p; c >= 1; --c) letters.push_back(slot.at(1, c));
    std::vector<int> parts;
    auto box_of = [&](int letter) {
        int w = box_crystal.graph.index_of(Element{{single_letter_slot(letter)}});
        if (w < 0) throw std::logic_error("letter missing from the box crystal");
        return w;
    };
    for (int x : letters) parts.push_back(box_of(x));
    for (int i = 0; i < m; ++i) parts.push_back(box_of(1));
    if (kk) {
        int w = box_crystal.graph.index_of(Element{{Slot{}}});
        if (w < 0) throw std::logic_error("no empty element in the box crystal");
        parts.push_back(w);
    }
    for (int i = 0; i < m; ++i) parts.push_back(box_of(-1));
    return parts;
}

SplitMap box_split_all(std::shared_ptr<const TensorProduct> t) {
    SplitMap cur = full_row_split(t);
    auto box = KRCrystal::get(t->type, 1, 1);
    while (true) {
        auto types = cur.target->factors;
        int wide = -1;
        for (size_t i = 0; i < types.size(); ++i)
            if (types[i]->s > 1) {
                wide = static_cast<int>(i);
                break;
            }
        if (wide < 0) break;
        std::vector<std::shared_ptr<const KRCrystal>> base_types;
        std::vector<std::vector<int>> np(cur.image.size());
        for (size_t v = 0; v < cur.image.size(); ++v) {
            auto tys = types;
            auto parts = cur.target->parts_of(cur.image[v]);
            move_factor_left(tys, parts, wide, 0);
            auto boxes = box_split_parts(*tys[0], parts[0], *box);
            std::vector<int> parts2 = boxes;
            for (size_t i = 1; i < parts.size(); ++i) parts2.push_back(parts[i]);
            np[v] = std::move(parts2);
            if (v == 0) {
                for (size_t i = 0; i < boxes.size(); ++i) base_types.push_back(box);
                for (size_t i = 1; i < tys.size(); ++i) base_types.push_back(tys[i]);
            }
        }
        cur = retarget(cur, base_types, np);
    }
    return cur;
}

bool row_split_order_independent(std::shared_ptr<const TensorProduct> t) {
    if (t->num_factors() != 2) throw std::invalid_argument("probe expects two factors");
    SplitMap standard = full_row_split(t);
    // Alternative order: swap the two factors first, then run the standard
    // procedure, then swap back into the row profile of R.
    auto rm = RMatrix::get(t->factors[0], t->factors[1]);
    SplitMap alt0 = identity_map(t);
    std::vector<std::vector<int>> np(alt0.image.size());
    for (size_t v = 0; v < np.size(); ++v) {
        auto parts = t->parts_of(static_cast<int>(v));
        auto [b, a] = rm->apply(parts[0], parts[1]);
        np[v] = {b, a};
    }
    SplitMap swapped = retarget(alt0, {t->factors[1], t->factors[0]}, np);
    SplitMap alt = full_row_split(swapped.target);
    // Compose: v -> swapped -> alt, then bubble the widths back to rows(R).
    std::vector<int> want;
    for (const auto& f : t->factors)
        for (int i = 0; i < f->r; ++i) want.push_back(f->s);
    auto types = alt.target->factors;
    std::vector<std::vector<int>> final_parts(np.size());
    for (size_t v = 0; v < np.size(); ++v)
        final_parts[v] = alt.target->parts_of(alt.image[swapped.image[v]]);
    for (size_t pos = 0; pos < want.size(); ++pos) {
        if (types[pos]->s == want[pos]) continue;
        size_t src = pos + 1;
        while (src < types.size() && types[src]->s != want[pos]) ++src;
        if (src == types.size()) return false;
        for (size_t v = 0; v < final_parts.size(); ++v) {
            auto tys = types;
            move_factor_left(tys, final_parts[v], static_cast<int>(src), static_cast<int>(pos));
            if (v + 1 == final_parts.size()) types = tys;
        }
    }
    SplitMap altm;
    altm.source = t;
    altm.target = TensorProduct::get(types);
    altm.image.resize(final_parts.size());
    for (size_t v = 0; v < final_parts.size(); ++v)
        altm.image[v] = altm.target->vertex_of_parts(final_parts[v]);
    if (altm.target->key() != standard.target->key()) return false;
    return altm.image == standard.image;
}

}  // namespace kr
