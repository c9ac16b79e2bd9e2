#include "kr/energy.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>

namespace kr {

namespace {

std::mutex& cache_mutex() {
    static std::mutex m;
    return m;
}

std::string crystal_key(const KRCrystal& k) {
    std::ostringstream os;
    os << k.type.name() << "_" << k.r << "x" << k.s;
    return os.str();
}

}  // namespace

std::string TensorProduct::key() const {
    std::ostringstream os;
    for (const auto& f : factors) os << crystal_key(*f) << "|";
    return os.str();
}

RectangleList TensorProduct::rectangles() const {
    RectangleList out;
    for (const auto& f : factors) out.push_back({f->r, f->s});
    return out;
}

std::shared_ptr<const TensorProduct> TensorProduct::get(
    std::vector<std::shared_ptr<const KRCrystal>> factors) {
    if (factors.empty()) throw std::invalid_argument("empty tensor product");
    static std::map<std::string, std::shared_ptr<const TensorProduct>> registry;
    std::ostringstream os;
    for (const auto& f : factors) os << crystal_key(*f) << "|";
    std::string regkey = os.str();
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = registry.find(regkey);
        if (it != registry.end()) return it->second;
    }
    auto t = std::shared_ptr<TensorProduct>(new TensorProduct());
    t->factors = factors;
    t->type = factors[0]->type;
    for (const auto& f : factors)
        if (!(f->type == t->type)) throw std::invalid_argument("mixed affine families");

    // All product elements, as concatenated-slot elements.
    ClassicalType ct = t->type.classical();
    std::vector<Element> all;
    std::vector<int> idx(factors.size(), 0);
    while (true) {
        Element el;
        for (size_t i = 0; i < factors.size(); ++i)
            el.slots.push_back(factors[i]->graph.element(idx[i]).slots[0]);
        all.push_back(el);
        int pos = static_cast<int>(factors.size()) - 1;
        while (pos >= 0 && ++idx[pos] == factors[pos]->graph.size()) {
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
    std::vector<int> colors;
    for (int c = 1; c <= ct.num_colors(); ++c) colors.push_back(c);
    t->graph = CrystalGraph::generate(ct, all, colors);
    if (t->graph.size() != static_cast<int>(all.size()))
        throw std::logic_error("tensor closure escaped the product set");

    t->parts_.resize(t->graph.size());
    for (int v = 0; v < t->graph.size(); ++v) {
        const Element& el = t->graph.element(v);
        std::vector<int> parts(factors.size());
        for (size_t i = 0; i < factors.size(); ++i) {
            Element fe{{el.slots[i]}};
            parts[i] = factors[i]->graph.index_of(fe);
            if (parts[i] < 0) throw std::logic_error("tensor slot not in its factor");
        }
        std::ostringstream ps;
        for (int p : parts) ps << p << ",";
        t->parts_index_[ps.str()] = v;
        t->parts_[v] = std::move(parts);
    }

    // Zero edges by the factor-level signature.
    std::vector<int> e0(t->graph.size(), -1), f0(t->graph.size(), -1);
    for (int v = 0; v < t->graph.size(); ++v) {
        int ff = t->zero_f_factor(v);
        if (ff >= 0) {
            auto parts = t->parts_[v];
            int w = t->factors[ff]->f0[parts[ff]];
            if (w >= 0) {
                parts[ff] = w;
                f0[v] = t->vertex_of_parts(parts);
            }
        }
    }
    for (int v = 0; v < t->graph.size(); ++v)
        if (f0[v] >= 0) e0[f0[v]] = v;
    t->graph.set_zero_edges(e0, f0);
    t->eps0.assign(t->graph.size(), 0);
    t->phi0.assign(t->graph.size(), 0);
    for (int v = 0; v < t->graph.size(); ++v) {
        int x = v, k = 0;
        while (t->graph.e(0, x) >= 0) {
            x = t->graph.e(0, x);
            ++k;
        }
        t->eps0[v] = k;
        x = v;
        k = 0;
        while (t->graph.f(0, x) >= 0) {
            x = t->graph.f(0, x);
            ++k;
        }
        t->phi0[v] = k;
    }
    {
        std::vector<int> parts;
        for (const auto& f : factors) parts.push_back(f->u_vertex);
        t->u_vertex = t->vertex_of_parts(parts);
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = registry.emplace(regkey, t);
    return it->second;
}

std::shared_ptr<const TensorProduct> TensorProduct::of(AffineType type, const RectangleList& rects) {
    std::vector<std::shared_ptr<const KRCrystal>> fs;
    for (const auto& rc : rects) fs.push_back(KRCrystal::get(type, rc.rows, rc.cols));
    return get(std::move(fs));
}

int TensorProduct::vertex_of_parts(const std::vector<int>& parts) const {
    std::ostringstream ps;
    for (int p : parts) ps << p << ",";
    auto it = parts_index_.find(ps.str());
    if (it == parts_index_.end()) throw std::logic_error("unknown part tuple");
    return it->second;
}

namespace {

// Factor-level signature at color 0: returns {e_factor, f_factor}.
std::pair<int, int> zero_signature(const TensorProduct& t, int v) {
    const auto& parts = t.parts_of(v);
    std::vector<int> minus;
    std::vector<int> open;
    for (size_t i = 0; i < parts.size(); ++i) {
        int eps = t.factors[i]->eps0[parts[i]];
        int phi = t.factors[i]->phi0[parts[i]];
        for (int k = 0; k < eps; ++k) {
            if (!open.empty())
                open.pop_back();
            else
                minus.push_back(static_cast<int>(i));
        }
        for (int k = 0; k < phi; ++k) open.push_back(static_cast<int>(i));
    }
    return {minus.empty() ? -1 : minus.back(), open.empty() ? -1 : open.front()};
}

}  // namespace

int TensorProduct::zero_e_factor(int v) const { return zero_signature(*this, v).first; }
int TensorProduct::zero_f_factor(int v) const { return zero_signature(*this, v).second; }

int TensorProduct::sigma(int v) const {
    std::vector<int> parts = parts_of(v);
    for (size_t i = 0; i < parts.size(); ++i) {
        if (factors[i]->sigma_map.empty())
            throw std::logic_error("sigma unavailable for this family");
        parts[i] = factors[i]->sigma_map[parts[i]];
    }
    return vertex_of_parts(parts);
}

std::shared_ptr<const RMatrix> RMatrix::get(std::shared_ptr<const KRCrystal> k1,
                                            std::shared_ptr<const KRCrystal> k2) {
    static std::map<std::string, std::shared_ptr<const RMatrix>> registry;
    std::string key = crystal_key(*k1) + "&" + crystal_key(*k2);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = registry.find(key);
        if (it != registry.end()) return it->second;
    }
    auto rm = std::shared_ptr<RMatrix>(new RMatrix());
    rm->source = TensorProduct::get({k1, k2});
    rm->target = TensorProduct::get({k2, k1});
    const TensorProduct& S = *rm->source;
    const TensorProduct& T = *rm->target;
    rm->image.assign(S.graph.size(), -1);
    rm->hbar.assign(S.graph.size(), 0);
    rm->image[S.u_vertex] = T.u_vertex;
    std::deque<int> work{S.u_vertex};
    auto colors = S.graph.all_colors_with_zero();
    int covered = 1;
    auto visit = [&](int w, int wi, int h) {
        if (rm->image[w] == -1) {
            rm->image[w] = wi;
            rm->hbar[w] = h;
            ++covered;
            work.push_back(w);
        } else if (rm->image[w] != wi || rm->hbar[w] != h) {
            throw std::logic_error("R-matrix propagation conflict");
        }
    };
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        int iv = rm->image[v];
        for (int c : colors) {
            int w = S.graph.f(c, v);
            int wi = T.graph.f(c, iv);
            if ((w >= 0) != (wi >= 0))
                throw std::logic_error("R-matrix propagation: arrow mismatch (f)");
            if (w >= 0) {
                int delta = 0;
                if (c == 0) {
                    bool src_left = S.zero_f_factor(v) == 0;
                    bool tgt_left = T.zero_f_factor(iv) == 0;
                    if (src_left && tgt_left) delta = 1;
                    if (!src_left && !tgt_left) delta = -1;
                }
                visit(w, wi, rm->hbar[v] + delta);
            }
            int u = S.graph.e(c, v);
            int ui = T.graph.e(c, iv);
            if ((u >= 0) != (ui >= 0))
                throw std::logic_error("R-matrix propagation: arrow mismatch (e)");
            if (u >= 0) {
                int delta = 0;
                if (c == 0) {
                    bool src_left = S.zero_e_factor(v) == 0;
                    bool tgt_left = T.zero_e_factor(iv) == 0;
                    if (src_left && tgt_left) delta = -1;
                    if (!src_left && !tgt_left) delta = 1;
                }
                visit(u, ui, rm->hbar[v] + delta);
            }
        }
    }
    if (covered != S.graph.size()) throw std::logic_error("R-matrix propagation incomplete");
    for (int v = 0; v < S.graph.size(); ++v)
        if (S.graph.weight(v) != T.graph.weight(rm->image[v]))
            throw std::logic_error("R-matrix does not preserve weights");
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = registry.emplace(key, rm);
    return it->second;
}

std::pair<int, int> RMatrix::apply(int x, int y) const {
    int v = source->vertex_of_parts({x, y});
    const auto& p = target->parts_of(image[v]);
    return {p[0], p[1]};
}

int RMatrix::hbar_at(int x, int y) const { return hbar[source->vertex_of_parts({x, y})]; }

const std::vector<int>& single_coenergy(const std::shared_ptr<const KRCrystal>& k) {
    static std::map<std::string, std::vector<int>> cache;
    std::string key = crystal_key(*k);
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    // Good-arrow propagation from u with value 0; +1 upward across good
    // zero arrows.
    std::vector<int> table(k->graph.size(), INT32_MIN);
    table[k->u_vertex] = 0;
    std::deque<int> work{k->u_vertex};
    auto colors = k->graph.all_colors_with_zero();
    auto visit = [&](int w, int val, std::deque<int>& q) {
        if (table[w] == INT32_MIN) {
            table[w] = val;
            q.push_back(w);
        } else if (table[w] != val) {
            throw std::logic_error("coenergy propagation conflict");
        }
    };
    while (!work.empty()) {
        int v = work.front();
        work.pop_front();
        for (int c : colors) {
            if (k->good_f_arrow(v, c)) {
                int w = c == 0 ? k->f0[v] : k->graph.f(c, v);
                if (w >= 0) visit(w, table[v] - (c == 0 ? 1 : 0), work);
            }
            if (k->good_e_arrow(v, c)) {
                int w = c == 0 ? k->e0[v] : k->graph.e(c, v);
                if (w >= 0) visit(w, table[v] + (c == 0 ? 1 : 0), work);
            }
        }
    }
    for (int v = 0; v < k->graph.size(); ++v)
        if (table[v] == INT32_MIN) throw std::logic_error("coenergy propagation incomplete");
    // Second route: Dbar(b) = Hbar(m' x b) - Hbar(m' x u) on the diagonal
    // pair, where R is the identity. Propagated over flat pair indices to
    // keep the footprint linear in N^2 bytes.
    {
        const int N = k->graph.size();
        const int top = k->graph.type().num_colors();
        std::vector<std::vector<int8_t>> epsT(top + 1), phiT(top + 1);
        for (int c = 0; c <= top; ++c) {
            epsT[c].resize(N);
            phiT[c].resize(N);
            for (int v = 0; v < N; ++v) {
                epsT[c][v] = static_cast<int8_t>(c == 0 ? k->eps0[v] : k->graph.eps(c, v));
                phiT[c][v] = static_cast<int8_t>(c == 0 ? k->phi0[v] : k->graph.phi(c, v));
            }
        }
        auto fop = [&](int c, int v) { return c == 0 ? k->f0[v] : k->graph.f(c, v); };
        auto eop = [&](int c, int v) { return c == 0 ? k->e0[v] : k->graph.e(c, v); };
        const int8_t unseen = INT8_MIN;
        std::vector<int8_t> hb(static_cast<size_t>(N) * N, unseen);
        std::vector<int> queue;
        queue.reserve(1 << 20);
        size_t u2 = static_cast<size_t>(k->u_vertex) * N + k->u_vertex;
        hb[u2] = 0;
        queue.push_back(static_cast<int>(u2));
        size_t head = 0;
        long long covered = 1;
        auto push = [&](long long pair, int val) {
            if (hb[pair] == unseen) {
                hb[pair] = static_cast<int8_t>(val);
                queue.push_back(static_cast<int>(pair));
                ++covered;
            } else if (hb[pair] != val) {
                throw std::logic_error("diagonal coenergy propagation conflict");
            }
        };
        while (head < queue.size()) {
            long long cur = static_cast<unsigned>(queue[head++]);
            int x = static_cast<int>(cur / N), y = static_cast<int>(cur % N);
            int h = hb[cur];
            for (int c = 0; c <= top; ++c) {
                // f-direction
                bool left = phiT[c][x] > epsT[c][y];
                int nx = x, ny = y;
                if (left)
                    nx = fop(c, x);
                else
                    ny = fop(c, y);
                if ((left ? nx : ny) >= 0)
                    push(static_cast<long long>(nx) * N + ny,
                         h + (c == 0 ? (left ? 1 : -1) : 0));
                // e-direction
                left = phiT[c][x] >= epsT[c][y];
                nx = x;
                ny = y;
                if (left)
                    nx = eop(c, x);
                else
                    ny = eop(c, y);
                if ((left ? nx : ny) >= 0)
                    push(static_cast<long long>(nx) * N + ny,
                         h + (c == 0 ? (left ? -1 : 1) : 0));
            }
        }
        if (covered != static_cast<long long>(N) * N)
            throw std::logic_error("diagonal coenergy propagation incomplete");
        int mp = k->mprime_vertex;
        int base = hb[static_cast<size_t>(mp) * N + k->u_vertex];
        for (int v = 0; v < N; ++v)
            if (table[v] != hb[static_cast<size_t>(mp) * N + v] - base)
                throw std::logic_error("coenergy routes disagree at vertex " + std::to_string(v));
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = cache.emplace(key, std::move(table));
    return it->second;
}

int tensor_coenergy(const TensorProduct& t, int v) {
    int p = t.num_factors();
    const auto& parts = t.parts_of(v);
    long long total = 0;
    for (int i = 0; i < p; ++i) {
        auto types = t.factors;
        auto cur = parts;
        move_factor_left(types, cur, i, 0);
        total += single_coenergy(types[0])[cur[0]];
    }
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
            auto types = t.factors;
            auto cur = parts;
            move_factor_left(types, cur, j, i + 1);
            auto rm = RMatrix::get(types[i], types[i + 1]);
            total += rm->hbar_at(cur[i], cur[i + 1]);
        }
    return static_cast<int>(total);
}

int energy_scale(const AffineType& t) {
    return t.kind == Kind::None ? 1 : 2 / kind_cells(t.kind);
}

int tensor_energy(const TensorProduct& t, int v) {
    return energy_scale(t.type) * rect_list_norm(t.rectangles()) - tensor_coenergy(t, v);
}

int pairwise_energy_H(const RMatrix& rm, int x, int y) {
    Rectangle r1{rm.source->factors[0]->r, rm.source->factors[0]->s};
    Rectangle r2{rm.source->factors[1]->r, rm.source->factors[1]->s};
    return energy_scale(rm.source->type) * rect_intersection(r1, r2) - rm.hbar_at(x, y);
}

std::map<Partition, Laurent> one_dim_sums(const TensorProduct& t) {
    std::map<Partition, Laurent> out;
    for (int v : t.graph.highest_vertices(t.graph.classical_colors())) {
        auto w = t.graph.weight(v);
        while (!w.empty() && w.back() == 0) w.pop_back();
        for (size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] < w[i + 1]) throw std::logic_error("non-dominant highest weight");
        Partition lam(w);
        out[lam] += Laurent::monomial(1, tensor_coenergy(t, v));
    }
    return out;
}

Laurent one_dim_sum(const TensorProduct& t, const Partition& lambda) {
    auto all = one_dim_sums(t);
    auto it = all.find(lambda);
    return it == all.end() ? Laurent() : it->second;
}

void move_factor_left(std::vector<std::shared_ptr<const KRCrystal>>& types,
                      std::vector<int>& parts, int from, int to) {
    for (int pos = from - 1; pos >= to; --pos) {
        auto rm = RMatrix::get(types[pos], types[pos + 1]);
        auto [b, a] = rm->apply(parts[pos], parts[pos + 1]);
        parts[pos] = b;
        parts[pos + 1] = a;
        std::swap(types[pos], types[pos + 1]);
    }
}

std::shared_ptr<const TensorProduct> type_a_companion(const TensorProduct& t) {
    AffineType a{Kind::None, t.type.n};
    return TensorProduct::of(a, t.rectangles());
}

int embed_type_a_vertex(const TensorProduct& ta, int v, const TensorProduct& t) {
    const Element& el = ta.graph.element(v);
    int w = t.graph.index_of(el);
    if (w < 0) throw std::logic_error("type-A element does not embed");
    return w;
}

}  // namespace kr
