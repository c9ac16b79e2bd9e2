#include "kr/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "kr/io.hpp"
#include "kr/rowtab.hpp"

namespace kr {

namespace {

char family_letter(Kind k) {
    switch (k) {
        case Kind::None: return 'A';
        case Kind::One: return 'B';
        case Kind::Two: return 'C';
        case Kind::OneOne: return 'D';
    }
    return '?';
}

std::string rects_name(const RectangleList& R) {
    std::ostringstream os;
    for (size_t i = 0; i < R.size(); ++i) {
        if (i) os << "+";
        os << R[i].rows << "x" << R[i].cols;
    }
    return os.str();
}

void check_eq_poly(SuiteReport& rep, const std::string& name, const Laurent& lhs,
                   const Laurent& rhs) {
    CheckResult c{name, lhs == rhs, ""};
    if (!c.pass) c.detail = "lhs = " + lhs.to_string() + " ; rhs = " + rhs.to_string();
    rep.checks.push_back(std::move(c));
}

void check_true(SuiteReport& rep, const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, ok ? "" : detail});
}

// Decomposition-theorem envelope: the seven tensor shapes per kind.
struct DecCase {
    AffineType type;
    RectangleList rects;
};

std::vector<DecCase> dec_cases(const Envelope& env) {
    std::vector<DecCase> out;
    for (Kind k : {Kind::OneOne, Kind::Two, Kind::One}) {
        int n = env.dec_rank;
        for (const RectangleList& R :
             {RectangleList{{1, 1}}, RectangleList{{1, 2}}, RectangleList{{2, 1}},
              RectangleList{{2, 2}}, RectangleList{{1, 1}, {1, 1}}, RectangleList{{1, 2}, {1, 1}}})
            out.push_back({AffineType{k, n}, R});
        out.push_back({AffineType{k, n + 1}, RectangleList{{2, 1}, {1, 1}}});
    }
    return out;
}

// All candidate lambdas for a tensor with |R| cells.
std::vector<Partition> lambda_candidates(int size, int maxlen) {
    std::vector<Partition> out;
    for (int m = 0; m <= size; ++m)
        for (const auto& lam : partitions_of(m))
            if (lam.length() <= maxlen) out.push_back(lam);
    return out;
}

Laurent poly_at(const std::map<Partition, Laurent>& sums, const Partition& lam) {
    auto it = sums.find(lam);
    return it == sums.end() ? Laurent() : it->second;
}

}  // namespace

SuiteReport verify_classical_decomposition(const Envelope& env) {
    SuiteReport rep{"classical-decomposition", {}};
    for (const auto& type : env.item1_types) {
        for (int r = 1; r <= env.max_r; ++r)
            for (int s = 1; s <= env.max_s; ++s) {
                auto k = KRCrystal::get(type, r, s);
                auto expect = kr_component_shapes(type.kind, type.n, r, s);
                std::ostringstream base;
                base << type.name() << " B^{" << r << "," << s << "}";
                check_true(rep, base.str() + " component set", k->component_shapes == expect);
                long long total = 0;
                bool sizes = true;
                std::string det;
                for (const auto& lam : k->component_shapes) {
                    long long dim = weyl_dimension_family(family_letter(type.kind), type.n, lam);
                    long long got = static_cast<long long>(
                        k->graph.component(k->graph.classical_colors(), k->b_vertex(lam)).size());
                    total += got;
                    if (dim != got) {
                        sizes = false;
                        det = lam.to_string() + ": size " + std::to_string(got) + " vs dim " +
                              std::to_string(dim);
                    }
                }
                check_true(rep, base.str() + " component sizes", sizes && total == k->graph.size(),
                           det);
            }
    }
    return rep;
}

SuiteReport verify_coenergy(const Envelope& env) {
    SuiteReport rep{"coenergy", {}};
    for (const auto& type : env.item1_types) {
        for (int r = 1; r <= env.max_r; ++r)
            for (int s = 1; s <= env.max_s; ++s) {
                auto k = KRCrystal::get(type, r, s);
                // single_coenergy runs the good-arrow propagation and the
                // m'-route cross-check internally; a throw means failure.
                std::ostringstream base;
                base << type.name() << " B^{" << r << "," << s << "}";
                try {
                    const auto& table = single_coenergy(k);
                    bool ok = true;
                    std::string det;
                    for (const auto& lam : k->component_shapes) {
                        int want = (r * s - lam.size()) / kind_cells(type.kind);
                        if (table[k->b_vertex(lam)] != want) {
                            ok = false;
                            det = lam.to_string() + ": Dbar " +
                                  std::to_string(table[k->b_vertex(lam)]) + " vs " +
                                  std::to_string(want);
                        }
                    }
                    check_true(rep, base.str() + " coenergy formula + m' route", ok, det);
                } catch (const std::exception& e) {
                    check_true(rep, base.str() + " coenergy formula + m' route", false, e.what());
                }
            }
    }
    return rep;
}

SuiteReport verify_decomposition_theorem(const Envelope& env) {
    SuiteReport rep{"decomposition-theorem", {}};
    for (const auto& cs : dec_cases(env)) {
        auto t = TensorProduct::of(cs.type, cs.rects);
        auto ta = type_a_companion(*t);
        auto lhs = one_dim_sums(*t);
        auto rhs_base = one_dim_sums(*ta);
        int cells = kind_cells(cs.type.kind);
        int sub = 2 / cells;
        int size = rect_list_size(cs.rects);
        for (const auto& lam : lambda_candidates(size, cs.type.n)) {
            Laurent rhs;
            for (const auto& [nu, poly] : rhs_base) {
                int d = nu.size() - lam.size();
                if (d < 0) continue;
                for (const auto& delta : partitions_of(d)) {
                    if (!in_diamond_set(cs.type.kind, delta)) continue;
                    long long c = lr_coefficient(lam, delta, nu);
                    if (c) rhs += poly.substitute_power(sub) * Laurent(c);
                }
            }
            Laurent left = poly_at(lhs, lam);
            if ((size - lam.size()) % cells != 0) {
                check_true(rep,
                           cs.type.name() + " " + rects_name(cs.rects) + " lambda=" +
                               lam.to_string() + " (off-lattice)",
                           left.is_zero() && rhs.is_zero());
                continue;
            }
            rhs = rhs.shifted((size - lam.size()) / cells);
            check_eq_poly(rep,
                          cs.type.name() + " " + rects_name(cs.rects) + " lambda=" +
                              lam.to_string(),
                          left, rhs);
        }
    }
    return rep;
}

SuiteReport verify_sigma(const Envelope& env) {
    SuiteReport rep{"sigma", {}};
    for (const auto& type : env.item1_types) {
        for (int r = 1; r <= env.max_r; ++r)
            for (int s = 1; s <= env.max_s; ++s) {
                auto k = KRCrystal::get(type, r, s);
                std::ostringstream base;
                base << type.name() << " B^{" << r << "," << s << "}";
                bool inv = true, wt = true, equi = true;
                for (int v = 0; v < k->graph.size() && (inv || wt || equi); ++v) {
                    if (k->sigma_map[k->sigma_map[v]] != v) inv = false;
                    auto w = k->graph.weight(v);
                    std::vector<int> m(w.size());
                    for (size_t i = 0; i < w.size(); ++i) m[i] = -w[w.size() - 1 - i];
                    if (k->graph.weight(k->sigma_map[v]) != m) wt = false;
                    for (int c = 0; c <= k->graph.type().num_colors(); ++c) {
                        int sc = sigma_color(k->type, c);
                        int x = c == 0 ? k->e0[v] : k->graph.e(c, v);
                        int got = sc == 0 ? k->e0[k->sigma_map[v]]
                                          : k->graph.e(sc, k->sigma_map[v]);
                        if ((x >= 0 ? k->sigma_map[x] : -1) != got) equi = false;
                    }
                }
                check_true(rep, base.str() + " involution", inv);
                check_true(rep, base.str() + " weight rule", wt);
                check_true(rep, base.str() + " full I-equivariance", equi);
                // tops -> max and the highest-vertex bijection with counts.
                auto tt = TensorProduct::get({k});
                auto tops = tops_vertices(tt->graph);
                auto mx = max_vertices(tt->graph);
                std::set<int> inmax(mx.begin(), mx.end());
                bool corres = true;
                for (int v : tops)
                    if (!inmax.count(tt->sigma(v))) corres = false;
                check_true(rep, base.str() + " tops into max", corres);
                bool bij = true;
                std::string det;
                for (int m0 = 0; m0 <= r * s; ++m0)
                    for (const auto& lam : partitions_of(m0)) {
                        if (lam.length() > type.n) continue;
                        std::vector<int> want(type.n, 0);
                        for (int i = 0; i < lam.length(); ++i) want[i] = lam.part(i + 1);
                        std::set<int> topset(tops.begin(), tops.end());
                        std::vector<int> lhs;
                        for (int v :
                             tt->graph.highest_vertices(a_colors(tt->graph.type()), want))
                            if (topset.count(v)) lhs.push_back(v);
                        std::vector<int> rhs;
                        for (int v : tt->graph.highest_vertices(a_colors(tt->graph.type()),
                                                                bar_weight(lam, type.n)))
                            if (inmax.count(v)) rhs.push_back(v);
                        if (lhs.size() != rhs.size()) {
                            bij = false;
                            det = "lambda=" + lam.to_string();
                        }
                        std::set<int> rset(rhs.begin(), rhs.end());
                        for (int v : lhs)
                            if (!rset.count(tt->sigma(v))) {
                                bij = false;
                                det = "lambda=" + lam.to_string();
                            }
                    }
                check_true(rep, base.str() + " highest-vertex bijection", bij, det);
            }
    }
    return rep;
}

SuiteReport verify_energy_relations(const Envelope& env) {
    SuiteReport rep{"energy-relations", {}};
    for (Kind k : {Kind::OneOne, Kind::Two, Kind::One}) {
        AffineType type{k, env.dec_rank};
        for (const RectangleList& R : {RectangleList{{1, 1}, {1, 1}}, RectangleList{{1, 2}, {1, 1}},
                                       RectangleList{{2, 1}, {1, 1}}}) {
            auto t = TensorProduct::of(type, R);
            std::string base = type.name() + " " + rects_name(R);
            bool sr = true;
            std::string det;
            int size = rect_list_size(R);
            for (int v : tops_vertices(t->graph)) {
                auto comp = t->graph.component(t->graph.classical_colors(), v);
                int hw = -1;
                for (int w : comp) {
                    bool ishw = true;
                    for (int c : t->graph.classical_colors())
                        if (t->graph.e(c, w) >= 0) ishw = false;
                    if (ishw) hw = w;
                }
                int lamsz = 0;
                for (int x : t->graph.weight(hw)) lamsz += x;
                if (tensor_coenergy(*t, v) !=
                    tensor_coenergy(*t, t->sigma(v)) + (size - lamsz) / kind_cells(k)) {
                    sr = false;
                    det = "vertex " + std::to_string(v);
                }
            }
            check_true(rep, base + " coenergy-vs-sigma relation", sr, det);
            // max-component Hbar formula (widths decreasing in all our cases).
            auto rm = RMatrix::get(t->factors[0], t->factors[1]);
            auto mx = max_vertices(t->graph);
            std::set<int> inmax(mx.begin(), mx.end());
            bool hok = true;
            int rmin = std::min(R[0].rows, R[1].rows);
            for (int v : t->graph.highest_vertices(t->graph.classical_colors())) {
                if (!inmax.count(v)) continue;
                const auto& parts = t->parts_of(v);
                const Slot& sl = t->factors[1]->graph.element(parts[1]).slots[0];
                std::vector<int> lamrows;
                for (int row = 1; row <= sl.shape.length(); ++row) {
                    int cnt = 0;
                    for (int c = 1; c <= sl.shape.part(row); ++c)
                        if (sl.at(row, c) == row) ++cnt;
                    lamrows.push_back(cnt);
                }
                Partition lam(lamrows);
                if (rm->hbar[v] != (2 / kind_cells(k)) * (rmin * R[1].cols - lam.size()))
                    hok = false;
            }
            check_true(rep, base + " max-component Hbar formula", hok);
        }
    }
    return rep;
}

SuiteReport verify_rmatrix(const Envelope& env) {
    SuiteReport rep{"rmatrix", {}};
    for (const auto& type : env.item1_types) {
        auto k11 = KRCrystal::get(type, 1, 1);
        auto k12 = KRCrystal::get(type, 1, 2);
        auto k21 = KRCrystal::get(type, 2, 1);
        std::string base = type.name() + " ";
        {
            auto rm = RMatrix::get(k11, k11);
            bool id = true;
            for (int v = 0; v < rm->source->graph.size(); ++v)
                if (!(rm->source->graph.element(v) == rm->target->graph.element(rm->image[v])))
                    id = false;
            check_true(rep, base + "diagonal R is the identity", id);
            check_true(rep, base + "Hbar(u x u) = 0", rm->hbar[rm->source->u_vertex] == 0);
        }
        {
            auto fwd = RMatrix::get(k12, k21);
            auto bwd = RMatrix::get(k21, k12);
            bool inv = true, wt = true, cst = true;
            for (int v = 0; v < fwd->source->graph.size(); ++v) {
                const auto& p = fwd->source->parts_of(v);
                auto [y, x] = fwd->apply(p[0], p[1]);
                auto [x2, y2] = bwd->apply(y, x);
                if (x2 != p[0] || y2 != p[1]) inv = false;
                if (fwd->source->graph.weight(v) != fwd->target->graph.weight(fwd->image[v]))
                    wt = false;
            }
            for (int v : fwd->source->graph.highest_vertices(fwd->source->graph.classical_colors()))
                for (int w : fwd->source->graph.component(fwd->source->graph.classical_colors(), v))
                    if (fwd->hbar[w] != fwd->hbar[v]) cst = false;
            check_true(rep, base + "inverse identity", inv);
            check_true(rep, base + "weight preservation", wt);
            check_true(rep, base + "Hbar constant on classical components", cst);
        }
        {
            auto swap_at = [&](std::vector<std::shared_ptr<const KRCrystal>>& tys,
                               std::vector<int>& parts, int pos) {
                auto rm = RMatrix::get(tys[pos], tys[pos + 1]);
                auto [b, a] = rm->apply(parts[pos], parts[pos + 1]);
                parts[pos] = b;
                parts[pos + 1] = a;
                std::swap(tys[pos], tys[pos + 1]);
            };
            bool yb = true;
            int N = k11->graph.size();
            for (int x = 0; x < N && yb; ++x)
                for (int y = 0; y < N && yb; ++y)
                    for (int z = 0; z < N && yb; ++z) {
                        std::vector<int> lhs{x, y, z}, rhs{x, y, z};
                        std::vector<std::shared_ptr<const KRCrystal>> t1{k11, k11, k11}, t2 = t1;
                        swap_at(t1, lhs, 0);
                        swap_at(t1, lhs, 1);
                        swap_at(t1, lhs, 0);
                        swap_at(t2, rhs, 1);
                        swap_at(t2, rhs, 0);
                        swap_at(t2, rhs, 1);
                        if (lhs != rhs) yb = false;
                    }
            check_true(rep, base + "Yang-Baxter on box triples", yb);
            bool ybm = true;
            for (int x = 0; x < k11->graph.size() && ybm; x += 2)
                for (int y = 0; y < k12->graph.size() && ybm; y += 2)
                    for (int z = 0; z < k21->graph.size() && ybm; z += 2) {
                        std::vector<int> lhs{x, y, z}, rhs{x, y, z};
                        std::vector<std::shared_ptr<const KRCrystal>> t1{k11, k12, k21}, t2 = t1;
                        swap_at(t1, lhs, 0);
                        swap_at(t1, lhs, 1);
                        swap_at(t1, lhs, 0);
                        swap_at(t2, rhs, 1);
                        swap_at(t2, rhs, 0);
                        swap_at(t2, rhs, 1);
                        if (lhs != rhs) ybm = false;
                    }
            check_true(rep, base + "Yang-Baxter on a mixed triple", ybm);
        }
    }
    return rep;
}

SuiteReport verify_splitting(const Envelope& env) {
    SuiteReport rep{"splitting", {}};
    for (Kind k : {Kind::OneOne, Kind::Two, Kind::One}) {
        AffineType type{k, env.dec_rank};
        std::string base = type.name() + " ";
        {
            auto kr = KRCrystal::get(type, 2, 2);
            auto rs = RowSplit::get(kr);
            const auto& single = single_coenergy(kr);
            bool ok = true;
            for (int v = 0; v < kr->graph.size(); ++v)
                if (-single[v] != tensor_energy(*rs->target, rs->image[v])) ok = false;
            check_true(rep, base + "row split preserves energy on B^{2,2}", ok);
        }
        for (const RectangleList& R : {RectangleList{{2, 1}, {1, 1}}, RectangleList{{2, 2}, {1, 1}}}) {
            auto t = TensorProduct::of(type, R);
            auto sm = full_row_split(t);
            bool ok = true;
            for (int v = 0; v < t->graph.size(); ++v)
                if (tensor_energy(*t, v) != tensor_energy(*sm.target, sm.image[v])) ok = false;
            check_true(rep, base + rects_name(R) + " full split preserves energy", ok);
            bool sig = true;
            for (int v : tops_vertices(t->graph))
                if (sm.image[t->sigma(v)] != sm.target->sigma(sm.image[v])) sig = false;
            check_true(rep, base + rects_name(R) + " split commutes with sigma on tops", sig);
        }
        {
            auto t = TensorProduct::of(type, {{1, 2}, {1, 1}});
            auto sm = box_split_all(t);
            bool ok = true;
            for (int v = 0; v < t->graph.size(); ++v)
                if (tensor_coenergy(*t, v) != tensor_coenergy(*sm.target, sm.image[v])) ok = false;
            check_true(rep, base + "box split preserves coenergy", ok);
            bool sig = true;
            for (int v : tops_vertices(t->graph))
                if (sm.image[t->sigma(v)] != sm.target->sigma(sm.image[v])) sig = false;
            check_true(rep, base + "box split commutes with sigma on tops", sig);
        }
        {
            auto t = TensorProduct::of(type, {{2, 1}, {2, 1}});
            check_true(rep, base + "2x1+2x1 order independence (monitored)",
                       row_split_order_independent(t));
        }
    }
    return rep;
}

SuiteReport verify_shimozono(const Envelope& env) {
    (void)env;
    SuiteReport rep{"type-A-lusztig", {}};
    for (int n : {3, 4}) {
        AffineType type{Kind::None, n};
        // Decreasing-width lists of up to three single-row or single-column
        // rectangles, |R| <= 6, heights within the rank.
        std::vector<Rectangle> shapes;
        for (int s = 1; s <= 6; ++s) shapes.push_back({1, s});
        for (int r = 2; r <= n - 1; ++r) shapes.push_back({r, 1});
        std::vector<RectangleList> lists;
        std::function<void(RectangleList&, size_t)> rec = [&](RectangleList& cur, size_t from) {
            if (!cur.empty()) lists.push_back(cur);
            if (cur.size() == 3) return;
            for (size_t i = from; i < shapes.size(); ++i) {
                if (!cur.empty() && shapes[i].cols > cur.back().cols) continue;
                cur.push_back(shapes[i]);
                int rsum = 0, size = 0;
                for (const auto& rc : cur) {
                    rsum += rc.rows;
                    size += rc.rows * rc.cols;
                }
                if (rsum <= n && size <= 6) rec(cur, i);
                cur.pop_back();
            }
        };
        RectangleList cur;
        rec(cur, 0);
        for (const auto& R : lists) {
            // require weakly decreasing widths
            bool dec = true;
            for (size_t i = 0; i + 1 < R.size(); ++i)
                if (R[i].cols < R[i + 1].cols) dec = false;
            if (!dec) continue;
            auto t = TensorProduct::of(type, R);
            auto sums = one_dim_sums(*t);
            std::vector<Partition> blocks;
            for (const auto& rc : R) blocks.emplace_back(std::vector<int>(rc.rows, rc.cols));
            int norm = rect_list_norm(R);
            for (const auto& [lam, poly] : sums) {
                Laurent kq = gl_parabolic_kostka(n, blocks, lam);
                Laurent rhs = kq.substitute_power(-1).shifted(norm);
                check_eq_poly(rep, "A n=" + std::to_string(n) + " " + rects_name(R) +
                                       " lambda=" + lam.to_string(),
                              poly, rhs);
            }
        }
    }
    return rep;
}

SuiteReport verify_xk(const Envelope& env) {
    SuiteReport rep{"x-equals-k", {}};
    // Worked hat-construction example, byte-exact.
    {
        HatData h = hat_construction({Partition{5, 4, 4}, Partition{6, 3, 2}, Partition{4, 3}},
                                     {3, 3, 2}, Partition{4, 4, 3, 2, 2, 1});
        bool ok = h.a == 8 && h.lambda_hat == Partition{8, 8, 7, 6, 6, 5, 4, 4} &&
                  h.mu_hat_blocks == std::vector<Partition>{{5, 4}, {6, 5, 2}, {4, 4, 3}} &&
                  h.eta_hat == std::vector<int>{2, 3, 3};
        check_true(rep, "hat construction worked example", ok);
    }
    for (const auto& cs : dec_cases(env)) {
        bool dec = true;
        for (size_t i = 0; i + 1 < cs.rects.size(); ++i)
            if (cs.rects[i].cols < cs.rects[i + 1].cols) dec = false;
        if (!dec) continue;
        auto t = TensorProduct::of(cs.type, cs.rects);
        auto sums = one_dim_sums(*t);
        std::vector<Partition> blocks;
        for (const auto& rc : cs.rects) blocks.emplace_back(std::vector<int>(rc.rows, rc.cols));
        int cells = kind_cells(cs.type.kind);
        int norm = rect_list_norm(cs.rects);
        int size = rect_list_size(cs.rects);
        for (const auto& [lam, poly] : sums) {
            Laurent fk = frak_K(blocks, lam, cs.type.kind);
            int expo = 2 * (norm + size - lam.size()) / cells;
            Laurent rhs = fk.is_zero() ? Laurent() : fk.substitute_power(-1).shifted(expo);
            check_eq_poly(rep, cs.type.name() + " " + rects_name(cs.rects) + " lambda=" +
                                   lam.to_string(),
                          poly, rhs);
        }
    }
    return rep;
}

SuiteReport verify_transpose(const Envelope& env) {
    SuiteReport rep{"transpose", {}};
    for (const auto& cs : dec_cases(env)) {
        bool dec = true;
        for (size_t i = 0; i + 1 < cs.rects.size(); ++i)
            if (cs.rects[i].cols < cs.rects[i + 1].cols) dec = false;
        if (!dec) continue;
        AffineType ttype{kind_transpose(cs.type.kind), cs.type.n};
        RectangleList tr;
        for (const auto& rc : cs.rects) tr.push_back({rc.cols, rc.rows});
        // transposed heights must stay within the spinless guard
        int rsum = 0;
        for (const auto& rc : tr) rsum += rc.rows;
        if (rsum > ttype.n - 2) continue;
        auto t = TensorProduct::of(cs.type, cs.rects);
        auto tt = TensorProduct::of(ttype, tr);
        auto sums = one_dim_sums(*t);
        auto tsums = one_dim_sums(*tt);
        int cells = kind_cells(cs.type.kind);
        int norm = rect_list_norm(cs.rects);
        int size = rect_list_size(cs.rects);
        for (const auto& [lam, poly] : sums) {
            int expo = 2 * (norm + size - lam.size()) / cells;
            Laurent rhs = poly.substitute_power(-1).shifted(expo);
            check_eq_poly(rep, cs.type.name() + " " + rects_name(cs.rects) + " lambda=" +
                                   lam.to_string() + " transpose",
                          poly_at(tsums, lam.conjugate()), rhs);
        }
        // and nothing extra on the transposed side
        long long extra = 0;
        for (const auto& [lt, p] : tsums) {
            Partition lam = lt.conjugate();
            if (!sums.count(lam)) ++extra;
        }
        check_true(rep, cs.type.name() + " " + rects_name(cs.rects) + " transpose support",
                   extra == 0);
    }
    return rep;
}

SuiteReport verify_golden(const Envelope& env) {
    (void)env;
    SuiteReport rep{"golden", {}};
    // Zero-string values on the rectangle component of the D-type crystal.
    {
        const int n = 5, r = 2, s = 3;
        auto k = KRCrystal::get(AffineType{Kind::OneOne, n}, r, s);
        bool ok = true;
        std::string det;
        for (int alpha = 0; alpha <= s && ok; ++alpha)
            for (int beta = 0; alpha + beta <= s && ok; ++beta) {
                int gamma = s - alpha - beta;
                Slot t;
                t.shape = Partition(std::vector<int>(r, s));
                t.letters.assign(r * s, 0);
                for (int c = 1; c <= s; ++c) {
                    int start = c <= alpha ? 1 : (c <= alpha + beta ? 2 : 3);
                    for (int row = 1; row <= r; ++row)
                        t.set(row, c, static_cast<Letter>(start + row - 1));
                }
                int v = k->graph.index_of(Element{{t}});
                if (v < 0 || k->eps0[v] != 2 * alpha + beta || k->phi0[v] != 0) {
                    ok = false;
                    det = "eps0/phi0 at alpha=" + std::to_string(alpha) +
                          " beta=" + std::to_string(beta);
                    break;
                }
                int x = v;
                while (k->e0[x] >= 0) x = k->e0[x];
                Slot expect;
                expect.shape = t.shape;
                expect.letters.assign(r * s, 0);
                for (int c = 1; c <= s; ++c) {
                    std::vector<int> col;
                    if (c <= gamma)
                        for (int i = 0; i < r; ++i) col.push_back(3 + i);
                    else if (c <= gamma + beta) {
                        for (int i = 0; i < r - 1; ++i) col.push_back(3 + i);
                        col.push_back(-1);
                    } else {
                        for (int i = 0; i < r - 2; ++i) col.push_back(3 + i);
                        col.push_back(-2);
                        col.push_back(-1);
                    }
                    for (int row = 1; row <= r; ++row)
                        expect.set(row, c, static_cast<Letter>(col[row - 1]));
                }
                if (!(k->graph.element(x) == Element{{expect}})) {
                    ok = false;
                    det = "e0-max tableau at alpha=" + std::to_string(alpha);
                }
            }
        check_true(rep, "zero-string fixture (eps0 = 2a+b, phi0 = 0, explicit raise)", ok, det);
    }
    // The 180-degree rotation rule on the 6x7 worked grid.
    {
        PMDiagram p{Partition{5, 4, 3, 2, 1}, Partition{6, 4, 4, 3, 1},
                    Partition{6, 6, 4, 4, 1, 1}};
        Element rt = rotation_rule_row_tableau(p, 9, 6, 7);
        std::vector<std::vector<Letter>> expect = {
            {8, 8, 8, 9, -8, -8, -8}, {8, 8, 8, -8, -8, -8, -8}, {8, 8, 9, -8, -8, -8, -7},
            {8, -9, -9, -8, -8, -7, -6}, {8, 9, -8, -8, -7, -6, -5}, {8, -8, -8, -7, -6, -5, -4}};
        bool ok = rt.slots.size() == 6;
        for (int i = 0; i < 6 && ok; ++i) ok = rt.slots[i].letters == expect[i];
        check_true(rep, "rotation-rule fixture grid", ok);
    }
    // Rotation rule agrees with sigma . phi on B^{2,2}.
    {
        const int n = 5, r = 2, s = 2;
        auto k = KRCrystal::get(AffineType{Kind::OneOne, n}, r, s);
        bool ok = true;
        for (const auto& lamOuter : k->component_shapes)
            for (const auto& p : diagrams_with_outer(lamOuter)) {
                int sv = k->sigma_map[k->phi_image(p)];
                if (k->rect_rowtab().forward[sv] < 0) {
                    ok = false;
                    continue;
                }
                Element via =
                    k->rect_rowtab().image_elements[k->rect_rowtab().forward[sv]];
                if (!(via == rotation_rule_row_tableau(p, n, r, s))) ok = false;
            }
        check_true(rep, "rotation rule matches sigma after phi on B^{2,2}", ok);
    }
    // Hat-construction worked example.
    {
        HatData h = hat_construction({Partition{5, 4, 4}, Partition{6, 3, 2}, Partition{4, 3}},
                                     {3, 3, 2}, Partition{4, 4, 3, 2, 2, 1});
        check_true(rep, "hat worked example",
                   h.a == 8 && h.lambda_hat == Partition{8, 8, 7, 6, 6, 5, 4, 4});
    }
    return rep;
}

SuiteReport verify_positivity(const Envelope& env) {
    SuiteReport rep{"positivity", {}};
    for (const auto& cs : dec_cases(env)) {
        bool dec = true;
        for (size_t i = 0; i + 1 < cs.rects.size(); ++i)
            if (cs.rects[i].cols < cs.rects[i + 1].cols) dec = false;
        if (!dec) continue;
        std::vector<Partition> blocks;
        for (const auto& rc : cs.rects) blocks.emplace_back(std::vector<int>(rc.rows, rc.cols));
        int size = rect_list_size(cs.rects);
        bool ok = true;
        std::string det;
        for (const auto& lam : lambda_candidates(size, cs.type.n)) {
            if ((size - lam.size()) % kind_cells(cs.type.kind)) continue;
            Laurent fk = frak_K(blocks, lam, cs.type.kind);
            if (!fk.nonnegative()) {
                ok = false;
                det = "lambda=" + lam.to_string() + ": " + fk.to_string();
            }
        }
        check_true(rep, cs.type.name() + " " + rects_name(cs.rects) + " coefficients", ok, det);
    }
    return rep;
}

std::vector<SuiteReport> verify_all(const Envelope& env, int jobs) {
    std::vector<std::function<SuiteReport()>> tasks = {
        [&] { return verify_classical_decomposition(env); },
        [&] { return verify_coenergy(env); },
        [&] { return verify_decomposition_theorem(env); },
        [&] { return verify_sigma(env); },
        [&] { return verify_energy_relations(env); },
        [&] { return verify_rmatrix(env); },
        [&] { return verify_splitting(env); },
        [&] { return verify_shimozono(env); },
        [&] { return verify_xk(env); },
        [&] { return verify_transpose(env); },
        [&] { return verify_golden(env); },
        [&] { return verify_positivity(env); },
    };
    std::vector<SuiteReport> out(tasks.size());
    if (jobs <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i) out[i] = tasks[i]();
        return out;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= tasks.size()) break;
            out[i] = tasks[i]();
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    return out;
}

std::string report_text(const SuiteReport& r, bool verbose) {
    std::ostringstream os;
    os << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
       << r.checks.size() - r.failures() << "/" << r.checks.size() << " checks)\n";
    for (const auto& c : r.checks) {
        if (!verbose && c.pass) continue;
        os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
        if (!c.pass && !c.detail.empty()) os << "  :: " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::string report_json(const std::vector<SuiteReport>& rs) {
    std::ostringstream os;
    os << "{\n  \"schema\": " << kSchemaVersion << ",\n  \"suites\": [\n";
    for (size_t i = 0; i < rs.size(); ++i) {
        os << "    {\"suite\": \"" << rs[i].suite << "\", \"pass\": "
           << (rs[i].pass() ? "true" : "false") << ", \"checks\": [";
        for (size_t j = 0; j < rs[i].checks.size(); ++j) {
            const auto& c = rs[i].checks[j];
            os << (j ? "," : "") << "\n      {\"name\": \"" << c.name << "\", \"pass\": "
               << (c.pass ? "true" : "false") << "}";
        }
        os << "\n    ]}" << (i + 1 < rs.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

}  // namespace kr
