#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "kr/energy.hpp"
#include "kr/rowtab.hpp"

using namespace kr;

namespace {

std::vector<int> hw_a_of_weight(const CrystalGraph& g, const std::vector<int>& want,
                                const std::vector<int>& inside) {
    std::set<int> sel(inside.begin(), inside.end());
    std::vector<int> out;
    for (int v : g.highest_vertices(a_colors(g.type()))) {
        if (!sel.count(v)) continue;
        if (g.weight(v) == want) out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("sigma sends tops into hat-max with matching cardinalities") {
    struct Cs {
        Kind kind;
        int n;
        RectangleList rects;
    };
    std::vector<Cs> cases = {
        {Kind::OneOne, 5, {{1, 1}, {1, 1}}}, {Kind::Two, 4, {{1, 1}, {1, 1}}},
        {Kind::One, 4, {{1, 1}, {1, 1}}},    {Kind::OneOne, 5, {{2, 1}, {1, 1}}},
        {Kind::Two, 4, {{1, 2}}},            {Kind::One, 4, {{2, 2}}},
    };
    for (const auto& cs : cases) {
        auto t = TensorProduct::of(AffineType{cs.kind, cs.n}, cs.rects);
        auto tops = tops_vertices(t->graph);
        auto mx = max_vertices(t->graph);
        std::set<int> inmax(mx.begin(), mx.end());
        // Prop: sigma maps tops into max.
        for (int v : tops) {
            INFO(kind_name(cs.kind), " n=", cs.n);
            CHECK(inmax.count(t->sigma(v)) == 1);
        }
        // hat(max): A-components of A-highest vertices of antidominant weight
        // within max.
        std::vector<int> hatmax_roots;
        for (int v : t->graph.highest_vertices(a_colors(t->graph.type()))) {
            if (!inmax.count(v)) continue;
            Partition lam;
            if (is_bar_of_partition(t->graph.weight(v), &lam)) hatmax_roots.push_back(v);
        }
        // The bijection hw_A^lambda(tops) -> hw_A^{bar lambda}(hat max).
        std::set<int> topset(tops.begin(), tops.end());
        for (int m = 0; m <= rect_list_size(cs.rects); ++m) {
            for (const auto& lam : partitions_of(m)) {
                std::vector<int> want(cs.n, 0);
                for (int i = 0; i < lam.length(); ++i) want[i] = lam.part(i + 1);
                auto lhs = hw_a_of_weight(t->graph, want, tops);
                auto rhs = hw_a_of_weight(t->graph, bar_weight(lam, cs.n), hatmax_roots.empty()
                                                                               ? std::vector<int>{}
                                                                               : mx);
                // restrict rhs to hat-max (A-hw of antidominant wt inside max)
                CHECK(lhs.size() == rhs.size());
                std::set<int> rset(rhs.begin(), rhs.end());
                for (int v : lhs) {
                    CHECK(rset.count(t->sigma(v)) == 1);
                }
            }
        }
    }
}

TEST_CASE("sigma equivariance on a full tensor") {
    auto t = TensorProduct::of(AffineType{Kind::Two, 4}, {{1, 1}, {2, 1}});
    int top = t->graph.type().num_colors();
    for (int v = 0; v < t->graph.size(); ++v)
        for (int c = 0; c <= top; ++c) {
            int sc = top - c;
            int w = t->graph.e(c, v);
            int got = t->graph.e(sc, t->sigma(v));
            CHECK((w >= 0 ? t->sigma(w) : -1) == got);
        }
}

TEST_CASE("sigma commutes with reordering isomorphisms") {
    auto k1 = KRCrystal::get(AffineType{Kind::OneOne, 5}, 1, 2);
    auto k2 = KRCrystal::get(AffineType{Kind::OneOne, 5}, 1, 1);
    auto rm = RMatrix::get(k1, k2);
    for (int v = 0; v < rm->source->graph.size(); ++v) {
        int lhs = rm->image[rm->source->sigma(v)];
        int rhs = rm->target->sigma(rm->image[v]);
        CHECK(lhs == rhs);
    }
}
