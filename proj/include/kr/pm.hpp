#pragma once

#include <optional>

#include "kr/crystal.hpp"

namespace kr {

// A +/- diagram: nested shapes inner <= mid <= outer with both skews
// horizontal strips. Cells of mid/inner carry +, cells of outer/mid carry -.
struct PMDiagram {
    Partition inner, mid, outer;

    bool valid() const;  // nesting + horizontal strips
    bool operator==(const PMDiagram& o) const {
        return inner == o.inner && mid == o.mid && outer == o.outer;
    }
    std::string to_string() const;
    std::string key() const;

    int plus_count() const { return mid.size() - inner.size(); }
    int minus_count() const { return outer.size() - mid.size(); }
    bool has_plus_at(int col) const;   // + at top of inner column col
    bool has_minus_at(int col) const;  // - in column col
    // Heights of the - cells (row indices), one entry per minus.
    std::vector<int> minus_heights() const;

    // A + can be added on top of inner column c when the box is removable
    // from inner and no + sits above the column already.
    std::vector<int> plus_addable_columns() const;
    PMDiagram with_plus_added(int col) const;  // inner loses the box
};

// All diagrams with the given outer shape (inner ranges over everything).
std::vector<PMDiagram> diagrams_with_outer(const Partition& outer);

// The sign-flip involution on level-1 KR diagrams: per inner-column height
// class i (0 <= i < r): if i == r-1 mod 2 swap the +/- counts; if i == r mod 2
// replace p pairs by (class size - p) pairs. Height-r columns untouched.
PMDiagram s_involution(const PMDiagram& p, int r, int s);

// Rebuilds a diagram from per-class sign counts (pairs or +/- splits),
// placing pluses/pairs on the left of each class. Used by s_involution and
// the canonical upper diagram construction.
PMDiagram diagram_from_class_counts(const Partition& inner, int r, int s,
                                    const std::vector<int>& plus_or_pair,
                                    const std::vector<int>& minus);

// Phi: diagrams over one classical component <-> J-highest elements, where
// J = colors {c0, ..., n}. Level 1 uses c0 = 1 against the component highest
// b(r,s,outer); level 2 uses c0 = 2 inside a J-component.
class PhiTable {
public:
    // graph: a generated crystal containing the component of `component_hw`;
    // `outer` is the diagram outer shape represented by that vertex
    // (level 1: the component shape; level 2: the J-weight partition).
    PhiTable(const CrystalGraph& graph, int component_hw, const Partition& outer, int color_offset);

    // Vertex of Phi(P); throws if P has the wrong outer shape.
    int image(const PMDiagram& p) const;
    // Diagram of a J-highest vertex; returns nullopt if v is not in range.
    std::optional<PMDiagram> preimage(int v) const;
    const std::vector<PMDiagram>& diagrams() const { return diagrams_; }

private:
    std::unordered_map<std::string, int> to_vertex_;
    std::unordered_map<int, PMDiagram> from_vertex_;
    std::vector<PMDiagram> diagrams_;
};

// The lowering sequence (application order) that realizes the base-case Phi
// for a diagram with the given minus heights, in colors c0..n for the family.
std::vector<int> base_lowering_sequence(Family fam, int n, int c0,
                                        const std::vector<int>& minus_heights);

// Element-level Phi: walks the lowering sequences directly on elements,
// starting from the highest element of the ambient component (level 1) or a
// J-highest element (level 2). Requires minus heights <= rank - 2.
Element phi_walk(const ClassicalType& t, const Element& start, const PMDiagram& p, int c0);


}  // namespace kr
