#pragma once

#include "kr/crystal.hpp"

namespace kr {

// The canonical filled tableau C_delta for a kind and shape delta in the
// kind's tiling set, as a single tableau slot over letters {n, 0, -n}.
//   (1):   row i = n^a 0^(delta_i - 2a) nbar^a, a = floor(delta_i/2)
//   (2):   row i = n^a nbar^a, a = delta_i/2
//   (1,1): cell (i,j) = nbar for odd i, n for even i
Slot canonical_tableau(Kind kind, const Partition& delta, int n);

// Row-tableau element of shape (s^r) whose restriction to delta is
// C_delta and whose complement is the unique Yamanouchi skew tableau on
// barred letters (column c gets nbar at the bottom, then n-1 bar, ...).
Element min_dual_row_tableau(Kind kind, const Partition& lambda, int n, int r, int s);

// Element with one single-row slot per row of the grid slot.
Element rows_of(const Slot& tableau);

// The unique I_0-equivariant embedding B(nu) -> B(nu_1 w_1) x ... built by
// synchronized BFS from the highest vertices. Holds index maps between the
// source graph (a component inside `source`) and the row-tensor component.
struct RowTabEmbedding {
    // forward[v] = index into `image_elements`; -1 outside the component.
    std::vector<int> forward;             // indexed by source-graph vertex
    std::vector<Element> image_elements;  // row tensor elements
    std::unordered_map<std::string, int> image_index;
    std::vector<int> backward;            // image id -> source vertex

    int image_of(int v) const { return forward[v]; }
    int preimage_by_key(const std::string& key) const {
        auto it = image_index.find(key);
        return it == image_index.end() ? -1 : backward[it->second];
    }
};

// source: any graph containing the irreducible component of `highest`
// (an I_0-highest vertex of weight nu).
RowTabEmbedding rowtab_embedding(const CrystalGraph& source, int highest_vertex,
                                 const Partition& nu);

// Enumerates L^kind(nu, delta): row tableaux with b|delta = C_delta and a
// skew semistandard barred filling outside.
std::vector<Element> l_set(Kind kind, const Partition& nu, const Partition& delta, int n);

// Subcrystal extractors; colors 1..n-1 are the A-subalgebra colors.
std::vector<int> a_colors(const ClassicalType& t);

// tops(B): union of A-components of I_0-highest vertices.
std::vector<int> tops_vertices(const CrystalGraph& g);
// hat(B): union of A-components of A-highest vertices of weight bar(lambda).
std::vector<int> hat_vertices(const CrystalGraph& g);
// max(B): union of I_0-components of maximal |wt| among I_0-highest vertices.
std::vector<int> max_vertices(const CrystalGraph& g);

// bar(lambda) = (-lambda_n, ..., -lambda_1).
std::vector<int> bar_weight(const Partition& lambda, int n);
// Inverse: if w = bar(lambda) for a partition lambda, returns it.
bool is_bar_of_partition(const std::vector<int>& w, Partition* lambda_out);

}  // namespace kr
