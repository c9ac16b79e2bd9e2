#pragma once

#include <map>

#include "kr/kr.hpp"
#include "kr/laurent.hpp"

namespace kr {

// A tensor product of KR crystals of one affine family, with the full affine
// graph (classical colors by the letter signature over concatenated slots,
// color 0 by the factor-level signature over the factor zero tables).
class TensorProduct {
public:
    static std::shared_ptr<const TensorProduct> get(
        std::vector<std::shared_ptr<const KRCrystal>> factors);
    static std::shared_ptr<const TensorProduct> of(AffineType type, const RectangleList& rects);

    std::vector<std::shared_ptr<const KRCrystal>> factors;
    AffineType type{Kind::None, 2};
    CrystalGraph graph;
    int u_vertex = -1;
    std::vector<int> eps0, phi0;

    int num_factors() const { return static_cast<int>(factors.size()); }
    RectangleList rectangles() const;
    std::string key() const;

    const std::vector<int>& parts_of(int v) const { return parts_[v]; }
    int vertex_of_parts(const std::vector<int>& parts) const;
    // The factor index color 0 acts on (for the e- or f-direction); -1 none.
    int zero_e_factor(int v) const;
    int zero_f_factor(int v) const;

    // sigma applied factorwise (reversible kinds only).
    int sigma(int v) const;

private:
    TensorProduct() = default;
    std::vector<std::vector<int>> parts_;
    std::unordered_map<std::string, int> parts_index_;
};

// Combinatorial R-matrix with its coenergy companion for an ordered pair of
// single KR crystals, built by anchored propagation.
class RMatrix {
public:
    static std::shared_ptr<const RMatrix> get(std::shared_ptr<const KRCrystal> k1,
                                              std::shared_ptr<const KRCrystal> k2);

    std::shared_ptr<const TensorProduct> source;  // K1 (x) K2
    std::shared_ptr<const TensorProduct> target;  // K2 (x) K1
    std::vector<int> image;  // source vertex -> target vertex
    std::vector<int> hbar;   // coenergy, normalized at u (x) u

    // Convenience on factor parts.
    std::pair<int, int> apply(int x, int y) const;
    int hbar_at(int x, int y) const;

private:
    RMatrix() = default;
};

// Intrinsic coenergy of a single KR crystal (table per vertex), computed by
// the good-arrow propagation and cross-checked against the route through
// m' and the diagonal coenergy.
const std::vector<int>& single_coenergy(const std::shared_ptr<const KRCrystal>& k);

// Intrinsic coenergy of a tensor element (the pairwise-H plus shuffled
// single-factor formula).
int tensor_coenergy(const TensorProduct& t, int v);
// Energy D = (2/|kind|) ||R|| - Dbar; the scale is 1 for type A and the
// two-cell kinds and 2 for kind (1), matching the grading substitution
// q -> q^{2/|kind|} of the one-dimensional sums.
int energy_scale(const AffineType& t);
int tensor_energy(const TensorProduct& t, int v);
// Pairwise H = (2/|kind|) |R1 cap R2| - Hbar for two single factors.
int pairwise_energy_H(const RMatrix& rm, int x, int y);

// One-dimensional sums: lambda -> sum of q^{Dbar} over classical highest
// weight vertices of weight lambda.
std::map<Partition, Laurent> one_dim_sums(const TensorProduct& t);
Laurent one_dim_sum(const TensorProduct& t, const Partition& lambda);

// Moves the factor at position `from` to position `to` (to < from) by
// adjacent R-swaps; updates parts and the factor list.
void move_factor_left(std::vector<std::shared_ptr<const KRCrystal>>& types,
                      std::vector<int>& parts, int from, int to);

// The type-A companion tensor (same letters, kind empty) and the embedding
// of its vertices into the reversible-type tensor (identical letter grids).
std::shared_ptr<const TensorProduct> type_a_companion(const TensorProduct& t);
int embed_type_a_vertex(const TensorProduct& ta, int v, const TensorProduct& t);

}  // namespace kr
