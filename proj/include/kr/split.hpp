#pragma once

#include "kr/energy.hpp"

namespace kr {

// Row splitting B^{r,s} -> B^{r-1,s} (x) B^{1,s}: a good-arrow-equivariant
// embedding anchored at u -> u (x) (row of r's).
class RowSplit {
public:
    static std::shared_ptr<const RowSplit> get(std::shared_ptr<const KRCrystal> k);

    std::shared_ptr<const KRCrystal> source;
    std::shared_ptr<const TensorProduct> target;
    std::vector<int> image;  // source vertex -> target vertex

private:
    RowSplit() = default;
};

// A composed splitting map from a tensor product into another.
struct SplitMap {
    std::shared_ptr<const TensorProduct> source;
    std::shared_ptr<const TensorProduct> target;
    std::vector<int> image;  // source vertex -> target vertex
};

// Repeatedly swaps the leftmost tall factor to the front and splits a row
// until all factors are single rows, then reorders to the row profile of R.
SplitMap full_row_split(std::shared_ptr<const TensorProduct> t);

// Box splitting of one single-row factor element into s letters.
std::vector<int> box_split_parts(const KRCrystal& k, int v,
                                 const KRCrystal& box_crystal);

// The complete splitting into (B^{1,1})^{(x) |R|}: rows first, then boxes.
SplitMap box_split_all(std::shared_ptr<const TensorProduct> t);

// Order-independence probe for the row-splitting procedure on a two-factor
// product: compares the standard order with a swapped order; returns true
// when the two composites agree.
bool row_split_order_independent(std::shared_ptr<const TensorProduct> t);

}  // namespace kr
