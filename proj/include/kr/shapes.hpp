#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace kr {

// A partition stored as a weakly decreasing list of positive parts.
// The empty partition is the canonical zero value.
class Partition {
public:
    Partition() = default;
    Partition(std::initializer_list<int> parts) : parts_(parts) { normalize(); }
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) { normalize(); }

    const std::vector<int>& parts() const { return parts_; }
    int size() const;                     // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;                // 1-based, 0 past the end
    int col_height(int c) const;          // 1-based column height = lambda'_c
    Partition conjugate() const;
    bool contains(const Partition& inner) const;
    bool empty() const { return parts_.empty(); }

    // Adds/removes a single box in the given 1-based column; throws if the
    // result is not a partition.
    Partition add_box_in_column(int c) const;
    Partition remove_box_in_column(int c) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;        // "(3,1)" or "()"
    static Partition parse(const std::string& text);  // comma list, "" ok

private:
    void normalize();
    std::vector<int> parts_;
};

// Ordered list of rectangles (r_i, s_i): r_i rows, s_i columns.
struct Rectangle {
    int rows = 0;
    int cols = 0;
    bool operator==(const Rectangle& o) const { return rows == o.rows && cols == o.cols; }
};

using RectangleList = std::vector<Rectangle>;

int rect_list_size(const RectangleList& R);    // |R| = sum r_i s_i
int rect_list_norm(const RectangleList& R);    // ||R|| = sum_{i<j} min(r)min(s)
int rect_intersection(const Rectangle& a, const Rectangle& b);

// Littlewood-Richardson coefficient c^{nu}_{delta,lambda}: the number of skew
// semistandard tableaux of shape nu/delta and content lambda whose row word
// (rows top to bottom, each row right to left) is Yamanouchi.
long long lr_coefficient(const Partition& delta, const Partition& lambda, const Partition& nu);

// Multiplicity of V(lambda) in V(mu_1) x ... x V(mu_p) for GL.
long long multi_lr(const std::vector<Partition>& mus, const Partition& lambda);

// All (nu, c^{nu}_{mu_1,...,mu_p}) with nonzero coefficient.
std::vector<std::pair<Partition, long long>> multi_lr_expand(const std::vector<Partition>& mus);

// All partitions of m, and all partitions fitting in an a x b box.
std::vector<Partition> partitions_of(int m);
std::vector<Partition> partitions_in_box(int rows, int cols);

// The four kinds classifying how the affine node attaches.
enum class Kind : uint8_t { None, One, Two, OneOne };  // empty, (1), (2), (1,1)

int kind_cells(Kind k);                  // |diamond|: 1, 2, 2 (None -> 0)
Kind kind_transpose(Kind k);             // (2) <-> (1,1), fixes One/None
std::string kind_name(Kind k);

// Membership of lambda in P^diamond (tileable by the kind's shape).
bool in_diamond_set(Kind k, const Partition& lambda);

// 180-degree rotated complement of lambda inside the r x s rectangle.
Partition rotated_complement(const Partition& lambda, int r, int s);

// P^diamond_n(r,s): shapes of the classical components of B^{r,s}.
std::vector<Partition> kr_component_shapes(Kind k, int n, int r, int s);

// The minimum-size member of P^diamond(r,s).
Partition lambda_min(Kind k, int r, int s);

// Removes one copy of the kind's shape from lambda per the canonical rule.
Partition lambda_minus(Kind k, const Partition& lambda, int r, int s);

}  // namespace kr
