#pragma once

#include <string>
#include <vector>

#include "kr/shapes.hpp"

namespace kr {

enum class Family : uint8_t { A, B, C, D };

std::string family_name(Family f);

// Classical type: family + rank n. For family A the rank parameter n is the
// number of letters (classical system A_{n-1}); for B/C/D it is the usual
// rank with letters 1..n, barred letters, and 0 for type B.
struct ClassicalType {
    Family family;
    int n;

    int num_colors() const { return family == Family::A ? n - 1 : n; }
    bool operator==(const ClassicalType& o) const { return family == o.family && n == o.n; }
};

// Supported affine families, each reversible except type A which is the
// kind-empty reference family.
//   kind empty  -> A-type,  colors 0..n-1 (n letters)
//   kind (1,1)  -> D_n^(1), classical D_n
//   kind (2)    -> C_n^(1), classical C_n
//   kind (1)    -> D_{n+1}^(2), classical B_n
struct AffineType {
    Kind kind;
    int n;  // classical rank (letters for A)

    ClassicalType classical() const;
    int num_affine_colors() const;  // colors are 0..num_affine_colors()-1... 0..top
    int top_color() const { return classical().num_colors(); }  // colors 0..top_color()

    std::string name() const;  // e.g. "D5(1)", "C4(1)", "D5(2)", "A4(1)"

    // Generalized Cartan matrix over I = {0,...,top_color()}.
    std::vector<std::vector<int>> cartan_matrix() const;
    // Marks a_i and comarks a_i^dual: relatively prime positive null vectors.
    std::vector<int> marks() const;
    std::vector<int> comarks() const;
    int c_r(int r) const;          // max(1, a_r / a_r^dual)
    int level(int r, int s) const; // ceil(s / c_r)
    bool perfect(int r, int s) const;

    // theta/a_0 as a GL weight vector of length n.
    std::vector<int> theta_over_a0() const;

    bool operator==(const AffineType& o) const { return kind == o.kind && n == o.n; }
};

AffineType affine_from_kind(Kind k, int n);

// Pairing <alpha_i^dual, wt> for a classical GL weight (length-n vector),
// for classical colors i = 1..top. For i = 0 uses the level-zero lift.
int pair_coroot(const AffineType& type, int color, const std::vector<int>& gl_weight);

}  // namespace kr
