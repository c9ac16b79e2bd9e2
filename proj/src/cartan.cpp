#include "kr/cartan.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace kr {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
    }
    return "?";
}

ClassicalType AffineType::classical() const {
    switch (kind) {
        case Kind::None: return {Family::A, n};
        case Kind::OneOne: return {Family::D, n};
        case Kind::Two: return {Family::C, n};
        case Kind::One: return {Family::B, n};
    }
    throw std::logic_error("bad kind");
}

int AffineType::num_affine_colors() const { return top_color() + 1; }

std::string AffineType::name() const {
    switch (kind) {
        case Kind::None: return "A" + std::to_string(n - 1) + "(1)";
        case Kind::OneOne: return "D" + std::to_string(n) + "(1)";
        case Kind::Two: return "C" + std::to_string(n) + "(1)";
        case Kind::One: return "D" + std::to_string(n + 1) + "(2)";
    }
    return "?";
}

std::vector<std::vector<int>> AffineType::cartan_matrix() const {
    int m = num_affine_colors();  // nodes 0..m-1
    std::vector<std::vector<int>> a(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) a[i][i] = 2;
    auto bond = [&](int i, int j, int aij, int aji) {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    switch (kind) {
        case Kind::None:  // A_{m-1}^(1): cycle (or A_1^(1) double bond)
            if (m == 2) {
                bond(0, 1, -2, -2);
            } else {
                for (int i = 0; i + 1 < m; ++i) bond(i, i + 1, -1, -1);
                bond(0, m - 1, -1, -1);
            }
            break;
        case Kind::OneOne:  // D_n^(1): 0 and 1 both attach to 2; fork at n-2
            bond(0, 2, -1, -1);
            bond(1, 2, -1, -1);
            for (int i = 2; i + 1 <= n - 2; ++i) bond(i, i + 1, -1, -1);
            bond(n - 2, n - 1, -1, -1);
            bond(n - 2, n, -1, -1);
            break;
        case Kind::Two:  // C_n^(1): 0 => 1, chain, n-1 <= n
            bond(0, 1, -1, -2);
            for (int i = 1; i + 1 <= n - 1; ++i) bond(i, i + 1, -1, -1);
            bond(n - 1, n, -2, -1);
            break;
        case Kind::One:  // D_{n+1}^(2): 0 <= 1, chain, n-1 => n
            bond(0, 1, -2, -1);
            for (int i = 1; i + 1 <= n - 1; ++i) bond(i, i + 1, -1, -1);
            bond(n - 1, n, -1, -2);
            break;
    }
    return a;
}

namespace {

// Primitive positive integer null vector of the given singular integer matrix
// (kernel is one-dimensional for generalized Cartan matrices of affine type).
// Solves M x = 0 by rational Gaussian elimination.
std::vector<int> primitive_null_vector(std::vector<std::vector<long long>> m) {
    int nrows = static_cast<int>(m.size());
    int ncols = nrows;
    // Represent rows over rationals with a common denominator per row.
    std::vector<std::vector<double>> a(nrows, std::vector<double>(ncols));
    for (int i = 0; i < nrows; ++i)
        for (int j = 0; j < ncols; ++j) a[i][j] = static_cast<double>(m[i][j]);
    std::vector<int> pivot_col(nrows, -1);
    int row = 0;
    for (int col = 0; col < ncols && row < nrows; ++col) {
        int sel = -1;
        for (int i = row; i < nrows; ++i)
            if (std::abs(a[i][col]) > 1e-9) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[sel], a[row]);
        for (int i = 0; i < nrows; ++i) {
            if (i == row) continue;
            double f = a[i][col] / a[row][col];
            for (int j = col; j < ncols; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    // Free column = any non-pivot column; set it to 1 and back-substitute.
    std::vector<bool> is_pivot(ncols, false);
    for (int i = 0; i < row; ++i) is_pivot[pivot_col[i]] = true;
    int free_col = -1;
    for (int j = 0; j < ncols; ++j)
        if (!is_pivot[j]) free_col = j;
    if (free_col < 0) throw std::logic_error("matrix is nonsingular");
    std::vector<double> x(ncols, 0.0);
    x[free_col] = 1.0;
    for (int i = row - 1; i >= 0; --i) {
        int pc = pivot_col[i];
        double s = 0;
        for (int j = pc + 1; j < ncols; ++j) s += a[i][j] * x[j];
        x[pc] = -s / a[i][pc];
    }
    // Scale to the smallest positive integer vector.
    for (int denom = 1; denom <= 64; ++denom) {
        std::vector<int> out(ncols);
        bool ok = true;
        for (int j = 0; j < ncols; ++j) {
            double v = x[j] * denom;
            int r = static_cast<int>(std::llround(v));
            if (std::abs(v - r) > 1e-6 || r <= 0) {
                ok = false;
                break;
            }
            out[j] = r;
        }
        if (ok) {
            int g = 0;
            for (int v : out) g = std::gcd(g, v);
            for (int& v : out) v /= g;
            return out;
        }
    }
    throw std::logic_error("failed to scale null vector");
}

}  // namespace

std::vector<int> AffineType::marks() const {
    auto a = cartan_matrix();
    int m = static_cast<int>(a.size());
    // marks solve sum_j a_{ij} a_j = 0: null vector of A.
    std::vector<std::vector<long long>> M(m, std::vector<long long>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M[i][j] = a[i][j];
    return primitive_null_vector(M);
}

std::vector<int> AffineType::comarks() const {
    auto a = cartan_matrix();
    int m = static_cast<int>(a.size());
    // comarks solve sum_i a_i^dual a_{ij} = 0: null vector of A^T.
    std::vector<std::vector<long long>> M(m, std::vector<long long>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) M[i][j] = a[j][i];
    return primitive_null_vector(M);
}

int AffineType::c_r(int r) const {
    auto a = marks();
    auto av = comarks();
    int q = a[r] / av[r];
    return q > 1 ? q : 1;
}

int AffineType::level(int r, int s) const {
    int c = c_r(r);
    return (s + c - 1) / c;
}

bool AffineType::perfect(int r, int s) const { return s % c_r(r) == 0; }

std::vector<int> AffineType::theta_over_a0() const {
    // theta = sum_{i in I_0} a_i alpha_i, divided by a_0, as a GL vector.
    auto a = marks();
    std::vector<long long> acc(n, 0);
    int top = top_color();
    ClassicalType ct = classical();
    for (int i = 1; i <= top; ++i) {
        // alpha_i as GL vector.
        std::vector<int> alpha(n, 0);
        if (ct.family == Family::A) {
            alpha[i - 1] = 1;
            alpha[i] = -1;
        } else if (i < n) {
            alpha[i - 1] = 1;
            alpha[i] = -1;
        } else {
            switch (ct.family) {
                case Family::B: alpha[n - 1] = 1; break;
                case Family::C: alpha[n - 1] = 2; break;
                case Family::D:
                    alpha[n - 2] = 1;
                    alpha[n - 1] = 1;
                    break;
                default: break;
            }
        }
        for (int j = 0; j < n; ++j) acc[j] += static_cast<long long>(a[i]) * alpha[j];
    }
    std::vector<int> out(n);
    for (int j = 0; j < n; ++j) {
        if (acc[j] % a[0]) throw std::logic_error("theta not divisible by a_0");
        out[j] = static_cast<int>(acc[j] / a[0]);
    }
    return out;
}

AffineType affine_from_kind(Kind k, int n) { return AffineType{k, n}; }

int pair_coroot(const AffineType& type, int color, const std::vector<int>& gl_weight) {
    ClassicalType ct = type.classical();
    int n = type.n;
    if (color >= 1) {
        if (ct.family == Family::A || color < n) return gl_weight[color - 1] - gl_weight[color];
        switch (ct.family) {
            case Family::B: return 2 * gl_weight[n - 1];  // alpha_n^dual = 2 eps_n for so(2n+1)
            case Family::C: return gl_weight[n - 1];
            case Family::D: return gl_weight[n - 2] + gl_weight[n - 1];
            default: throw std::logic_error("bad color");
        }
    }
    // color 0 on a level-zero weight: <alpha_0^dual, wt> = -sum_i c_i a_i^dual
    // where wt = sum c_i omega_i classically.
    auto av = type.comarks();
    long long s = 0;
    for (int i = 1; i <= type.top_color(); ++i) s += static_cast<long long>(pair_coroot(type, i, gl_weight)) * av[i];
    return static_cast<int>(-s);
}

}  // namespace kr
