#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "kr/laurent.hpp"
#include "kr/shapes.hpp"

namespace kr {

enum class Group : uint8_t { GL, SO_odd, Sp, SO_even };

std::string group_name(Group g);

// Positive roots, rho, and the Weyl group (as signed permutations) for the
// classical groups GL_n, SO_{2n+1}, Sp_{2n}, SO_{2n}.
class RootSystemData {
public:
    RootSystemData(Group g, int n);

    Group group() const { return group_; }
    int rank() const { return n_; }
    const std::vector<std::vector<int>>& positive_roots() const { return roots_; }
    const std::vector<int>& two_rho() const { return two_rho_; }
    // L(alpha): 2 on long roots, 1 on short (meaningful for SO_odd).
    int root_length_weight(const std::vector<int>& alpha) const;

    // Applies one signed permutation: out[i] = sign[i] * in[perm[i]].
    struct SignedPerm {
        std::vector<int> perm;   // 0-based images
        std::vector<int> sign;   // +1 / -1
        int det;                 // (-1)^{length}
    };
    // Iterate over the Weyl group (S_n for GL; signed perms for Sp/SO_odd;
    // even-sign for SO_even). Calls fn(w).
    void for_each_weyl(const std::function<void(const SignedPerm&)>& fn) const;
    // Iterate over S_n only (the stable sums).
    void for_each_symmetric(const std::function<void(const SignedPerm&)>& fn) const;

    std::vector<int> apply(const SignedPerm& w, const std::vector<int>& v) const;
    // w . lambda = w(lambda + rho) - rho, doubled internally to stay integral;
    // returns empty vector if the result is not integral (never happens).
    std::vector<int> dot_action(const SignedPerm& w, const std::vector<int>& lambda) const;

private:
    Group group_;
    int n_;
    std::vector<std::vector<int>> roots_;
    std::vector<int> two_rho_;
};

// Exact Weyl dimension of the irreducible with highest weight lambda.
long long weyl_dimension(Group g, int n, const Partition& lambda);
// Same keyed by crystal family letter (A->GL with n letters).
long long weyl_dimension_family(char family, int n, const Partition& lambda);

// A Levi selection given by a composition eta of n (blocks GL_{eta_1} x ...);
// the last block may be a classical block when eta sums to less than n for
// non-GL groups (we always use full GL-block compositions padded with a
// trailing classical block of size n - sum(eta) when positive).
struct LeviSelection {
    std::vector<int> eta;  // GL block sizes, sum <= n
    int n = 0;

    // Simple-root indices (1-based alpha_i, i = 1..n-1 for GL, 1..n else)
    // INSIDE the Levi.
    std::vector<int> levi_simples(Group g) const;
};

// q-partition function machinery with memoization.
class QPartition {
public:
    QPartition(Group g, int n, const LeviSelection& levi, bool length_weighted);

    // P_q(beta): multisets of positive roots outside the Levi summing to beta.
    const Laurent& value(const std::vector<int>& beta);

private:
    RootSystemData rs_;
    std::vector<std::vector<int>> roots_;  // roots outside the Levi
    std::vector<int> lweight_;             // exponent weight per root
    std::map<std::pair<int, std::vector<int>>, Laurent> memo_;
    const Laurent& eval(int i, const std::vector<int>& beta);
    Laurent zero_;
};

// Parabolic Lusztig q-analogue K_{lambda,mu}^{G,U}(q): alternating sum over
// the full Weyl group. mu is a GL weight vector of length n (the literal
// concatenation of the block partitions).
Laurent lusztig_q(Group g, int n, const LeviSelection& levi, const Partition& lambda,
                  const std::vector<int>& mu);

// Stable version: sum over S_n only; for SO_odd uses the length-weighted
// partition function.
Laurent stable_lusztig_q(Group g, int n, const LeviSelection& levi, const Partition& lambda,
                         const std::vector<int>& mu);

// The hat construction: given block partitions mu^(k) with block sizes eta
// and lambda, builds a, lambda-hat, mu-hat, eta-hat per the duality recipe.
struct HatData {
    int a;
    Partition lambda_hat;
    std::vector<Partition> mu_hat_blocks;
    std::vector<int> eta_hat;
    std::vector<int> mu_hat_concat;
};
HatData hat_construction(const std::vector<Partition>& mu_blocks, const std::vector<int>& eta,
                         const Partition& lambda);

// The classical group paired with a kind by the branching correspondence:
// (1) <-> SO_odd, (2) <-> Sp, (1,1) <-> SO_even.
Group group_for_kind(Kind kind);

// frak_K = stable Lusztig q-analogue through the hat construction (with the
// paired group); checks the GL-decomposition identity internally and throws
// on mismatch.
Laurent frak_K(const std::vector<Partition>& mu_blocks, const Partition& lambda, Kind kind);

// K^{GL_n,U} for the concatenated mu of rectangle stacks (utility).
Laurent gl_parabolic_kostka(int n, const std::vector<Partition>& mu_blocks,
                            const Partition& lambda);

// Classical multiplicity oracles.
long long king_tensor(const Partition& lambda, const Partition& mu, const Partition& nu);
long long littlewood_restriction(const Partition& nu, const Partition& gamma_plus,
                                 const Partition& gamma_minus, Kind kind);

}  // namespace kr
