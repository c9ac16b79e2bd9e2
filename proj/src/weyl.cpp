#include "kr/weyl.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kr {

std::string group_name(Group g) {
    switch (g) {
        case Group::GL: return "GL";
        case Group::SO_odd: return "SO_odd";
        case Group::Sp: return "Sp";
        case Group::SO_even: return "SO_even";
    }
    return "?";
}

RootSystemData::RootSystemData(Group g, int n) : group_(g), n_(n) {
    auto vec = [&](int i, int j, int ci, int cj) {
        std::vector<int> v(n_, 0);
        v[i] = ci;
        if (j >= 0) v[j] = cj;
        return v;
    };
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j) roots_.push_back(vec(i, j, 1, -1));
    if (g != Group::GL) {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j) roots_.push_back(vec(i, j, 1, 1));
        if (g == Group::SO_odd)
            for (int i = 0; i < n_; ++i) roots_.push_back(vec(i, -1, 1, 0));
        if (g == Group::Sp)
            for (int i = 0; i < n_; ++i) roots_.push_back(vec(i, -1, 2, 0));
    }
    two_rho_.assign(n_, 0);
    for (const auto& r : roots_)
        for (int i = 0; i < n_; ++i) two_rho_[i] += r[i];
    if (g == Group::GL) {
        // Shift to (n-1, ..., 1, 0) doubled; harmless for the S_n dot action.
        two_rho_.clear();
        for (int i = 0; i < n_; ++i) two_rho_.push_back(2 * (n_ - 1 - i));
    }
}

int RootSystemData::root_length_weight(const std::vector<int>& alpha) const {
    // For SO_odd: eps_i +- eps_j are long (weight 2), eps_i short (weight 1).
    int nonzero = 0;
    for (int c : alpha)
        if (c != 0) ++nonzero;
    return nonzero == 2 ? 2 : 1;
}

void RootSystemData::for_each_weyl(const std::function<void(const SignedPerm&)>& fn) const {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int psign = 1;
        {
            // permutation parity
            std::vector<bool> seen(n_, false);
            for (int i = 0; i < n_; ++i) {
                if (seen[i]) continue;
                int len = 0, j = i;
                while (!seen[j]) {
                    seen[j] = true;
                    j = perm[j];
                    ++len;
                }
                if (len % 2 == 0) psign = -psign;
            }
        }
        if (group_ == Group::GL) {
            SignedPerm w{perm, std::vector<int>(n_, 1), psign};
            fn(w);
        } else {
            for (int mask = 0; mask < (1 << n_); ++mask) {
                int flips = __builtin_popcount(mask);
                if (group_ == Group::SO_even && (flips % 2)) continue;
                SignedPerm w;
                w.perm = perm;
                w.sign.resize(n_);
                for (int i = 0; i < n_; ++i) w.sign[i] = (mask >> i) & 1 ? -1 : 1;
                w.det = psign * ((flips % 2) ? -1 : 1);
                fn(w);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

void RootSystemData::for_each_symmetric(const std::function<void(const SignedPerm&)>& fn) const {
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int psign = 1;
        std::vector<bool> seen(n_, false);
        for (int i = 0; i < n_; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = true;
                j = perm[j];
                ++len;
            }
            if (len % 2 == 0) psign = -psign;
        }
        SignedPerm w{perm, std::vector<int>(n_, 1), psign};
        fn(w);
    } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<int> RootSystemData::apply(const SignedPerm& w, const std::vector<int>& v) const {
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) out[i] = w.sign[i] * v[w.perm[i]];
    return out;
}

std::vector<int> RootSystemData::dot_action(const SignedPerm& w,
                                            const std::vector<int>& lambda) const {
    std::vector<int> dbl(n_);
    for (int i = 0; i < n_; ++i) dbl[i] = 2 * lambda[i] + two_rho_[i];
    auto moved = apply(w, dbl);
    std::vector<int> out(n_);
    for (int i = 0; i < n_; ++i) {
        int v = moved[i] - two_rho_[i];
        if (v % 2) throw std::logic_error("dot action left half-integers");
        out[i] = v / 2;
    }
    return out;
}

long long weyl_dimension(Group g, int n, const Partition& lambda) {
    RootSystemData rs(g, n);
    if (lambda.length() > n) return 0;
    __int128 num = 1, den = 1;
    auto pairing = [&](const std::vector<int>& wt2, const std::vector<int>& alpha) {
        long long s = 0;
        for (int i = 0; i < n; ++i) s += static_cast<long long>(wt2[i]) * alpha[i];
        return s;
    };
    auto reduce = [&]() {
        __int128 a0 = num < 0 ? -num : num, b0 = den < 0 ? -den : den;
        while (b0) {
            __int128 t = a0 % b0;
            a0 = b0;
            b0 = t;
        }
        if (a0 > 1) {
            num /= a0;
            den /= a0;
        }
    };
    std::vector<int> lam2(n, 0);
    for (int i = 0; i < n; ++i) lam2[i] = 2 * lambda.part(i + 1) + rs.two_rho()[i];
    for (const auto& alpha : rs.positive_roots()) {
        num *= pairing(lam2, alpha);
        den *= pairing(rs.two_rho(), alpha);
        reduce();
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    if (den == 0 || num % den != 0) throw std::logic_error("non-integral Weyl dimension");
    return static_cast<long long>(num / den);
}

long long weyl_dimension_family(char family, int n, const Partition& lambda) {
    switch (family) {
        case 'A': return weyl_dimension(Group::GL, n, lambda);
        case 'B': return weyl_dimension(Group::SO_odd, n, lambda);
        case 'C': return weyl_dimension(Group::Sp, n, lambda);
        case 'D': return weyl_dimension(Group::SO_even, n, lambda);
    }
    throw std::invalid_argument("unknown family");
}

std::vector<int> LeviSelection::levi_simples(Group g) const {
    (void)g;
    std::vector<int> out;
    int pos = 0;
    for (int block : eta) {
        for (int i = pos + 1; i <= pos + block - 1; ++i) out.push_back(i);
        pos += block;
    }
    return out;
}

QPartition::QPartition(Group g, int n, const LeviSelection& levi, bool length_weighted) : rs_(g, n) {
    auto simples = levi.levi_simples(g);
    // The Levi's positive roots: sums of consecutive simples within blocks,
    // which for GL-block Levis are eps_i - eps_j with i, j in one block.
    std::vector<int> block_id(n, -1);
    int pos = 0, bid = 0;
    for (int block : levi.eta) {
        for (int i = pos; i < pos + block; ++i) block_id[i] = bid;
        pos += block;
        ++bid;
    }
    for (const auto& alpha : rs_.positive_roots()) {
        // Inside the Levi iff alpha = eps_i - eps_j with block_id equal.
        int iplus = -1, iminus = -1, nz = 0;
        bool gl_root = true;
        for (int i = 0; i < n; ++i) {
            if (alpha[i] == 1) {
                iplus = i;
                ++nz;
            } else if (alpha[i] == -1) {
                iminus = i;
                ++nz;
            } else if (alpha[i] != 0) {
                gl_root = false;
            }
        }
        bool in_levi = gl_root && nz == 2 && iminus >= 0 && iplus >= 0 &&
                       block_id[iplus] >= 0 && block_id[iplus] == block_id[iminus];
        if (in_levi) continue;
        roots_.push_back(alpha);
        lweight_.push_back(length_weighted ? rs_.root_length_weight(alpha) : 1);
    }
}

const Laurent& QPartition::value(const std::vector<int>& beta) {
    return eval(static_cast<int>(roots_.size()), beta);
}

namespace {

// Strictly positive functional on all positive roots: h(v) = sum w_i v_i with
// w_i = 2(n-1-i) + 1. Every positive root of GL/Sp/SO has h >= 1, so the
// number of roots in a decomposition of beta is at most h(beta).
long long root_height(const std::vector<int>& v) {
    int n = static_cast<int>(v.size());
    long long s = 0;
    for (int i = 0; i < n; ++i) s += static_cast<long long>(2 * (n - 1 - i) + 1) * v[i];
    return s;
}

}  // namespace

const Laurent& QPartition::eval(int i, const std::vector<int>& beta) {
    bool zero = std::all_of(beta.begin(), beta.end(), [](int x) { return x == 0; });
    if (i == 0) {
        static Laurent one(1);
        if (zero) return one;
        return zero_;
    }
    long long hb = root_height(beta);
    if (hb < 0) return zero_;
    auto key = std::make_pair(i, beta);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    Laurent acc;
    const auto& alpha = roots_[i - 1];
    long long ha = root_height(alpha);
    std::vector<int> rest = beta;
    for (long long k = 0; k * ha <= hb; ++k) {
        const Laurent& sub = eval(i - 1, rest);
        if (!sub.is_zero()) acc += sub.shifted(static_cast<int>(k) * lweight_[i - 1]);
        for (size_t j = 0; j < rest.size(); ++j) rest[j] -= alpha[j];
    }
    return memo_.emplace(std::move(key), std::move(acc)).first->second;
}

namespace {

Laurent weyl_alternating_sum(Group g, int n, const LeviSelection& levi, const Partition& lambda,
                             const std::vector<int>& mu, bool symmetric_only,
                             bool length_weighted) {
    RootSystemData rs(g, n);
    QPartition qp(g, n, levi, length_weighted);
    std::vector<int> lam(n, 0);
    for (int i = 0; i < n; ++i) lam[i] = lambda.part(i + 1);
    if (static_cast<int>(mu.size()) != n) throw std::invalid_argument("mu length must equal n");
    Laurent acc;
    auto body = [&](const RootSystemData::SignedPerm& w) {
        auto dot = rs.dot_action(w, lam);
        std::vector<int> beta(n);
        for (int i = 0; i < n; ++i) beta[i] = dot[i] - mu[i];
        const Laurent& p = qp.value(beta);
        if (p.is_zero()) return;
        if (w.det > 0)
            acc += p;
        else
            acc -= p;
    };
    if (symmetric_only)
        rs.for_each_symmetric(body);
    else
        rs.for_each_weyl(body);
    return acc;
}

}  // namespace

Laurent lusztig_q(Group g, int n, const LeviSelection& levi, const Partition& lambda,
                  const std::vector<int>& mu) {
    return weyl_alternating_sum(g, n, levi, lambda, mu, false, false);
}

Laurent stable_lusztig_q(Group g, int n, const LeviSelection& levi, const Partition& lambda,
                         const std::vector<int>& mu) {
    return weyl_alternating_sum(g, n, levi, lambda, mu, true, g == Group::SO_odd);
}

HatData hat_construction(const std::vector<Partition>& mu_blocks, const std::vector<int>& eta,
                         const Partition& lambda) {
    if (mu_blocks.size() != eta.size()) throw std::invalid_argument("block count mismatch");
    int n = std::accumulate(eta.begin(), eta.end(), 0);
    std::vector<int> mu;
    for (size_t k = 0; k < eta.size(); ++k) {
        if (mu_blocks[k].length() > eta[k]) throw std::invalid_argument("block too long");
        for (int i = 1; i <= eta[k]; ++i) mu.push_back(mu_blocks[k].part(i));
    }
    int musz = std::accumulate(mu.begin(), mu.end(), 0);
    int lamsz = lambda.size();
    if (lambda.length() > n) throw std::invalid_argument("lambda too long");
    int a = (musz - lamsz + 1) / 2;            // minimal a >= (|mu|-|lambda|)/2 ...
    if (2 * a < musz - lamsz) ++a;
    while (a < lambda.part(1) || a < (mu.empty() ? 0 : *std::max_element(mu.begin(), mu.end())))
        ++a;  // keep hats nonnegative
    HatData out;
    out.a = a;
    {
        std::vector<int> lh;
        for (int i = n; i >= 1; --i) lh.push_back(a - lambda.part(i));
        out.lambda_hat = Partition(lh);
    }
    {
        std::vector<int> muh;
        for (int i = n - 1; i >= 0; --i) muh.push_back(a - mu[i]);
        out.mu_hat_concat = muh;
    }
    int p = static_cast<int>(eta.size());
    out.eta_hat.resize(p);
    for (int k = 0; k < p; ++k) out.eta_hat[k] = eta[p - 1 - k];
    int pos = 0;
    for (int k = 0; k < p; ++k) {
        std::vector<int> blk(out.mu_hat_concat.begin() + pos,
                             out.mu_hat_concat.begin() + pos + out.eta_hat[k]);
        out.mu_hat_blocks.emplace_back(blk);
        pos += out.eta_hat[k];
    }
    return out;
}

Laurent gl_parabolic_kostka(int n, const std::vector<Partition>& mu_blocks,
                            const Partition& lambda) {
    std::vector<int> eta;
    std::vector<int> mu;
    for (const auto& b : mu_blocks) {
        int len = std::max(1, b.length());
        eta.push_back(len);
        for (int i = 1; i <= len; ++i) mu.push_back(b.part(i));
    }
    int total = std::accumulate(eta.begin(), eta.end(), 0);
    if (total > n) throw std::invalid_argument("blocks exceed rank");
    while (total < n) {
        eta.push_back(1);
        mu.push_back(0);
        ++total;
    }
    LeviSelection levi{eta, n};
    return lusztig_q(Group::GL, n, levi, lambda, mu);
}

Group group_for_kind(Kind kind) {
    switch (kind) {
        case Kind::One: return Group::SO_odd;
        case Kind::Two: return Group::Sp;
        case Kind::OneOne: return Group::SO_even;
        default: throw std::invalid_argument("no classical pair for the empty kind");
    }
}

Laurent frak_K(const std::vector<Partition>& mu_blocks, const Partition& lambda, Kind kind) {
    Group g = group_for_kind(kind);
    std::vector<int> eta;
    std::vector<int> mu;
    for (const auto& b : mu_blocks) {
        int len = std::max(1, b.length());
        eta.push_back(len);
        for (int i = 1; i <= len; ++i) mu.push_back(b.part(i));
    }
    int n = std::accumulate(eta.begin(), eta.end(), 0);
    if (lambda.length() > n) return Laurent();
    HatData hat = hat_construction(mu_blocks, eta, lambda);
    LeviSelection levi{hat.eta_hat, n};
    Laurent via_hat = stable_lusztig_q(g, n, levi, hat.lambda_hat, hat.mu_hat_concat);

    // Independent route: the GL decomposition identity.
    int musz = std::accumulate(mu.begin(), mu.end(), 0);
    int diff = musz - lambda.size();
    Laurent rhs;
    if (diff >= 0 && diff % kind_cells(kind) == 0) {
        int sub = 2 / kind_cells(kind);
        for (const auto& delta : partitions_of(diff)) {
            if (!in_diamond_set(kind, delta)) continue;
            for (const auto& nu : partitions_of(musz)) {
                if (nu.length() > n) continue;
                long long c = lr_coefficient(lambda, delta, nu);
                if (!c) continue;
                Laurent k = gl_parabolic_kostka(n, mu_blocks, nu);
                if (k.is_zero()) continue;
                rhs += (k.substitute_power(sub) * Laurent(c));
            }
        }
        rhs = rhs.shifted(diff / kind_cells(kind));
    }
    if (via_hat != rhs)
        throw std::logic_error("frak_K route mismatch: hat=" + via_hat.to_string() +
                               " decomposition=" + rhs.to_string());
    return via_hat;
}

long long king_tensor(const Partition& lambda, const Partition& mu, const Partition& nu) {
    long long total = 0;
    // sum over delta, xi, eta of c^nu_{delta,xi} c^lambda_{delta,eta} c^mu_{xi,eta}
    for (int dsz = 0; dsz <= std::min(lambda.size(), nu.size()); ++dsz) {
        for (const auto& delta : partitions_of(dsz)) {
            if (!lambda.contains(delta) || !nu.contains(delta)) continue;
            int esz = lambda.size() - dsz;
            for (const auto& eta : partitions_of(esz)) {
                long long c2 = lr_coefficient(delta, eta, lambda);
                if (!c2) continue;
                int xsz = nu.size() - dsz;
                if (xsz < 0) continue;
                if (mu.size() != xsz + esz) continue;
                for (const auto& xi : partitions_of(xsz)) {
                    long long c1 = lr_coefficient(delta, xi, nu);
                    if (!c1) continue;
                    long long c3 = lr_coefficient(xi, eta, mu);
                    if (!c3) continue;
                    total += c1 * c2 * c3;
                }
            }
        }
    }
    return total;
}

long long littlewood_restriction(const Partition& nu, const Partition& gamma_plus,
                                 const Partition& gamma_minus, Kind kind) {
    long long total = 0;
    int ksz = gamma_plus.size() + gamma_minus.size();
    for (const auto& kappa : partitions_of(ksz)) {
        long long c1 = lr_coefficient(gamma_plus, gamma_minus, kappa);
        if (!c1) continue;
        int dsz = nu.size() - ksz;
        if (dsz < 0) continue;
        for (const auto& delta : partitions_of(dsz)) {
            if (!in_diamond_set(kind, delta)) continue;
            long long c2 = lr_coefficient(delta, kappa, nu);
            if (c2) total += c1 * c2;
        }
    }
    return total;
}

}  // namespace kr
