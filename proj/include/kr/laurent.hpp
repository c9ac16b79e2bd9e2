#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace kr {

// Exact integer-coefficient Laurent polynomial in q. Zero coefficients are
// never stored.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(long long constant) {
        if (constant) coef_[0] = constant;
    }
    static Laurent monomial(long long c, int exponent) {
        Laurent p;
        if (c) p.coef_[exponent] = c;
        return p;
    }

    const std::map<int, long long>& coefficients() const { return coef_; }
    long long coefficient(int e) const {
        auto it = coef_.find(e);
        return it == coef_.end() ? 0 : it->second;
    }
    bool is_zero() const { return coef_.empty(); }
    int min_exponent() const;
    int max_exponent() const;
    bool nonnegative() const;
    long long at_one() const;  // evaluation at q = 1

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o);
    bool operator==(const Laurent& o) const { return coef_ == o.coef_; }
    bool operator!=(const Laurent& o) const { return coef_ != o.coef_; }

    // q -> q^k for nonzero integer k (k may be negative).
    Laurent substitute_power(int k) const;
    Laurent shifted(int e) const;  // multiply by q^e

    std::string to_string() const;  // sorted "q^-1 + 2 + 3*q^2" form

private:
    std::map<int, long long> coef_;
};

}  // namespace kr
