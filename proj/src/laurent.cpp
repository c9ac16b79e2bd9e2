#include "kr/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace kr {

int Laurent::min_exponent() const {
    if (coef_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return coef_.begin()->first;
}

int Laurent::max_exponent() const {
    if (coef_.empty()) throw std::logic_error("zero polynomial has no exponents");
    return coef_.rbegin()->first;
}

bool Laurent::nonnegative() const {
    for (const auto& [e, c] : coef_)
        if (c < 0) return false;
    return true;
}

long long Laurent::at_one() const {
    long long s = 0;
    for (const auto& [e, c] : coef_) s += c;
    return s;
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.coef_) {
        long long v = (coef_[e] += c);
        if (v == 0) coef_.erase(e);
    }
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.coef_) {
        long long v = (coef_[e] -= c);
        if (v == 0) coef_.erase(e);
    }
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    r -= o;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : coef_)
        for (const auto& [e2, c2] : o.coef_) {
            long long v = (r.coef_[e1 + e2] += c1 * c2);
            if (v == 0) r.coef_.erase(e1 + e2);
        }
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) { return *this = *this * o; }

Laurent Laurent::substitute_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitution exponent must be nonzero");
    Laurent r;
    for (const auto& [e, c] : coef_) r.coef_[e * k] = c;
    return r;
}

Laurent Laurent::shifted(int e) const {
    Laurent r;
    for (const auto& [e0, c] : coef_) r.coef_[e0 + e] = c;
    return r;
}

std::string Laurent::to_string() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : coef_) {
        long long a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << "*";
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

}  // namespace kr
