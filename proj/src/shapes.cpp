#include "kr/shapes.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace kr {

void Partition::normalize() {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("negative part in partition");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("parts not weakly decreasing");
    }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("partition part index");
    return i <= length() ? parts_[i - 1] : 0;
}

int Partition::col_height(int c) const {
    if (c < 1) throw std::out_of_range("partition column index");
    int h = 0;
    for (int p : parts_)
        if (p >= c) ++h;
    return h;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int c = 1; c <= (parts_.empty() ? 0 : parts_[0]); ++c) out.push_back(col_height(c));
    return Partition(out);
}

bool Partition::contains(const Partition& inner) const {
    for (int i = 1; i <= inner.length(); ++i)
        if (part(i) < inner.part(i)) return false;
    return true;
}

Partition Partition::add_box_in_column(int c) const {
    int h = col_height(c);
    std::vector<int> out = parts_;
    if (h == length())
        out.push_back(0);
    if (out[h] != c - 1) throw std::invalid_argument("box not addable in column");
    out[h] = c;
    return Partition(out);
}

Partition Partition::remove_box_in_column(int c) const {
    int h = col_height(c);
    if (h == 0) throw std::invalid_argument("empty column");
    std::vector<int> out = parts_;
    if (out[h - 1] != c) throw std::invalid_argument("box not removable in column");
    out[h - 1] = c - 1;
    return Partition(out);
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    return Partition(parts);
}

int rect_list_size(const RectangleList& R) {
    int s = 0;
    for (const auto& r : R) s += r.rows * r.cols;
    return s;
}

int rect_intersection(const Rectangle& a, const Rectangle& b) {
    return std::min(a.rows, b.rows) * std::min(a.cols, b.cols);
}

int rect_list_norm(const RectangleList& R) {
    int s = 0;
    for (size_t i = 0; i < R.size(); ++i)
        for (size_t j = i + 1; j < R.size(); ++j) s += rect_intersection(R[i], R[j]);
    return s;
}

namespace {

// Backtracking enumeration of skew SSYT of shape nu/delta with content lambda
// whose row word (rows top to bottom, each right to left) is Yamanouchi.
long long count_lr_tableaux(const Partition& delta, const Partition& lambda, const Partition& nu) {
    if (!nu.contains(delta)) return 0;
    if (delta.size() + lambda.size() != nu.size()) return 0;
    int rows = nu.length();
    int k = lambda.length();
    std::vector<int> remaining(k + 1, 0);
    for (int i = 1; i <= k; ++i) remaining[i] = lambda.part(i);
    // grid[r][c] holds the letter, 0-based rows/cols; 0 = unset.
    std::vector<std::vector<int>> grid(rows);
    for (int r = 0; r < rows; ++r) grid[r].assign(nu.part(r + 1), 0);
    std::vector<int> seen(k + 2, 0);  // counts of letters already read

    long long count = 0;
    // Fill cells in the row-word order so the Yamanouchi prefix condition can
    // be tested as we go: rows top to bottom, each row right to left.
    std::vector<std::pair<int, int>> order;
    for (int r = 0; r < rows; ++r)
        for (int c = nu.part(r + 1) - 1; c >= delta.part(r + 1); --c) order.push_back({r, c});

    std::function<void(size_t)> rec = [&](size_t idx) {
        if (idx == order.size()) {
            ++count;
            return;
        }
        auto [r, c] = order[idx];
        for (int letter = 1; letter <= k; ++letter) {
            if (remaining[letter] == 0) continue;
            // Yamanouchi: after reading, #(letter) <= #(letter-1).
            if (letter > 1 && seen[letter] + 1 > seen[letter - 1]) continue;
            // Row weakly increasing: cell to the right was already placed.
            if (c + 1 < nu.part(r + 1) && grid[r][c + 1] != 0 && letter > grid[r][c + 1]) continue;
            // Column strictly increasing w.r.t. the cell above.
            if (r > 0 && c < nu.part(r) && c >= delta.part(r)) {
                if (grid[r - 1][c] == 0 || grid[r - 1][c] >= letter) continue;
            }
            grid[r][c] = letter;
            --remaining[letter];
            ++seen[letter];
            rec(idx + 1);
            grid[r][c] = 0;
            ++remaining[letter];
            --seen[letter];
        }
    };
    rec(0);
    return count;
}

}  // namespace

long long lr_coefficient(const Partition& delta, const Partition& lambda, const Partition& nu) {
    return count_lr_tableaux(delta, lambda, nu);
}

std::vector<std::pair<Partition, long long>> multi_lr_expand(const std::vector<Partition>& mus) {
    std::map<Partition, long long> acc;
    acc[Partition()] = 1;
    for (const auto& mu : mus) {
        std::map<Partition, long long> next;
        for (const auto& [kappa, coeff] : acc) {
            int total = kappa.size() + mu.size();
            for (const auto& nu : partitions_of(total)) {
                long long c = lr_coefficient(kappa, mu, nu);
                if (c) next[nu] += coeff * c;
            }
        }
        acc = std::move(next);
    }
    return {acc.begin(), acc.end()};
}

long long multi_lr(const std::vector<Partition>& mus, const Partition& lambda) {
    for (const auto& [nu, c] : multi_lr_expand(mus))
        if (nu == lambda) return c;
    return 0;
}

std::vector<Partition> partitions_of(int m) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(m, m == 0 ? 1 : m);
    return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int row, int maxpart) {
        out.emplace_back(cur);
        if (row == rows) return;
        for (int p = maxpart; p >= 1; --p) {
            cur.push_back(p);
            rec(row + 1, p);
            cur.pop_back();
        }
    };
    rec(0, cols);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int kind_cells(Kind k) {
    switch (k) {
        case Kind::None: return 0;
        case Kind::One: return 1;
        default: return 2;
    }
}

Kind kind_transpose(Kind k) {
    switch (k) {
        case Kind::Two: return Kind::OneOne;
        case Kind::OneOne: return Kind::Two;
        default: return k;
    }
}

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::None: return "empty";
        case Kind::One: return "(1)";
        case Kind::Two: return "(2)";
        case Kind::OneOne: return "(1,1)";
    }
    return "?";
}

bool in_diamond_set(Kind k, const Partition& lambda) {
    switch (k) {
        case Kind::None: return lambda.empty();
        case Kind::One: return true;
        case Kind::Two:
            for (int p : lambda.parts())
                if (p % 2) return false;
            return true;
        case Kind::OneOne:
            return in_diamond_set(Kind::Two, lambda.conjugate());
    }
    return false;
}

Partition rotated_complement(const Partition& lambda, int r, int s) {
    if (lambda.length() > r || lambda.part(1) > s)
        throw std::invalid_argument("shape does not fit in rectangle");
    std::vector<int> out;
    for (int i = r; i >= 1; --i) out.push_back(s - lambda.part(i));
    return Partition(out);
}

std::vector<Partition> kr_component_shapes(Kind k, int n, int r, int s) {
    if (k == Kind::None) {
        if (r > n - 1) throw std::invalid_argument("row index exceeds the rank");
        return {Partition(std::vector<int>(r, s))};
    }
    if (r > n - 2) throw std::invalid_argument("rank too small for component set (need r <= n-2)");
    std::vector<Partition> out;
    for (const auto& lam : partitions_in_box(r, s))
        if (in_diamond_set(k, rotated_complement(lam, r, s))) out.push_back(lam);
    return out;
}

Partition lambda_min(Kind k, int r, int s) {
    switch (k) {
        case Kind::None: return Partition(std::vector<int>(r, s));
        case Kind::OneOne:
            if (r % 2) return Partition({s});
            return Partition();
        case Kind::Two:
            if (s % 2) return Partition(std::vector<int>(r, 1));
            return Partition();
        case Kind::One: return Partition();
    }
    return Partition();
}

Partition lambda_minus(Kind k, const Partition& lambda, int r, int s) {
    Partition lmin = lambda_min(k, r, s);
    if (lambda == lmin) throw std::invalid_argument("lambda is already minimal");
    // Rightmost column where lambda and lambda_min differ.
    int p = 0;
    for (int c = 1; c <= s; ++c)
        if (lambda.col_height(c) != lmin.col_height(c)) p = c;
    if (p == 0) throw std::logic_error("no differing column");
    Partition out;
    switch (k) {
        case Kind::One: out = lambda.remove_box_in_column(p); break;
        case Kind::OneOne: out = lambda.remove_box_in_column(p).remove_box_in_column(p); break;
        case Kind::Two: out = lambda.remove_box_in_column(p).remove_box_in_column(p - 1); break;
        case Kind::None: throw std::invalid_argument("no removal for the empty kind");
    }
    bool member = false;
    for (const auto& m : kr_component_shapes(k, r + 2, r, s))
        if (m == out) member = true;
    if (!member) throw std::logic_error("lambda_minus left the component set");
    return out;
}

}  // namespace kr
