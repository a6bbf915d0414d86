#include "cb/poly_matrix.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace cb {

PolyMatrix::PolyMatrix(int n, int nvars) : size_(n), nvars_(nvars) {
    if (n < 0) throw std::invalid_argument("PolyMatrix: negative size");
    if (nvars < 0) throw std::invalid_argument("PolyMatrix: negative variable count");
    entries_.assign(static_cast<std::size_t>(n) * n, LaurentPoly(nvars));
}

PolyMatrix PolyMatrix::identity(int n, int nvars) {
    PolyMatrix m(n, nvars);
    for (int i = 1; i <= n; ++i) m.set(i, i, LaurentPoly::constant(nvars, 1));
    return m;
}

const LaurentPoly& PolyMatrix::at(int r, int c) const {
    if (r < 1 || r > size_ || c < 1 || c > size_)
        throw std::out_of_range("PolyMatrix::at: index out of range");
    return entries_[static_cast<std::size_t>(r - 1) * size_ + (c - 1)];
}

void PolyMatrix::set(int r, int c, LaurentPoly v) {
    if (r < 1 || r > size_ || c < 1 || c > size_)
        throw std::out_of_range("PolyMatrix::set: index out of range");
    if (v.nvars() != nvars_)
        throw std::invalid_argument("PolyMatrix::set: entry variable count mismatch");
    entries_[static_cast<std::size_t>(r - 1) * size_ + (c - 1)] = std::move(v);
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size() || a.nvars() != b.nvars())
        throw std::invalid_argument("PolyMatrix +: shape mismatch");
    PolyMatrix m(a.size(), a.nvars());
    for (std::size_t i = 0; i < m.entries_.size(); ++i)
        m.entries_[i] = a.entries_[i] + b.entries_[i];
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.size() != b.size() || a.nvars() != b.nvars())
        throw std::invalid_argument("PolyMatrix *: shape mismatch");
    const int n = a.size();
    PolyMatrix m(n, a.nvars());
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            LaurentPoly sum(a.nvars());
            for (int k = 1; k <= n; ++k) {
                if (a.at(r, k).is_zero() || b.at(k, c).is_zero()) continue;
                sum += a.at(r, k) * b.at(k, c);
            }
            m.set(r, c, std::move(sum));
        }
    return m;
}

bool PolyMatrix::is_identity() const {
    for (int r = 1; r <= size_; ++r)
        for (int c = 1; c <= size_; ++c) {
            const LaurentPoly& e = at(r, c);
            if (r == c ? !e.is_one() : !e.is_zero()) return false;
        }
    return true;
}

LaurentPoly PolyMatrix::det() const {
    const int n = size_;
    if (n == 0) return LaurentPoly::constant(nvars_, 1);
    if (n > 30) throw std::invalid_argument("PolyMatrix::det: size too large");

    // Consume the sparsest columns first; the expansion then branches
    // on as few nonzero entries as possible.
    std::vector<int> order(n);
    for (int c = 0; c < n; ++c) order[c] = c;
    std::vector<int> nonzeros(n, 0);
    for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r)
            if (!at(r + 1, c + 1).is_zero()) ++nonzeros[c];
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return nonzeros[a] < nonzeros[b]; });

    // Sign of the column reordering: det(M) = sgn * det(M with columns
    // permuted into `order`).
    int sign = 1;
    {
        std::vector<bool> seen(n, false);
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0;
            for (int j = i; !seen[j]; j = order[j]) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
    }

    // D(mask) = det of the minor on rows in `mask` and the last
    // popcount(mask) columns of the reordered matrix.
    std::unordered_map<std::uint32_t, LaurentPoly> memo;
    auto expand = [&](auto&& self, std::uint32_t mask) -> const LaurentPoly& {
        auto found = memo.find(mask);
        if (found != memo.end()) return found->second;
        LaurentPoly result(nvars_);
        int remaining = __builtin_popcount(mask);
        int col = order[n - remaining];
        int row_rank = 0;
        for (int r = 0; r < n; ++r) {
            if (!(mask & (1u << r))) continue;
            const LaurentPoly& entry = at(r + 1, col + 1);
            if (!entry.is_zero()) {
                if (remaining == 1) {
                    result += entry;
                } else {
                    LaurentPoly sub = entry * self(self, mask & ~(1u << r));
                    if (row_rank % 2 == 0)
                        result += sub;
                    else
                        result -= sub;
                }
            }
            ++row_rank;
        }
        return memo.emplace(mask, std::move(result)).first->second;
    };

    std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    LaurentPoly d = expand(expand, full);
    return sign == 1 ? d : -d;
}

PolyMatrix PolyMatrix::permuted(const Permutation& s) const {
    PolyMatrix m(size_, nvars_);
    for (int r = 1; r <= size_; ++r)
        for (int c = 1; c <= size_; ++c) m.set(r, c, at(r, c).permuted(s));
    return m;
}

RationalMatrix PolyMatrix::eval(const std::vector<mpq_class>& point) const {
    RationalMatrix m(size_);
    for (int r = 1; r <= size_; ++r)
        for (int c = 1; c <= size_; ++c) m.set(r, c, at(r, c).eval(point));
    return m;
}

std::string PolyMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int r = 1; r <= size_; ++r) {
        if (r > 1) out << " ";
        out << "[";
        for (int c = 1; c <= size_; ++c) {
            if (c > 1) out << ", ";
            out << at(r, c).str();
        }
        out << "]";
        if (r < size_) out << "\n";
    }
    out << "]";
    return out.str();
}

std::vector<LaurentPoly> col_vector(const LaurentPoly& value, int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n + 1))
        throw std::invalid_argument("col_vector: need 1 <= i < j <= n+1");
    std::vector<LaurentPoly> v(n, LaurentPoly(value.nvars()));
    for (int r = i; r <= j - 1; ++r) v[r - 1] = value;
    return v;
}

PolyMatrix col_embed(int s, const std::vector<LaurentPoly>& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) throw std::invalid_argument("col_embed: empty column");
    if (s < 1 || s > n) throw std::invalid_argument("col_embed: column index out of range");
    PolyMatrix m(n, v[0].nvars());
    for (int r = 1; r <= n; ++r) m.set(r, s, v[r - 1]);
    return m;
}

PolyMatrix burau_specialize(const PolyMatrix& m) {
    PolyMatrix out(m.size(), 1);
    for (int r = 1; r <= m.size(); ++r)
        for (int c = 1; c <= m.size(); ++c) out.set(r, c, burau_quotient(m.at(r, c)));
    return out;
}

} // namespace cb
