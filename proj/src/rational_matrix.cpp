#include "cb/rational_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace cb {

RationalMatrix::RationalMatrix(int n) : size_(n) {
    if (n < 0) throw std::invalid_argument("RationalMatrix: negative size");
    entries_.assign(static_cast<std::size_t>(n) * n, mpq_class(0));
}

RationalMatrix RationalMatrix::identity(int n) {
    RationalMatrix m(n);
    for (int i = 1; i <= n; ++i) m.set(i, i, 1);
    return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<mpq_class>>& rows) {
    const int n = static_cast<int>(rows.size());
    RationalMatrix m(n);
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(rows[r - 1].size()) != n)
            throw std::invalid_argument("RationalMatrix::from_rows: ragged rows");
        for (int c = 1; c <= n; ++c) m.set(r, c, rows[r - 1][c - 1]);
    }
    return m;
}

RationalMatrix RationalMatrix::from_int_rows(const std::vector<std::vector<long>>& rows) {
    const int n = static_cast<int>(rows.size());
    RationalMatrix m(n);
    for (int r = 1; r <= n; ++r) {
        if (static_cast<int>(rows[r - 1].size()) != n)
            throw std::invalid_argument("RationalMatrix::from_int_rows: ragged rows");
        for (int c = 1; c <= n; ++c) m.set(r, c, mpq_class(rows[r - 1][c - 1]));
    }
    return m;
}

const mpq_class& RationalMatrix::at(int r, int c) const {
    if (r < 1 || r > size_ || c < 1 || c > size_)
        throw std::out_of_range("RationalMatrix::at: index out of range");
    return entries_[static_cast<std::size_t>(r - 1) * size_ + (c - 1)];
}

void RationalMatrix::set(int r, int c, mpq_class v) {
    if (r < 1 || r > size_ || c < 1 || c > size_)
        throw std::out_of_range("RationalMatrix::set: index out of range");
    entries_[static_cast<std::size_t>(r - 1) * size_ + (c - 1)] = std::move(v);
}

bool RationalMatrix::is_identity() const {
    for (int r = 1; r <= size_; ++r)
        for (int c = 1; c <= size_; ++c)
            if (at(r, c) != (r == c ? 1 : 0)) return false;
    return true;
}

bool RationalMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (e != 0) return false;
    return true;
}

bool RationalMatrix::is_integer() const {
    for (const auto& e : entries_)
        if (e.get_den() != 1) return false;
    return true;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("RationalMatrix *: size mismatch");
    const int n = a.size();
    RationalMatrix m(n);
    for (int r = 1; r <= n; ++r)
        for (int c = 1; c <= n; ++c) {
            mpq_class sum = 0;
            for (int k = 1; k <= n; ++k) sum += a.at(r, k) * b.at(k, c);
            m.set(r, c, std::move(sum));
        }
    return m;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("RationalMatrix +: size mismatch");
    RationalMatrix m(a.size());
    for (std::size_t i = 0; i < m.entries_.size(); ++i)
        m.entries_[i] = a.entries_[i] + b.entries_[i];
    return m;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
    if (a.size() != b.size()) throw std::invalid_argument("RationalMatrix -: size mismatch");
    RationalMatrix m(a.size());
    for (std::size_t i = 0; i < m.entries_.size(); ++i)
        m.entries_[i] = a.entries_[i] - b.entries_[i];
    return m;
}

RationalMatrix RationalMatrix::pow(int k) const {
    if (k < 0) throw std::invalid_argument("RationalMatrix::pow: negative exponent");
    RationalMatrix acc = identity(size_);
    RationalMatrix base = *this;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

namespace {

// Fraction-free forward elimination is unnecessary at these sizes;
// plain Gauss with exact rationals is simplest and still exact.
struct Elimination {
    std::vector<std::vector<mpq_class>> rows;
    mpq_class det = 1;
    int rank = 0;
};

Elimination eliminate(const RationalMatrix& m) {
    const int n = m.size();
    Elimination e;
    e.rows.assign(n, std::vector<mpq_class>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) e.rows[r][c] = m.at(r + 1, c + 1);

    int pivot_row = 0;
    for (int col = 0; col < n && pivot_row < n; ++col) {
        int sel = -1;
        for (int r = pivot_row; r < n; ++r)
            if (e.rows[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        if (sel != pivot_row) {
            std::swap(e.rows[sel], e.rows[pivot_row]);
            e.det = -e.det;
        }
        e.det *= e.rows[pivot_row][col];
        for (int r = pivot_row + 1; r < n; ++r) {
            if (e.rows[r][col] == 0) continue;
            mpq_class factor = e.rows[r][col] / e.rows[pivot_row][col];
            for (int c = col; c < n; ++c) e.rows[r][c] -= factor * e.rows[pivot_row][c];
        }
        ++pivot_row;
    }
    e.rank = pivot_row;
    if (e.rank < n) e.det = 0;
    return e;
}

} // namespace

mpq_class RationalMatrix::det() const {
    if (size_ == 0) return 1;
    return eliminate(*this).det;
}

int RationalMatrix::rank() const { return eliminate(*this).rank; }

std::optional<RationalMatrix> RationalMatrix::inverse() const {
    const int n = size_;
    // Gauss-Jordan on [M | I].
    std::vector<std::vector<mpq_class>> aug(n, std::vector<mpq_class>(2 * n, mpq_class(0)));
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) aug[r][c] = at(r + 1, c + 1);
        aug[r][n + r] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int sel = -1;
        for (int r = col; r < n; ++r)
            if (aug[r][col] != 0) {
                sel = r;
                break;
            }
        if (sel < 0) return std::nullopt;
        std::swap(aug[sel], aug[col]);
        mpq_class inv_pivot = 1 / aug[col][col];
        for (int c = 0; c < 2 * n; ++c) aug[col][c] *= inv_pivot;
        for (int r = 0; r < n; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            mpq_class factor = aug[r][col];
            for (int c = 0; c < 2 * n; ++c) aug[r][c] -= factor * aug[col][c];
        }
    }
    RationalMatrix out(n);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) out.set(r + 1, c + 1, aug[r][n + c]);
    return out;
}

std::vector<mpq_class> RationalMatrix::apply(const std::vector<mpq_class>& v) const {
    if (static_cast<int>(v.size()) != size_)
        throw std::invalid_argument("RationalMatrix::apply: dimension mismatch");
    std::vector<mpq_class> out(size_, mpq_class(0));
    for (int r = 1; r <= size_; ++r)
        for (int c = 1; c <= size_; ++c) out[r - 1] += at(r, c) * v[c - 1];
    return out;
}

std::string RationalMatrix::str() const {
    std::ostringstream out;
    out << "[";
    for (int r = 1; r <= size_; ++r) {
        if (r > 1) out << " ";
        out << "[";
        for (int c = 1; c <= size_; ++c) {
            if (c > 1) out << ", ";
            out << at(r, c).get_str();
        }
        out << "]";
        if (r < size_) out << "\n";
    }
    out << "]";
    return out.str();
}

} // namespace cb
