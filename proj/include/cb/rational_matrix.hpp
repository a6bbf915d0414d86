#pragma once

// Dense square matrices over the rationals (GMP mpq), used for exact
// linear algebra after evaluating polynomial matrices at a point. No
// floating point anywhere. Rows and columns are 1-based at the API.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace cb {

class RationalMatrix {
public:
    RationalMatrix() : size_(0) {}
    // Zero matrix.
    explicit RationalMatrix(int n);
    static RationalMatrix identity(int n);
    static RationalMatrix from_rows(const std::vector<std::vector<mpq_class>>& rows);
    // Convenience for integer literals in tests and fixed blocks.
    static RationalMatrix from_int_rows(const std::vector<std::vector<long>>& rows);

    int size() const { return size_; }
    const mpq_class& at(int r, int c) const;
    void set(int r, int c, mpq_class v);

    bool is_identity() const;
    bool is_zero() const;
    bool is_integer() const; // every entry has denominator 1

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    bool operator==(const RationalMatrix& other) const = default;

    RationalMatrix pow(int k) const; // k >= 0

    mpq_class det() const;
    int rank() const;
    // Exact inverse, or nullopt when singular.
    std::optional<RationalMatrix> inverse() const;

    std::vector<mpq_class> apply(const std::vector<mpq_class>& v) const;

    std::string str() const;

private:
    int size_;
    std::vector<mpq_class> entries_; // row-major
};

} // namespace cb
