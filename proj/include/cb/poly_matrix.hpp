#pragma once

// Square matrices over the Laurent ring, with the column-builder
// conventions used for pure braid images: t_{i->j} denotes the column
// vector with t in positions i..j-1, and c_s(v) the matrix whose only
// nonzero column is column s = v. Rows and columns are numbered from 1.

#include <string>
#include <vector>

#include "cb/laurent.hpp"
#include "cb/rational_matrix.hpp"

namespace cb {

class PolyMatrix {
public:
    // Zero matrix, n x n over `nvars` variables.
    PolyMatrix(int n, int nvars);
    static PolyMatrix identity(int n, int nvars);

    int size() const { return size_; }
    int nvars() const { return nvars_; }

    const LaurentPoly& at(int r, int c) const;
    void set(int r, int c, LaurentPoly v); // validates nvars

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix& other) const = default;

    bool is_identity() const;

    // Exact determinant by cofactor expansion; columns are consumed
    // sparsest-first and minors are memoized, so near-identity matrices
    // cost almost nothing.
    LaurentPoly det() const;

    // Entrywise variable permutation ^sM; a multiplicative action.
    PolyMatrix permuted(const Permutation& s) const;

    // Entrywise evaluation at a rational point.
    RationalMatrix eval(const std::vector<mpq_class>& point) const;

    std::string str() const;

private:
    int size_;
    int nvars_;
    std::vector<LaurentPoly> entries_; // row-major
};

// The column vector value_{i->j}: `value` in positions i..j-1, zero
// elsewhere. Requires 1 <= i < j <= n+1 (j = n+1 fills through row n).
std::vector<LaurentPoly> col_vector(const LaurentPoly& value, int i, int j, int n);

// c_s(v): the square matrix whose s-column is v and all other entries zero.
PolyMatrix col_embed(int s, const std::vector<LaurentPoly>& v);

// Entrywise burau_quotient; the result is a matrix over one variable.
PolyMatrix burau_specialize(const PolyMatrix& m);

} // namespace cb
