#pragma once

// The colored Burau representation: group elements (matrix over the
// Laurent ring, permutation), the twisted product, generator images,
// evaluation of braid words, and closed-form images of the pure braid
// generators together with their inverses and determinants.

#include <vector>

#include "cb/braid.hpp"
#include "cb/laurent.hpp"
#include "cb/permutation.hpp"
#include "cb/poly_matrix.hpp"

namespace cb {

// Element of GL_n(L_n) x| S_n. The matrix has size n and nvars n.
struct CBElement {
    PolyMatrix matrix;
    Permutation perm;

    bool is_identity() const;
    bool operator==(const CBElement&) const = default;
};

CBElement cb_identity(int n);

// (M, s) * (M', s') = (M . sM', s s') where sM' permutes the variables
// of every entry by s.
CBElement star_mul(const CBElement& a, const CBElement& b);
inline CBElement operator*(const CBElement& a, const CBElement& b) { return star_mul(a, b); }

// Image of sigma_i^{sign}. The positive matrix is the identity except
// row i = (t_i, -t_i, 1) in columns i-1, i, i+1; the negative one is
// the identity except row i = (1, -1/t_{i+1}, 1/t_{i+1}). Requires
// 1 <= i <= n-1, sign in {+1,-1}.
CBElement cb_generator(int i, int n, int sign);

// Left-to-right product of generator images; the homomorphism applied
// to the word.
CBElement cb_apply(const BraidWord& w);

// Closed-form image of the pure braid generator A_{i,j} (1 <= i < j <= n):
// the identity plus four rank-one column corrections supported on
// columns i-1, i, j-1, j (column i-1 absent when i = 1; columns i and
// j-1 merge when j = i+1). Its underlying permutation is trivial.
PolyMatrix pure_braid_matrix(int i, int j, int n);

// Closed-form inverse of pure_braid_matrix(i, j, n).
PolyMatrix pure_braid_matrix_inverse(int i, int j, int n);

// det cb(A_{i,j}) = t_i t_j.
LaurentPoly pure_braid_det(int i, int j, int n);

} // namespace cb
