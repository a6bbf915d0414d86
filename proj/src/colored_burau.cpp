#include "cb/colored_burau.hpp"

#include <stdexcept>

namespace cb {

namespace {

void check_pair(int i, int j, int n, const char* who) {
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument(std::string(who) + ": need 1 <= i < j <= n");
}

// coeff * t_i^{ei} * t_j^{ej} in n variables.
LaurentPoly two_var_monomial(int n, int i, int ei, int j, int ej, long coeff) {
    LaurentPoly::ExponentVec exps(n, 0);
    exps[i - 1] += ei;
    exps[j - 1] += ej;
    return LaurentPoly::monomial(std::move(exps), coeff);
}

} // namespace

bool CBElement::is_identity() const { return matrix.is_identity() && perm.is_identity(); }

CBElement cb_identity(int n) { return {PolyMatrix::identity(n, n), Permutation(n)}; }

CBElement star_mul(const CBElement& a, const CBElement& b) {
    if (a.matrix.size() != b.matrix.size() || a.perm.degree() != b.perm.degree())
        throw std::invalid_argument("star_mul: size mismatch");
    return {a.matrix * b.matrix.permuted(a.perm), a.perm * b.perm};
}

CBElement cb_generator(int i, int n, int sign) {
    if (i < 1 || i > n - 1)
        throw std::invalid_argument("cb_generator: need 1 <= i <= n-1");
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("cb_generator: sign must be +1 or -1");

    PolyMatrix m = PolyMatrix::identity(n, n);
    if (sign == 1) {
        // Row i: (t_i, -t_i, 1) in columns i-1, i, i+1.
        if (i > 1) m.set(i, i - 1, LaurentPoly::variable(n, i));
        m.set(i, i, -LaurentPoly::variable(n, i));
        m.set(i, i + 1, LaurentPoly::constant(n, 1));
    } else {
        // Row i: (1, -1/t_{i+1}, 1/t_{i+1}); the variable index i+1 is
        // forced by the twisted product: sigma_i * sigma_i^{-1} must be
        // the identity after the permutation acts on this matrix.
        if (i > 1) m.set(i, i - 1, LaurentPoly::constant(n, 1));
        m.set(i, i, two_var_monomial(n, i + 1, -1, i + 1, 0, -1));
        m.set(i, i + 1, two_var_monomial(n, i + 1, -1, i + 1, 0, 1));
    }
    return {std::move(m), Permutation::transposition(n, i, i + 1)};
}

CBElement cb_apply(const BraidWord& w) {
    CBElement acc = cb_identity(w.strands());
    for (const auto& l : w.letters()) acc = star_mul(acc, cb_generator(l.index, w.strands(), l.sign));
    return acc;
}

PolyMatrix pure_braid_matrix(int i, int j, int n) {
    check_pair(i, j, n, "pure_braid_matrix");
    PolyMatrix m = PolyMatrix::identity(n, n);
    // Four rank-one column corrections, each supported on rows i..j-1.
    if (i > 1)
        m = m + col_embed(i - 1, col_vector(two_var_monomial(n, i, 1, j, 1, -1) +
                                                two_var_monomial(n, i, 1, j, 0, 1),
                                            i, j, n));
    m = m + col_embed(i, col_vector(two_var_monomial(n, i, 0, j, 1, 1) +
                                        LaurentPoly::constant(n, -1),
                                    i, j, n));
    m = m + col_embed(j - 1, col_vector(two_var_monomial(n, i, 1, j, 1, 1) +
                                            two_var_monomial(n, i, 0, j, 1, -1),
                                        i, j, n));
    m = m + col_embed(j, col_vector(two_var_monomial(n, i, 1, j, 0, -1) +
                                        LaurentPoly::constant(n, 1),
                                    i, j, n));
    return m;
}

PolyMatrix pure_braid_matrix_inverse(int i, int j, int n) {
    check_pair(i, j, n, "pure_braid_matrix_inverse");
    PolyMatrix m = PolyMatrix::identity(n, n);
    if (i > 1)
        m = m + col_embed(i - 1, col_vector(LaurentPoly::constant(n, 1) +
                                                two_var_monomial(n, i, 0, j, -1, -1),
                                            i, j, n));
    m = m + col_embed(i, col_vector(two_var_monomial(n, i, -1, j, -1, 1) +
                                        two_var_monomial(n, i, -1, j, 0, -1),
                                    i, j, n));
    m = m + col_embed(j - 1, col_vector(two_var_monomial(n, i, -1, j, 0, 1) +
                                            LaurentPoly::constant(n, -1),
                                        i, j, n));
    m = m + col_embed(j, col_vector(two_var_monomial(n, i, 0, j, -1, 1) +
                                        two_var_monomial(n, i, -1, j, -1, -1),
                                    i, j, n));
    return m;
}

LaurentPoly pure_braid_det(int i, int j, int n) {
    check_pair(i, j, n, "pure_braid_det");
    return two_var_monomial(n, i, 1, j, 1, 1);
}

} // namespace cb
