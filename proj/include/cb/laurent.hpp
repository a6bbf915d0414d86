#pragma once

// Exact arithmetic in the integral Laurent polynomial ring
// Z[t_1^{+-1}, ..., t_n^{+-1}]. A polynomial is a sparse map from
// exponent vectors (length n, entries may be negative) to nonzero
// integer coefficients. Every operation returns canonical form: no
// zero coefficient is ever stored, so equality is structural.
//
// Values are immutable after construction and all operations are pure,
// so they can be shared freely across threads.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cb/permutation.hpp"

namespace cb {

class LaurentPoly {
public:
    using ExponentVec = std::vector<int>;
    using TermMap = std::map<ExponentVec, mpz_class>; // lex order on exponents

    // The zero polynomial in `nvars` variables.
    explicit LaurentPoly(int nvars);

    static LaurentPoly constant(int nvars, mpz_class c);
    // t_index, 1-based.
    static LaurentPoly variable(int nvars, int index);
    // coeff * t_1^{exps[0]} * ... * t_n^{exps[n-1]}.
    static LaurentPoly monomial(ExponentVec exps, mpz_class coeff);
    static LaurentPoly from_terms(int nvars, TermMap terms);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // True for c * t_1^{e_1}...t_n^{e_n} with c = +-1 (a unit of the ring).
    bool is_signed_monomial() const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q);
    friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q);
    LaurentPoly& operator+=(const LaurentPoly& q);
    LaurentPoly& operator-=(const LaurentPoly& q);
    LaurentPoly& operator*=(const LaurentPoly& q);

    bool operator==(const LaurentPoly& other) const = default;

    // Exact value at a point with nonzero rational coordinates. A zero
    // coordinate is tolerated only if the variable never appears with a
    // negative exponent; otherwise std::domain_error.
    mpq_class eval(const std::vector<mpq_class>& point) const;

    // Ring homomorphism sending t_i to t_{s(i)}.
    LaurentPoly permuted(const Permutation& s) const;

    // Deterministic rendering: terms in lex order of exponent vectors,
    // explicit negative powers (e.g. "2*t1*t2^-1 - 1" style, see impl).
    std::string str() const;

private:
    int nvars_;
    TermMap terms_;
};

// Quotient identifying every t_i with a single variable t; a ring
// homomorphism onto the one-variable Laurent ring.
LaurentPoly burau_quotient(const LaurentPoly& p);

} // namespace cb
