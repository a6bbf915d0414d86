#include "cb/laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace cb {

namespace {

void check_nvars_match(const LaurentPoly& p, const LaurentPoly& q, const char* op) {
    if (p.nvars() != q.nvars()) {
        std::ostringstream msg;
        msg << "LaurentPoly " << op << ": variable count mismatch (" << p.nvars() << " vs "
            << q.nvars() << ")";
        throw std::invalid_argument(msg.str());
    }
}

} // namespace

LaurentPoly::LaurentPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("LaurentPoly: negative variable count");
}

LaurentPoly LaurentPoly::constant(int nvars, mpz_class c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(ExponentVec(nvars, 0), std::move(c));
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int index) {
    if (index < 1 || index > nvars)
        throw std::invalid_argument("LaurentPoly::variable: index out of range");
    ExponentVec e(nvars, 0);
    e[index - 1] = 1;
    return monomial(std::move(e), 1);
}

LaurentPoly LaurentPoly::monomial(ExponentVec exps, mpz_class coeff) {
    LaurentPoly p(static_cast<int>(exps.size()));
    if (coeff != 0) p.terms_.emplace(std::move(exps), std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::from_terms(int nvars, TermMap terms) {
    LaurentPoly p(nvars);
    for (auto it = terms.begin(); it != terms.end();) {
        if (static_cast<int>(it->first.size()) != nvars)
            throw std::invalid_argument("LaurentPoly::from_terms: exponent vector length mismatch");
        if (it->second == 0)
            it = terms.erase(it);
        else
            ++it;
    }
    p.terms_ = std::move(terms);
    return p;
}

bool LaurentPoly::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [exps, coeff] = *terms_.begin();
    if (coeff != 1) return false;
    for (int e : exps)
        if (e != 0) return false;
    return true;
}

bool LaurentPoly::is_signed_monomial() const {
    if (terms_.size() != 1) return false;
    const auto& coeff = terms_.begin()->second;
    return coeff == 1 || coeff == -1;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(nvars_);
    for (const auto& [exps, coeff] : terms_) p.terms_.emplace(exps, -coeff);
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& q) {
    check_nvars_match(*this, q, "+");
    for (const auto& [exps, coeff] : q.terms_) {
        auto [it, inserted] = terms_.try_emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& q) {
    check_nvars_match(*this, q, "-");
    for (const auto& [exps, coeff] : q.terms_) {
        auto [it, inserted] = terms_.try_emplace(exps, -coeff);
        if (!inserted) {
            it->second -= coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& q) {
    *this = *this * q;
    return *this;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    r += q;
    return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
    LaurentPoly r = p;
    r -= q;
    return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
    check_nvars_match(p, q, "*");
    LaurentPoly r(p.nvars());
    LaurentPoly::ExponentVec exps(p.nvars());
    for (const auto& [pe, pc] : p.terms_) {
        for (const auto& [qe, qc] : q.terms_) {
            for (int k = 0; k < p.nvars(); ++k) exps[k] = pe[k] + qe[k];
            mpz_class prod = pc * qc;
            auto [it, inserted] = r.terms_.try_emplace(exps, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    }
    return r;
}

mpq_class LaurentPoly::eval(const std::vector<mpq_class>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("LaurentPoly::eval: point dimension mismatch");
    // Zero coordinates are only legal when the variable never occurs
    // with a negative exponent anywhere in the polynomial.
    for (int k = 0; k < nvars_; ++k) {
        if (point[k] != 0) continue;
        for (const auto& [exps, coeff] : terms_)
            if (exps[k] < 0)
                throw std::domain_error("LaurentPoly::eval: zero at a negative exponent");
    }
    mpq_class total = 0;
    for (const auto& [exps, coeff] : terms_) {
        mpq_class term(coeff);
        for (int k = 0; k < nvars_; ++k) {
            int e = exps[k];
            if (e == 0) continue;
            mpq_class base = point[k];
            bool invert = e < 0;
            unsigned long ae = invert ? static_cast<unsigned long>(-static_cast<long>(e))
                                      : static_cast<unsigned long>(e);
            mpq_class powed;
            mpz_pow_ui(powed.get_num_mpz_t(), base.get_num_mpz_t(), ae);
            mpz_pow_ui(powed.get_den_mpz_t(), base.get_den_mpz_t(), ae);
            powed.canonicalize();
            if (invert) powed = 1 / powed;
            term *= powed;
        }
        total += term;
    }
    return total;
}

LaurentPoly LaurentPoly::permuted(const Permutation& s) const {
    if (s.degree() != nvars_)
        throw std::invalid_argument("LaurentPoly::permuted: permutation degree mismatch");
    LaurentPoly r(nvars_);
    ExponentVec moved(nvars_);
    for (const auto& [exps, coeff] : terms_) {
        for (int i = 1; i <= nvars_; ++i) moved[s.apply(i) - 1] = exps[i - 1];
        r.terms_.emplace(moved, coeff);
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        mpz_class c = coeff;
        if (first) {
            if (c < 0) {
                out << "-";
                c = -c;
            }
        } else {
            out << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;

        std::ostringstream vars;
        bool any_var = false;
        for (int k = 0; k < nvars_; ++k) {
            if (exps[k] == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            vars << "t" << (k + 1);
            if (exps[k] != 1) vars << "^" << exps[k];
        }
        if (!any_var) {
            out << c.get_str();
        } else {
            if (c != 1) out << c.get_str() << "*";
            out << vars.str();
        }
    }
    return out.str();
}

LaurentPoly burau_quotient(const LaurentPoly& p) {
    LaurentPoly::TermMap folded;
    for (const auto& [exps, coeff] : p.terms()) {
        long total = 0;
        for (int e : exps) total += e;
        LaurentPoly::ExponentVec key{static_cast<int>(total)};
        auto [it, inserted] = folded.try_emplace(std::move(key), coeff);
        if (!inserted) it->second += coeff;
    }
    return LaurentPoly::from_terms(1, std::move(folded));
}

} // namespace cb
