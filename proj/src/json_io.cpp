#include "cb/json_io.hpp"

#include <stdexcept>

namespace cb {

using nlohmann::json;

json poly_to_json(const LaurentPoly& p) {
    json terms = json::array();
    // Map iteration is lex order on exponent vectors: the canonical
    // term order, so the serialization is deterministic.
    for (const auto& [exps, coeff] : p.terms())
        terms.push_back(json{{"coeff", coeff.get_str()}, {"exps", exps}});
    return json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

LaurentPoly poly_from_json(const json& j) {
    int nvars = j.at("nvars").get<int>();
    LaurentPoly::TermMap terms;
    for (const auto& term : j.at("terms")) {
        LaurentPoly::ExponentVec exps = term.at("exps").get<LaurentPoly::ExponentVec>();
        mpz_class coeff(term.at("coeff").get<std::string>());
        auto [it, inserted] = terms.try_emplace(std::move(exps), coeff);
        if (!inserted) it->second += coeff;
    }
    return LaurentPoly::from_terms(nvars, std::move(terms));
}

json matrix_to_json(const PolyMatrix& m) {
    json rows = json::array();
    for (int r = 1; r <= m.size(); ++r) {
        json row = json::array();
        for (int c = 1; c <= m.size(); ++c) row.push_back(poly_to_json(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return json{{"n", m.size()}, {"rows", std::move(rows)}};
}

PolyMatrix matrix_from_json(const json& j) {
    int n = j.at("n").get<int>();
    const json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("matrix_from_json: row count mismatch");
    int nvars = 0;
    if (n > 0) nvars = rows.at(0).at(0).at("nvars").get<int>();
    PolyMatrix m(n, nvars);
    for (int r = 1; r <= n; ++r) {
        const json& row = rows.at(r - 1);
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("matrix_from_json: ragged rows");
        for (int c = 1; c <= n; ++c) m.set(r, c, poly_from_json(row.at(c - 1)));
    }
    return m;
}

json cb_element_to_json(const CBElement& e) {
    return json{{"matrix", matrix_to_json(e.matrix)}, {"perm", e.perm.images()}};
}

CBElement cb_element_from_json(const json& j) {
    PolyMatrix m = matrix_from_json(j.at("matrix"));
    Permutation p = Permutation::from_images(j.at("perm").get<std::vector<int>>());
    if (p.degree() != m.size())
        throw std::invalid_argument("cb_element_from_json: permutation degree mismatch");
    return {std::move(m), std::move(p)};
}

namespace {

// Bare 2D array of (small) integer entries.
json int_rows(const RationalMatrix& m) {
    if (!m.is_integer())
        throw std::invalid_argument("int_matrix_to_json: matrix has non-integer entries");
    json rows = json::array();
    for (int r = 1; r <= m.size(); ++r) {
        json row = json::array();
        for (int c = 1; c <= m.size(); ++c) {
            const mpz_class& v = m.at(r, c).get_num();
            if (!v.fits_slong_p())
                throw std::invalid_argument("int_matrix_to_json: entry out of integer range");
            row.push_back(v.get_si());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

json int_matrix_to_json(const RationalMatrix& m) {
    return json{{"n", m.size()}, {"rows", int_rows(m)}};
}

RationalMatrix int_matrix_from_json(const json& j) {
    int n = j.at("n").get<int>();
    const json& rows = j.at("rows");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("int_matrix_from_json: row count mismatch");
    RationalMatrix m(n);
    for (int r = 1; r <= n; ++r) {
        const json& row = rows.at(r - 1);
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("int_matrix_from_json: ragged rows");
        for (int c = 1; c <= n; ++c) m.set(r, c, mpq_class(row.at(c - 1).get<long>()));
    }
    return m;
}

json certificate_to_json(const FreePairCertificate& c) {
    json out{{"n", c.n},
             {"j", c.j},
             {"jprime", c.jprime},
             {"search_depth", c.search_depth},
             {"relation", c.relation ? json(format_free_word(*c.relation)) : json(nullptr)}};
    if (c.basis) {
        out["P"] = int_matrix_to_json(*c.basis);
        out["blocks"] = json{{"j", int_rows(*c.block_j)}, {"jprime", int_rows(*c.block_jp)}};
        out["zero_pattern_ok"] = *c.zero_pattern_ok;
    } else {
        out["P"] = nullptr;
        out["blocks"] = nullptr;
        out["zero_pattern_ok"] = nullptr;
    }
    return out;
}

} // namespace cb
