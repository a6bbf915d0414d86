// cbtool: exact colored-Burau computations from the command line.
//
// Every subcommand writes byte-identical output for identical inputs:
// exact arithmetic, canonical term order, fixed sample streams. Exit
// status: 0 = computed and verified, 1 = a verification failed (a
// witness is printed), 2 = usage error.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include "cb/braid.hpp"
#include "cb/colored_burau.hpp"
#include "cb/freeness.hpp"
#include "cb/json_io.hpp"

namespace {

// Distinguishes "the property failed to verify" (exit 1) from bad
// input (exit 2); the message carries the witness.
struct VerificationFailure {
    std::string message;
};

std::string perm_line(const cb::Permutation& p) {
    std::ostringstream out;
    out << "perm:";
    for (int img : p.images()) out << " " << img;
    return out.str();
}

std::string int_matrix_line(const cb::RationalMatrix& m) {
    std::ostringstream out;
    out << "[";
    for (int r = 1; r <= m.size(); ++r) {
        if (r > 1) out << " ";
        out << "[";
        for (int c = 1; c <= m.size(); ++c) {
            if (c > 1) out << ", ";
            out << m.at(r, c).get_str();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int run(int argc, char** argv) {
    CLI::App app{"exact colored-Burau computations for braid groups"};
    app.require_subcommand(1);

    int n = 4;
    std::string format = "text";
    std::uint64_t seed = 12345;
    int jobs = 1;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "number of strands")->capture_default_str();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "text"}))
            ->capture_default_str();
    };

    // eval: image of a braid word under the representation.
    std::string word_text;
    CLI::App* eval = app.add_subcommand("eval", "evaluate a braid word");
    add_common(eval);
    eval->add_option("--word", word_text, "braid word (s1 s2^-1 A[1,3] center ...)")->required();

    // puregen: closed-form image of a pure braid generator.
    int gi = 1, gj = 2, gjprime = 3;
    CLI::App* puregen = app.add_subcommand("puregen", "closed-form pure braid generator image");
    add_common(puregen);
    puregen->add_option("--i", gi, "first strand")->capture_default_str();
    puregen->add_option("--j", gj, "second strand")->capture_default_str();

    // verify-lemma: closed forms against the word-by-word product.
    CLI::App* verify = app.add_subcommand(
        "verify-lemma", "check closed forms, inverses and determinants against word products");
    add_common(verify);

    // eigen: fixed vectors of the specialized pure braid image.
    CLI::App* eigen = app.add_subcommand("eigen", "eigenvectors of the specialized image");
    add_common(eigen);
    eigen->add_option("--j", gj, "pure generator A[1,j]")->capture_default_str();

    // free-pair: the 2x2 block certificate.
    int depth = 8;
    bool check = false;
    CLI::App* freepair = app.add_subcommand("free-pair", "block certificate for a pair (j, j')");
    add_common(freepair);
    freepair->add_option("--j", gj, "first index")->capture_default_str();
    freepair->add_option("--jprime", gjprime, "second index")->capture_default_str();
    freepair->add_option("--depth", depth, "relation search depth")->capture_default_str();
    freepair->add_option("--seed", seed, "sampling seed")->capture_default_str();
    freepair->add_option("--jobs", jobs, "search threads")->capture_default_str();
    freepair->add_flag("--check", check, "also run the seeded ping-pong sampling check");

    // kernel-search: bounded probe for kernel elements.
    CLI::App* kernel = app.add_subcommand("kernel-search", "bounded probe for kernel elements");
    add_common(kernel);
    kernel->add_option("--depth", depth, "maximum word length")->capture_default_str();

    // center-det: determinant of the full twist power.
    int power = 1;
    CLI::App* centerdet = app.add_subcommand("center-det", "determinant of the center image");
    add_common(centerdet);
    centerdet->add_option("--power", power, "power of the center word")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const bool json_out = format == "json";

    if (*eval) {
        cb::BraidWord w = cb::parse_word(word_text, n);
        cb::CBElement e = cb::cb_apply(w);
        if (json_out) {
            emit(cb::cb_element_to_json(e));
        } else {
            std::cout << e.matrix.str() << "\n" << perm_line(e.perm) << "\n";
        }
        return 0;
    }

    if (*puregen) {
        cb::PolyMatrix m = cb::pure_braid_matrix(gi, gj, n);
        if (json_out) {
            emit(cb::matrix_to_json(m));
        } else {
            std::cout << m.str() << "\n";
        }
        return 0;
    }

    if (*verify) {
        int pairs = 0;
        std::ostringstream text;
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                cb::CBElement word_image = cb::cb_apply(cb::pure_generator_word(i, j, n));
                cb::PolyMatrix closed = cb::pure_braid_matrix(i, j, n);
                cb::PolyMatrix closed_inv = cb::pure_braid_matrix_inverse(i, j, n);
                bool ok = word_image.perm.is_identity() && word_image.matrix == closed &&
                          (closed * closed_inv).is_identity() &&
                          (closed_inv * closed).is_identity() &&
                          closed.det() == cb::pure_braid_det(i, j, n);
                if (!ok) {
                    std::ostringstream msg;
                    msg << "closed form mismatch at pair (" << i << "," << j << "), n=" << n
                        << "\nword product:\n"
                        << word_image.matrix.str() << "\nclosed form:\n"
                        << closed.str();
                    throw VerificationFailure{msg.str()};
                }
                text << "pair (" << i << "," << j << "): ok\n";
                ++pairs;
            }
        if (json_out) {
            emit(nlohmann::json{{"n", n}, {"pairs", pairs}, {"verified", true}});
        } else {
            std::cout << text.str() << "verified: " << pairs << " pairs at n=" << n << "\n";
        }
        return 0;
    }

    if (*eigen) {
        auto vectors = cb::eigenvector_list(gj, n);
        if (json_out) {
            nlohmann::json rows = nlohmann::json::array();
            for (const auto& v : vectors) {
                nlohmann::json row = nlohmann::json::array();
                for (const auto& x : v) row.push_back(static_cast<long>(x.get_num().get_si()));
                rows.push_back(std::move(row));
            }
            emit(nlohmann::json{{"j", gj}, {"n", n}, {"vectors", std::move(rows)}});
        } else {
            for (const auto& v : vectors) {
                std::cout << "[";
                for (std::size_t k = 0; k < v.size(); ++k) {
                    if (k) std::cout << ", ";
                    std::cout << v[k].get_str();
                }
                std::cout << "]\n";
            }
        }
        return 0;
    }

    if (*freepair) {
        cb::FreePairCertificate cert =
            cb::free_pair_certificate(gj, gjprime, n, depth, jobs);
        std::uint64_t sampled = 0;
        if (check && cert.block_j)
            sampled = cb::pingpong_sample_check(*cert.block_j, *cert.block_jp, 1000, seed);
        if (json_out) {
            nlohmann::json out = cb::certificate_to_json(cert);
            out["verified"] = cert.verified();
            if (check) out["pingpong_samples"] = sampled;
            emit(out);
        } else {
            std::cout << "pair (" << gj << "," << gjprime << ") at n=" << n << "\n";
            if (cert.basis) {
                std::cout << "block j: " << int_matrix_line(*cert.block_j) << "\n"
                          << "block j': " << int_matrix_line(*cert.block_jp) << "\n"
                          << "zero pattern: " << (*cert.zero_pattern_ok ? "ok" : "violated")
                          << "\n";
            } else {
                std::cout << "block certificate: none (excluded pair, search only)\n";
            }
            std::cout << "relation search to depth " << depth << ": "
                      << (cert.relation ? cb::format_free_word(*cert.relation) : "none") << "\n";
            if (check)
                std::cout << "ping-pong containment samples: "
                          << (cert.block_j ? std::to_string(sampled) : "not applicable") << "\n";
            std::cout << "verified: " << (cert.verified() ? "true" : "false") << "\n";
        }
        if (!cert.verified()) {
            std::ostringstream msg;
            msg << "free-pair certificate failed for (" << gj << "," << gjprime << "), n=" << n;
            if (cert.relation) msg << "; relation: " << cb::format_free_word(*cert.relation);
            throw VerificationFailure{msg.str()};
        }
        return 0;
    }

    if (*kernel) {
        cb::KernelSearchResult result = cb::kernel_search(n, depth);
        if (json_out) {
            emit(nlohmann::json{
                {"n", result.n},
                {"depth", result.max_len},
                {"witness",
                 result.witness ? nlohmann::json(cb::format_pure_word(*result.witness, result.n))
                                : nlohmann::json(nullptr)},
                {"words_checked", result.words_checked},
                {"note", result.disclaimer()}});
        } else {
            std::cout << "witness: "
                      << (result.witness ? cb::format_pure_word(*result.witness, result.n)
                                         : "none")
                      << "\n"
                      << result.disclaimer() << "\n";
        }
        if (result.witness)
            throw VerificationFailure{"kernel element found: " +
                                      cb::format_pure_word(*result.witness, result.n)};
        return 0;
    }

    if (*centerdet) {
        if (power < 0) throw std::invalid_argument("center-det: --power must be >= 0");
        cb::BraidWord w = cb::center_word(n).power(power);
        cb::CBElement e = cb::cb_apply(w);
        cb::LaurentPoly det = e.matrix.det();
        // Predicted value: (t_1 ... t_n)^{k(n-1)}.
        cb::LaurentPoly expected = cb::LaurentPoly::monomial(
            cb::LaurentPoly::ExponentVec(n, power * (n - 1)), 1);
        bool match = det == expected && e.perm.is_identity();
        if (json_out) {
            emit(nlohmann::json{{"n", n},
                                {"power", power},
                                {"det", cb::poly_to_json(det)},
                                {"matches", match}});
        } else {
            std::cout << "det: " << det.str() << "\n"
                      << "expected: " << expected.str() << "\n"
                      << "match: " << (match ? "true" : "false") << "\n";
        }
        if (!match)
            throw VerificationFailure{"center determinant mismatch: got " + det.str() +
                                      ", expected " + expected.str()};
        return 0;
    }

    return 2; // unreachable: a subcommand is required
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const VerificationFailure& f) {
        std::cerr << f.message << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
