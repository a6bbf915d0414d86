#include "cb/freeness.hpp"

#include <array>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace cb {

RationalMatrix eval_at_minus_one(const PolyMatrix& m) {
    return m.eval(std::vector<mpq_class>(m.nvars(), mpq_class(-1)));
}

RationalMatrix pure_image_at_minus_one(int j, int n) {
    if (!(2 <= j && j <= n))
        throw std::invalid_argument("pure_image_at_minus_one: need 2 <= j <= n");
    return eval_at_minus_one(pure_braid_matrix(1, j, n));
}

bool is_unipotent_order_two(const RationalMatrix& m) {
    RationalMatrix d = m - RationalMatrix::identity(m.size());
    return (d * d).is_zero();
}

namespace {

std::vector<mpq_class> unit_vector(int n, int k) {
    std::vector<mpq_class> v(n, mpq_class(0));
    v[k - 1] = 1;
    return v;
}

} // namespace

std::vector<std::vector<mpq_class>> eigenvector_list(int j, int n) {
    if (!(2 <= j && j <= n))
        throw std::invalid_argument("eigenvector_list: need 2 <= j <= n");
    std::vector<std::vector<mpq_class>> list;
    if (j == 2) {
        // M_2 = I + 2E_{12}: fixed space is {x_2 = 0}.
        for (int k = 1; k <= n; ++k)
            if (k != 2) list.push_back(unit_vector(n, k));
        return list;
    }
    // Fixed space of M_j is {x_1 = x_{j-1} + x_j}: the untouched
    // standard vectors, then e_1 + e_j, then e_1 + ... + e_{j-1}.
    for (int k = 1; k <= n; ++k)
        if (k != 1 && k != j - 1 && k != j) list.push_back(unit_vector(n, k));
    std::vector<mpq_class> v = unit_vector(n, 1);
    v[j - 1] = 1;
    list.push_back(std::move(v));
    std::vector<mpq_class> w(n, mpq_class(0));
    for (int k = 1; k <= j - 1; ++k) w[k - 1] = 1;
    list.push_back(std::move(w));
    return list;
}

std::vector<std::vector<mpq_class>> fixed_vectors(int j, int n) { return eigenvector_list(j, n); }

int block_row(int j) { return j == 2 ? 1 : j - 1; }

RationalMatrix change_of_basis(int j, int jprime, int n) {
    if (!(2 <= j && j < jprime && jprime <= n))
        throw std::invalid_argument("change_of_basis: need 2 <= j < j' <= n");
    if (j == 2 && jprime == 3)
        throw std::invalid_argument("change_of_basis: the pair (2,3) has no block basis");
    RationalMatrix p = RationalMatrix::identity(n);
    if (j == 2) {
        // Column j'-1 becomes e_1 + e_{j'-1}.
        p.set(1, jprime - 1, 1);
        return p;
    }
    // Column j-1 becomes e_1+...+e_{j-1}; column j becomes e_1+...+e_{j'-1}.
    // Both replacements already contain the identity's diagonal 1.
    for (int r = 1; r <= j - 1; ++r) p.set(r, j - 1, 1);
    for (int r = 1; r <= jprime - 1; ++r) p.set(r, j, 1);
    return p;
}

RationalMatrix block_at(const RationalMatrix& m, int r) {
    if (r < 1 || r + 1 > m.size()) throw std::out_of_range("block_at: block out of range");
    RationalMatrix b(2);
    for (int dr = 0; dr < 2; ++dr)
        for (int dc = 0; dc < 2; ++dc) b.set(dr + 1, dc + 1, m.at(r + dr, r + dc));
    return b;
}

RationalMatrix block_X() { return RationalMatrix::from_int_rows({{1, 2}, {0, 1}}); }
RationalMatrix block_Y() { return RationalMatrix::from_int_rows({{1, 0}, {-2, 1}}); }

PingPongRegion pingpong_region(const mpq_class& x, const mpq_class& y) {
    mpq_class ax = abs(x), ay = abs(y);
    if (ax > ay) return PingPongRegion::X1;
    if (ax < ay) return PingPongRegion::X2;
    return PingPongRegion::Boundary;
}

// ---- Relation search -----------------------------------------------------

namespace {

// Depth-first scan of all freely reduced rank sequences of one fixed
// length with a fixed first letter, in lexicographic order, carrying
// the partial products on a stack. No cross-branch pruning: every
// full-length word is evaluated, so the first hit is the lex-least.
struct RelationDfs {
    const std::array<RationalMatrix, 4>& mats;
    int target_len;
    std::vector<int> ranks;
    std::vector<RationalMatrix> prods;

    bool run(int depth) {
        if (depth == target_len) return prods[depth].is_identity();
        for (int r = 0; r < 4; ++r) {
            if (r == (ranks[depth - 1] ^ 1)) continue;
            ranks[depth] = r;
            prods[depth + 1] = prods[depth] * mats[r];
            if (run(depth + 1)) return true;
        }
        return false;
    }
};

FreeWord ranks_to_word(const std::vector<int>& ranks) {
    FreeWord w(ranks.size());
    for (std::size_t p = 0; p < ranks.size(); ++p)
        w[p] = {ranks[p] / 2 + 1, ranks[p] % 2 == 0 ? 1 : -1};
    return w;
}

// Shortest-then-lex identity word within one first-letter branch, or
// nullopt if the branch is clean up to max_len.
std::optional<FreeWord> relation_branch(const std::array<RationalMatrix, 4>& mats, int first_rank,
                                        int max_len) {
    const int n = mats[0].size();
    for (int len = 1; len <= max_len; ++len) {
        RelationDfs dfs{mats, len, std::vector<int>(static_cast<std::size_t>(len)),
                        std::vector<RationalMatrix>(static_cast<std::size_t>(len) + 1)};
        dfs.ranks[0] = first_rank;
        dfs.prods[0] = RationalMatrix::identity(n);
        dfs.prods[1] = mats[first_rank];
        if (dfs.run(1)) return ranks_to_word(dfs.ranks);
    }
    return std::nullopt;
}

RationalMatrix eval_free_word(const std::array<RationalMatrix, 4>& mats, const FreeWord& w) {
    RationalMatrix acc = RationalMatrix::identity(mats[0].size());
    for (const auto& l : w) acc = acc * mats[static_cast<std::size_t>(letter_rank(l))];
    return acc;
}

} // namespace

std::optional<FreeWord> relation_search(const RationalMatrix& gen1, const RationalMatrix& gen2,
                                        int max_len, int jobs) {
    if (gen1.size() != gen2.size() || gen1.size() == 0)
        throw std::invalid_argument("relation_search: generators must be square of equal size");
    if (max_len < 0) throw std::invalid_argument("relation_search: negative depth");
    auto inv1 = gen1.inverse();
    auto inv2 = gen2.inverse();
    if (!inv1 || !inv2) throw std::domain_error("relation_search: singular generator");
    const std::array<RationalMatrix, 4> mats{gen1, *inv1, gen2, *inv2};

    std::array<std::optional<FreeWord>, 4> found;
    if (jobs <= 1) {
        // Later branches are lex-greater at equal length, so they only
        // need to beat the incumbent strictly.
        int cap = max_len;
        for (int r = 0; r < 4 && cap >= 1; ++r) {
            found[r] = relation_branch(mats, r, cap);
            if (found[r]) cap = static_cast<int>(found[r]->size()) - 1;
        }
    } else {
        const int nthreads = jobs > 4 ? 4 : jobs;
        std::vector<std::thread> pool;
        for (int tid = 0; tid < nthreads; ++tid)
            pool.emplace_back([&, tid] {
                for (int r = tid; r < 4; r += nthreads)
                    found[r] = relation_branch(mats, r, max_len);
            });
        for (auto& t : pool) t.join();
    }

    std::optional<FreeWord> best;
    for (int r = 0; r < 4; ++r)
        if (found[r] && (!best || word_less(*found[r], *best))) best = found[r];
    if (best && !eval_free_word(mats, *best).is_identity())
        throw std::logic_error("relation_search: witness failed re-evaluation");
    return best;
}

// ---- Certificates ----------------------------------------------------------

namespace {

// The pattern that makes taking the 2x2 block at (r, r) multiplicative
// on the subgroup the two conjugates generate.
bool zero_pattern_check(const RationalMatrix& conj_j, const RationalMatrix& conj_jp, int j,
                        int jprime, int n) {
    const int r = block_row(j);
    if (j > 2) {
        // Both block columns of both conjugates vanish outside the
        // block rows.
        for (const RationalMatrix* m : {&conj_j, &conj_jp})
            for (int c = r; c <= r + 1; ++c)
                for (int q = 1; q <= n; ++q)
                    if (q != r && q != r + 1 && m->at(q, c) != 0) return false;
        return true;
    }
    // j == 2, block at (1,1). The first conjugate must be the identity
    // outside the block; the second must fix e_{j'-1} and keep block
    // column 2 supported on the block rows. (Block column 1 of the
    // second conjugate is allowed to leak below: its leak multiplies
    // annihilate the first conjugate's strip, which is empty.)
    for (int q = 1; q <= n; ++q)
        for (int c = 1; c <= n; ++c) {
            if (q <= 2 && c <= 2) continue;
            if (conj_j.at(q, c) != (q == c ? 1 : 0)) return false;
        }
    for (int q = 1; q <= n; ++q)
        if (conj_jp.at(q, jprime - 1) != (q == jprime - 1 ? 1 : 0)) return false;
    for (int q = 3; q <= n; ++q)
        if (conj_jp.at(q, 2) != 0) return false;
    return true;
}

} // namespace

bool FreePairCertificate::verified() const {
    if (relation.has_value()) return false;
    if (j == 2 && jprime == 3) return true; // search-only certificate
    return basis && block_j && block_jp && zero_pattern_ok && *zero_pattern_ok &&
           *block_j == block_X() && *block_jp == block_Y();
}

FreePairCertificate free_pair_certificate(int j, int jprime, int n, int search_depth, int jobs) {
    if (!(2 <= j && j < jprime && jprime <= n))
        throw std::invalid_argument("free_pair_certificate: need 2 <= j < j' <= n");
    if (search_depth < 0)
        throw std::invalid_argument("free_pair_certificate: negative search depth");

    FreePairCertificate cert;
    cert.n = n;
    cert.j = j;
    cert.jprime = jprime;
    cert.search_depth = search_depth;

    RationalMatrix mj = pure_image_at_minus_one(j, n);
    RationalMatrix mjp = pure_image_at_minus_one(jprime, n);

    if (j == 2 && jprime == 3) {
        cert.relation = relation_search(mj, mjp, search_depth, jobs);
        return cert;
    }

    RationalMatrix p = change_of_basis(j, jprime, n);
    auto pinv = p.inverse();
    if (!pinv) throw std::logic_error("free_pair_certificate: basis is singular");
    RationalMatrix conj_j = *pinv * mj * p;
    RationalMatrix conj_jp = *pinv * mjp * p;
    const int r = block_row(j);

    cert.basis = p;
    cert.block_j = block_at(conj_j, r);
    cert.block_jp = block_at(conj_jp, r);
    cert.zero_pattern_ok = zero_pattern_check(conj_j, conj_jp, j, jprime, n);
    cert.relation = relation_search(conj_j, conj_jp, search_depth, jobs);
    return cert;
}

std::uint64_t pingpong_sample_check(const RationalMatrix& a, const RationalMatrix& b,
                                    int samples_per_direction, std::uint64_t seed) {
    if (a.size() != 2 || b.size() != 2)
        throw std::invalid_argument("pingpong_sample_check: generators must be 2x2");
    if (samples_per_direction < 0)
        throw std::invalid_argument("pingpong_sample_check: negative sample count");

    // Raw engine output only: identical sample streams on every
    // platform for a fixed seed.
    std::mt19937_64 rng(seed);
    auto draw = [&rng](long lo, long hi) {
        return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto draw_nonzero = [&] {
        long k = 0;
        while (k == 0) k = draw(-10, 10);
        return k;
    };
    auto signed_pow = [](const RationalMatrix& m, long k) {
        if (k >= 0) return m.pow(static_cast<int>(k));
        auto inv = m.inverse();
        if (!inv) throw std::domain_error("pingpong_sample_check: singular generator");
        return inv->pow(static_cast<int>(-k));
    };

    std::uint64_t checked = 0;
    auto expect = [&checked](const std::vector<mpq_class>& v, PingPongRegion want) {
        if (pingpong_region(v[0], v[1]) != want) {
            std::ostringstream msg;
            msg << "pingpong_sample_check: containment violated at (" << v[0].get_str() << ", "
                << v[1].get_str() << ")";
            throw std::runtime_error(msg.str());
        }
        ++checked;
    };

    for (int dir = 0; dir < 2; ++dir) {
        const RationalMatrix& first = dir == 0 ? a : b;
        const RationalMatrix& second = dir == 0 ? b : a;
        PingPongRegion source = dir == 0 ? PingPongRegion::X2 : PingPongRegion::X1;
        PingPongRegion target = dir == 0 ? PingPongRegion::X1 : PingPongRegion::X2;
        for (int s = 0; s < samples_per_direction; ++s) {
            // A sample vector strictly inside the source region.
            std::vector<mpq_class> v(2);
            do {
                v[0] = mpq_class(draw(-100, 100));
                v[1] = mpq_class(draw(-100, 100));
            } while (pingpong_region(v[0], v[1]) != source);
            std::vector<mpq_class> w = signed_pow(first, draw_nonzero()).apply(v);
            expect(w, target);
            // One more alternation: the image must bounce back.
            std::vector<mpq_class> u = signed_pow(second, draw_nonzero()).apply(w);
            expect(u, source);
        }
    }
    return checked;
}

// ---- Kernel search ---------------------------------------------------------

namespace {

struct KernelDfs {
    const std::vector<PolyMatrix>& mats; // indexed by rank
    int target_len;
    std::uint64_t checked = 0;
    std::vector<int> ranks;
    std::vector<PolyMatrix> prods;

    bool run(int depth) {
        if (depth == target_len) {
            ++checked;
            return prods[depth].is_identity();
        }
        const int top = static_cast<int>(mats.size()) - 1;
        for (int r = 0; r <= top; ++r) {
            if (depth > 0 && r == (ranks[depth - 1] ^ 1)) continue;
            ranks[depth] = r;
            prods[depth + 1] = prods[depth] * mats[r];
            if (run(depth + 1)) return true;
        }
        return false;
    }
};

} // namespace

std::string KernelSearchResult::disclaimer() const {
    std::ostringstream out;
    out << "bounded probe: checked " << words_checked << " reduced words of length <= " << max_len
        << " over A[1,2]..A[1," << n << "]; "
        << (witness ? "a kernel element was found" : "no kernel element was found")
        << ", and a clean probe does not decide faithfulness";
    return out.str();
}

KernelSearchResult kernel_search(int n, int max_len) {
    if (n < 2) throw std::invalid_argument("kernel_search: need n >= 2 (at least one symbol)");
    if (max_len < 0) throw std::invalid_argument("kernel_search: negative depth");

    std::vector<PolyMatrix> mats;
    for (int g = 2; g <= n; ++g) {
        mats.push_back(pure_braid_matrix(1, g, n));
        mats.push_back(pure_braid_matrix_inverse(1, g, n));
    }

    KernelSearchResult result;
    result.n = n;
    result.max_len = max_len;

    for (int len = 1; len <= max_len; ++len) {
        KernelDfs dfs{mats, len, 0, std::vector<int>(static_cast<std::size_t>(len)),
                      std::vector<PolyMatrix>(static_cast<std::size_t>(len) + 1,
                                              PolyMatrix(0, 0))};
        dfs.prods[0] = PolyMatrix::identity(n, n);
        bool hit = dfs.run(0);
        result.words_checked += dfs.checked;
        if (hit) {
            FreeWord witness = ranks_to_word(dfs.ranks);
            // Independent re-evaluation before trusting the stack.
            PolyMatrix fresh = PolyMatrix::identity(n, n);
            for (const auto& l : witness)
                fresh = fresh * mats[static_cast<std::size_t>(letter_rank(l))];
            if (!fresh.is_identity())
                throw std::logic_error("kernel_search: witness failed re-evaluation");
            result.witness = std::move(witness);
            return result;
        }
    }
    return result;
}

std::string format_pure_word(const FreeWord& w, int n) {
    std::vector<std::string> names;
    for (int g = 2; g <= n; ++g) names.push_back("A[1," + std::to_string(g) + "]");
    return format_free_word(w, names);
}

} // namespace cb
