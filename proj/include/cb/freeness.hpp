#pragma once

// Freeness analysis of the pure braid images specialized at t_i = -1:
// unipotency and fixed spaces, the distinguished eigenvector families,
// change-of-basis certificates exhibiting the 2x2 blocks
// X = [[1,2],[0,1]], Y = [[1,0],[-2,1]], ping-pong membership tests,
// and bounded brute-force searches for relations (rational matrices)
// and kernel elements (symbolic pure braid products).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cb/braid.hpp"
#include "cb/colored_burau.hpp"
#include "cb/poly_matrix.hpp"
#include "cb/rational_matrix.hpp"

namespace cb {

// Specialization at t_1 = ... = t_n = -1.
RationalMatrix eval_at_minus_one(const PolyMatrix& m);

// M_j: the specialized image of A_{1,j}, 2 <= j <= n.
RationalMatrix pure_image_at_minus_one(int j, int n);

// (M - I)^2 == 0.
bool is_unipotent_order_two(const RationalMatrix& m);

// Basis of the fixed space of M_j, in the pinned order: the standard
// vectors e_k it contains (ascending k), then the extra vectors
// v = e_1 + e_j and partial sums w = e_1 + ... + e_{j-1} where they are
// fixed. Each vector is a length-n column.
std::vector<std::vector<mpq_class>> fixed_vectors(int j, int n);

// Eigenvector list for M_j in the pinned return order (all eigenvalue 1).
std::vector<std::vector<mpq_class>> eigenvector_list(int j, int n);

// Change of basis P for the pair (j, j'), 2 <= j < j' <= n, excluding
// (2,3). After conjugation, M_j and M_{j'} each carry a 2x2 block at
// rows/cols (r, r+1) with r = block_row(j). det P = 1.
RationalMatrix change_of_basis(int j, int jprime, int n);
int block_row(int j);

// The 2x2 submatrix at rows/cols (r, r+1), 1-based.
RationalMatrix block_at(const RationalMatrix& m, int r);

RationalMatrix block_X(); // [[1,2],[0,1]]
RationalMatrix block_Y(); // [[1,0],[-2,1]]

// Ping-pong regions for the free group generated by X and Y acting on
// column vectors (x, y): X1 = {|x| > |y|}, X2 = {|x| < |y|}.
enum class PingPongRegion { X1, X2, Boundary };
PingPongRegion pingpong_region(const mpq_class& x, const mpq_class& y);

// ---- Relation search -----------------------------------------------------

// Shortest freely reduced word w over the two generators (and their
// inverses) with w(gen1, gen2) = I, scanning lengths 1..max_len in
// length-then-lex order; nullopt if none exists within the bound.
// Throws std::domain_error when a generator is singular.
//
// jobs > 1 partitions the search by first letter; the result is
// independent of the partitioning because candidates are aggregated by
// (length, lex) order before the winner is chosen.
std::optional<FreeWord> relation_search(const RationalMatrix& gen1,
                                        const RationalMatrix& gen2,
                                        int max_len, int jobs = 1);

struct FreePairCertificate {
    int n = 0;
    int j = 0;
    int jprime = 0;
    // Full certificate data; absent for the excluded pair (2,3), which
    // gets a search-only certificate.
    std::optional<RationalMatrix> basis;      // P, integer entries
    std::optional<RationalMatrix> block_j;    // 2x2, expected X
    std::optional<RationalMatrix> block_jp;   // 2x2, expected Y
    std::optional<bool> zero_pattern_ok;
    int search_depth = 0;
    std::optional<FreeWord> relation;         // nullopt = none found

    bool verified() const;
};

// Builds the certificate for (j, j'): conjugates both specialized
// images by change_of_basis, extracts the blocks, checks the zero
// pattern making the block extraction multiplicative, and runs
// relation_search on the conjugated pair to depth `search_depth`.
// For (2,3) only the search runs.
FreePairCertificate free_pair_certificate(int j, int jprime, int n, int search_depth,
                                          int jobs = 1);

// Seeded sampling check of the ping-pong containments for the pair
// (A, B) = (X, -Y) orbit convention: nontrivial reduced words move
// sample vectors off their start region boundary consistently. Returns
// the number of checked (word, vector) pairs; throws on violation.
// Deterministic for a fixed seed.
std::uint64_t pingpong_sample_check(const RationalMatrix& a, const RationalMatrix& b,
                                    int samples_per_direction, std::uint64_t seed);

// ---- Kernel search -------------------------------------------------------

struct KernelSearchResult {
    int n = 0;
    int max_len = 0;
    // Shortest reduced word over A_{1,2}..A_{1,n} mapping to the
    // identity, if any was found within the bound.
    std::optional<FreeWord> witness;
    std::uint64_t words_checked = 0;

    // Human-readable statement that this was a bounded probe.
    std::string disclaimer() const;
};

// Brute-force search over reduced words in the symbols A_{1,2}..A_{1,n}
// (closed-form matrices and inverses, exact symbolic products) for a
// nontrivial word whose image is the identity matrix. Checks lengths
// 1..max_len in length-then-lex order.
KernelSearchResult kernel_search(int n, int max_len);

// Renders a free word over the kernel-search alphabet, e.g.
// "A[1,2]^2 A[1,3]^-1".
std::string format_pure_word(const FreeWord& w, int n);

} // namespace cb
