#pragma once

// Braid words over the Artin generators, free reduction, the projection
// to the symmetric group, standard pure braid generator words, the
// center generator word, and enumeration of freely reduced words over
// an abstract alphabet (used by the relation searches).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cb/permutation.hpp"

namespace cb {

struct BraidLetter {
    int index; // generator index, 1 <= index <= strands-1
    int sign;  // +1 or -1
    bool operator==(const BraidLetter&) const = default;
};

class BraidWord {
public:
    BraidWord(int strands, std::vector<BraidLetter> letters);
    static BraidWord empty(int strands);

    int strands() const { return strands_; }
    const std::vector<BraidLetter>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }

    // Set only by free_reduce; concatenation and construction clear it.
    bool marked_reduced() const { return reduced_; }

    BraidWord concat(const BraidWord& other) const;
    // Reversed word with all signs flipped.
    BraidWord inverse() const;
    BraidWord power(int k) const; // k >= 0

    bool operator==(const BraidWord& other) const;

    std::string str() const;

private:
    friend BraidWord free_reduce(const BraidWord& w);
    int strands_;
    std::vector<BraidLetter> letters_;
    bool reduced_ = false;
};

// Tokens: s<k>, s<k>^-1, A[i,j], A[i,j]^-1, center; whitespace separated.
// A[i,j] expands via pure_generator_word, center via center_word.
BraidWord parse_word(const std::string& text, int strands);

// Cancels adjacent inverse pairs until none remain; the result carries
// the reduced mark. Never mutates its argument.
BraidWord free_reduce(const BraidWord& w);

// The projection B_n -> S_n sending sigma_i to (i,i+1), sign-blind.
Permutation underlying_permutation(const BraidWord& w);

// The standard pure braid generator A_{i,j} as a word, via the recursion
// A_{j-1,j} = sigma_{j-1}^2, A_{i,j} = sigma_i A_{i+1,j} sigma_i^{-1};
// unrolled: sigma_i ... sigma_{j-2} sigma_{j-1}^2 sigma_{j-2}^{-1} ... sigma_i^{-1}.
// Requires 1 <= i < j <= n. Length is 2(j-i).
BraidWord pure_generator_word(int i, int j, int n);

// The full-twist word A_{1,2} (A_{1,3} A_{2,3}) ... (A_{1,n} ... A_{n-1,n})
// generating the center. Requires n >= 2.
BraidWord center_word(int n);

// ---- Abstract free words -------------------------------------------------

struct FreeLetter {
    int gen;  // 1-based generator index
    int sign; // +1 or -1
    bool operator==(const FreeLetter&) const = default;
};
using FreeWord = std::vector<FreeLetter>;

// Letter order a < a^-1 < b < b^-1 < ...; words compare by this order.
int letter_rank(const FreeLetter& l);
bool word_less(const FreeWord& a, const FreeWord& b);

// Renders with collapsed runs, e.g. "a^4", "a b^-1". `names` may be
// empty, in which case generators are named a, b, c, ...
std::string format_free_word(const FreeWord& w, const std::vector<std::string>& names = {});

// Emits every freely reduced word over `alphabet` generators and their
// inverses, of length 1..max_len, each exactly once: shorter words
// first, lexicographic within a length. Restartable via reset().
class ReducedWordEnumerator {
public:
    ReducedWordEnumerator(int alphabet, int max_len);
    std::optional<FreeWord> next();
    void reset();

    // 2k(2k-1)^{len-1}: how many reduced words of exactly `len` letters.
    static std::uint64_t count_at_length(int alphabet, int len);

private:
    bool advance();
    int alphabet_;
    int max_len_;
    int current_len_;
    std::vector<int> ranks_; // current word as letter ranks
    bool exhausted_;
    bool primed_;
};

} // namespace cb
