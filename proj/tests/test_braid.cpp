#include <doctest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "cb/braid.hpp"

using cb::BraidLetter;
using cb::BraidWord;
using cb::FreeLetter;
using cb::FreeWord;
using cb::Permutation;

TEST_CASE("word construction validates letters") {
    CHECK_THROWS_AS(BraidWord(3, {{3, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(3, {{1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(BraidWord(0, {}), std::invalid_argument);
    CHECK(BraidWord::empty(1).length() == 0);
}

TEST_CASE("parsing the generator grammar") {
    BraidWord w = cb::parse_word("s1 s2^-1", 3);
    REQUIRE(w.length() == 2);
    CHECK(w.letters()[0] == BraidLetter{1, 1});
    CHECK(w.letters()[1] == BraidLetter{2, -1});
    CHECK(w.str() == "s1 s2^-1");

    CHECK(cb::parse_word("", 4) == BraidWord::empty(4));
    CHECK(cb::parse_word("  \t \n ", 4) == BraidWord::empty(4));
    CHECK(cb::parse_word("s12", 14).letters()[0] == BraidLetter{12, 1});
}

TEST_CASE("parsing rejects malformed and out-of-range tokens") {
    CHECK_THROWS_AS(cb::parse_word("s0", 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("s3", 3), std::invalid_argument); // needs 4 strands
    CHECK_THROWS_AS(cb::parse_word("x1", 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("s1^1", 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("s1^-2", 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("s1^-1x", 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("s", 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("A[2,1]", 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("A[1,1]", 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("A[1,5]", 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("A[1,3", 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("A[1;3]", 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("center^-1", 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::parse_word("centerx", 4), std::invalid_argument);
}

TEST_CASE("parsing expands pure generators and the center") {
    CHECK(cb::parse_word("A[1,3]", 4) == cb::pure_generator_word(1, 3, 4));
    CHECK(cb::parse_word("A[1,3]^-1", 4) == cb::pure_generator_word(1, 3, 4).inverse());
    CHECK(cb::parse_word("center", 3) == cb::center_word(3));
    CHECK(cb::parse_word("s1 A[2,3] s1^-1", 3) ==
          BraidWord(3, {{1, 1}, {2, 1}, {2, 1}, {1, -1}}));
}

TEST_CASE("pure generator words follow the conjugation recursion") {
    CHECK(cb::pure_generator_word(2, 3, 4) == BraidWord(4, {{2, 1}, {2, 1}}));
    CHECK(cb::pure_generator_word(1, 3, 4) ==
          BraidWord(4, {{1, 1}, {2, 1}, {2, 1}, {1, -1}}));
    CHECK(cb::pure_generator_word(1, 4, 4) ==
          BraidWord(4, {{1, 1}, {2, 1}, {3, 1}, {3, 1}, {2, -1}, {1, -1}}));

    for (int n = 2; n <= 6; ++n)
        for (int i = 1; i < n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                BraidWord w = cb::pure_generator_word(i, j, n);
                CHECK(w.length() == 2 * (j - i));
                // Pure: trivial underlying permutation.
                CHECK(cb::underlying_permutation(w).is_identity());
            }

    CHECK_THROWS_AS(cb::pure_generator_word(2, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::pure_generator_word(3, 2, 4), std::invalid_argument);
    CHECK_THROWS_AS(cb::pure_generator_word(1, 5, 4), std::invalid_argument);
}

TEST_CASE("center word shape") {
    CHECK(cb::center_word(2) == BraidWord(2, {{1, 1}, {1, 1}}));
    CHECK(cb::center_word(6).length() == 70);
    for (int n = 2; n <= 6; ++n)
        CHECK(cb::underlying_permutation(cb::center_word(n)).is_identity());
    CHECK_THROWS_AS(cb::center_word(1), std::invalid_argument);
}

TEST_CASE("free reduction cancels adjacent inverse pairs") {
    CHECK(cb::free_reduce(cb::parse_word("s1 s1^-1", 3)).length() == 0);
    CHECK(cb::free_reduce(cb::parse_word("s1 s2 s2^-1 s1^-1", 3)).length() == 0);
    CHECK(cb::free_reduce(cb::parse_word("s1 s1 s1^-1", 3)) == cb::parse_word("s1", 3));
    // s1 s2^-1 s2 s1 collapses in the middle, then the outer pair survives.
    CHECK(cb::free_reduce(cb::parse_word("s1 s2^-1 s2 s1", 3)) == cb::parse_word("s1 s1", 3));

    BraidWord w = cb::parse_word("s1 s2", 3);
    BraidWord r = cb::free_reduce(w);
    CHECK(r.marked_reduced());
    CHECK_FALSE(w.marked_reduced());
    CHECK_FALSE(r.concat(r).marked_reduced());
    CHECK(cb::free_reduce(r) == r);
}

TEST_CASE("inverse reverses and flips") {
    BraidWord w = cb::parse_word("s1 s2^-1 s3", 4);
    CHECK(w.inverse() == cb::parse_word("s3^-1 s2 s1^-1", 4));
    CHECK(w.inverse().inverse() == w);
    CHECK(cb::free_reduce(w.concat(w.inverse())).length() == 0);
    CHECK(cb::free_reduce(w.inverse().concat(w)).length() == 0);
}

TEST_CASE("powers repeat the word") {
    BraidWord w = cb::parse_word("s1 s2", 3);
    CHECK(w.power(0) == BraidWord::empty(3));
    CHECK(w.power(3).length() == 6);
    CHECK(w.power(2) == w.concat(w));
    CHECK_THROWS_AS(w.power(-1), std::invalid_argument);
}

TEST_CASE("projection to the symmetric group") {
    CHECK(cb::underlying_permutation(cb::parse_word("s1", 3)) ==
          Permutation::transposition(3, 1, 2));
    // Left-to-right fold: s1 then s2 sends 1->2->... check images.
    CHECK(cb::underlying_permutation(cb::parse_word("s1 s2", 3)) ==
          Permutation::from_images({2, 3, 1}));
    // Sign-blind.
    CHECK(cb::underlying_permutation(cb::parse_word("s1^-1", 3)) ==
          Permutation::transposition(3, 1, 2));
    // Compatible with concatenation.
    BraidWord a = cb::parse_word("s1 s3", 4);
    BraidWord b = cb::parse_word("s2 s1^-1", 4);
    CHECK(cb::underlying_permutation(a.concat(b)) ==
          cb::underlying_permutation(a) * cb::underlying_permutation(b));
}

// ---- Abstract free words ---------------------------------------------------

TEST_CASE("letter order and word order") {
    CHECK(cb::letter_rank({1, 1}) == 0);
    CHECK(cb::letter_rank({1, -1}) == 1);
    CHECK(cb::letter_rank({2, 1}) == 2);
    CHECK(cb::letter_rank({2, -1}) == 3);
    CHECK_THROWS_AS(cb::letter_rank({0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(cb::letter_rank({1, 0}), std::invalid_argument);

    FreeWord shorter{{2, -1}};
    FreeWord longer{{1, 1}, {1, 1}};
    CHECK(cb::word_less(shorter, longer));
    CHECK_FALSE(cb::word_less(longer, shorter));
    CHECK(cb::word_less(FreeWord{{1, 1}, {1, 1}}, FreeWord{{1, 1}, {2, 1}}));
    CHECK_FALSE(cb::word_less(longer, longer));
}

TEST_CASE("free word rendering collapses runs") {
    CHECK(cb::format_free_word({}) == "");
    CHECK(cb::format_free_word({{1, 1}, {1, 1}, {1, 1}, {1, 1}}) == "a^4");
    CHECK(cb::format_free_word({{1, 1}, {2, -1}}) == "a b^-1");
    CHECK(cb::format_free_word({{1, 1}, {1, 1}, {2, 1}, {2, 1}, {2, 1}}) == "a^2 b^3");
    CHECK(cb::format_free_word({{2, -1}, {2, -1}}) == "b^-2");
    CHECK(cb::format_free_word({{1, 1}}, {"X"}) == "X");
    CHECK_THROWS_AS(cb::format_free_word({{2, 1}}, {"X"}), std::invalid_argument);
}

namespace {

// Brute-force oracle: every rank string of each length, filtered for
// free reduction, in (length, lex) order.
std::vector<FreeWord> all_reduced_words(int alphabet, int max_len) {
    std::vector<FreeWord> out;
    const int top = 2 * alphabet;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> ranks(len, 0);
        while (true) {
            bool reduced = true;
            for (int p = 0; p + 1 < len; ++p)
                if (ranks[p + 1] == (ranks[p] ^ 1)) reduced = false;
            if (reduced) {
                FreeWord w(len);
                for (int p = 0; p < len; ++p)
                    w[p] = {ranks[p] / 2 + 1, ranks[p] % 2 == 0 ? 1 : -1};
                out.push_back(std::move(w));
            }
            int p = len - 1;
            while (p >= 0 && ranks[p] == top - 1) ranks[p--] = 0;
            if (p < 0) break;
            ++ranks[p];
        }
    }
    return out;
}

} // namespace

TEST_CASE("reduced word enumeration matches the generate-and-filter oracle") {
    for (int alphabet : {1, 2, 3}) {
        cb::ReducedWordEnumerator en(alphabet, 4);
        std::vector<FreeWord> expected = all_reduced_words(alphabet, 4);
        for (const FreeWord& want : expected) {
            auto got = en.next();
            REQUIRE(got.has_value());
            CHECK(*got == want);
        }
        CHECK_FALSE(en.next().has_value());
        CHECK_FALSE(en.next().has_value()); // stays exhausted
    }
}

TEST_CASE("reduced word counts") {
    CHECK(cb::ReducedWordEnumerator::count_at_length(2, 1) == 4);
    CHECK(cb::ReducedWordEnumerator::count_at_length(2, 2) == 12);
    CHECK(cb::ReducedWordEnumerator::count_at_length(2, 3) == 36);
    CHECK(cb::ReducedWordEnumerator::count_at_length(1, 3) == 2);
    CHECK(cb::ReducedWordEnumerator::count_at_length(3, 2) == 30);

    // The stream really has that many words per length.
    cb::ReducedWordEnumerator en(2, 3);
    std::uint64_t seen[4] = {0, 0, 0, 0};
    while (auto w = en.next()) ++seen[w->size()];
    for (int len = 1; len <= 3; ++len)
        CHECK(seen[len] == cb::ReducedWordEnumerator::count_at_length(2, len));
}

TEST_CASE("enumerator restarts and validates") {
    cb::ReducedWordEnumerator en(2, 2);
    std::vector<FreeWord> first_pass;
    while (auto w = en.next()) first_pass.push_back(*w);
    en.reset();
    std::vector<FreeWord> second_pass;
    while (auto w = en.next()) second_pass.push_back(*w);
    CHECK(first_pass == second_pass);
    REQUIRE(!first_pass.empty());
    CHECK(first_pass.front().size() == 1); // never the empty word

    cb::ReducedWordEnumerator empty(2, 0);
    CHECK_FALSE(empty.next().has_value());
    CHECK_THROWS_AS(cb::ReducedWordEnumerator(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(cb::ReducedWordEnumerator(2, -1), std::invalid_argument);
}
