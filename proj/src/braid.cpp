#include "cb/braid.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace cb {

namespace {

void check_letter(const BraidLetter& l, int strands) {
    if (l.sign != 1 && l.sign != -1)
        throw std::invalid_argument("BraidWord: letter sign must be +1 or -1");
    if (l.index < 1 || l.index > strands - 1) {
        std::ostringstream msg;
        msg << "BraidWord: generator index " << l.index << " out of range for " << strands
            << " strands";
        throw std::invalid_argument(msg.str());
    }
}

} // namespace

BraidWord::BraidWord(int strands, std::vector<BraidLetter> letters) : strands_(strands) {
    if (strands < 1) throw std::invalid_argument("BraidWord: strands must be >= 1");
    for (const auto& l : letters) check_letter(l, strands);
    letters_ = std::move(letters);
}

BraidWord BraidWord::empty(int strands) { return BraidWord(strands, {}); }

BraidWord BraidWord::concat(const BraidWord& other) const {
    if (strands_ != other.strands_)
        throw std::invalid_argument("BraidWord::concat: strand count mismatch");
    std::vector<BraidLetter> joined = letters_;
    joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
    return BraidWord(strands_, std::move(joined));
}

BraidWord BraidWord::inverse() const {
    std::vector<BraidLetter> flipped;
    flipped.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        flipped.push_back({it->index, -it->sign});
    return BraidWord(strands_, std::move(flipped));
}

BraidWord BraidWord::power(int k) const {
    if (k < 0) throw std::invalid_argument("BraidWord::power: negative exponent");
    std::vector<BraidLetter> repeated;
    repeated.reserve(letters_.size() * static_cast<std::size_t>(k));
    for (int rep = 0; rep < k; ++rep)
        repeated.insert(repeated.end(), letters_.begin(), letters_.end());
    return BraidWord(strands_, std::move(repeated));
}

bool BraidWord::operator==(const BraidWord& other) const {
    return strands_ == other.strands_ && letters_ == other.letters_;
}

std::string BraidWord::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& l : letters_) {
        if (!first) out << " ";
        first = false;
        out << "s" << l.index;
        if (l.sign < 0) out << "^-1";
    }
    return out.str();
}

namespace {

// Strict nonnegative integer parse of text[pos...); advances pos.
bool take_int(const std::string& text, std::size_t& pos, int& out) {
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1'000'000) return false;
        ++pos;
    }
    if (pos == start) return false;
    out = static_cast<int>(value);
    return true;
}

bool take_literal(const std::string& text, std::size_t& pos, const char* lit) {
    std::size_t p = pos;
    for (const char* c = lit; *c; ++c, ++p)
        if (p >= text.size() || text[p] != *c) return false;
    pos = p;
    return true;
}

[[noreturn]] void bad_token(const std::string& token) {
    throw std::invalid_argument("parse_word: bad token '" + token + "'");
}

} // namespace

BraidWord parse_word(const std::string& text, int strands) {
    BraidWord word = BraidWord::empty(strands);
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        std::size_t pos = 0;
        if (take_literal(token, pos, "center")) {
            if (pos != token.size()) bad_token(token);
            word = word.concat(center_word(strands));
            continue;
        }
        if (take_literal(token, pos, "s")) {
            int k;
            if (!take_int(token, pos, k)) bad_token(token);
            int sign = 1;
            if (pos != token.size()) {
                if (!take_literal(token, pos, "^-1") || pos != token.size()) bad_token(token);
                sign = -1;
            }
            if (k < 1 || k > strands - 1)
                throw std::invalid_argument("parse_word: generator '" + token +
                                            "' out of range for " + std::to_string(strands) +
                                            " strands");
            word = word.concat(BraidWord(strands, {{k, sign}}));
            continue;
        }
        if (take_literal(token, pos, "A[")) {
            int i, j;
            if (!take_int(token, pos, i) || !take_literal(token, pos, ",") ||
                !take_int(token, pos, j) || !take_literal(token, pos, "]"))
                bad_token(token);
            bool inverted = false;
            if (pos != token.size()) {
                if (!take_literal(token, pos, "^-1") || pos != token.size()) bad_token(token);
                inverted = true;
            }
            if (!(1 <= i && i < j && j <= strands))
                throw std::invalid_argument("parse_word: pure generator '" + token +
                                            "' out of range for " + std::to_string(strands) +
                                            " strands");
            BraidWord a = pure_generator_word(i, j, strands);
            word = word.concat(inverted ? a.inverse() : a);
            continue;
        }
        bad_token(token);
    }
    return word;
}

BraidWord free_reduce(const BraidWord& w) {
    std::vector<BraidLetter> stack;
    stack.reserve(w.letters().size());
    for (const auto& l : w.letters()) {
        if (!stack.empty() && stack.back().index == l.index && stack.back().sign == -l.sign)
            stack.pop_back();
        else
            stack.push_back(l);
    }
    BraidWord out(w.strands(), std::move(stack));
    out.reduced_ = true;
    return out;
}

Permutation underlying_permutation(const BraidWord& w) {
    Permutation p(w.strands());
    for (const auto& l : w.letters())
        p = p * Permutation::transposition(w.strands(), l.index, l.index + 1);
    return p;
}

BraidWord pure_generator_word(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n))
        throw std::invalid_argument("pure_generator_word: need 1 <= i < j <= n");
    std::vector<BraidLetter> letters;
    letters.reserve(2 * static_cast<std::size_t>(j - i));
    for (int k = i; k <= j - 2; ++k) letters.push_back({k, 1});
    letters.push_back({j - 1, 1});
    letters.push_back({j - 1, 1});
    for (int k = j - 2; k >= i; --k) letters.push_back({k, -1});
    return BraidWord(n, std::move(letters));
}

BraidWord center_word(int n) {
    // Full twist as a product of bands: for each j ascending, strand j loops
    // around strands j-1, j-2, ..., 1 in that order. With the conjugation
    // direction used by pure_generator_word, descending i is the order that
    // makes each band equal (sigma_{j-1} ... sigma_1)(sigma_1 ... sigma_{j-1})
    // and the whole word central; the ascending order is not central.
    if (n < 2) throw std::invalid_argument("center_word: need n >= 2");
    BraidWord word = BraidWord::empty(n);
    for (int j = 2; j <= n; ++j)
        for (int i = j - 1; i >= 1; --i) word = word.concat(pure_generator_word(i, j, n));
    return word;
}

// ---- Abstract free words -------------------------------------------------

int letter_rank(const FreeLetter& l) {
    if (l.gen < 1 || (l.sign != 1 && l.sign != -1))
        throw std::invalid_argument("letter_rank: malformed letter");
    return (l.gen - 1) * 2 + (l.sign < 0 ? 1 : 0);
}

bool word_less(const FreeWord& a, const FreeWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t p = 0; p < a.size(); ++p) {
        int ra = letter_rank(a[p]);
        int rb = letter_rank(b[p]);
        if (ra != rb) return ra < rb;
    }
    return false;
}

std::string format_free_word(const FreeWord& w, const std::vector<std::string>& names) {
    auto name_of = [&](int gen) -> std::string {
        if (!names.empty()) {
            if (gen < 1 || gen > static_cast<int>(names.size()))
                throw std::invalid_argument("format_free_word: generator without a name");
            return names[gen - 1];
        }
        std::string s;
        int g = gen - 1;
        // a..z, then aa, ab, ... for absurdly large alphabets.
        do {
            s.insert(s.begin(), static_cast<char>('a' + g % 26));
            g = g / 26 - 1;
        } while (g >= 0);
        return s;
    };

    std::ostringstream out;
    std::size_t p = 0;
    bool first = true;
    while (p < w.size()) {
        std::size_t run = p;
        while (run < w.size() && w[run] == w[p]) ++run;
        long exponent = static_cast<long>(run - p) * w[p].sign;
        if (!first) out << " ";
        first = false;
        out << name_of(w[p].gen);
        if (exponent != 1) out << "^" << exponent;
        p = run;
    }
    return out.str();
}

ReducedWordEnumerator::ReducedWordEnumerator(int alphabet, int max_len)
    : alphabet_(alphabet), max_len_(max_len) {
    if (alphabet < 1) throw std::invalid_argument("ReducedWordEnumerator: empty alphabet");
    if (max_len < 0) throw std::invalid_argument("ReducedWordEnumerator: negative length bound");
    reset();
}

void ReducedWordEnumerator::reset() {
    current_len_ = 0;
    ranks_.clear();
    exhausted_ = max_len_ == 0;
    primed_ = false;
}

std::uint64_t ReducedWordEnumerator::count_at_length(int alphabet, int len) {
    if (len <= 0) return 0;
    std::uint64_t total = 2 * static_cast<std::uint64_t>(alphabet);
    for (int p = 1; p < len; ++p) total *= 2 * static_cast<std::uint64_t>(alphabet) - 1;
    return total;
}

namespace {

// The single rank forbidden after `prev` is prev^1 (its inverse letter).
int smallest_allowed(int prev_rank) { return prev_rank >= 0 && (prev_rank ^ 1) == 0 ? 1 : 0; }

} // namespace

bool ReducedWordEnumerator::advance() {
    const int top = 2 * alphabet_ - 1;
    // Odometer increment under the no-adjacent-inverse constraint.
    int p = current_len_ - 1;
    while (p >= 0) {
        int prev = p > 0 ? ranks_[p - 1] : -1;
        int r = ranks_[p] + 1;
        while (r <= top && prev >= 0 && r == (prev ^ 1)) ++r;
        if (r <= top) {
            ranks_[p] = r;
            for (int q = p + 1; q < current_len_; ++q)
                ranks_[q] = smallest_allowed(ranks_[q - 1]);
            return true;
        }
        --p;
    }
    // Every word of this length is spent; open the next length.
    ++current_len_;
    if (current_len_ > max_len_) return false;
    ranks_.assign(current_len_, 0);
    for (int q = 1; q < current_len_; ++q) ranks_[q] = smallest_allowed(ranks_[q - 1]);
    return true;
}

std::optional<FreeWord> ReducedWordEnumerator::next() {
    if (exhausted_) return std::nullopt;
    if (!primed_) {
        primed_ = true;
        current_len_ = 1;
        ranks_.assign(1, 0);
    } else if (!advance()) {
        exhausted_ = true;
        return std::nullopt;
    }
    FreeWord word(current_len_);
    for (int p = 0; p < current_len_; ++p)
        word[p] = {ranks_[p] / 2 + 1, ranks_[p] % 2 == 0 ? 1 : -1};
    return word;
}

} // namespace cb
