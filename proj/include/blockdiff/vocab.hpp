#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace blockdiff {

using TokenId = int;

// Compact bitmask over token ids (vocab is small). Used for per-slot
// decoding constraints.
struct TokenSet {
    uint64_t bits[2] = {0, 0};

    void add(TokenId t) { bits[t >> 6] |= (uint64_t(1) << (t & 63)); }
    void remove(TokenId t) { bits[t >> 6] &= ~(uint64_t(1) << (t & 63)); }
    bool contains(TokenId t) const { return (bits[t >> 6] >> (t & 63)) & 1; }
    bool empty() const { return bits[0] == 0 && bits[1] == 0; }
    int count() const { return __builtin_popcountll(bits[0]) + __builtin_popcountll(bits[1]); }

    // The single member if count() == 1, else -1.
    TokenId sole() const {
        if (count() != 1) return -1;
        if (bits[0]) return __builtin_ctzll(bits[0]);
        return 64 + __builtin_ctzll(bits[1]);
    }

    TokenSet intersect(const TokenSet& o) const {
        TokenSet r;
        r.bits[0] = bits[0] & o.bits[0];
        r.bits[1] = bits[1] & o.bits[1];
        return r;
    }
};

// Character-level tokens for numerals and free text plus word-level tokens
// for closed-class values, and the four specials.
class TokenVocab {
public:
    static constexpr TokenId kMask = 0;
    static constexpr TokenId kNull = 1;
    static constexpr TokenId kBos = 2;
    static constexpr TokenId kEos = 3;

    // The full vocabulary used by the reference schema and the synthetic task.
    static TokenVocab standard();

    // A vocabulary from explicit word and character lists (specials are always
    // prepended). Used by tests to build crippled vocabularies.
    static TokenVocab from_lists(const std::vector<std::string>& words, const std::string& chars);

    int size() const { return static_cast<int>(names_.size()); }

    const std::string& name(TokenId t) const { return names_[t]; }

    // Token id of a single character, -1 if absent.
    TokenId char_token(char c) const;

    // Token id of a word token by name, -1 if absent.
    TokenId word_token(const std::string& w) const;

    bool is_special(TokenId t) const { return t < 4; }
    bool is_char(TokenId t) const { return char_of_.count(t) > 0; }
    char char_of(TokenId t) const { return char_of_.at(t); }

    bool is_digit(TokenId t) const {
        auto it = char_of_.find(t);
        return it != char_of_.end() && it->second >= '0' && it->second <= '9';
    }
    int digit_value(TokenId t) const { return char_of_.at(t) - '0'; }

    // Tokenizes plain text character by character. Throws UnknownToken on
    // characters outside the vocabulary.
    std::vector<TokenId> tokenize_chars(const std::string& text) const;

    // Renders a token sequence to display text. Specials render as markers,
    // word tokens as their names.
    std::string detokenize(const std::vector<TokenId>& tokens) const;

    TokenSet all_chars_in(const std::string& chars) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<char, TokenId> char_ids_;
    std::unordered_map<std::string, TokenId> word_ids_;
    std::unordered_map<TokenId, char> char_of_;
};

} // namespace blockdiff
