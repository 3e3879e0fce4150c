#include "blockdiff/vocab.hpp"

#include "blockdiff/errors.hpp"

namespace blockdiff {

namespace {
const char* kSpecialNames[4] = {"<mask>", "<null>", "<bos>", "<eos>"};

const std::vector<std::string>& standard_words() {
    static const std::vector<std::string> words = {
        "yes", "no", "keep", "speed", "lane", "left", "right", "turn", "accel", "decel", "er", "ate",
    };
    return words;
}

const std::string& standard_chars() {
    static const std::string chars =
        "abcdefghijklmnopqrstuvwxyz"
        "0123456789"
        "+-.,:;\"{}[]_= ";
    return chars;
}
} // namespace

TokenVocab TokenVocab::standard() {
    return from_lists(standard_words(), standard_chars());
}

TokenVocab TokenVocab::from_lists(const std::vector<std::string>& words, const std::string& chars) {
    TokenVocab v;
    for (const char* s : kSpecialNames) v.names_.emplace_back(s);
    for (const auto& w : words) {
        TokenId id = static_cast<TokenId>(v.names_.size());
        v.names_.push_back(w);
        v.word_ids_[w] = id;
    }
    for (char c : chars) {
        TokenId id = static_cast<TokenId>(v.names_.size());
        v.names_.push_back(std::string(1, c));
        v.char_ids_[c] = id;
        v.char_of_[id] = c;
    }
    if (v.size() > 128) throw Error(ErrorCode::SchemaShape, "vocabulary exceeds 128 tokens");
    return v;
}

TokenId TokenVocab::char_token(char c) const {
    auto it = char_ids_.find(c);
    return it == char_ids_.end() ? -1 : it->second;
}

TokenId TokenVocab::word_token(const std::string& w) const {
    auto it = word_ids_.find(w);
    return it == word_ids_.end() ? -1 : it->second;
}

std::vector<TokenId> TokenVocab::tokenize_chars(const std::string& text) const {
    std::vector<TokenId> out;
    out.reserve(text.size());
    for (char c : text) {
        TokenId t = char_token(c);
        if (t < 0) throw Error(ErrorCode::UnknownToken, std::string("character '") + c + "' not in vocabulary");
        out.push_back(t);
    }
    return out;
}

std::string TokenVocab::detokenize(const std::vector<TokenId>& tokens) const {
    std::string out;
    for (TokenId t : tokens) out += names_[t];
    return out;
}

TokenSet TokenVocab::all_chars_in(const std::string& chars) const {
    TokenSet s;
    for (char c : chars) {
        TokenId t = char_token(c);
        if (t < 0) throw Error(ErrorCode::UnknownToken, std::string("character '") + c + "' not in vocabulary");
        s.add(t);
    }
    return s;
}

} // namespace blockdiff
