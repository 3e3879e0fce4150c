#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "blockdiff/record.hpp"
#include "blockdiff/vocab.hpp"

namespace blockdiff {

// Section indices, fixed in decode order.
enum Section : int {
    kCriticalObjects = 0,
    kExplanation = 1,
    kFutureMetaBehavior = 2,
    kTrajectory = 3,
};
constexpr int kNumSections = 4;
const char* section_name(int s);

enum class ValueKind { Binary, Categorical, FreeText, WaypointList };

struct CategoricalValue {
    std::string name;
    std::array<std::string, 3> pieces; // rendered as exactly 3 word-piece tokens
};

struct CategoricalField {
    std::string name;
    std::vector<CategoricalValue> values;
};

struct SectionSpec {
    int id = 0;               // Section enum value
    std::string key;          // serialized key text
    ValueKind kind = ValueKind::Binary;
    std::vector<std::string> binary_fields;     // Binary
    std::vector<CategoricalField> cat_fields;   // Categorical
    int max_len = 0;                            // FreeText
    int waypoint_count = 0;                     // WaypointList
};

struct OutputSchema {
    std::vector<SectionSpec> sections;

    // The schema whose compiled layout reproduces the reference token
    // accounting: value/scaffold counts {12/80, 192/6, 6/18, 70/20}.
    static OutputSchema reference();

    static OutputSchema from_json(const std::string& json_text);
    static OutputSchema from_json_file(const std::string& path);
    std::string to_json() const;

    // Throws SchemaShape if the four-section invariants are violated.
    void validate() const;
};

// Role of an editable position.
enum class SlotKind : uint8_t { Binary, CatPiece, TextChar, Sign, Digit, Dot };

struct Slot {
    SlotKind kind;
    int16_t section;
    int16_t field; // binary field / categorical field / waypoint index
    int16_t sub;   // piece index, text char index, or char index within waypoint
};

struct SectionLayout {
    int id = 0;
    int begin = 0; // absolute token span [begin, end)
    int end = 0;
    std::vector<int> editable; // absolute positions, ascending
};

// The compiled scaffold: template tokens with anchors filled, editable
// positions marked MASK, plus per-slot metadata for constrained decoding.
struct ScaffoldLayout {
    TokenVocab vocab;
    OutputSchema schema;
    std::vector<TokenId> tmpl;    // length L, MASK at editable positions
    std::vector<uint8_t> anchor;  // length L
    std::vector<Slot> slots;      // length L, meaningful where !anchor[i]
    std::array<SectionLayout, kNumSections> sections;
    std::vector<int> editable_all;
    int total_len = 0;

    TokenSet text_alphabet;  // free-text characters (excludes NULL)
    TokenSet digit_tokens;
    TokenSet sign_tokens;
    TokenSet binary_tokens;

    int section_of(int pos) const;
    bool is_anchor(int pos) const { return anchor[pos] != 0; }

    // Context-free allowed token set for a position (anchors allow only the
    // template token). Free-text slots include NULL; ordering constraints on
    // NULL are handled by ConstraintTracker.
    TokenSet static_allowed(int pos) const;
};

ScaffoldLayout compile_schema(const OutputSchema& schema, const TokenVocab& vocab);

struct Block {
    int section = 0;
    int begin = 0; // absolute token span [begin, end)
    int end = 0;
    std::vector<int> editable; // absolute positions covered by this block
};

struct BlockPlan {
    int block_size = 0;
    std::vector<Block> blocks;
    int total_blocks() const { return static_cast<int>(blocks.size()); }
    std::vector<int> blocks_per_section(int num_sections = kNumSections) const;
};

// Partitions each section's editable positions into ceil(|E_s|/d) blocks.
// Block spans are contiguous, cover [0, L), and never split a section's
// editable positions across sections.
BlockPlan plan_blocks(const ScaffoldLayout& layout, int block_size);

std::vector<TokenId> serialize_record(const DrivingRecord& record, const ScaffoldLayout& layout);
DrivingRecord parse_output(const std::vector<TokenId>& tokens, const ScaffoldLayout& layout);

// Tracks finalized tokens during decoding and exposes the per-position
// allowed sets that keep every completed sequence parseable: template tokens
// at anchors, digits/signs in numerals, consistent word-piece triples in
// categorical fields, and NULL only as a contiguous free-text suffix.
class ConstraintTracker {
public:
    explicit ConstraintTracker(const ScaffoldLayout& layout);

    TokenSet allowed(int pos) const;
    void commit(int pos, TokenId tok);
    bool committed(int pos) const { return final_[pos] >= 0; }
    TokenId committed_token(int pos) const { return final_[pos]; }

private:
    const ScaffoldLayout* layout_;
    std::vector<TokenId> final_;
    int text_first_null_;
    int text_last_char_;
    std::vector<uint32_t> cat_candidates_; // per categorical field, candidate value bitmask
    int cat_field_base_ = 0;
};

} // namespace blockdiff
