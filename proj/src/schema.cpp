#include "blockdiff/schema.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "blockdiff/errors.hpp"

namespace blockdiff {

using ordered_json = nlohmann::ordered_json;

const char* section_name(int s) {
    switch (s) {
        case kCriticalObjects: return "critical_objects";
        case kExplanation: return "explanation";
        case kFutureMetaBehavior: return "future_meta_behavior";
        case kTrajectory: return "trajectory";
    }
    return "?";
}

OutputSchema OutputSchema::reference() {
    OutputSchema s;
    SectionSpec co;
    co.id = kCriticalObjects;
    co.key = "co";
    co.kind = ValueKind::Binary;
    co.binary_fields = {"nv", "pd", "cy", "tf", "rh", "wc", "cn", "ev", "an", "sv", "cv", "do"};
    s.sections.push_back(co);

    SectionSpec ex;
    ex.id = kExplanation;
    ex.key = "ex";
    ex.kind = ValueKind::FreeText;
    ex.max_len = 192;
    s.sections.push_back(ex);

    SectionSpec fmb;
    fmb.id = kFutureMetaBehavior;
    fmb.key = "fmeta";
    fmb.kind = ValueKind::Categorical;
    fmb.cat_fields = {
        {"longitudinal",
         {{"decelerate", {"decel", "er", "ate"}},
          {"accelerate", {"accel", "er", "ate"}},
          {"keep_speed", {"keep", "_", "speed"}}}},
        {"lateral",
         {{"left_turn", {"left", "_", "turn"}},
          {"right_turn", {"right", "_", "turn"}},
          {"keep_lane", {"keep", "_", "lane"}}}},
    };
    s.sections.push_back(fmb);

    SectionSpec tr;
    tr.id = kTrajectory;
    tr.key = "traj";
    tr.kind = ValueKind::WaypointList;
    tr.waypoint_count = 5;
    s.sections.push_back(tr);
    return s;
}

void OutputSchema::validate() const {
    if (sections.size() != kNumSections)
        throw Error(ErrorCode::SchemaShape, "schema must have exactly 4 sections");
    static const ValueKind kinds[4] = {ValueKind::Binary, ValueKind::FreeText, ValueKind::Categorical,
                                       ValueKind::WaypointList};
    for (int i = 0; i < kNumSections; ++i) {
        const auto& sec = sections[i];
        if (sec.id != i)
            throw Error(ErrorCode::SchemaShape,
                        std::string("section ") + std::to_string(i) + " must be " + section_name(i));
        if (sec.kind != kinds[i]) throw Error(ErrorCode::SchemaShape, std::string(section_name(i)) + ": wrong kind");
        if (sec.key.empty()) throw Error(ErrorCode::SchemaShape, "empty section key");
    }
    if (sections[kCriticalObjects].binary_fields.size() != 12)
        throw Error(ErrorCode::SchemaShape, "critical_objects must have 12 binary fields");
    if (sections[kExplanation].max_len < 0) throw Error(ErrorCode::SchemaShape, "negative free_text length");
    const auto& cf = sections[kFutureMetaBehavior].cat_fields;
    if (cf.size() != 2) throw Error(ErrorCode::SchemaShape, "future_meta_behavior must have 2 categorical fields");
    for (const auto& f : cf) {
        if (f.values.empty()) throw Error(ErrorCode::SchemaShape, "categorical field with no values");
        for (const auto& v : f.values)
            for (const auto& p : v.pieces)
                if (p.empty()) throw Error(ErrorCode::SchemaShape, "empty categorical piece");
    }
    if (sections[kTrajectory].waypoint_count != 5)
        throw Error(ErrorCode::SchemaShape, "trajectory must have 5 waypoints");
}

std::string OutputSchema::to_json() const {
    ordered_json j;
    j["sections"] = ordered_json::array();
    for (const auto& sec : sections) {
        ordered_json js;
        js["id"] = section_name(sec.id);
        js["key"] = sec.key;
        switch (sec.kind) {
            case ValueKind::Binary:
                js["kind"] = "binary";
                js["fields"] = sec.binary_fields;
                break;
            case ValueKind::FreeText:
                js["kind"] = "free_text";
                js["max_len"] = sec.max_len;
                break;
            case ValueKind::Categorical: {
                js["kind"] = "categorical";
                js["fields"] = ordered_json::array();
                for (const auto& f : sec.cat_fields) {
                    ordered_json jf;
                    jf["name"] = f.name;
                    jf["values"] = ordered_json::array();
                    for (const auto& v : f.values)
                        jf["values"].push_back({{"name", v.name}, {"pieces", v.pieces}});
                    js["fields"].push_back(jf);
                }
                break;
            }
            case ValueKind::WaypointList:
                js["kind"] = "waypoint_list";
                js["count"] = sec.waypoint_count;
                break;
        }
        j["sections"].push_back(js);
    }
    return j.dump(2);
}

OutputSchema OutputSchema::from_json(const std::string& json_text) {
    OutputSchema s;
    try {
        auto j = ordered_json::parse(json_text);
        int idx = 0;
        for (const auto& js : j.at("sections")) {
            SectionSpec sec;
            std::string id = js.at("id").get<std::string>();
            for (int k = 0; k < kNumSections; ++k)
                if (id == section_name(k)) sec.id = k;
            sec.key = js.at("key").get<std::string>();
            std::string kind = js.at("kind").get<std::string>();
            if (kind == "binary") {
                sec.kind = ValueKind::Binary;
                sec.binary_fields = js.at("fields").get<std::vector<std::string>>();
            } else if (kind == "free_text") {
                sec.kind = ValueKind::FreeText;
                sec.max_len = js.at("max_len").get<int>();
            } else if (kind == "categorical") {
                sec.kind = ValueKind::Categorical;
                for (const auto& jf : js.at("fields")) {
                    CategoricalField f;
                    f.name = jf.at("name").get<std::string>();
                    for (const auto& jv : jf.at("values")) {
                        CategoricalValue v;
                        v.name = jv.at("name").get<std::string>();
                        auto pieces = jv.at("pieces").get<std::vector<std::string>>();
                        if (pieces.size() != 3)
                            throw Error(ErrorCode::SchemaShape, "categorical values use exactly 3 pieces");
                        std::copy(pieces.begin(), pieces.end(), v.pieces.begin());
                        f.values.push_back(v);
                    }
                    sec.cat_fields.push_back(f);
                }
            } else if (kind == "waypoint_list") {
                sec.kind = ValueKind::WaypointList;
                sec.waypoint_count = js.at("count").get<int>();
            } else {
                throw Error(ErrorCode::SchemaShape, "unknown section kind: " + kind);
            }
            s.sections.push_back(sec);
            ++idx;
        }
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorCode::SchemaShape, std::string("bad schema json: ") + e.what());
    }
    s.validate();
    return s;
}

OutputSchema OutputSchema::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open schema file " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json(ss.str());
}

namespace {

// Incremental layout builder: anchors come from literal text, slots mark
// editable positions.
struct Builder {
    const TokenVocab& vocab;
    ScaffoldLayout& out;

    void anchors(const std::string& text) {
        for (char c : text) {
            TokenId t = vocab.char_token(c);
            if (t < 0)
                throw Error(ErrorCode::UnknownToken, std::string("anchor character '") + c + "' not in vocabulary");
            out.tmpl.push_back(t);
            out.anchor.push_back(1);
            out.slots.push_back(Slot{SlotKind::Binary, 0, 0, 0});
        }
    }

    void slot(SlotKind kind, int section, int field, int sub) {
        out.tmpl.push_back(TokenVocab::kMask);
        out.anchor.push_back(0);
        out.slots.push_back(Slot{kind, static_cast<int16_t>(section), static_cast<int16_t>(field),
                                 static_cast<int16_t>(sub)});
    }
};

TokenId resolve_piece(const TokenVocab& vocab, const std::string& piece) {
    TokenId t = vocab.word_token(piece);
    if (t < 0 && piece.size() == 1) t = vocab.char_token(piece[0]);
    if (t < 0) throw Error(ErrorCode::UnknownToken, "categorical piece '" + piece + "' not in vocabulary");
    return t;
}

} // namespace

ScaffoldLayout compile_schema(const OutputSchema& schema, const TokenVocab& vocab) {
    schema.validate();
    ScaffoldLayout layout;
    layout.vocab = vocab;
    layout.schema = schema;
    Builder b{vocab, layout};

    // critical_objects: {"co":{"nv":V,...,"do":V},
    {
        const auto& sec = schema.sections[kCriticalObjects];
        layout.sections[kCriticalObjects].id = kCriticalObjects;
        layout.sections[kCriticalObjects].begin = 0;
        b.anchors("{\"" + sec.key + "\":{");
        for (size_t f = 0; f < sec.binary_fields.size(); ++f) {
            b.anchors("\"" + sec.binary_fields[f] + "\":");
            b.slot(SlotKind::Binary, kCriticalObjects, static_cast<int>(f), 0);
            b.anchors(f + 1 < sec.binary_fields.size() ? "," : "},");
        }
        layout.sections[kCriticalObjects].end = static_cast<int>(layout.tmpl.size());
    }

    // explanation: "ex":" followed by max_len text slots (closing quote is
    // owned by the next section)
    {
        const auto& sec = schema.sections[kExplanation];
        layout.sections[kExplanation].id = kExplanation;
        layout.sections[kExplanation].begin = static_cast<int>(layout.tmpl.size());
        b.anchors("\"" + sec.key + "\":\"");
        for (int i = 0; i < sec.max_len; ++i) b.slot(SlotKind::TextChar, kExplanation, 0, i);
        layout.sections[kExplanation].end = static_cast<int>(layout.tmpl.size());
    }

    // future_meta_behavior: ","fmeta":["PPP","PPP"],
    {
        const auto& sec = schema.sections[kFutureMetaBehavior];
        layout.sections[kFutureMetaBehavior].id = kFutureMetaBehavior;
        layout.sections[kFutureMetaBehavior].begin = static_cast<int>(layout.tmpl.size());
        b.anchors("\",\"" + sec.key + "\":[\"");
        for (size_t f = 0; f < sec.cat_fields.size(); ++f) {
            for (int p = 0; p < 3; ++p) b.slot(SlotKind::CatPiece, kFutureMetaBehavior, static_cast<int>(f), p);
            b.anchors(f + 1 < sec.cat_fields.size() ? "\",\"" : "\"],");
        }
        layout.sections[kFutureMetaBehavior].end = static_cast<int>(layout.tmpl.size());
    }

    // trajectory: "traj": [x,y,x,y,...]}  (14 value characters per waypoint)
    {
        const auto& sec = schema.sections[kTrajectory];
        layout.sections[kTrajectory].id = kTrajectory;
        layout.sections[kTrajectory].begin = static_cast<int>(layout.tmpl.size());
        b.anchors("\"" + sec.key + "\": [");
        for (int w = 0; w < sec.waypoint_count; ++w) {
            for (int coord = 0; coord < 2; ++coord) {
                int base = coord * 7;
                b.slot(SlotKind::Sign, kTrajectory, w, base + 0);
                b.slot(SlotKind::Digit, kTrajectory, w, base + 1);
                b.slot(SlotKind::Digit, kTrajectory, w, base + 2);
                b.slot(SlotKind::Digit, kTrajectory, w, base + 3);
                b.slot(SlotKind::Dot, kTrajectory, w, base + 4);
                b.slot(SlotKind::Digit, kTrajectory, w, base + 5);
                b.slot(SlotKind::Digit, kTrajectory, w, base + 6);
                if (coord == 0) b.anchors(",");
            }
            b.anchors(w + 1 < sec.waypoint_count ? "," : "]}");
        }
        layout.sections[kTrajectory].end = static_cast<int>(layout.tmpl.size());
    }

    layout.total_len = static_cast<int>(layout.tmpl.size());
    for (int i = 0; i < layout.total_len; ++i)
        if (!layout.anchor[i]) {
            layout.editable_all.push_back(i);
            layout.sections[layout.slots[i].section].editable.push_back(i);
        }

    layout.text_alphabet = vocab.all_chars_in("abcdefghijklmnopqrstuvwxyz .");
    layout.digit_tokens = vocab.all_chars_in("0123456789");
    layout.sign_tokens = vocab.all_chars_in("+-");
    {
        TokenId y = vocab.word_token("yes");
        TokenId n = vocab.word_token("no");
        if (y < 0 || n < 0) throw Error(ErrorCode::UnknownToken, "vocabulary lacks yes/no tokens");
        layout.binary_tokens.add(y);
        layout.binary_tokens.add(n);
    }

    // Resolve categorical pieces once so serialization and constraints agree.
    for (const auto& f : schema.sections[kFutureMetaBehavior].cat_fields)
        for (const auto& v : f.values)
            for (const auto& p : v.pieces) resolve_piece(vocab, p);

    return layout;
}

int ScaffoldLayout::section_of(int pos) const {
    for (int s = 0; s < kNumSections; ++s)
        if (pos >= sections[s].begin && pos < sections[s].end) return s;
    return -1;
}

TokenSet ScaffoldLayout::static_allowed(int pos) const {
    TokenSet set;
    if (anchor[pos]) {
        set.add(tmpl[pos]);
        return set;
    }
    const Slot& sl = slots[pos];
    switch (sl.kind) {
        case SlotKind::Binary:
            return binary_tokens;
        case SlotKind::CatPiece: {
            const auto& field = schema.sections[kFutureMetaBehavior].cat_fields[sl.field];
            for (const auto& v : field.values) set.add(resolve_piece(vocab, v.pieces[sl.sub]));
            return set;
        }
        case SlotKind::TextChar:
            set = text_alphabet;
            set.add(TokenVocab::kNull);
            return set;
        case SlotKind::Sign:
            return sign_tokens;
        case SlotKind::Digit:
            return digit_tokens;
        case SlotKind::Dot:
            set.add(vocab.char_token('.'));
            return set;
    }
    return set;
}

BlockPlan plan_blocks(const ScaffoldLayout& layout, int block_size) {
    if (block_size < 1) throw Error(ErrorCode::ConfigError, "block size must be >= 1");
    BlockPlan plan;
    plan.block_size = block_size;
    for (int s = 0; s < kNumSections; ++s) {
        const auto& ed = layout.sections[s].editable;
        for (size_t i = 0; i < ed.size(); i += block_size) {
            Block blk;
            blk.section = s;
            size_t j = std::min(ed.size(), i + block_size);
            blk.editable.assign(ed.begin() + i, ed.begin() + j);
            plan.blocks.push_back(std::move(blk));
        }
    }
    int cursor = 0;
    for (auto& blk : plan.blocks) {
        blk.begin = cursor;
        blk.end = blk.editable.back() + 1;
        cursor = blk.end;
    }
    if (!plan.blocks.empty()) plan.blocks.back().end = layout.total_len;
    return plan;
}

std::vector<int> BlockPlan::blocks_per_section(int num_sections) const {
    std::vector<int> counts(num_sections, 0);
    for (const auto& b : blocks) counts[b.section]++;
    return counts;
}

namespace {

void render_fixed_decimal(double v, const TokenVocab& vocab, std::vector<TokenId>& out, size_t base) {
    long long cents = std::llround(v * 100.0);
    if (cents > 99999 || cents < -99999)
        throw Error(ErrorCode::ValueOverflow, "coordinate magnitude exceeds 999.99");
    // Canonical zero carries a '+' sign.
    char sign = cents < 0 ? '-' : '+';
    long long mag = std::llabs(cents);
    char digits[5];
    for (int i = 4; i >= 0; --i) {
        digits[i] = static_cast<char>('0' + mag % 10);
        mag /= 10;
    }
    out[base + 0] = vocab.char_token(sign);
    out[base + 1] = vocab.char_token(digits[0]);
    out[base + 2] = vocab.char_token(digits[1]);
    out[base + 3] = vocab.char_token(digits[2]);
    out[base + 4] = vocab.char_token('.');
    out[base + 5] = vocab.char_token(digits[3]);
    out[base + 6] = vocab.char_token(digits[4]);
}

} // namespace

std::vector<TokenId> serialize_record(const DrivingRecord& record, const ScaffoldLayout& layout) {
    const TokenVocab& vocab = layout.vocab;
    std::vector<TokenId> out = layout.tmpl;

    const TokenId yes = vocab.word_token("yes");
    const TokenId no = vocab.word_token("no");
    for (size_t f = 0; f < record.critical_objects.size(); ++f) {
        int pos = layout.sections[kCriticalObjects].editable[f];
        out[pos] = record.critical_objects[f] ? yes : no;
    }

    const auto& ex = layout.sections[kExplanation];
    int cap = static_cast<int>(ex.editable.size());
    if (static_cast<int>(record.explanation.size()) > cap)
        throw Error(ErrorCode::TextTooLong, "explanation exceeds " + std::to_string(cap) + " tokens");
    for (int i = 0; i < cap; ++i) {
        if (i < static_cast<int>(record.explanation.size())) {
            TokenId t = vocab.char_token(record.explanation[i]);
            if (t < 0 || !layout.text_alphabet.contains(t))
                throw Error(ErrorCode::UnknownToken,
                            std::string("explanation character '") + record.explanation[i] + "' not allowed");
            out[ex.editable[i]] = t;
        } else {
            out[ex.editable[i]] = TokenVocab::kNull;
        }
    }

    const auto& fmb_spec = layout.schema.sections[kFutureMetaBehavior];
    const std::string* values[2] = {&record.longitudinal, &record.lateral};
    for (size_t f = 0; f < fmb_spec.cat_fields.size(); ++f) {
        const auto& field = fmb_spec.cat_fields[f];
        const CategoricalValue* match = nullptr;
        for (const auto& v : field.values)
            if (v.name == *values[f]) match = &v;
        if (!match)
            throw Error(ErrorCode::SchemaShape, "'" + *values[f] + "' is not a value of " + field.name);
        for (int p = 0; p < 3; ++p) {
            int pos = layout.sections[kFutureMetaBehavior].editable[f * 3 + p];
            out[pos] = resolve_piece(vocab, match->pieces[p]);
        }
    }

    const auto& tr = layout.sections[kTrajectory];
    std::vector<TokenId> wp_tokens(tr.editable.size());
    {
        std::vector<TokenId> scratch(tr.editable.size());
        for (size_t w = 0; w < record.waypoints.size(); ++w) {
            render_fixed_decimal(record.waypoints[w][0], vocab, scratch, w * 14);
            render_fixed_decimal(record.waypoints[w][1], vocab, scratch, w * 14 + 7);
        }
        for (size_t i = 0; i < tr.editable.size(); ++i) out[tr.editable[i]] = scratch[i];
    }
    (void)wp_tokens;

    return out;
}

namespace {

double parse_fixed_decimal(const std::vector<TokenId>& tokens, const ScaffoldLayout& layout,
                           const std::vector<int>& editable, size_t base) {
    const TokenVocab& vocab = layout.vocab;
    TokenId sign_tok = tokens[editable[base]];
    if (!layout.sign_tokens.contains(sign_tok)) throw Error(ErrorCode::MalformedNumber, "bad sign token");
    int digits[5];
    static const int digit_offsets[5] = {1, 2, 3, 5, 6};
    for (int i = 0; i < 5; ++i) {
        TokenId t = tokens[editable[base + digit_offsets[i]]];
        if (!vocab.is_digit(t)) throw Error(ErrorCode::MalformedNumber, "bad digit token");
        digits[i] = vocab.digit_value(t);
    }
    if (tokens[editable[base + 4]] != vocab.char_token('.'))
        throw Error(ErrorCode::MalformedNumber, "missing decimal point");
    long long cents = digits[0] * 10000LL + digits[1] * 1000LL + digits[2] * 100LL + digits[3] * 10LL + digits[4];
    double mag = static_cast<double>(cents) / 100.0;
    // "-000.00" is never serialized but parses leniently to zero.
    return vocab.char_of(sign_tok) == '-' ? -mag : mag;
}

} // namespace

DrivingRecord parse_output(const std::vector<TokenId>& tokens, const ScaffoldLayout& layout) {
    if (static_cast<int>(tokens.size()) != layout.total_len)
        throw Error(ErrorCode::ShapeMismatch,
                    "expected " + std::to_string(layout.total_len) + " tokens, got " + std::to_string(tokens.size()));
    const TokenVocab& vocab = layout.vocab;

    for (int i = 0; i < layout.total_len; ++i)
        if (layout.anchor[i] && tokens[i] != layout.tmpl[i])
            throw Error(ErrorCode::AnchorViolation, "anchor mismatch at position " + std::to_string(i));

    DrivingRecord r;

    const TokenId yes = vocab.word_token("yes");
    const TokenId no = vocab.word_token("no");
    const auto& co = layout.sections[kCriticalObjects].editable;
    for (size_t f = 0; f < r.critical_objects.size(); ++f) {
        TokenId t = tokens[co[f]];
        if (t != yes && t != no) throw Error(ErrorCode::SchemaShape, "binary slot holds neither yes nor no");
        r.critical_objects[f] = (t == yes);
    }

    const auto& ex = layout.sections[kExplanation].editable;
    bool seen_null = false;
    for (int pos : ex) {
        TokenId t = tokens[pos];
        if (t == TokenVocab::kNull) {
            seen_null = true;
            continue;
        }
        if (seen_null) throw Error(ErrorCode::InteriorNull, "text after NULL padding");
        if (!layout.text_alphabet.contains(t))
            throw Error(ErrorCode::SchemaShape, "explanation slot holds a non-text token");
        r.explanation += vocab.char_of(t);
    }

    const auto& fmb_spec = layout.schema.sections[kFutureMetaBehavior];
    const auto& fmb = layout.sections[kFutureMetaBehavior].editable;
    std::string* values[2] = {&r.longitudinal, &r.lateral};
    for (size_t f = 0; f < fmb_spec.cat_fields.size(); ++f) {
        const auto& field = fmb_spec.cat_fields[f];
        const CategoricalValue* match = nullptr;
        for (const auto& v : field.values) {
            bool ok = true;
            for (int p = 0; p < 3; ++p)
                if (tokens[fmb[f * 3 + p]] != resolve_piece(vocab, v.pieces[p])) ok = false;
            if (ok) match = &v;
        }
        if (!match) throw Error(ErrorCode::SchemaShape, "unrecognized categorical value in " + field.name);
        *values[f] = match->name;
    }

    const auto& tr = layout.sections[kTrajectory].editable;
    for (size_t w = 0; w < r.waypoints.size(); ++w) {
        r.waypoints[w][0] = parse_fixed_decimal(tokens, layout, tr, w * 14);
        r.waypoints[w][1] = parse_fixed_decimal(tokens, layout, tr, w * 14 + 7);
    }

    return r;
}

ConstraintTracker::ConstraintTracker(const ScaffoldLayout& layout)
    : layout_(&layout),
      final_(layout.total_len, -1),
      text_first_null_(layout.total_len),
      text_last_char_(-1) {
    const auto& cf = layout.schema.sections[kFutureMetaBehavior].cat_fields;
    cat_candidates_.assign(cf.size(), 0);
    for (size_t f = 0; f < cf.size(); ++f)
        cat_candidates_[f] = (uint32_t(1) << cf[f].values.size()) - 1;
}

TokenSet ConstraintTracker::allowed(int pos) const {
    const ScaffoldLayout& L = *layout_;
    if (L.anchor[pos]) {
        TokenSet s;
        s.add(L.tmpl[pos]);
        return s;
    }
    const Slot& sl = L.slots[pos];
    switch (sl.kind) {
        case SlotKind::CatPiece: {
            TokenSet s;
            const auto& field = L.schema.sections[kFutureMetaBehavior].cat_fields[sl.field];
            uint32_t cand = cat_candidates_[sl.field];
            for (size_t v = 0; v < field.values.size(); ++v)
                if (cand & (uint32_t(1) << v)) s.add(resolve_piece(L.vocab, field.values[v].pieces[sl.sub]));
            return s;
        }
        case SlotKind::TextChar: {
            int idx = sl.sub;
            TokenSet s;
            if (text_first_null_ < idx) {
                s.add(TokenVocab::kNull); // NULL padding is a contiguous suffix
                return s;
            }
            s = L.text_alphabet;
            if (text_last_char_ < idx) s.add(TokenVocab::kNull);
            return s;
        }
        default:
            return L.static_allowed(pos);
    }
}

void ConstraintTracker::commit(int pos, TokenId tok) {
    final_[pos] = tok;
    const ScaffoldLayout& L = *layout_;
    if (L.anchor[pos]) return;
    const Slot& sl = L.slots[pos];
    if (sl.kind == SlotKind::TextChar) {
        if (tok == TokenVocab::kNull)
            text_first_null_ = std::min(text_first_null_, static_cast<int>(sl.sub));
        else
            text_last_char_ = std::max(text_last_char_, static_cast<int>(sl.sub));
    } else if (sl.kind == SlotKind::CatPiece) {
        const auto& field = L.schema.sections[kFutureMetaBehavior].cat_fields[sl.field];
        uint32_t cand = cat_candidates_[sl.field];
        for (size_t v = 0; v < field.values.size(); ++v)
            if ((cand & (uint32_t(1) << v)) && resolve_piece(L.vocab, field.values[v].pieces[sl.sub]) != tok)
                cand &= ~(uint32_t(1) << v);
        cat_candidates_[sl.field] = cand;
    }
}

} // namespace blockdiff
