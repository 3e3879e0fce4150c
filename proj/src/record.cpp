#include "blockdiff/record.hpp"

#include <nlohmann/json.hpp>

#include "blockdiff/errors.hpp"

namespace blockdiff {

using ordered_json = nlohmann::ordered_json;

std::string record_to_jsonl(const DrivingRecord& r) {
    ordered_json j;
    j["prompt"] = r.prompt;
    j["critical_objects"] = ordered_json::array();
    for (bool b : r.critical_objects) j["critical_objects"].push_back(b ? 1 : 0);
    j["behavior"] = {{"longitudinal", r.longitudinal}, {"lateral", r.lateral}};
    j["explanation"] = r.explanation;
    j["waypoints"] = ordered_json::array();
    for (const auto& w : r.waypoints) j["waypoints"].push_back({w[0], w[1]});
    return j.dump();
}

DrivingRecord record_from_jsonl(const std::string& line) {
    DrivingRecord r;
    try {
        auto j = ordered_json::parse(line);
        r.prompt = j.at("prompt").get<std::string>();
        const auto& co = j.at("critical_objects");
        if (co.size() != r.critical_objects.size())
            throw Error(ErrorCode::SchemaShape, "critical_objects must have 12 entries");
        for (size_t i = 0; i < r.critical_objects.size(); ++i) r.critical_objects[i] = co[i].get<int>() != 0;
        r.longitudinal = j.at("behavior").at("longitudinal").get<std::string>();
        r.lateral = j.at("behavior").at("lateral").get<std::string>();
        r.explanation = j.at("explanation").get<std::string>();
        const auto& wp = j.at("waypoints");
        if (wp.size() != r.waypoints.size()) throw Error(ErrorCode::SchemaShape, "waypoints must have 5 entries");
        for (size_t i = 0; i < r.waypoints.size(); ++i) {
            r.waypoints[i][0] = wp[i][0].get<double>();
            r.waypoints[i][1] = wp[i][1].get<double>();
        }
    } catch (const ordered_json::exception& e) {
        throw Error(ErrorCode::IoError, std::string("bad record line: ") + e.what());
    }
    return r;
}

} // namespace blockdiff
