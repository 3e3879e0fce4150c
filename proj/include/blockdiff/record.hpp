#pragma once

#include <array>
#include <string>

namespace blockdiff {

// One synthetic sample: a textual scene prompt plus the structured output the
// model is trained to produce. Waypoints are ego-frame meters at t = 1..5 s.
struct DrivingRecord {
    std::string prompt;
    std::array<bool, 12> critical_objects{};
    std::string longitudinal;
    std::string lateral;
    std::string explanation;
    std::array<std::array<double, 2>, 5> waypoints{};

    bool operator==(const DrivingRecord& o) const = default;
};

std::string record_to_jsonl(const DrivingRecord& r);
DrivingRecord record_from_jsonl(const std::string& line);

} // namespace blockdiff
