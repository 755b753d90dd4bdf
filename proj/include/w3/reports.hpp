#pragma once

#include <nlohmann/json.hpp>

#include <string>

namespace w3::reports {

inline constexpr const char* kEngineVersion = "1.0.0";

/** Common envelope for machine-readable command output. Keys are kept in
 *  nlohmann's sorted order so identical inputs give byte-identical reports. */
inline nlohmann::json make_report(const std::string& command, nlohmann::json inputs, nlohmann::json results) {
    return nlohmann::json{
        {"command", command},
        {"engineVersion", kEngineVersion},
        {"exact", true},
        {"inputs", std::move(inputs)},
        {"results", std::move(results)},
    };
}

} // namespace w3::reports
