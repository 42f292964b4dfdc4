#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace vdw::cli {

inline constexpr const char* kVersion = "0.3.0";

enum ExitCode : int {
    kOk = 0,
    kFailsWithCounterexample = 1,
    kUsage = 2,
    kBudget = 3,
};

/// Embedded in every JSON result; identical manifests give identical output.
struct RunManifest {
    std::string command;
    nlohmann::json parameters = nlohmann::json::object();
    nlohmann::json input_digests = nlohmann::json::object();   // path -> fnv1a64 hex
    std::uint64_t seed = 0;
    std::string version = kVersion;

    nlohmann::json to_json() const;
};

/// 64-bit FNV-1a, 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

} // namespace vdw::cli
