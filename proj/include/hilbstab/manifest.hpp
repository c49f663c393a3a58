#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hs {

std::string sha256_hex(std::string_view data);

// Reproducibility record: command, arguments, seed, tool version and the
// digest of the input. Deliberately free of timestamps.
nlohmann::json make_manifest(const std::string& command, const std::vector<std::string>& args,
                             std::uint64_t seed, std::string_view input);

const char* version_string();

}  // namespace hs
