#include "hilbstab/manifest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace hs {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr))
    throw std::runtime_error("sha256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

const char* version_string() { return "0.1.0"; }

nlohmann::json make_manifest(const std::string& command, const std::vector<std::string>& args,
                             std::uint64_t seed, std::string_view input) {
  return {{"command", command},
          {"args", args},
          {"seed", seed},
          {"version", version_string()},
          {"input_sha256", sha256_hex(input)}};
}

}  // namespace hs
