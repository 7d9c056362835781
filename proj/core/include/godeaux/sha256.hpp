#pragma once

#include <string>

namespace godeaux {

// Hex digest of the full SHA-256 of `data`. Used for content-addressed cache
// keys, not for anything security sensitive.
std::string sha256_hex(const std::string& data);

}  // namespace godeaux
