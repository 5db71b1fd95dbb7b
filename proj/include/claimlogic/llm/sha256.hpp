#pragma once

#include <string>
#include <string_view>

namespace claimlogic::llm {

/// Hex-encoded SHA-256 digest, used to pin fixture records to the exact
/// prompt text they answered.
std::string sha256_hex(std::string_view data);

}  // namespace claimlogic::llm
