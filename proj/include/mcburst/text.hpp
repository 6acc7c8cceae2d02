#pragma once

#include <string>

namespace mcburst {

inline constexpr const char* kToolVersion = "mcburst 1.0.0";

/// Shortest decimal that round-trips to the same double (std::to_chars).
std::string format_shortest(double x);

/// 6 significant digits, for human-facing tables.
std::string format_sig6(double x);

}  // namespace mcburst
