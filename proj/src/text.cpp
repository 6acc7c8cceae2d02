#include "mcburst/text.hpp"

#include <charconv>
#include <cstdio>

namespace mcburst {

std::string format_shortest(double x) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, ptr);
}

std::string format_sig6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", x);
    return std::string(buf);
}

}  // namespace mcburst
