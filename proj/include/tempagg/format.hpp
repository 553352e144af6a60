#pragma once

#include <cstdio>
#include <string>

namespace tempagg {

/// All numeric file/stdout output goes through this: 10 significant digits.
inline std::string format_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

}  // namespace tempagg
