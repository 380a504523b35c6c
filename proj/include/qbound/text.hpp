#pragma once

#include <cstdio>
#include <string>

namespace qbound {

/// Numeric text with 12 significant digits, enough to reproduce every value
/// the toolkit prints.
inline std::string fmt_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

} // namespace qbound
