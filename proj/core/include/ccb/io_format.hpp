#ifndef CCB_IO_FORMAT_HPP
#define CCB_IO_FORMAT_HPP

#include <charconv>
#include <string>

namespace ccb {

// Locale-independent decimal serialization at 17 significant digits (enough
// to round-trip any double exactly).
inline std::string format_g17(double x) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), x,
                             std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

} // namespace ccb

#endif
