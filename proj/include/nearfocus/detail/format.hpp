// Locale-independent numeric formatting and strict parsing for the
// line-oriented file formats and CSV reports.

#ifndef NEARFOCUS_DETAIL_FORMAT_HPP
#define NEARFOCUS_DETAIL_FORMAT_HPP

#include <cstdio>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nearfocus::detail {

/// Full-precision: 17 significant digits round-trip any double exactly.
inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

inline std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

/// Parses a whole token as a double ("inf" allowed); rejects trailing junk.
inline double parse_double(std::string_view tok, const std::string& context) {
    const std::string s(tok);
    if (s.empty()) throw std::runtime_error(context + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size()) throw std::runtime_error(context + ": bad number '" + s + "'");
    return v;
}

inline long long parse_int(std::string_view tok, const std::string& context) {
    const std::string s(tok);
    if (s.empty()) throw std::runtime_error(context + ": empty integer");
    char* end = nullptr;
    const long long v = std::strtoll(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) throw std::runtime_error(context + ": bad integer '" + s + "'");
    return v;
}

inline unsigned long long parse_u64(std::string_view tok, const std::string& context) {
    const std::string s(tok);
    if (s.empty()) throw std::runtime_error(context + ": empty integer");
    char* end = nullptr;
    const unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size()) throw std::runtime_error(context + ": bad integer '" + s + "'");
    return v;
}

inline std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace nearfocus::detail

#endif  // NEARFOCUS_DETAIL_FORMAT_HPP
