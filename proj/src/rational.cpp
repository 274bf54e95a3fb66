#include "patlab/rational.hpp"

#include <cstdlib>

namespace patlab {

namespace {

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw Error("invalid number '" + s + "'");
    errno = 0;
    char* end = nullptr;
    unsigned long long v = std::strtoull(s.c_str(), &end, 10);
    if (errno != 0 || end != s.c_str() + s.size()) throw Error("invalid number '" + s + "'");
    return v;
}

}  // namespace

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw Error("empty rational");
    if (text.back() == '%') return Rational(parse_u64(text.substr(0, text.size() - 1)), 100);
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_u64(text), 1);
    return Rational(parse_u64(text.substr(0, slash)), parse_u64(text.substr(slash + 1)));
}

}  // namespace patlab
