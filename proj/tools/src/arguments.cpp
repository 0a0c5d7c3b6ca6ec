#include "arguments.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

namespace traintrack::cli
{

namespace
{

std::string strip(const std::string &s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) {
        ++a;
    }
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) {
        --b;
    }
    return s.substr(a, b - a);
}

// Parses a full real number; false if anything is left over.
bool read_real(const std::string &s, double &out)
{
    if (s.empty()) {
        return false;
    }
    char *end = nullptr;
    out = std::strtod(s.c_str(), &end);
    return end == s.c_str() + s.size();
}

[[noreturn]] void bad(const std::string &text, const char *what)
{
    throw std::invalid_argument("cannot parse '" + text + "' as " + what);
}

} // namespace

cplx parse_complex(const std::string &text)
{
    std::string s = strip(text);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        s = s.substr(1, s.size() - 2);
    }
    double re = 0.0, im = 0.0;
    if (const auto comma = s.find(','); comma != std::string::npos) {
        if (read_real(strip(s.substr(0, comma)), re) && read_real(strip(s.substr(comma + 1)), im)) {
            return {re, im};
        }
        bad(text, "a complex number");
    }
    if (read_real(s, re)) {
        return re;
    }
    re = 0.0;
    if (s.empty() || (s.back() != 'i' && s.back() != 'j')) {
        bad(text, "a complex number");
    }
    s.pop_back();
    // Split at the last sign that is not part of an exponent.
    std::size_t split = std::string::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string real_part = split == std::string::npos ? "" : s.substr(0, split);
    std::string imag_part = split == std::string::npos ? s : s.substr(split);
    if (imag_part.empty() || imag_part == "+" || imag_part == "-") {
        imag_part += "1";
    }
    if (!read_real(imag_part, im) || (!real_part.empty() && !read_real(real_part, re))) {
        bad(text, "a complex number");
    }
    return {re, im};
}

Interval parse_interval(const std::string &text)
{
    const std::string s = strip(text);
    const auto colon = s.find(':');
    Interval out;
    if (colon == std::string::npos) {
        if (!read_real(s, out.lo)) {
            bad(text, "an interval lo:hi");
        }
        out.hi = out.lo;
        return out;
    }
    if (!read_real(strip(s.substr(0, colon)), out.lo) || !read_real(strip(s.substr(colon + 1)), out.hi)) {
        bad(text, "an interval lo:hi");
    }
    return out;
}

} // namespace traintrack::cli
