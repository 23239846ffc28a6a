#include "dom/rational.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>

namespace dom {

Rat parse_rat(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    for (char c : text)
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '.' && c != '-')
            throw std::invalid_argument("bad rational: " + text);

    auto dot = text.find('.');
    if (dot != std::string::npos) {
        // decimal form: digits.digits
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        std::size_t frac_len = text.size() - dot - 1;
        if (digits.empty() || frac_len == 0) throw std::invalid_argument("bad rational: " + text);
        Rat num(digits, 10);
        Rat den(1);
        for (std::size_t i = 0; i < frac_len; ++i) den *= 10;
        Rat r = num / den;
        r.canonicalize();
        return r;
    }
    Rat r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    r.canonicalize();
    return r;
}

std::string rat_decimal(const Rat& r) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "~%.6g", r.get_d());
    return buf;
}

}  // namespace dom
