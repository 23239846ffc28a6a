#ifndef DOM_RATIONAL_HPP
#define DOM_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace dom {

// Exact rational arithmetic everywhere a value must be certified; floating
// point appears only in human-readable summaries and directed-rounding
// bounds (see dreal.hpp).
using Rat = mpq_class;

inline Rat make_rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "num", "num/den" or a plain decimal like "0.25". Throws
// std::invalid_argument on anything else or on den == 0.
Rat parse_rat(const std::string& text);

// Canonical exact form: "64/27", integers without the "/1".
inline std::string rat_str(const Rat& r) { return r.get_str(); }

// Decimal rendering with 6 significant digits, prefixed with '~' to mark
// it as approximate. Exact values belong in rat_str.
std::string rat_decimal(const Rat& r);

}  // namespace dom

#endif
