#pragma once

#include <gmpxx.h>
#include <string>

namespace superq {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals
// from GMP. No floating point appears anywhere in the core.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string rat_to_string(const Rat& r) { return r.get_str(); }

} // namespace superq
