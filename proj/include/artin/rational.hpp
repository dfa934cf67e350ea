#pragma once

#include <gmpxx.h>

#include <string>

namespace artin {

// Exact rational. mpq_class keeps the canonical form we require: lowest terms,
// positive denominator. Anything constructing one from raw mpq_t must
// canonicalize before it escapes.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace artin
