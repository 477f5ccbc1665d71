#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace spj {

// Exact scalars: rationals over arbitrary-precision integers. No floating
// point anywhere in the computational core.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input.
inline Rat rat_parse(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational");
    try {
        Rat q(std::string(s));
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("malformed rational: " + std::string(s));
    }
}

}  // namespace spj
