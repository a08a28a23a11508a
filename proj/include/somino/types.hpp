#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace somino {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Always "p/q" (q included even when 1) so serialized output is unambiguous.
inline std::string rat_str(const Rat& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace somino
