#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdokit {

// Exact signed integer of unbounded size. Every coefficient in this library
// is one of these; nothing is ever rounded.
using Int = boost::multiprecision::cpp_int;

inline bool is_zero(const Int& v) { return v.is_zero(); }

inline std::string coeff_to_string(const Int& v) { return v.str(); }

}  // namespace pdokit
