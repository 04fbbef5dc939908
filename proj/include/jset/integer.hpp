#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace jset {

/// Arbitrary-precision exact integer used for every coefficient.
using Integer = boost::multiprecision::mpz_int;

inline std::string to_string(const Integer &x) { return x.str(); }

} // namespace jset
