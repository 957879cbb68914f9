#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace dioext {

// Arbitrary-precision integer used for all coefficient arithmetic.  Smith
// normal form intermediates and solution transfers overflow 64 bits even on
// small inputs, so everything coefficient-valued goes through this type.
using BigInt = boost::multiprecision::cpp_int;

} // namespace dioext
