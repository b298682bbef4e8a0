#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace kreweras {

// All counting is exact; binom(2d,d) leaves 64 bits near d = 33.
using BigInt = boost::multiprecision::cpp_int;

}  // namespace kreweras
