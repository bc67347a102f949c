#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace domlex {

using BigInt = boost::multiprecision::cpp_int;

}  // namespace domlex
