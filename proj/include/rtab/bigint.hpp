#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rtab {

using bigint = boost::multiprecision::cpp_int;
using bigrat = boost::multiprecision::cpp_rational;

} // namespace rtab
