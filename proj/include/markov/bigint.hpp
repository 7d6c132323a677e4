#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace markov {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

inline int sign(const BigInt& x) { return x.sign(); }

}  // namespace markov
