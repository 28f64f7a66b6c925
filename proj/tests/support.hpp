#pragma once

#include "gz/complex.hpp"
#include "gz/real.hpp"

#include <string>

namespace gz::test {

inline ComplexHP c(const std::string& re, const std::string& im = "0", BitCount bits = 256) {
  return {Real::parse(re, bits), Real::parse(im, bits)};
}

inline double distance(const ComplexHP& a, const ComplexHP& b) { return abs(a - b).to_double(); }

}  // namespace gz::test
