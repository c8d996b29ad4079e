#ifndef VBRAID_TESTS_HELPERS_HPP_
#define VBRAID_TESTS_HELPERS_HPP_

#include <doctest.h>

#include <ostream>

#include "vbraid/word.hpp"

namespace vbraid {
  inline BraidWord w(int n, char const* text) {
    return parse(text, n);
  }
}  // namespace vbraid

namespace doctest {
  template <>
  struct StringMaker<vbraid::BraidWord> {
    static String convert(vbraid::BraidWord const& x) {
      return ("[" + vbraid::format(x) + "] n=" + std::to_string(x.strands())).c_str();
    }
  };
}  // namespace doctest

#endif  // VBRAID_TESTS_HELPERS_HPP_
