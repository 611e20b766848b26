#ifndef RLSLP_TESTS_SUPPORT_HPP
#define RLSLP_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <functional>
#include <optional>
#include <string>

#include "rlslp/error.hpp"

namespace rlslp::testing {

inline std::u32string u32(const std::string& s) { return std::u32string(s.begin(), s.end()); }

inline std::optional<ErrorCode> error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace rlslp::testing

#define CHECK_ERROR(expr, ec) CHECK(::rlslp::testing::error_of([&] { (void)(expr); }) == (ec))

#endif
