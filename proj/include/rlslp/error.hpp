#ifndef RLSLP_ERROR_HPP
#define RLSLP_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace rlslp {

enum class ErrorCode {
  EqualChildren,
  BadLevel,
  BadExponent,
  UnknownSymbol,
  EmptyText,
  UnclassifiedSymbol,
  OutOfRange,
  EmptyFragment,
  EmptyPattern,
  RatioViolation,
  BadIndexFile,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (the CLI in particular) can map them onto exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rlslp

#endif
