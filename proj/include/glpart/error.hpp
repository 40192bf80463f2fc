#pragma once

#include <stdexcept>
#include <string>

namespace glpart {

/// Failure raised by library operations. `code()` is a short machine-readable
/// identifier such as "not-connected" or "insufficient-connectivity".
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& detail)
      : std::runtime_error(detail.empty() ? code : code + ": " + detail),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

private:
  std::string code_;
};

} // namespace glpart
