#pragma once

#include <stdexcept>
#include <string>

namespace hecke_stab {

// Every failure raised by the library. The message is a short stable tag
// ("zero divisor", "pole", "pad range", ...) optionally followed by ": detail".
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& tag) : std::runtime_error(tag), tag_(tag) {}
  Error(const std::string& tag, const std::string& detail)
      : std::runtime_error(tag + ": " + detail), tag_(tag) {}

  const std::string& tag() const noexcept { return tag_; }

 private:
  std::string tag_;
};

}  // namespace hecke_stab
