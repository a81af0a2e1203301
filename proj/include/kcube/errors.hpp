#pragma once

#include <stdexcept>
#include <string>

namespace kcube {

// Library errors split into two families, mirrored by process exit codes:
// malformed input (exit 2) and a mathematical precondition failing on
// well-formed input (exit 1).
class Error : public std::runtime_error {
public:
  enum class Kind { input, math };
  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

private:
  Kind kind_;
};

class InputError : public Error {
public:
  explicit InputError(const std::string& what) : Error(Kind::input, what) {}
};

class MathError : public Error {
public:
  explicit MathError(const std::string& what) : Error(Kind::math, what) {}
};

} // namespace kcube
