#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fnhol {

enum class Errc {
  Domain,
  NonHyperbolic,
  AxisThroughInfinity,
  AxesIntersect,
  NotFuchsian,
  Validation,
  Path,
  NonStandard,
  Lift,
  Lookup,
  SignConstraint,
  SpinInconsistency,
  Syntax,
  Range,
  Usage,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace fnhol
