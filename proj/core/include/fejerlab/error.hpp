#pragma once

#include <stdexcept>
#include <string>

namespace fejerlab {

/// Base class for every exception thrown by fejerlab.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A Fourier window larger than the representation can resolve was requested.
class AliasingRisk : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// The grid does not resolve the features an experiment depends on.
class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

/// No Fejer order up to the search bound satisfies the localization condition.
class NoQualifyingN : public Error {
 public:
  using Error::Error;
};

/// A gliding-hump stage could not reach its error target.
class StageFailure : public Error {
 public:
  StageFailure(int stage, const std::string& what)
      : Error(what), stage_(stage) {}
  [[nodiscard]] int stage() const noexcept { return stage_; }

 private:
  int stage_;
};

}  // namespace fejerlab
