#pragma once

#include <stdexcept>
#include <string>

namespace ginv {

enum class Errc {
  InvalidElement,
  NotAProjection,
  Unsupported,
  InvalidBound,
  PreconditionFailed,
  HypothesisNotMet,
  InternalInconsistency,
  InvalidFormat,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace ginv
