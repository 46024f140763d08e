#pragma once

#include <stdexcept>
#include <string>

namespace rg {

enum class Errc {
  ShapeMismatch,
  EmptySelection,
  NotHamming,
  MissingArc,
  NotTotalPreorder,
  NotAPath,
  ParseError,
  DuplicateArc,
  ShapeTooLarge,
  NotFound,
};

const char* to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* to_string(Errc code) {
  switch (code) {
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::EmptySelection: return "EmptySelection";
    case Errc::NotHamming: return "NotHamming";
    case Errc::MissingArc: return "MissingArc";
    case Errc::NotTotalPreorder: return "NotTotalPreorder";
    case Errc::NotAPath: return "NotAPath";
    case Errc::ParseError: return "ParseError";
    case Errc::DuplicateArc: return "DuplicateArc";
    case Errc::ShapeTooLarge: return "ShapeTooLarge";
    case Errc::NotFound: return "NotFound";
  }
  return "UnknownError";
}

}  // namespace rg
