#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rgep {

enum class ErrorKind {
  NonzeroConstantTerm,
  ZeroConstantTerm,
  ConstantTermNotOne,
  NotInvertibleForComposition,
  InsufficientOrder,
  KindMismatch,
  NotPolynomial,
  OutOfRange,
  DegreeTooHigh,
  LeadingCoefficientNotOne,
  DimensionMismatch,
  InvalidArgument,
  Parse,
  Domain,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorKind::ConstantTermNotOne: return "ConstantTermNotOne";
    case ErrorKind::NotInvertibleForComposition: return "NotInvertibleForComposition";
    case ErrorKind::InsufficientOrder: return "InsufficientOrder";
    case ErrorKind::KindMismatch: return "KindMismatch";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::DegreeTooHigh: return "DegreeTooHigh";
    case ErrorKind::LeadingCoefficientNotOne: return "LeadingCoefficientNotOne";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::Domain: return "DomainError";
  }
  return "Unknown";
}

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Byte range [begin, end) into the source text of an expression.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
      : Error(ErrorKind::Parse, describe(offset, expected, found)),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                              const std::string& found) {
    std::string msg = "at offset " + std::to_string(offset) + ": expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
      msg += expected[i];
    }
    msg += ", found " + found;
    return msg;
  }

  std::size_t offset_;
  std::vector<std::string> expected_;
};

class DomainError : public Error {
 public:
  DomainError(Span span, const std::string& reason)
      : Error(ErrorKind::Domain, "at [" + std::to_string(span.begin) + "," +
                                     std::to_string(span.end) + "): " + reason),
        span_(span),
        reason_(reason) {}

  Span span() const noexcept { return span_; }
  const std::string& reason() const noexcept { return reason_; }

 private:
  Span span_;
  std::string reason_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace rgep
