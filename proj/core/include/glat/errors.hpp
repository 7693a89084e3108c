#pragma once

#include <stdexcept>
#include <string>

namespace glat {

enum class ErrorKind {
  NotAPermutation,
  ClosureTooLarge,
  UnknownFamily,
  ParameterOutOfRange,
  NotASubgroup,
  NotNormal,
  OrderCapExceeded,
  NotMeetClosed,
  NoUniqueBound,
  NotComparable,
  ParseError,
  GroupIsAbelian,
  BadGroupFile,
  BadTable,
};

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAPermutation: return "NotAPermutation";
    case ErrorKind::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorKind::UnknownFamily: return "UnknownFamily";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::NotASubgroup: return "NotASubgroup";
    case ErrorKind::NotNormal: return "NotNormal";
    case ErrorKind::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorKind::NotMeetClosed: return "NotMeetClosed";
    case ErrorKind::NoUniqueBound: return "NoUniqueBound";
    case ErrorKind::NotComparable: return "NotComparable";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::GroupIsAbelian: return "GroupIsAbelian";
    case ErrorKind::BadGroupFile: return "BadGroupFile";
    case ErrorKind::BadTable: return "BadTable";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace glat
