#pragma once
#include <stdexcept>
#include <string>

namespace gyro {

enum class Err {
  NotAssociative,
  NoIdentity,
  NoInverse,
  OrderCapExceeded,
  InvalidParameter,
  NotNormal,
  NotSubgroup,
  NotSubloop,
  IdentityNotPreserved,
  NotRightLoop,
  CapExceeded,
  KernelNotAbelian,
  NotACocycle,
  NotCentral,
  NoSection,
  BadModulus,
  RelationViolation,
  AutDataMissing,
  ParseError,
  UsageError,
  UnknownGroup,
};

class GyroError : public std::runtime_error {
public:
  Err code;
  GyroError(Err c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

const char* err_name(Err c);

// Exit code classes: 0 ok, 1 usage, 2 input, 3 cap exceeded, 4 property violation.
int err_exit_code(Err c);

[[noreturn]] inline void fail(Err c, const std::string& msg) { throw GyroError(c, msg); }

}  // namespace gyro
