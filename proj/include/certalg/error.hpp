#pragma once

#include <stdexcept>
#include <string>

namespace certalg {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroInverse : Error {
  ZeroInverse() : Error("inverse of zero") {}
};

struct NoSuchRoot : Error {
  NoSuchRoot(unsigned long long n, const std::string& field)
      : Error("no primitive root of unity of order " + std::to_string(n) +
              " in " + field) {}
};

struct RingMismatch : Error {
  RingMismatch() : Error("operands live in different rings") {}
};

struct ArityMismatch : Error {
  explicit ArityMismatch(const std::string& what) : Error("arity mismatch: " + what) {}
};

struct OddLevel : Error {
  OddLevel() : Error("minus chart requires an even level") {}
};

struct NotSkew : Error {
  NotSkew() : Error("matrix is not skew-symmetric") {}
};

struct OddSize : Error {
  OddSize() : Error("pfaffian requires even size") {}
};

struct PointNotOnVariety : Error {
  PointNotOnVariety() : Error("polynomial does not vanish at the given point") {}
};

struct NotUnivariate : Error {
  NotUnivariate() : Error("polynomial is not univariate") {}
};

struct NotInNormalizerClass : Error {
  NotInNormalizerClass() : Error("matrix does not normalize the subgroup up to scalars") {}
};

struct ParameterRejected : Error {
  explicit ParameterRejected(const std::string& why) : Error("parameter rejected: " + why) {}
};

struct Timeout : Error {
  explicit Timeout(const std::string& where) : Error("computation budget exceeded in " + where) {}
};

struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& msg)
      : Error("parse error at line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

struct InvalidConfig : Error {
  explicit InvalidConfig(const std::string& msg) : Error("invalid config: " + msg) {}
};

}  // namespace certalg
