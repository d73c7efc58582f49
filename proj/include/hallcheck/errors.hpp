#pragma once

#include <stdexcept>
#include <string>

namespace hallcheck {

/// Base class for everything thrown by this library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Structural misuse of the API: degree mismatch, operands living in
/// different parent groups, elements outside the ambient group, quotient
/// by a non-normal subgroup.
class structural_error : public error {
public:
  using error::error;
};

/// Invalid configuration or input data: bad group spec parameters, a
/// malformed sigma partition, a prime not covered by a partition that has
/// no rest class.
class config_error : public error {
public:
  using error::error;
};

/// Text input that fails to parse. Carries a 1-based line and column.
class parse_error : public config_error {
public:
  parse_error(const std::string& msg, int line, int column)
      : config_error(msg + " (line " + std::to_string(line) + ", column " +
                     std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

/// A configured cap was exceeded. Never silently truncates: the exception
/// names the resource, the cap, and the count reached when the computation
/// gave up.
class resource_limit_error : public error {
public:
  resource_limit_error(const std::string& resource, long limit, long reached)
      : error(resource + " cap exceeded: limit " + std::to_string(limit) +
              ", reached " + std::to_string(reached)),
        resource_(resource),
        limit_(limit),
        reached_(reached) {}

  const std::string& resource() const { return resource_; }
  long limit() const { return limit_; }
  long reached() const { return reached_; }

private:
  std::string resource_;
  long limit_;
  long reached_;
};

}  // namespace hallcheck
