#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace amalgam {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_order_error : public error {
 public:
  using error::error;
};

class improper_ideal_error : public error {
 public:
  using error::error;
};

class ring_mismatch_error : public error {
 public:
  using error::error;
};

class size_cap_error : public error {
 public:
  using error::error;
};

/// A candidate homomorphism or module action violated an axiom.
/// `witness` holds the offending element indices (pair or single element).
class axiom_error : public error {
 public:
  axiom_error(const std::string& what, std::vector<std::uint32_t> witness)
      : error(what), witness_(std::move(witness)) {}
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::uint32_t> witness_;
};

/// Two independent computations of the same quantity disagreed.
class consistency_error : public error {
 public:
  using error::error;
};

class hierarchy_violation_error : public consistency_error {
 public:
  using consistency_error::consistency_error;
};

class prime_mismatch_error : public error {
 public:
  using error::error;
};

class undefined_valuation_error : public error {
 public:
  using error::error;
};

class invalid_sample_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(const std::string& what, std::size_t line, std::size_t column)
      : error(what + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}
  explicit parse_error(const std::string& what) : error(what) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_ = 0;
  std::size_t column_ = 0;
};

}  // namespace amalgam
