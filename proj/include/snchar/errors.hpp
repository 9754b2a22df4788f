#ifndef SNCHAR_ERRORS_HPP
#define SNCHAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace snchar {

// Malformed textual input (partitions, ranges).
struct parse_error : std::invalid_argument {
  explicit parse_error(const std::string& what) : std::invalid_argument(what) {}
};

// A well-formed value outside an operation's domain.
struct domain_error : std::domain_error {
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A derived closed form failed its point-check window.
struct certification_error : std::runtime_error {
  explicit certification_error(const std::string& what) : std::runtime_error(what) {}
};

// Not enough sequence terms to attempt even the smallest recurrence.
struct insufficient_terms_error : std::invalid_argument {
  explicit insufficient_terms_error(const std::string& what) : std::invalid_argument(what) {}
};

// Leading recurrence coefficient vanishes at an extension point.
struct singular_point_error : std::domain_error {
  explicit singular_point_error(const std::string& what) : std::domain_error(what) {}
};

// Two computations that must agree did not (engine mismatch, inexact recurrence step).
struct inconsistency_error : std::logic_error {
  explicit inconsistency_error(const std::string& what) : std::logic_error(what) {}
};

} // namespace snchar

#endif // SNCHAR_ERRORS_HPP
