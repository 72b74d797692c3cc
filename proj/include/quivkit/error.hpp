#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace quivkit {

enum class ErrorKind {
  field_mismatch,
  shape,
  irregular_pencil,
  vertex,
  w_zero,
  path,
  zero_dim,
  needs_finite_field,
  too_large,
  not_in_variety,
  singular_group_element,
  invalid_invariants,
  not_in_chart,
  group_shape,
  normalization,
  not_in_pk,
  empty_flag,
  unstable,
  not_a_representation,
  parse,
  unsupported,
  internal,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::field_mismatch: return "FieldMismatch";
    case ErrorKind::shape: return "ShapeError";
    case ErrorKind::irregular_pencil: return "IrregularPencil";
    case ErrorKind::vertex: return "VertexError";
    case ErrorKind::w_zero: return "WZero";
    case ErrorKind::path: return "PathError";
    case ErrorKind::zero_dim: return "ZeroDim";
    case ErrorKind::needs_finite_field: return "NeedsFiniteField";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::not_in_variety: return "NotInVariety";
    case ErrorKind::singular_group_element: return "SingularGroupElement";
    case ErrorKind::invalid_invariants: return "InvalidInvariants";
    case ErrorKind::not_in_chart: return "NotInChart";
    case ErrorKind::group_shape: return "GroupShapeError";
    case ErrorKind::normalization: return "NormalizationError";
    case ErrorKind::not_in_pk: return "NotInPk";
    case ErrorKind::empty_flag: return "EmptyFlag";
    case ErrorKind::unstable: return "Unstable";
    case ErrorKind::not_a_representation: return "NotARepresentation";
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::unsupported: return "Unsupported";
    case ErrorKind::internal: return "InternalError";
  }
  return "Error";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace quivkit
