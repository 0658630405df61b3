#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace asymclust {

enum class ErrorCode {
  NonSquare,
  DuplicateLabel,
  NegativeEntry,
  NonZeroDiagonal,
  ZeroOffDiagonal,
  NonFiniteEntry,
  InvalidMatrix,
  AsymmetricInput,
  UnknownMethod,
  NotUltrametric,
  InvalidDendrogram,
  TooLarge,
  LabelMismatch,
  ParseError,
  EmptyEdgeList,
  UnsupportedFormat,
  UnknownPolicy,
  IoError,
};

std::string_view to_string(ErrorCode code);

// Every library failure is reported through this exception. Entry-level
// errors carry the offending (row, col); ingestion errors also carry the
// 1-based source line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message,
        std::optional<std::size_t> row = std::nullopt,
        std::optional<std::size_t> col = std::nullopt,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> col() const noexcept { return col_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

  // Same error, annotated with a source line number.
  Error with_line(std::size_t line) const;

 private:
  ErrorCode code_;
  std::string detail_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> col_;
  std::optional<std::size_t> line_;
};

}  // namespace asymclust
