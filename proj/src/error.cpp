#include "asymclust/error.hpp"

namespace asymclust {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::NegativeEntry: return "NegativeEntry";
    case ErrorCode::NonZeroDiagonal: return "NonZeroDiagonal";
    case ErrorCode::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorCode::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorCode::InvalidMatrix: return "InvalidMatrix";
    case ErrorCode::AsymmetricInput: return "AsymmetricInput";
    case ErrorCode::UnknownMethod: return "UnknownMethod";
    case ErrorCode::NotUltrametric: return "NotUltrametric";
    case ErrorCode::InvalidDendrogram: return "InvalidDendrogram";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::LabelMismatch: return "LabelMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyEdgeList: return "EmptyEdgeList";
    case ErrorCode::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorCode::UnknownPolicy: return "UnknownPolicy";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail, std::optional<std::size_t> line) {
  std::string s(to_string(code));
  if (line) s += " (line " + std::to_string(*line) + ")";
  if (!detail.empty()) s += ": " + detail;
  return s;
}

}  // namespace

Error::Error(ErrorCode code, std::string message, std::optional<std::size_t> row,
             std::optional<std::size_t> col, std::optional<std::size_t> line)
    : std::runtime_error(compose(code, message, line)),
      code_(code),
      detail_(std::move(message)),
      row_(row),
      col_(col),
      line_(line) {}

Error Error::with_line(std::size_t line) const { return Error(code_, detail_, row_, col_, line); }

}  // namespace asymclust
