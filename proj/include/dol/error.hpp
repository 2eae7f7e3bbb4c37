#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dol {

enum class ErrorKind {
  SyntaxError,
  UnknownPrefix,
  UnknownLogic,
  NonconformantDocument,
  ArityClash,
  UnsupportedFeature,
  UndeclaredSymbol,
  LogicMismatch,
  NoPath,
  NoCommonTarget,
  UnresolvedReference,
  CyclicImport,
  MorphismIllFormed,
  SignatureNotIncluded,
  NotDefinitional,
  IoError,
};

std::string_view to_string(ErrorKind kind);

/// 1-based line and column (columns count Unicode code points).
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// The single exception type raised by the toolkit. Input and syntax problems
/// carry a position; errors from files loaded through the store also carry
/// the file path.
class DolError : public std::runtime_error {
 public:
  DolError(ErrorKind kind, std::string message, std::optional<SourcePos> pos = std::nullopt,
           std::string file = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& message() const noexcept { return message_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }
  const std::string& file() const noexcept { return file_; }

  /// Copy of this error with `file` attached (keeps an existing one).
  DolError with_file(std::string file) const;

 private:
  static std::string format(ErrorKind kind, const std::string& message,
                            const std::optional<SourcePos>& pos, const std::string& file);

  ErrorKind kind_;
  std::string message_;
  std::optional<SourcePos> pos_;
  std::string file_;
};

}  // namespace dol
