#include "dol/error.hpp"

#include <sstream>

namespace dol {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownPrefix: return "UnknownPrefix";
    case ErrorKind::UnknownLogic: return "UnknownLogic";
    case ErrorKind::NonconformantDocument: return "NonconformantDocument";
    case ErrorKind::ArityClash: return "ArityClash";
    case ErrorKind::UnsupportedFeature: return "UnsupportedFeature";
    case ErrorKind::UndeclaredSymbol: return "UndeclaredSymbol";
    case ErrorKind::LogicMismatch: return "LogicMismatch";
    case ErrorKind::NoPath: return "NoPath";
    case ErrorKind::NoCommonTarget: return "NoCommonTarget";
    case ErrorKind::UnresolvedReference: return "UnresolvedReference";
    case ErrorKind::CyclicImport: return "CyclicImport";
    case ErrorKind::MorphismIllFormed: return "MorphismIllFormed";
    case ErrorKind::SignatureNotIncluded: return "SignatureNotIncluded";
    case ErrorKind::NotDefinitional: return "NotDefinitional";
    case ErrorKind::IoError: return "IoError";
  }
  return "UnknownError";
}

DolError::DolError(ErrorKind kind, std::string message, std::optional<SourcePos> pos,
                   std::string file)
    : std::runtime_error(format(kind, message, pos, file)),
      kind_(kind),
      message_(std::move(message)),
      pos_(pos),
      file_(std::move(file)) {}

DolError DolError::with_file(std::string file) const {
  if (!file_.empty()) return *this;
  return DolError(kind_, message_, pos_, std::move(file));
}

std::string DolError::format(ErrorKind kind, const std::string& message,
                             const std::optional<SourcePos>& pos, const std::string& file) {
  std::ostringstream out;
  if (!file.empty()) out << file << ':';
  if (pos) out << pos->line << ':' << pos->column << ':';
  if (!file.empty() || pos) out << ' ';
  out << to_string(kind) << ": " << message;
  return out.str();
}

}  // namespace dol
