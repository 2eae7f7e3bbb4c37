#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dol/syntax.hpp"

namespace dol {

struct StoreMapping {
  Iri prefix;
  std::filesystem::path directory;
};

/// Offline IRI catalog: each mapping sends an IRI prefix to a local directory.
class StoreConfig {
 public:
  StoreConfig() = default;

  /// Reads lines of the form `prefix = "<iri>" dir = "<path>"`. Relative
  /// directories are taken relative to the config file. `#` starts a comment.
  /// Throws IoError for unreadable files or missing directories, SyntaxError
  /// for malformed lines.
  static StoreConfig load(const std::filesystem::path& file);
  static StoreConfig parse(std::string_view text, const std::filesystem::path& base_dir);

  /// Throws IoError if `directory` does not exist.
  void add_mapping(Iri prefix, std::filesystem::path directory);
  const std::vector<StoreMapping>& mappings() const noexcept { return mappings_; }

  /// Longest matching prefix, if any.
  const StoreMapping* match(const Iri& iri) const;

 private:
  std::vector<StoreMapping> mappings_;
};

/// File extensions tried in order, with the logic each one implies. `.dol`
/// files are searched for an ontology definition carrying the IRI.
struct StoreExtension {
  std::string_view extension;
  LogicId logic;
};
inline constexpr StoreExtension kStoreExtensions[] = {
    {".clif", LogicId::CLSub}, {".prop", LogicId::Prop}, {".el", LogicId::EL}, {".dol", LogicId::CLSub}};

/// Memoizing resolver. Safe to share between threads.
class RepoStore {
 public:
  RepoStore() = default;
  explicit RepoStore(StoreConfig config) : config_(std::move(config)) {}

  const StoreConfig& config() const noexcept { return config_; }

  /// File that `iri` maps to, or nullopt if no candidate exists.
  std::optional<std::filesystem::path> locate(const Iri& iri) const;

  /// Parsed body of the ontology named `iri`. Repeated calls return the same
  /// object. Throws UnresolvedReference, or the parse error with the file
  /// path attached.
  std::shared_ptr<const OntologyExpr> resolve(const Iri& iri) const;

  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
  };
  Stats stats() const;

 private:
  StoreConfig config_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, std::shared_ptr<const OntologyExpr>> cache_;
  mutable Stats stats_;
};

}  // namespace dol
