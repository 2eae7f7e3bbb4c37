#include "dol/repo_store.hpp"

#include <fstream>
#include <sstream>

namespace dol {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw DolError(ErrorKind::IoError, "cannot read " + file.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Reads `key = "value"` starting at `i`; returns the value.
std::string read_pair(std::string_view line, std::size_t& i, std::string_view key, std::size_t line_no) {
  auto fail = [&](const std::string& msg) -> std::string {
    throw DolError(ErrorKind::SyntaxError, msg, SourcePos{line_no, i + 1});
  };
  auto skip = [&] {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  };
  skip();
  if (line.substr(i, key.size()) != key) return fail("expected '" + std::string(key) + "'");
  i += key.size();
  skip();
  if (i >= line.size() || line[i] != '=') return fail("expected '='");
  ++i;
  skip();
  if (i >= line.size() || line[i] != '"') return fail("expected a quoted value");
  const auto close = line.find('"', i + 1);
  if (close == std::string_view::npos) return fail("unterminated string");
  std::string value(line.substr(i + 1, close - i - 1));
  i = close + 1;
  return value;
}

}  // namespace

StoreConfig StoreConfig::load(const fs::path& file) {
  try {
    return parse(read_file(file), file.parent_path());
  } catch (const DolError& e) {
    throw e.with_file(file.string());
  }
}

StoreConfig StoreConfig::parse(std::string_view text, const fs::path& base_dir) {
  StoreConfig cfg;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      // '#' inside a quoted value is part of the value.
      std::size_t quotes = 0;
      for (std::size_t k = 0; k < hash; ++k) quotes += line[k] == '"';
      if (quotes % 2 == 0) line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    std::size_t i = 0;
    std::string prefix = read_pair(line, i, "prefix", line_no);
    std::string dir = read_pair(line, i, "dir", line_no);
    if (line.substr(i).find_first_not_of(" \t\r") != std::string_view::npos) {
      throw DolError(ErrorKind::SyntaxError, "unexpected text after dir", SourcePos{line_no, i + 1});
    }
    if (prefix.size() >= 2 && prefix.front() == '<' && prefix.back() == '>') {
      prefix = prefix.substr(1, prefix.size() - 2);
    }
    if (!Iri::is_absolute(prefix)) {
      throw DolError(ErrorKind::SyntaxError, "store prefix is not an absolute IRI: " + prefix,
                     SourcePos{line_no, 1});
    }
    fs::path path(dir);
    if (path.is_relative()) path = base_dir / path;
    cfg.add_mapping(Iri(prefix), path.lexically_normal());
  }
  return cfg;
}

void StoreConfig::add_mapping(Iri prefix, fs::path directory) {
  std::error_code ec;
  if (!fs::is_directory(directory, ec)) {
    throw DolError(ErrorKind::IoError, "store directory does not exist: " + directory.string());
  }
  mappings_.push_back({std::move(prefix), std::move(directory)});
}

const StoreMapping* StoreConfig::match(const Iri& iri) const {
  const StoreMapping* best = nullptr;
  for (const auto& m : mappings_) {
    if (iri.str().starts_with(m.prefix.str()) &&
        (!best || m.prefix.str().size() > best->prefix.str().size())) {
      best = &m;
    }
  }
  return best;
}

std::optional<fs::path> RepoStore::locate(const Iri& iri) const {
  const StoreMapping* m = config_.match(iri);
  if (!m) return std::nullopt;
  const fs::path local(iri.str().substr(m->prefix.str().size()));
  if (local.empty() || local.is_absolute()) return std::nullopt;
  for (const auto& part : local) {
    if (part == "..") return std::nullopt;
  }
  for (const auto& ext : kStoreExtensions) {
    fs::path candidate = m->directory / local;
    candidate += ext.extension;
    std::error_code ec;
    if (fs::is_regular_file(candidate, ec)) return candidate;
  }
  return std::nullopt;
}

std::shared_ptr<const OntologyExpr> RepoStore::resolve(const Iri& iri) const {
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(iri.str()); it != cache_.end()) {
      ++stats_.hits;
      return it->second;
    }
  }
  const auto file = locate(iri);
  if (!file) throw DolError(ErrorKind::UnresolvedReference, "cannot resolve <" + iri.str() + ">");

  std::shared_ptr<const OntologyExpr> parsed;
  try {
    const std::string text = read_file(*file);
    const std::string ext = file->extension().string();
    if (ext == ".dol") {
      const DolDocument doc = parse_dol(text);
      const OntologyDef* def = doc.find_ontology(iri);
      if (!def) {
        throw DolError(ErrorKind::UnresolvedReference,
                       "<" + iri.str() + "> is not defined in " + file->string());
      }
      parsed = std::make_shared<const OntologyExpr>(def->body);
    } else {
      Theory theory;
      std::vector<Iri> imports;
      if (ext == ".clif") {
        ClifText clif = parse_clif(text);
        theory = std::move(clif.theory);
        imports = std::move(clif.imports);
      } else if (ext == ".prop") {
        theory = parse_prop(text);
      } else {
        theory = parse_el(text);
      }
      theory.origin = iri;
      parsed = std::make_shared<const OntologyExpr>(OntologyExpr::basic(std::move(theory), std::move(imports)));
    }
  } catch (const DolError& e) {
    throw e.with_file(file->string());
  }

  std::lock_guard lock(mutex_);
  ++stats_.misses;
  return cache_.emplace(iri.str(), std::move(parsed)).first->second;
}

RepoStore::Stats RepoStore::stats() const {
  std::lock_guard lock(mutex_);
  return stats_;
}

}  // namespace dol
