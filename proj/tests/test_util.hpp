#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "dol/structuring.hpp"
#include "dol/syntax.hpp"

namespace testutil {

inline std::string fixture(const std::string& rel) { return std::string(DOL_FIXTURE_DIR) + "/" + rel; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline dol::DolDocument load_doc(const std::string& rel) { return dol::parse_dol(slurp(fixture(rel))); }

inline const dol::RepoStore& fixture_store() {
  static const dol::RepoStore store(dol::StoreConfig::load(fixture("fixtures.store")));
  return store;
}

inline dol::Theory clif_theory(std::string_view text, dol::LogicId logic = dol::LogicId::FOLEQ) {
  return dol::parse_clif(text, dol::SignatureMode::Inferred, logic).theory;
}

inline const std::string kOrd = "http://code.google.com/p/colore/.../orderings/";
inline const std::string kInt = "http://code.google.com/p/colore/.../owltime/owltime_interval/";

}  // namespace testutil
