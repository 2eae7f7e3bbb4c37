#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <thread>

#include "test_util.hpp"

using namespace dol;
namespace fs = std::filesystem;

namespace {

ErrorKind error_kind(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const DolError& e) {
    return e.kind();
  }
  FAIL("expected a DolError");
  return ErrorKind::IoError;
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("dol_store_" + std::to_string(::getpid()) + "_" +
                                        std::to_string(reinterpret_cast<std::uintptr_t>(this)));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& rel, const std::string& text) const {
    fs::create_directories((path / rel).parent_path());
    std::ofstream(path / rel) << text;
  }
};

}  // namespace

TEST_CASE("store config parsing") {
  TempDir dir;
  fs::create_directories(dir.path / "a");
  fs::create_directories(dir.path / "a/b");
  const auto cfg = StoreConfig::parse(
      "# comment\n"
      "prefix = \"http://x.org/\" dir = \"a\"   # trailing\n"
      "\n"
      "prefix = \"<http://x.org/deep/>\" dir = \"a/b\"\n",
      dir.path);
  REQUIRE(cfg.mappings().size() == 2);
  CHECK(cfg.mappings()[1].prefix.str() == "http://x.org/deep/");
  const StoreMapping* m = cfg.match(Iri("http://x.org/deep/thing"));
  REQUIRE(m != nullptr);
  CHECK(m->prefix.str() == "http://x.org/deep/");
  CHECK(cfg.match(Iri("http://y.org/thing")) == nullptr);

  CHECK(error_kind([&] { StoreConfig::parse("prefix = \"http://x.org/\"\n", dir.path); }) == ErrorKind::SyntaxError);
  CHECK(error_kind([&] { StoreConfig::parse("prefix = \"http://x.org/\" dir = \"nope\"\n", dir.path); }) ==
        ErrorKind::IoError);
  CHECK(error_kind([&] { StoreConfig::load(dir.path / "missing.store"); }) == ErrorKind::IoError);
}

TEST_CASE("store resolves fixture IRIs and memoizes") {
  RepoStore store(StoreConfig::load(testutil::fixture("fixtures.store")));
  const Iri lin(testutil::kOrd + "linear_ordering");
  const auto path = store.locate(lin);
  REQUIRE(path.has_value());
  CHECK(path->filename() == "linear_ordering.clif");

  const auto first = store.resolve(lin);
  const auto second = store.resolve(lin);
  CHECK(first.get() == second.get());
  CHECK(store.stats().misses == 1);
  CHECK(store.stats().hits == 1);
  const auto& basic = std::get<BasicOntology>(first->node);
  CHECK(basic.theory.axioms.size() == 4);
  CHECK(basic.theory.origin == lin);

  CHECK(error_kind([&] { store.resolve(Iri(testutil::kOrd + "absent")); }) == ErrorKind::UnresolvedReference);
  CHECK(error_kind([&] { store.resolve(Iri("http://elsewhere.org/x")); }) == ErrorKind::UnresolvedReference);
}

TEST_CASE("store refuses to escape its directory") {
  RepoStore store(StoreConfig::load(testutil::fixture("fixtures.store")));
  CHECK_FALSE(store.locate(Iri(testutil::kOrd + "../fixtures/owltime_le")).has_value());
}

TEST_CASE("store picks the serialization from the extension") {
  TempDir dir;
  dir.write("p.prop", "props a b\na -> b\n");
  dir.write("e.el", "A SubClassOf B\n");
  dir.write("bad.clif", "\n(forall (x) (P x)\n");
  dir.write("multi.dol",
            "%prefix( : <http://z.org/> )%\nlogic <http://purl.net/dol/logics/CommonLogic>\n"
            "ontology :multi = (P c)\nontology :other = (Q c)\n");
  StoreConfig cfg;
  cfg.add_mapping(Iri("http://z.org/"), dir.path);
  RepoStore store(cfg);
  CHECK(std::get<BasicOntology>(store.resolve(Iri("http://z.org/p"))->node).theory.logic() == LogicId::Prop);
  CHECK(std::get<BasicOntology>(store.resolve(Iri("http://z.org/e"))->node).theory.logic() == LogicId::EL);
  CHECK(std::get<BasicOntology>(store.resolve(Iri("http://z.org/multi"))->node).theory.axioms.size() == 1);
  try {
    store.resolve(Iri("http://z.org/bad"));
    FAIL("expected a syntax error");
  } catch (const DolError& e) {
    CHECK(e.kind() == ErrorKind::SyntaxError);
    CHECK(e.file().find("bad.clif") != std::string::npos);
    REQUIRE(e.position().has_value());
    CHECK(e.position()->line == 2);
  }
}

TEST_CASE("concurrent resolution returns one object") {
  RepoStore store(StoreConfig::load(testutil::fixture("fixtures.store")));
  const Iri iri(testutil::kOrd + "partial_ordering");
  std::vector<std::shared_ptr<const OntologyExpr>> got(8);
  std::vector<std::thread> threads;
  for (std::size_t i = 0; i < got.size(); ++i) threads.emplace_back([&, i] { got[i] = store.resolve(iri); });
  for (auto& t : threads) t.join();
  for (const auto& p : got) CHECK(p.get() == got.front().get());
  CHECK(store.stats().misses == 1);
}
