// dolkit: parse, flatten, translate, enumerate models of and verify DOL
// documents from the command line.
//
// Exit codes: 0 success, 1 a relationship failed (or a theory has no model),
// 2 input or syntax error, 3 internal error.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "dol/reasoner.hpp"
#include "dol/report.hpp"
#include "dol/structuring.hpp"
#include "dol/verification.hpp"

namespace fs = std::filesystem;
using namespace dol;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

struct Options {
  std::vector<std::string> files;
  std::string store;
  int bound = 3;
  std::string target_logic;
  std::string format = "text";
  std::string link;
  std::string ontology;
  bool list = false;
  std::optional<std::size_t> max_models;
};

// A loaded input: either a DOL document or a single basic theory file.
struct Input {
  std::string path;
  std::optional<DolDocument> doc;
  std::optional<OntologyExpr> theory;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DolError(ErrorKind::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Input load(const std::string& path) {
  Input input{path, std::nullopt, std::nullopt};
  try {
    const std::string text = read_file(path);
    const std::string ext = fs::path(path).extension().string();
    if (ext == ".clif") {
      input.theory = parse_clif(text).to_expr();
    } else if (ext == ".prop") {
      input.theory = OntologyExpr::basic(parse_prop(text));
    } else if (ext == ".el") {
      input.theory = OntologyExpr::basic(parse_el(text));
    } else {
      input.doc = parse_dol(text);
    }
  } catch (const DolError& e) {
    throw e.with_file(path);
  }
  return input;
}

std::unique_ptr<RepoStore> open_store(const Options& opt) {
  if (opt.store.empty()) return nullptr;
  return std::make_unique<RepoStore>(StoreConfig::load(opt.store));
}

Iri ontology_name(const DolDocument& doc, const std::string& text) {
  const auto colon = text.find(':');
  if (colon != std::string::npos && !text.starts_with("<") && !doc.prefixes.find(text.substr(0, colon)) &&
      Iri::is_absolute(text)) {
    return Iri(text);
  }
  return expand_curie(doc.prefixes, text);
}

struct Selected {
  std::string label;
  OntologyExpr expr;
};

// Ontologies a command works on: the named one, or all of them.
std::vector<Selected> select(const Input& input, const Options& opt, bool exactly_one) {
  if (input.theory) return {{input.path, *input.theory}};
  const DolDocument& doc = *input.doc;
  const PrefixMap& prefixes = doc.prefixes;
  auto label = [&](const Iri& name) { return prefixes.compact(name.str()).value_or("<" + name.str() + ">"); };
  if (!opt.ontology.empty()) {
    const Iri name = ontology_name(doc, opt.ontology);
    const OntologyDef* def = doc.find_ontology(name);
    if (!def) throw DolError(ErrorKind::UnresolvedReference, "no ontology named " + opt.ontology + " in " + input.path);
    return {{label(def->name), def->body}};
  }
  const auto defs = doc.ontologies();
  if (defs.empty()) throw DolError(ErrorKind::NonconformantDocument, input.path + " defines no ontology");
  if (exactly_one && defs.size() > 1) {
    throw DolError(ErrorKind::NonconformantDocument,
                   input.path + " defines several ontologies; choose one with --ontology");
  }
  std::vector<Selected> out;
  for (const auto* def : defs) out.push_back({label(def->name), def->body});
  return out;
}

Environment environment(const Input& input, const RepoStore* store) {
  return input.doc ? Environment::from_document(*input.doc, store) : Environment(store);
}

const PrefixMap* prefixes_of(const Input& input) { return input.doc ? &input.doc->prefixes : nullptr; }

void emit_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --- commands ----------------------------------------------------------------

int run_parse(const Options& opt) {
  Json all = Json::array();
  for (const auto& path : opt.files) {
    const Input input = load(path);
    Json j{{"file", path}, {"conformant", true}};
    if (input.doc) {
      const DolDocument& doc = *input.doc;
      Json onts = Json::array();
      for (const auto* def : doc.ontologies()) {
        onts.push_back(Json{{"name", def->name.str()},
                            {"logic", std::string(to_string(def->logic))},
                            {"serialization", std::string(to_string(def->serialization))}});
      }
      Json links = Json::array();
      for (const auto* link : doc.links()) {
        links.push_back(Json{{"name", link->name}, {"kind", std::string(to_string(link->kind))}});
      }
      j["ontologies"] = std::move(onts);
      j["links"] = std::move(links);
      if (opt.format == "text") {
        std::cout << path << ": conformant, " << doc.ontologies().size() << " ontologies, " << doc.links().size()
                  << " links\n";
        for (const auto* def : doc.ontologies()) {
          std::cout << "  ontology " << doc.prefixes.compact(def->name.str()).value_or(def->name.str()) << " ["
                    << to_string(def->logic) << "]\n";
        }
        for (const auto* link : doc.links()) std::cout << "  " << to_string(link->kind) << " " << link->name << "\n";
      }
    } else {
      const auto& basic = std::get<BasicOntology>(input.theory->node);
      j["logic"] = std::string(to_string(basic.theory.logic()));
      j["axioms"] = basic.theory.axioms.size();
      if (opt.format == "text") {
        std::cout << path << ": conformant, " << to_string(basic.theory.logic()) << " theory with "
                  << basic.theory.axioms.size() << " axioms\n";
      }
    }
    all.push_back(std::move(j));
  }
  if (opt.format == "json") emit_json(all);
  return kOk;
}

int run_flatten(const Options& opt, std::optional<LogicId> target) {
  const Input input = load(opt.files.front());
  const auto store = open_store(opt);
  const Environment env = environment(input, store.get());
  Json all = Json::array();
  for (const auto& sel : select(input, opt, false)) {
    const Theory t = flatten(sel.expr, env, target);
    if (opt.format == "json") {
      Json preds = Json::object();
      for (const auto& [name, arity] : t.signature.predicates()) preds[name] = arity;
      Json axioms = Json::array();
      for (const auto& ax : t.axioms) axioms.push_back(print_sentence(ax));
      all.push_back(Json{{"ontology", sel.label},
                         {"logic", std::string(to_string(t.logic()))},
                         {"predicates", std::move(preds)},
                         {"constants", t.signature.constants()},
                         {"axioms", std::move(axioms)}});
    } else {
      std::cout << "% " << sel.label << " (" << to_string(t.logic()) << ", " << t.axioms.size() << " axioms)\n"
                << print_theory(t);
    }
  }
  if (opt.format == "json") emit_json(all);
  return kOk;
}

int run_models(const Options& opt) {
  const Input input = load(opt.files.front());
  const auto store = open_store(opt);
  const Environment env = environment(input, store.get());
  const Selected sel = select(input, opt, true).front();
  const Theory t = flatten(sel.expr, env);
  const PrefixMap* prefixes = prefixes_of(input);
  const int max = t.logic() == LogicId::Prop ? 1 : opt.bound;

  Json sizes = Json::array();
  bool any = false;
  for (int n = 1; n <= max; ++n) {
    std::size_t count = 0;
    bool truncated = false;
    Json listed = Json::array();
    std::string text;
    enumerate_models(t, n, [&](const FiniteModel& m) {
      if (opt.max_models && count == *opt.max_models) {
        truncated = true;
        return false;
      }
      ++count;
      if (opt.list) {
        if (opt.format == "json") {
          listed.push_back(model_to_json(m, prefixes));
        } else {
          text += "  model " + std::to_string(count) + ": ";
          std::string body = model_to_text(m, prefixes);
          if (!body.empty() && body.back() == '\n') body.pop_back();
          std::string line;
          for (char c : body) line += c == '\n' ? std::string("; ") : std::string(1, c);
          text += line + "\n";
        }
      }
      return true;
    });
    any = any || count > 0;
    Json entry{{"domain_size", n}, {"count", count}, {"truncated", truncated}};
    if (opt.list) entry["models"] = std::move(listed);
    sizes.push_back(std::move(entry));
    if (opt.format == "text") {
      std::cout << "size " << n << ": " << count << (truncated ? "+" : "") << "\n" << text;
    }
  }
  if (opt.format == "json") {
    emit_json(Json{{"ontology", sel.label}, {"logic", std::string(to_string(t.logic()))}, {"sizes", std::move(sizes)}});
  } else if (!any) {
    std::cout << (t.logic() == LogicId::Prop ? "inconsistent\n"
                                             : "no model up to size " + std::to_string(max) + "\n");
  }
  return any ? kOk : kFailed;
}

int run_verify(const Options& opt) {
  const Input input = load(opt.files.front());
  if (!input.doc) throw DolError(ErrorKind::NonconformantDocument, opt.files.front() + " is not a DOL document");
  const DolDocument& doc = *input.doc;
  const auto store = open_store(opt);
  const Environment env = environment(input, store.get());
  std::vector<const LinkDef*> links;
  if (!opt.link.empty()) {
    const LinkDef* link = doc.find_link(opt.link);
    if (!link) throw DolError(ErrorKind::UnresolvedReference, "no link named " + opt.link + " in " + input.path);
    links.push_back(link);
  } else {
    links = doc.links();
  }
  const auto reports = verify_links(links, env, Bound(opt.bound));
  bool ok = true;
  Json arr = Json::array();
  for (const auto& r : reports) {
    ok = ok && r.succeeded();
    if (opt.format == "json") {
      arr.push_back(report_to_json(r, &doc.prefixes));
    } else {
      std::cout << report_to_text(r, &doc.prefixes);
    }
  }
  if (opt.format == "json") emit_json(Json{{"file", input.path}, {"bound", opt.bound}, {"reports", std::move(arr)}});
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dolkit: tools for DOL documents and their basic-logic theories"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_store = [&](CLI::App* cmd) {
    cmd->add_option("--store", opt.store, "Store config mapping IRI prefixes to directories")
        ->check(CLI::ExistingFile);
  };
  auto add_ontology = [&](CLI::App* cmd) {
    cmd->add_option("--ontology", opt.ontology, "Ontology name (CURIE or IRI) within the document");
  };
  auto add_file = [&](CLI::App* cmd) { cmd->add_option("file", opt.files, "Input file")->required()->expected(1); };

  CLI::App* parse = app.add_subcommand("parse", "Check documents and theory files for conformance");
  parse->add_option("files", opt.files, "Input files")->required();
  add_format(parse);

  CLI::App* flat = app.add_subcommand("flatten", "Flatten ontologies into a single theory each");
  add_file(flat);
  add_store(flat);
  add_ontology(flat);
  add_format(flat);
  flat->add_option("--target-logic", opt.target_logic, "Logic to translate into (Prop, EL, FOLEQ, CLSub)");

  CLI::App* trans = app.add_subcommand("translate", "Flatten and translate into a target logic");
  add_file(trans);
  add_store(trans);
  add_ontology(trans);
  add_format(trans);
  trans->add_option("--target-logic", opt.target_logic, "Logic to translate into (Prop, EL, FOLEQ, CLSub)")
      ->required();

  CLI::App* models = app.add_subcommand("models", "Count (and list) finite models per domain size");
  add_file(models);
  add_store(models);
  add_ontology(models);
  add_format(models);
  models->add_option("--bound", opt.bound, "Largest domain size")->check(CLI::PositiveNumber);
  models->add_flag("--list", opt.list, "Print every model");
  models->add_option("--max-models", opt.max_models, "Stop after this many models per size");

  CLI::App* verify = app.add_subcommand("verify", "Verify the links of a document");
  add_file(verify);
  add_store(verify);
  add_format(verify);
  verify->add_option("--bound", opt.bound, "Largest domain size searched")->check(CLI::PositiveNumber);
  verify->add_option("--link", opt.link, "Only verify this link");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    std::optional<LogicId> target;
    if (!opt.target_logic.empty()) {
      target = logic_from_token(opt.target_logic);
      if (!target) throw DolError(ErrorKind::UnknownLogic, "unknown logic '" + opt.target_logic + "'");
    }
    if (*parse) return run_parse(opt);
    if (*flat || *trans) return run_flatten(opt, target);
    if (*models) return run_models(opt);
    return run_verify(opt);
  } catch (const DolError& e) {
    // Positions without a file point into the single input document.
    if (e.file().empty() && e.position() && opt.files.size() == 1) {
      std::cerr << "error: " << e.with_file(opt.files.front()).what() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
