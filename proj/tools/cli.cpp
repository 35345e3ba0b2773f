#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "rdbnorm/baseline.hpp"
#include "rdbnorm/corpus.hpp"
#include "rdbnorm/ddl.hpp"
#include "rdbnorm/error.hpp"
#include "rdbnorm/schema_io.hpp"
#include "rdbnorm/verifier.hpp"

namespace rdbnorm::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::string_view kCorpusPrefix = "corpus:";

struct Verification {
  bool lossless = false;
  bool dependencies_preserved = false;
  std::vector<Violation> violations;

  [[nodiscard]] bool passed(NormalForm nf) const {
    // Dependency preservation is only promised by the 3NF synthesis.
    return lossless && violations.empty() && (nf == NormalForm::Second || dependencies_preserved);
  }
};

Verification verify_result(const NormalizationResult& r, NormalForm nf) {
  Verification v;
  v.lossless = is_lossless(r.flat.attribute_names(), r.cover, r.tables);
  v.dependencies_preserved = preserves_dependencies(r.cover, r.tables);
  v.violations = scan_violations(r.tables, r.cover,
                                 nf == NormalForm::Third ? CheckMode::ThirdNormalForm
                                                         : CheckMode::SecondNormalForm);
  return v;
}

std::string joined(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  return out;
}

std::string nf_label(NormalForm nf) { return nf == NormalForm::Third ? "3NF" : "2NF"; }

std::string_view kind_label(ViolationKind k) {
  return k == ViolationKind::Partial ? "partial" : "transitive";
}

void print_tables(std::ostream& out, const std::string& relation, NormalForm nf,
                  const std::vector<TableStructure>& tables) {
  out << "relation " << relation << ": " << nf_label(nf) << ", " << tables.size() << " tables\n";
  for (const auto& t : tables) {
    out << "  " << t.name << "(" << joined(t.attributes) << ") PK(" << joined(t.primary_key)
        << ")";
    for (const auto& fk : t.foreign_keys) {
      out << " FK(" << joined(fk.columns) << ") -> " << fk.references;
    }
    out << '\n';
  }
}

void print_verification(std::ostream& out, const Verification& v) {
  out << "lossless: " << std::boolalpha << v.lossless
      << ", dependencies preserved: " << v.dependencies_preserved << std::noboolalpha << '\n';
  if (v.violations.empty()) {
    out << "violations: none\n";
    return;
  }
  out << "violations: " << v.violations.size() << '\n';
  for (const auto& x : v.violations) {
    out << "  " << x.table << ": " << kind_label(x.kind) << " "
        << joined({x.determiner.begin(), x.determiner.end()}) << " -> " << x.dependent << '\n';
  }
}

ordered_json tables_json(const std::vector<TableStructure>& tables) {
  ordered_json out = ordered_json::array();
  for (const auto& t : tables) {
    ordered_json fks = ordered_json::array();
    for (const auto& fk : t.foreign_keys) {
      fks.push_back({{"columns", fk.columns}, {"references", fk.references}});
    }
    out.push_back({{"name", t.name},
                   {"attributes", t.attributes},
                   {"primary_key", t.primary_key},
                   {"foreign_keys", fks}});
  }
  return out;
}

ordered_json verification_json(const Verification& v) {
  ordered_json violations = ordered_json::array();
  for (const auto& x : v.violations) {
    violations.push_back({{"table", x.table},
                          {"kind", kind_label(x.kind)},
                          {"dependent", x.dependent},
                          {"determiner", std::vector<std::string>(x.determiner.begin(),
                                                                  x.determiner.end())}});
  }
  return {{"lossless", v.lossless},
          {"dependencies_preserved", v.dependencies_preserved},
          {"violations", violations}};
}

struct NormalizeOptions {
  std::string source;
  int nf = 3;
  bool ddl = false;
  bool verify = false;
  bool json = false;
};

int do_normalize(const NormalizeOptions& o, std::ostream& out) {
  const NormalForm nf = o.nf == 2 ? NormalForm::Second : NormalForm::Third;
  const NormalizationResult r = normalize_detailed(load_schema(o.source), nf);
  Verification v;
  if (o.verify) v = verify_result(r, nf);

  if (o.json) {
    ordered_json doc;
    doc["relation"] = r.flat.relation_name;
    doc["nf"] = o.nf;
    doc["tables"] = tables_json(r.tables);
    if (o.verify) doc["verification"] = verification_json(v);
    if (o.ddl) doc["ddl"] = emit_ddl(r.tables).text();
    out << doc.dump(2) << '\n';
  } else {
    print_tables(out, r.flat.relation_name, nf, r.tables);
    if (o.verify) print_verification(out, v);
    if (o.ddl) out << '\n' << emit_ddl(r.tables).text();
  }
  return o.verify && !v.passed(nf) ? kExitVerificationFailed : kExitOk;
}

int do_verify(const std::string& source, std::ostream& out) {
  const RawSchema raw = load_schema(source);
  bool ok = true;
  for (NormalForm nf : {NormalForm::Second, NormalForm::Third}) {
    const NormalizationResult r = normalize_detailed(raw, nf);
    const Verification v = verify_result(r, nf);
    print_tables(out, r.flat.relation_name, nf, r.tables);
    print_verification(out, v);
    ok = ok && v.passed(nf);
  }
  out << (ok ? "verification passed\n" : "verification FAILED\n");
  return ok ? kExitOk : kExitVerificationFailed;
}

int do_bench(std::size_t reps, const std::string& csv_path, std::ostream& out) {
  std::vector<RawSchema> schemas;
  for (const auto& entry : corpus()) schemas.push_back(load(entry));
  const BenchReport report = bench(schemas, reps);
  write_text(out, report);
  if (csv_path == "-") {
    write_csv(out, report);
  } else if (!csv_path.empty()) {
    std::ofstream file(csv_path);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + csv_path);
    write_csv(file, report);
    out << "csv written to " << csv_path << '\n';
  }
  return kExitOk;
}

int do_corpus_list(std::ostream& out) {
  for (const auto& e : corpus()) {
    out << std::left << std::setw(26) << e.name << std::right << std::setw(4) << e.attributes
        << " attributes" << std::setw(4) << e.dependencies << " fds\n";
  }
  return kExitOk;
}

int do_corpus_show(const std::string& name, std::ostream& out) {
  const CorpusEntry* e = find_corpus_entry(name);
  if (e == nullptr) throw Error(ErrorCode::InvalidArgument, "no corpus relation named " + name);
  out << e->text;
  return kExitOk;
}

}  // namespace

RawSchema load_schema(const std::string& source) {
  if (source.starts_with(kCorpusPrefix)) {
    const std::string name = source.substr(kCorpusPrefix.size());
    const CorpusEntry* e = find_corpus_entry(name);
    if (e == nullptr) throw Error(ErrorCode::InvalidArgument, "no corpus relation named " + name);
    return load(*e);
  }
  std::ifstream file(source, std::ios::binary);
  if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read " + source);
  std::ostringstream text;
  text << file.rdbuf();
  return parse_schema(text.str());
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Normalize a relation with its functional dependencies into 2NF or 3NF", "rdbnorm"};
  app.require_subcommand(1);

  NormalizeOptions norm;
  auto* normalize_cmd = app.add_subcommand("normalize", "Decompose a relation and print the tables");
  normalize_cmd->add_option("file", norm.source, "Schema file, or corpus:<name>")->required();
  normalize_cmd->add_option("--nf", norm.nf, "Target normal form")
      ->check(CLI::IsMember({2, 3}))
      ->capture_default_str();
  normalize_cmd->add_flag("--ddl", norm.ddl, "Also print CREATE TABLE statements");
  normalize_cmd->add_flag("--verify", norm.verify, "Check losslessness, preservation, violations");
  normalize_cmd->add_flag("--json", norm.json, "Print JSON instead of text");

  std::string verify_source;
  auto* verify_cmd = app.add_subcommand("verify", "Normalize to 2NF and 3NF and check both");
  verify_cmd->add_option("file", verify_source, "Schema file, or corpus:<name>")->required();

  std::size_t reps = 5;
  std::string csv_path;
  auto* bench_cmd = app.add_subcommand("bench", "Compare single-list and two-list representations");
  bench_cmd->add_option("--reps", reps, "Samples per measurement")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--csv", csv_path, "Write the CSV report here ('-' for stdout)");

  auto* corpus_cmd = app.add_subcommand("corpus", "Inspect the bundled reference relations");
  corpus_cmd->require_subcommand(1);
  auto* list_cmd = corpus_cmd->add_subcommand("list", "List relations with attribute/FD counts");
  std::string show_name;
  auto* show_cmd = corpus_cmd->add_subcommand("show", "Print the schema file of one relation");
  show_cmd->add_option("name", show_name)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (normalize_cmd->parsed()) return do_normalize(norm, out);
    if (verify_cmd->parsed()) return do_verify(verify_source, out);
    if (bench_cmd->parsed()) return do_bench(reps, csv_path, out);
    if (list_cmd->parsed()) return do_corpus_list(out);
    if (show_cmd->parsed()) return do_corpus_show(show_name, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace rdbnorm::cli
