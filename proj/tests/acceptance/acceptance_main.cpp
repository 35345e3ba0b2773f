// Standalone acceptance runner. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "rdbnorm/baseline.hpp"
#include "rdbnorm/corpus.hpp"
#include "rdbnorm/error.hpp"
#include "rdbnorm/schema_io.hpp"
#include "rdbnorm/verifier.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

using namespace rdbnorm;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << "    failed: " << what << '\n';
    }
  }
};

using Clock = std::chrono::steady_clock;

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

std::string sample(const std::string& name) { return std::string(RDBNORM_SAMPLES_DIR) + "/" + name; }

std::set<std::string> set_of(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

struct Captured {
  int exit_code = -1;
  std::string out;
};

/// Runs the installed command-line binary through the shell.
Captured run_binary(const std::string& args) {
  Captured c;
  const std::string cmd = std::string("\"") + RDBNORM_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return c;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) c.out.append(buf, n);
  const int status = pclose(pipe);
  c.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return c;
}

void trace_reproduction(Outcome& o) {
  const RawSchema raw = cli::load_schema(sample("trace.schema"));
  const auto second = normalize_detailed(raw, NormalForm::Second);
  const auto third = normalize_detailed(raw, NormalForm::Third);
  const Classification& c = third.classification;
  o.require(set_of(c.full) == std::set<std::string>{"a", "b", "c", "d"}, "A1 = [a,b,c,d]");
  o.require(c.partial == std::vector<DependencyGroup>{{{"b"}, {"e"}}}, "A2 = {b} -> [e]");
  o.require(c.transitive == std::vector<DependencyGroup>{{{"d"}, {"f", "g"}}}, "A3 = {d} -> [f,g]");

  using golden::ExpectedTable;
  auto exact = [](const std::vector<TableStructure>& got, std::vector<ExpectedTable> want) {
    auto shape = golden::shape_of(got);
    std::sort(shape.begin(), shape.end());
    std::sort(want.begin(), want.end());
    return shape == want;
  };
  o.require(exact(second.tables, {{{"a", "b", "c", "d", "f", "g"}, {"a", "b"}}, {{"b", "e"}, {"b"}}}),
            "2NF tables {a,b,c,d,f,g} PK(a,b) and {b,e} PK(b)");
  o.require(exact(third.tables,
                  {{{"a", "b", "c", "d"}, {"a", "b"}}, {{"b", "e"}, {"b"}}, {{"d", "f", "g"}, {"d"}}}),
            "3NF tables {a,b,c,d}, {b,e}, {d,f,g}");
}

void golden_rows(Outcome& o) {
  for (const auto& row : golden::table_rows()) {
    const RawSchema raw = load(*find_corpus_entry(row.relation));
    std::string why;
    o.require(golden::matches(normalize(raw, NormalForm::Second), row.second, &why),
              std::string(row.relation) + " 2NF\n" + why);
    o.require(golden::matches(normalize(raw, NormalForm::Third), row.third, &why),
              std::string(row.relation) + " 3NF\n" + why);
  }
}

void semantic_rows(Outcome& o) {
  for (const auto name : golden::semantic_rows()) {
    const RawSchema raw = load(*find_corpus_entry(name));
    for (NormalForm nf : {NormalForm::Second, NormalForm::Third}) {
      const std::string label = std::string(name) + (nf == NormalForm::Third ? " 3NF" : " 2NF");
      const auto r = normalize_detailed(raw, nf);
      const auto universe = r.flat.attribute_names();
      std::set<std::string> covered;
      for (const auto& t : r.tables) covered.insert(t.attributes.begin(), t.attributes.end());
      o.require(covered == set_of(universe), label + ": attribute preservation");
      o.require(is_lossless(universe, r.cover, r.tables), label + ": lossless");
      const CheckMode mode =
          nf == NormalForm::Third ? CheckMode::ThirdNormalForm : CheckMode::SecondNormalForm;
      o.require(scan_violations(r.tables, r.cover, mode).empty(), label + ": no violations");
      if (nf == NormalForm::Third) {
        o.require(preserves_dependencies(r.cover, r.tables), label + ": dependencies preserved");
      }
    }
  }
}

void check_against_oracle(Outcome& o, const FdSet& f, const std::string& label) {
  const auto of = oracle::from(f.fds());
  for (const auto& x : oracle::all_subsets(f.universe())) {
    const AttributeSet mine = closure(AttributeSet(x.begin(), x.end()), f);
    if (oracle::Names(mine.begin(), mine.end()) != oracle::closure(x, of)) {
      o.require(false, label + ": closure disagrees");
      return;
    }
  }
  for (const auto& l : f.universe()) {
    for (const auto& r : f.universe()) {
      if (l != r && implies(f, {{l}, r}) != oracle::implies(of, {{l}, r})) {
        o.require(false, label + ": implies disagrees on " + l + " -> " + r);
        return;
      }
    }
  }
  const FdSet g = minimal_cover(f);
  const auto og = oracle::from(g.fds());
  o.require(oracle::equivalent(f.universe(), of, og), label + ": cover not equivalent");
  o.require(!oracle::has_extraneous_attribute(og), label + ": cover has extraneous attribute");
  o.require(!oracle::has_redundant_fd(og), label + ": cover has redundant FD");
}

void oracle_cross_checks(Outcome& o) {
  for (const auto& e : corpus()) {
    const RawSchema flat = to_first_normal_form(load(e));
    check_against_oracle(o, split_rhs(flat.attribute_names(), flat.fds), std::string(e.name));
  }
  std::mt19937 rng(20090601);
  for (int i = 0; i < 500; ++i) {
    const auto r = oracle::random_fds(rng, 8, 12, 3);
    check_against_oracle(o, FdSet(r.universe, r.fds), "random #" + std::to_string(i));
  }
}

void memory_direction(Outcome& o) {
  double sum = 0;
  for (const auto& e : corpus()) {
    const RawSchema flat = to_first_normal_form(load(e));
    const FdSet split = split_rhs(flat.attribute_names(), flat.fds);
    const SchemaList list = build_schema_list(flat.relation_name, flat.attributes, minimal_cover(split));
    const TwoListSchema two = build_two_list(flat.relation_name, flat.attributes, split);
    const std::size_t single = memory_cells_single(list);
    const std::size_t dbl = memory_cells_double(two);
    o.require(single < dbl, std::string(e.name) + ": single " + std::to_string(single) +
                                " >= double " + std::to_string(dbl));
    sum += static_cast<double>(dbl) / static_cast<double>(single);
  }
  std::ostringstream info;
  info << std::fixed << std::setprecision(2) << sum / static_cast<double>(corpus().size());
  o.detail << "    average double/single memory factor " << info.str()
           << " (reference figure 2.17, absolute bytes not comparable)\n";
}

void timing_direction(Outcome& o) {
  std::vector<RawSchema> schemas;
  for (const auto& e : corpus()) schemas.push_back(load(e));
  const BenchReport report = bench(schemas, 5);
  o.require(report.rows.size() == 10, "bench produced 10 rows");
  double worst = 0;
  for (const auto& row : report.rows) {
    const double ratio = row.classify_single_us / row.classify_double_us;
    worst = std::max(worst, ratio);
    o.require(row.classify_single_us <= 2.0 * row.classify_double_us,
              row.relation + ": single-list classification " + std::to_string(row.classify_single_us) +
                  " us vs two-list " + std::to_string(row.classify_double_us) + " us");
  }
  o.detail << "    worst single/two-list classification time ratio " << std::fixed
           << std::setprecision(3) << worst << '\n';
}

void determinism(Outcome& o) {
  std::vector<std::string> sources;
  for (const char* s : {"trace.schema", "employee.schema", "contact.schema"}) {
    sources.push_back(sample(s));
  }
  for (const auto& e : corpus()) sources.push_back("corpus:" + std::string(e.name));
  for (const auto& src : sources) {
    const std::string args = "normalize \"" + src + "\" --nf 3 --json";
    const Captured first = run_binary(args);
    const Captured second = run_binary(args);
    o.require(first.exit_code == 0, src + ": exit code " + std::to_string(first.exit_code));
    o.require(!first.out.empty() && first.out == second.out, src + ": output differs between runs");
  }
}

void limit_behavior(Outcome& o) {
  const std::pair<const char*, const char*> cases[] = {
      {"too_many_determiners.schema", "DeterminerSlotsExhausted"},
      {"wide_lhs.schema", "LhsTooLarge"}};
  for (const auto& [file, code] : cases) {
    const Captured c = run_binary("normalize \"" + sample(file) + "\" --nf 3");
    o.require(c.exit_code == cli::kExitInputError,
              std::string(file) + ": exit code " + std::to_string(c.exit_code));
    std::ostringstream out, err;
    const std::vector<std::string> args = {"normalize", sample(file)};
    cli::run(args, out, err);
    o.require(err.str().find(code) != std::string::npos,
              std::string(file) + ": diagnostic lacks " + code + ": " + err.str());
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "trace reproduction", 1.0, trace_reproduction},
      {"AC2", "golden decompositions for rows 1-3, 5-7", 1.0, golden_rows},
      {"AC3", "semantic verification for rows 4, 8-10", 2.0, semantic_rows},
      {"AC4", "closure/implies/minimal_cover against brute-force oracles", 30.0, oracle_cross_checks},
      {"AC5", "single list uses less memory than two lists", 1.0, memory_direction},
      {"AC6", "single-list classification within 2x of the two-list baseline", 60.0, timing_direction},
      {"AC7", "repeated JSON runs are byte-identical", 5.0, determinism},
      {"AC8", "determiner and left-hand-side limits", 1.0, limit_behavior},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    o.require(seconds < c.budget_s, "took " + std::to_string(seconds) + " s, budget " +
                                         std::to_string(c.budget_s) + " s");
    std::cout << c.id << ' ' << (o.ok ? "PASS" : "FAIL") << "  " << c.title << "  ("
              << std::fixed << std::setprecision(3) << seconds << " s)\n"
              << o.detail.str();
    failures += o.ok ? 0 : 1;
  }
  std::cout << (failures == 0 ? "all acceptance criteria passed\n"
                              : std::to_string(failures) + " acceptance criteria failed\n");
  return failures == 0 ? 0 : 1;
}
