#include <gtest/gtest.h>

#include <algorithm>

#include "rdbnorm/corpus.hpp"
#include "rdbnorm/ddl.hpp"
#include "rdbnorm/error.hpp"

using namespace rdbnorm;

namespace {

std::vector<TableStructure> trace_tables() {
  return {{"R_main", {"a", "b", "d", "c"}, {"a", "b"}, {{{"b"}, "b"}, {{"d"}, "d"}}},
          {"b", {"b", "e"}, {"b"}, {}},
          {"d", {"d", "f", "g"}, {"d"}, {}}};
}

std::size_t position(const DdlScript& s, const std::string& table) {
  const std::string head = "CREATE TABLE " + table + " (";
  for (std::size_t i = 0; i < s.statements.size(); ++i) {
    if (s.statements[i].starts_with(head)) return i;
  }
  return s.statements.size();
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no rdbnorm::Error thrown";
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(EmitDdl, TraceScript) {
  const DdlScript s = emit_ddl(trace_tables());
  ASSERT_EQ(s.statements.size(), 3u);
  EXPECT_EQ(s.text(),
            "CREATE TABLE b (\n"
            "    b VARCHAR(255),\n"
            "    e VARCHAR(255),\n"
            "    PRIMARY KEY (b)\n"
            ");\n\n"
            "CREATE TABLE d (\n"
            "    d VARCHAR(255),\n"
            "    f VARCHAR(255),\n"
            "    g VARCHAR(255),\n"
            "    PRIMARY KEY (d)\n"
            ");\n\n"
            "CREATE TABLE R_main (\n"
            "    a VARCHAR(255),\n"
            "    b VARCHAR(255),\n"
            "    d VARCHAR(255),\n"
            "    c VARCHAR(255),\n"
            "    PRIMARY KEY (a, b),\n"
            "    FOREIGN KEY (b) REFERENCES b (b),\n"
            "    FOREIGN KEY (d) REFERENCES d (d)\n"
            ");\n\n");
}

TEST(EmitDdl, EmptyInput) {
  EXPECT_TRUE(emit_ddl({}).statements.empty());
  EXPECT_EQ(emit_ddl({}).text(), "");
}

TEST(EmitDdl, IndependentTablesKeepInputOrder) {
  const std::vector<TableStructure> tables = {{"z", {"z"}, {"z"}, {}}, {"a", {"a"}, {"a"}, {}}};
  const DdlScript s = emit_ddl(tables);
  EXPECT_EQ(position(s, "z"), 0u);
  EXPECT_EQ(position(s, "a"), 1u);
}

TEST(EmitDdl, CorpusReferencedTablesComeFirst) {
  for (const auto& e : corpus()) {
    SCOPED_TRACE(std::string(e.name));
    const auto tables = normalize(load(e), NormalForm::Third);
    const DdlScript s = emit_ddl(tables);
    ASSERT_EQ(s.statements.size(), tables.size());
    for (const auto& t : tables) {
      for (const auto& fk : t.foreign_keys) {
        EXPECT_LT(position(s, fk.references), position(s, t.name));
      }
      const std::string& stmt = s.statements[position(s, t.name)];
      for (const auto& col : t.attributes) {
        EXPECT_NE(stmt.find("    " + col + " VARCHAR(255)"), std::string::npos);
      }
    }
    EXPECT_EQ(emit_ddl(tables).text(), s.text());
  }
}

TEST(EmitDdl, BeerChainOrder) {
  const auto tables = normalize(load(*find_corpus_entry("Beer_Relation")), NormalForm::Third);
  const DdlScript s = emit_ddl(tables);
  ASSERT_EQ(s.statements.size(), 4u);
  EXPECT_LT(position(s, "city"), position(s, "brewery"));
  EXPECT_LT(position(s, "brewery"), position(s, "beer"));
  EXPECT_LT(position(s, "beer"), position(s, "Beer_Relation_main"));
}

TEST(EmitDdl, Errors) {
  EXPECT_EQ(code_of([] {
              emit_ddl(std::vector<TableStructure>{{"t", {"x"}, {"x"}, {{{"x"}, "missing"}}}});
            }),
            ErrorCode::DanglingForeignKey);
  EXPECT_EQ(code_of([] {
              emit_ddl(std::vector<TableStructure>{{"t", {"x", "y"}, {"x"}, {{{"x", "y"}, "u"}}},
                                                   {"u", {"x"}, {"x"}, {}}});
            }),
            ErrorCode::DanglingForeignKey);
  EXPECT_EQ(code_of([] {
              emit_ddl(std::vector<TableStructure>{{"p", {"x", "y"}, {"x"}, {{{"y"}, "q"}}},
                                                   {"q", {"y", "x"}, {"y"}, {{{"x"}, "p"}}}});
            }),
            ErrorCode::CyclicReference);
}
