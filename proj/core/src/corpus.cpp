#include "rdbnorm/corpus.hpp"

#include <algorithm>
#include <array>

#include "corpus_data.hpp"
#include "rdbnorm/schema_io.hpp"

namespace rdbnorm {

namespace {

constexpr std::array<CorpusEntry, 10> kCorpus{{
    {"Beer_Relation", "01_beer", corpus_data::k01_beer, 7, 5},
    {"GH_Relation", "02_gh", corpus_data::k02_gh, 12, 13},
    {"ClientRental", "03_client_rental", corpus_data::k03_client_rental, 9, 17},
    {"AB_Relation", "04_ab", corpus_data::k04_ab, 8, 16},
    {"Invoice_Relation", "05_invoice", corpus_data::k05_invoice, 10, 10},
    {"Emp_Relation", "06_emp", corpus_data::k06_emp, 10, 8},
    {"Project_Relation", "07_project", corpus_data::k07_project, 9, 8},
    {"WellmeadowsHospital", "08_wellmeadows", corpus_data::k08_wellmeadows, 13, 10},
    {"StaffPropertyInspection", "09_staff_property_inspection",
     corpus_data::k09_staff_property_inspection, 8, 16},
    {"Report", "10_report", corpus_data::k10_report, 8, 6},
}};

}  // namespace

std::span<const CorpusEntry> corpus() { return kCorpus; }

const CorpusEntry* find_corpus_entry(std::string_view name) {
  auto it = std::find_if(kCorpus.begin(), kCorpus.end(), [&](const CorpusEntry& e) {
    return e.name == name || e.file == name;
  });
  return it == kCorpus.end() ? nullptr : &*it;
}

RawSchema load(const CorpusEntry& entry) { return parse_schema(entry.text); }

}  // namespace rdbnorm
