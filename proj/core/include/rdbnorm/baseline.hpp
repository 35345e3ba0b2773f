#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "rdbnorm/fd_engine.hpp"
#include "rdbnorm/normalizer.hpp"
#include "rdbnorm/schema_model.hpp"

namespace rdbnorm {

// Two-list baseline: attributes in one list, dependencies in another, the
// layout used by earlier normalization tools. It exists to be measured
// against SchemaList.

struct ListedAttribute {
  std::string name;
  AttributeKind kind = AttributeKind::Atomic;
  bool is_key = false;
};

struct ListedDependency {
  std::vector<std::string> lhs;
  std::string rhs;
};

struct TwoListSchema {
  std::string relation_name;
  std::vector<ListedAttribute> attribute_list;
  std::vector<ListedDependency> fd_list;
  Limits limits;
};

/// Builds a TwoListSchema with the same entry order as build_schema_list
/// (keys, non-key determiners of `fds`, the rest) and `fds` in input order.
TwoListSchema build_two_list(const std::string& relation_name,
                             const std::vector<RawAttribute>& attributes, const FdSet& fds,
                             const Limits& limits = {});

/// Classification computed on the two-list layout. For every non-key
/// attribute the whole dependency list is scanned and each left-hand-side
/// name is resolved by walking the attribute list. Produces the same
/// Classification as classify() on the equivalent SchemaList.
Classification classify_two_list(const TwoListSchema& schema);

/// Byte sizes per field of the abstract storage model.
struct CostModel {
  std::size_t name_cell = 50;
  std::size_t flag_cell = 1;
  std::size_t id_cell = 4;
  std::size_t link_cell = 4;
  std::size_t slots_per_node = 4;
  std::size_t ids_per_slot = 4;

  void validate() const;
};

/// N * (name + 2 flags + id + slots*ids*id + key flag + link).
std::size_t memory_cells_single(const SchemaList& list, const CostModel& m = {});
std::size_t memory_cells_single(std::size_t attributes, const CostModel& m = {});

/// N * (name + 2 flags + link) + K * (max_lhs*name + name + link).
std::size_t memory_cells_double(const TwoListSchema& schema, const CostModel& m = {});
std::size_t memory_cells_double(std::size_t attributes, std::size_t dependencies,
                                std::size_t max_lhs, const CostModel& m = {});

/// Whole pipeline on the two-list layout; same stages as normalize().
NormalizationResult normalize_two_list(const RawSchema& raw, NormalForm nf,
                                       const Limits& limits = {});

struct BenchRow {
  std::string relation;
  std::size_t attrs = 0;
  std::size_t fds = 0;
  std::size_t single_bytes = 0;
  std::size_t double_bytes = 0;
  double mem_ratio = 0;  // single / double
  double t2nf_single_us = 0;
  double t2nf_double_us = 0;
  double t3nf_single_us = 0;
  double t3nf_double_us = 0;
  double classify_single_us = 0;
  double classify_double_us = 0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::size_t repetitions = 0;

  /// Mean over rows of double_bytes / single_bytes.
  [[nodiscard]] double average_memory_factor() const;
};

/// Times both representations on every relation. Each figure is the median
/// over `repetitions` samples; a sample repeats the operation until at least
/// `min_sample_us` microseconds have passed and reports the per-call time.
BenchReport bench(std::span<const RawSchema> corpus, std::size_t repetitions,
                  const CostModel& model = {}, double min_sample_us = 2000.0);

inline constexpr const char* kBenchCsvHeader =
    "relation,attrs,fds,single_bytes,double_bytes,mem_ratio,t2nf_single_us,t2nf_double_us,"
    "t3nf_single_us,t3nf_double_us";

void write_csv(std::ostream& os, const BenchReport& report);
void write_text(std::ostream& os, const BenchReport& report);

}  // namespace rdbnorm
