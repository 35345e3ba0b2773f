#include "rdbnorm/baseline.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>

#include "rdbnorm/error.hpp"

namespace rdbnorm {

namespace {

void append_unique(std::vector<std::string>& into, const std::string& name) {
  if (std::find(into.begin(), into.end(), name) == into.end()) into.push_back(name);
}

std::size_t position_in(const std::vector<ListedAttribute>& attrs, const std::string& name) {
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (attrs[i].name == name) return i;
  }
  return attrs.size();
}

template <typename Fn>
double median_us(std::size_t repetitions, double min_sample_us, Fn&& fn) {
  using clock = std::chrono::steady_clock;
  std::vector<double> samples;
  samples.reserve(repetitions);
  for (std::size_t r = 0; r < repetitions; ++r) {
    std::size_t calls = 0;
    const auto start = clock::now();
    double elapsed = 0;
    do {
      fn();
      ++calls;
      elapsed = std::chrono::duration<double, std::micro>(clock::now() - start).count();
    } while (elapsed < min_sample_us);
    samples.push_back(elapsed / static_cast<double>(calls));
  }
  std::sort(samples.begin(), samples.end());
  const std::size_t mid = samples.size() / 2;
  return samples.size() % 2 ? samples[mid] : (samples[mid - 1] + samples[mid]) / 2.0;
}

// Keeps the optimizer from discarding timed work.
volatile std::size_t g_sink = 0;

}  // namespace

TwoListSchema build_two_list(const std::string& relation_name,
                             const std::vector<RawAttribute>& attributes, const FdSet& fds,
                             const Limits& limits) {
  std::set<std::string> determiners;
  for (const auto& fd : fds.fds()) determiners.insert(fd.lhs.begin(), fd.lhs.end());

  TwoListSchema s;
  s.relation_name = relation_name;
  s.limits = limits;
  for (EntryClass cls : {EntryClass::Key, EntryClass::Determiner, EntryClass::Plain}) {
    for (const auto& a : attributes) {
      if (entry_class(a.is_key, determiners.contains(a.name)) != cls) continue;
      if (a.shape == AttributeShape::Composite) {
        throw Error(ErrorCode::InvalidArgument,
                    "composite '" + a.name + "' must be flattened before loading");
      }
      if (!is_valid_identifier(a.name, limits.max_name_len)) {
        throw Error(ErrorCode::InvalidName, "'" + a.name + "' is not a valid attribute name");
      }
      if (s.attribute_list.size() >= limits.max_attributes) {
        throw Error(ErrorCode::CapacityExceeded, relation_name + " has too many attributes");
      }
      s.attribute_list.push_back({a.name,
                                  a.shape == AttributeShape::Multivalued
                                      ? AttributeKind::Multivalued
                                      : AttributeKind::Atomic,
                                  a.is_key});
    }
  }
  for (const auto& fd : fds.fds()) {
    if (fd.lhs.size() > limits.max_lhs) {
      throw Error(ErrorCode::LhsTooLarge, "'" + to_string(fd) + "' has too many attributes");
    }
    ListedDependency dep{{fd.lhs.begin(), fd.lhs.end()}, fd.rhs};
    for (const auto& name : dep.lhs) {
      if (position_in(s.attribute_list, name) == s.attribute_list.size()) {
        throw Error(ErrorCode::UnknownAttribute, "'" + name + "' is not an attribute");
      }
    }
    s.fd_list.push_back(std::move(dep));
  }
  return s;
}

Classification classify_two_list(const TwoListSchema& schema) {
  const auto& attrs = schema.attribute_list;
  Classification c;
  std::vector<std::size_t> key_positions;
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (attrs[i].is_key) {
      c.prime_attributes.push_back(attrs[i].name);
      c.prime_key_ids.push_back(NodeId{static_cast<std::uint32_t>(i + 1)});
      key_positions.push_back(i);
    } else {
      c.all_attributes.push_back(attrs[i].name);
    }
  }
  if (c.prime_attributes.empty()) {
    throw Error(ErrorCode::NoKeyDeclared, schema.relation_name + " declares no key attribute");
  }
  c.full = c.prime_attributes;

  std::map<std::vector<std::size_t>, std::size_t> partial_index;
  std::map<std::vector<std::size_t>, std::size_t> transitive_index;
  auto file_under = [&](std::vector<DependencyGroup>& groups,
                        std::map<std::vector<std::size_t>, std::size_t>& index,
                        const std::vector<std::size_t>& determiner, const std::string& dependent) {
    auto [it, fresh] = index.try_emplace(determiner, groups.size());
    if (fresh) {
      DependencyGroup g;
      for (std::size_t p : determiner) g.determiner.push_back(attrs[p].name);
      groups.push_back(std::move(g));
    }
    append_unique(groups[it->second].dependents, dependent);
  };

  for (const auto& attr : attrs) {
    if (attr.is_key) continue;
    std::vector<std::vector<std::size_t>> determiners;
    for (const auto& fd : schema.fd_list) {
      if (fd.rhs != attr.name) continue;
      std::vector<std::size_t> positions;
      for (const auto& name : fd.lhs) positions.push_back(position_in(attrs, name));
      std::sort(positions.begin(), positions.end());
      if (std::find(determiners.begin(), determiners.end(), positions) == determiners.end()) {
        determiners.push_back(std::move(positions));
      }
    }
    if (determiners.empty()) {
      append_unique(c.full, attr.name);
      continue;
    }
    for (const auto& det : determiners) {
      if (det == key_positions) {
        append_unique(c.full, attr.name);
      } else if (std::includes(key_positions.begin(), key_positions.end(), det.begin(),
                               det.end())) {
        file_under(c.partial, partial_index, det, attr.name);
      } else {
        file_under(c.transitive, transitive_index, det, attr.name);
      }
    }
  }
  return c;
}

void CostModel::validate() const {
  if (name_cell == 0 || flag_cell == 0 || id_cell == 0 || link_cell == 0 ||
      slots_per_node == 0 || ids_per_slot == 0) {
    throw Error(ErrorCode::InvalidArgument, "every cost model cell size must be positive");
  }
}

std::size_t memory_cells_single(std::size_t attributes, const CostModel& m) {
  m.validate();
  const std::size_t node = m.name_cell + 2 * m.flag_cell + m.id_cell +
                           m.slots_per_node * m.ids_per_slot * m.id_cell + m.flag_cell +
                           m.link_cell;
  return attributes * node;
}

std::size_t memory_cells_single(const SchemaList& list, const CostModel& m) {
  return memory_cells_single(list.size(), m);
}

std::size_t memory_cells_double(std::size_t attributes, std::size_t dependencies,
                                std::size_t max_lhs, const CostModel& m) {
  m.validate();
  const std::size_t attribute_node = m.name_cell + 2 * m.flag_cell + m.link_cell;
  const std::size_t fd_node = max_lhs * m.name_cell + m.name_cell + m.link_cell;
  return attributes * attribute_node + dependencies * fd_node;
}

std::size_t memory_cells_double(const TwoListSchema& schema, const CostModel& m) {
  return memory_cells_double(schema.attribute_list.size(), schema.fd_list.size(),
                             schema.limits.max_lhs, m);
}

NormalizationResult normalize_two_list(const RawSchema& raw, NormalForm nf, const Limits& limits) {
  NormalizationResult r;
  r.flat = to_first_normal_form(raw);
  AttributeSet key;
  for (const auto& a : r.flat.attributes) {
    if (a.is_key) key.insert(a.name);
  }
  if (key.empty()) {
    throw Error(ErrorCode::NoKeyDeclared, raw.relation_name + " declares no key attribute");
  }
  r.dependencies = split_rhs(r.flat.attribute_names(), r.flat.fds);
  r.cover = minimal_cover(key_dependencies_last(r.dependencies, key));
  const TwoListSchema schema = build_two_list(r.flat.relation_name, r.flat.attributes, r.cover, limits);
  r.classification = classify_two_list(schema);
  r.tables = nf == NormalForm::Third ? decompose_3nf(r.classification, r.flat.relation_name)
                                     : decompose_2nf(r.classification, r.flat.relation_name);
  return r;
}

double BenchReport::average_memory_factor() const {
  if (rows.empty()) return 0;
  double sum = 0;
  for (const auto& row : rows) {
    sum += static_cast<double>(row.double_bytes) / static_cast<double>(row.single_bytes);
  }
  return sum / static_cast<double>(rows.size());
}

BenchReport bench(std::span<const RawSchema> corpus, std::size_t repetitions,
                  const CostModel& model, double min_sample_us) {
  if (corpus.empty()) throw Error(ErrorCode::EmptyCorpus, "nothing to benchmark");
  if (repetitions == 0) throw Error(ErrorCode::InvalidArgument, "repetitions must be >= 1");
  model.validate();

  BenchReport report;
  report.repetitions = repetitions;
  for (const auto& raw : corpus) {
    const NormalizationResult prepared = normalize_detailed(raw, NormalForm::Third);
    const SchemaList list = build_schema_list(prepared.flat.relation_name,
                                              prepared.flat.attributes, prepared.cover);
    const TwoListSchema entered = build_two_list(prepared.flat.relation_name,
                                                 prepared.flat.attributes, prepared.dependencies);
    const TwoListSchema covered = build_two_list(prepared.flat.relation_name,
                                                 prepared.flat.attributes, prepared.cover);

    BenchRow row;
    row.relation = raw.relation_name;
    row.attrs = prepared.flat.attributes.size();
    row.fds = prepared.dependencies.size();
    row.single_bytes = memory_cells_single(list, model);
    row.double_bytes = memory_cells_double(entered, model);
    row.mem_ratio = static_cast<double>(row.single_bytes) / static_cast<double>(row.double_bytes);

    row.t2nf_single_us = median_us(repetitions, min_sample_us, [&] {
      g_sink = g_sink + normalize(raw, NormalForm::Second).size();
    });
    row.t2nf_double_us = median_us(repetitions, min_sample_us, [&] {
      g_sink = g_sink + normalize_two_list(raw, NormalForm::Second).tables.size();
    });
    row.t3nf_single_us = median_us(repetitions, min_sample_us, [&] {
      g_sink = g_sink + normalize(raw, NormalForm::Third).size();
    });
    row.t3nf_double_us = median_us(repetitions, min_sample_us, [&] {
      g_sink = g_sink + normalize_two_list(raw, NormalForm::Third).tables.size();
    });
    row.classify_single_us = median_us(repetitions, min_sample_us, [&] {
      g_sink = g_sink + classify(list).full.size();
    });
    row.classify_double_us = median_us(repetitions, min_sample_us, [&] {
      g_sink = g_sink + classify_two_list(covered).full.size();
    });
    report.rows.push_back(std::move(row));
  }
  return report;
}

void write_csv(std::ostream& os, const BenchReport& report) {
  os << kBenchCsvHeader << '\n';
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << std::fixed;
  for (const auto& r : report.rows) {
    os << r.relation << ',' << r.attrs << ',' << r.fds << ',' << r.single_bytes << ','
       << r.double_bytes << ',' << std::setprecision(4) << r.mem_ratio << ','
       << std::setprecision(3) << r.t2nf_single_us << ',' << r.t2nf_double_us << ','
       << r.t3nf_single_us << ',' << r.t3nf_double_us << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

void write_text(std::ostream& os, const BenchReport& report) {
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << "representation benchmark, median of " << report.repetitions << " samples\n";
  os << std::left << std::setw(26) << "relation" << std::right << std::setw(6) << "attrs"
     << std::setw(5) << "fds" << std::setw(8) << "single" << std::setw(8) << "double"
     << std::setw(8) << "ratio" << std::setw(11) << "2nf_s_us" << std::setw(11) << "2nf_d_us"
     << std::setw(11) << "3nf_s_us" << std::setw(11) << "3nf_d_us" << std::setw(11)
     << "cls_s_us" << std::setw(11) << "cls_d_us" << '\n';
  os << std::fixed;
  for (const auto& r : report.rows) {
    os << std::left << std::setw(26) << r.relation << std::right << std::setw(6) << r.attrs
       << std::setw(5) << r.fds << std::setw(8) << r.single_bytes << std::setw(8)
       << r.double_bytes << std::setw(8) << std::setprecision(3) << r.mem_ratio
       << std::setprecision(2) << std::setw(11) << r.t2nf_single_us << std::setw(11)
       << r.t2nf_double_us << std::setw(11) << r.t3nf_single_us << std::setw(11)
       << r.t3nf_double_us << std::setw(11) << r.classify_single_us << std::setw(11)
       << r.classify_double_us << '\n';
  }
  os << "average double/single memory factor: " << std::setprecision(3)
     << report.average_memory_factor() << '\n';
  os.flags(flags);
  os.precision(precision);
}

}  // namespace rdbnorm
