#pragma once

#include <cstddef>
#include <span>
#include <string_view>

#include "rdbnorm/normalizer.hpp"

namespace rdbnorm {

/// One of the ten reference relations bundled with the library. The schema
/// text is embedded at build time from core/corpus/*.schema.
struct CorpusEntry {
  std::string_view name;
  std::string_view file;
  std::string_view text;
  std::size_t attributes;    // attribute count of the reference listing
  std::size_t dependencies;  // single-RHS FD count of the reference listing
};

std::span<const CorpusEntry> corpus();

/// Lookup by relation name or file stem; nullptr if absent.
const CorpusEntry* find_corpus_entry(std::string_view name);

RawSchema load(const CorpusEntry& entry);

}  // namespace rdbnorm
