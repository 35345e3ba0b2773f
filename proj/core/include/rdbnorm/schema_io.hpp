#pragma once

#include <string>
#include <string_view>

#include "rdbnorm/normalizer.hpp"

namespace rdbnorm {

/// Parses the line-oriented schema format:
///
///   # comment
///   relation <Name>
///   attr <name> [key] [multivalued] [composite(<n1>, <n2>, ...)]
///   fd <a>[, <b>...] -> <c>[, <d>...]
///
/// `relation` must be the first non-comment line. Dependencies may name
/// attributes or composite components, declared anywhere in the file.
RawSchema parse_schema(std::string_view text);

/// Inverse of parse_schema: parse_schema(serialize_schema(s)) == s.
std::string serialize_schema(const RawSchema& schema);

}  // namespace rdbnorm
