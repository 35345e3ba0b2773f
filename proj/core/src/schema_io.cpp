#include "rdbnorm/schema_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "rdbnorm/error.hpp"
#include "rdbnorm/schema_model.hpp"

namespace rdbnorm {

namespace {

constexpr std::size_t kMaxIdentifier = 100;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string identifier(std::string_view token, std::size_t line) {
  token = trim(token);
  if (!is_valid_identifier(token, kMaxIdentifier)) {
    throw SyntaxError(line, "'" + std::string(token) + "' is not a valid identifier");
  }
  return std::string(token);
}

std::vector<std::string> name_list(std::string_view text, std::size_t line) {
  std::vector<std::string> out;
  while (true) {
    const auto comma = text.find(',');
    out.push_back(identifier(text.substr(0, comma), line));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

/// Splits off the first whitespace-delimited word.
std::pair<std::string_view, std::string_view> first_word(std::string_view s) {
  s = trim(s);
  const auto end = s.find_first_of(" \t");
  if (end == std::string_view::npos) return {s, {}};
  return {s.substr(0, end), trim(s.substr(end))};
}

RawAttribute parse_attr(std::string_view rest, std::size_t line) {
  auto [name, options] = first_word(rest);
  if (name.empty()) throw SyntaxError(line, "attr needs a name");
  RawAttribute attr;
  attr.name = identifier(name, line);

  bool saw_key = false;
  while (!options.empty()) {
    if (options.starts_with("composite")) {
      std::string_view body = trim(options.substr(9));
      const auto close = body.find(')');
      if (!body.starts_with("(") || close == std::string_view::npos) {
        throw SyntaxError(line, "expected composite(<name>, ...)");
      }
      if (attr.shape != AttributeShape::Atomic) {
        throw SyntaxError(line, "attribute '" + attr.name + "' has conflicting kinds");
      }
      attr.shape = AttributeShape::Composite;
      attr.components = name_list(body.substr(1, close - 1), line);
      options = trim(body.substr(close + 1));
      continue;
    }
    auto [word, tail] = first_word(options);
    if (word == "key") {
      if (saw_key) throw SyntaxError(line, "'key' given twice");
      saw_key = true;
      attr.is_key = true;
    } else if (word == "multivalued") {
      if (attr.shape != AttributeShape::Atomic) {
        throw SyntaxError(line, "attribute '" + attr.name + "' has conflicting kinds");
      }
      attr.shape = AttributeShape::Multivalued;
    } else {
      throw SyntaxError(line, "unknown attribute option '" + std::string(word) + "'");
    }
    options = tail;
  }
  return attr;
}

RawDependency parse_fd(std::string_view rest, std::size_t line) {
  const auto arrow = rest.find("->");
  if (arrow == std::string_view::npos) throw SyntaxError(line, "fd needs '->'");
  if (trim(rest.substr(0, arrow)).empty() || trim(rest.substr(arrow + 2)).empty()) {
    throw SyntaxError(line, "fd needs attributes on both sides of '->'");
  }
  return {name_list(rest.substr(0, arrow), line), name_list(rest.substr(arrow + 2), line)};
}

}  // namespace

RawSchema parse_schema(std::string_view text) {
  RawSchema schema;
  bool have_relation = false;
  std::vector<std::size_t> fd_lines;
  std::set<std::string> names;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto [keyword, rest] = first_word(line);
    if (keyword == "relation") {
      if (have_relation) throw SyntaxError(line_no, "relation declared twice");
      auto [name, extra] = first_word(rest);
      if (name.empty() || !extra.empty()) throw SyntaxError(line_no, "expected relation <Name>");
      schema.relation_name = identifier(name, line_no);
      have_relation = true;
      continue;
    }
    if (!have_relation) throw SyntaxError(line_no, "the first statement must be 'relation'");

    if (keyword == "attr") {
      RawAttribute attr = parse_attr(rest, line_no);
      std::vector<std::string> introduced{attr.name};
      introduced.insert(introduced.end(), attr.components.begin(), attr.components.end());
      for (const auto& n : introduced) {
        if (!names.insert(n).second) {
          throw Error(ErrorCode::DuplicateAttribute,
                      "line " + std::to_string(line_no) + ": '" + n + "' declared twice");
        }
      }
      schema.attributes.push_back(std::move(attr));
    } else if (keyword == "fd") {
      schema.fds.push_back(parse_fd(rest, line_no));
      fd_lines.push_back(line_no);
    } else {
      throw SyntaxError(line_no, "unknown statement '" + std::string(keyword) + "'");
    }
  }

  if (!have_relation) throw SyntaxError(0, "no relation declared");
  for (std::size_t i = 0; i < schema.fds.size(); ++i) {
    for (const auto* side : {&schema.fds[i].lhs, &schema.fds[i].rhs}) {
      for (const auto& n : *side) {
        if (!names.contains(n)) {
          throw Error(ErrorCode::UnknownAttributeInFd, "line " + std::to_string(fd_lines[i]) +
                                                           ": '" + n + "' is not declared");
        }
      }
    }
  }
  const bool keyed = std::any_of(schema.attributes.begin(), schema.attributes.end(),
                                 [](const RawAttribute& a) { return a.is_key; });
  if (!keyed) {
    throw Error(ErrorCode::NoKeyDeclared, schema.relation_name + " declares no key attribute");
  }
  return schema;
}

std::string serialize_schema(const RawSchema& schema) {
  std::ostringstream os;
  auto list = [&](const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) os << (i ? ", " : "") << names[i];
  };
  os << "relation " << schema.relation_name << '\n';
  for (const auto& a : schema.attributes) {
    os << "attr " << a.name;
    if (a.is_key) os << " key";
    if (a.shape == AttributeShape::Multivalued) os << " multivalued";
    if (a.shape == AttributeShape::Composite) {
      os << " composite(";
      list(a.components);
      os << ')';
    }
    os << '\n';
  }
  for (const auto& fd : schema.fds) {
    os << "fd ";
    list(fd.lhs);
    os << " -> ";
    list(fd.rhs);
    os << '\n';
  }
  return os.str();
}

}  // namespace rdbnorm
