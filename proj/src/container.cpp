#include "plump/container.hpp"

#include <cctype>
#include <charconv>

namespace plump {

bool is_valid_shape_name(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

void BaseSignature::add_shape(std::string name, std::uint32_t arity) {
  if (!is_valid_shape_name(name)) {
    throw Error("invalid shape name: '" + name + "'");
  }
  if (index_.count(name) != 0) {
    throw Error("duplicate shape name: '" + name + "'");
  }
  index_.emplace(name, entries_.size());
  entries_.emplace_back(std::move(name), arity);
}

bool BaseSignature::contains(std::string_view name) const {
  return index_.count(std::string(name)) != 0;
}

std::uint32_t BaseSignature::arity_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw InvalidShape("unknown shape name: '" + std::string(name) + "'");
  }
  return entries_[it->second].second;
}

std::uint64_t arity(const BaseSignature& sig, const Shape& s) {
  std::uint64_t total = 0;
  for (const auto& name : s.names) total += sig.arity_of(name);
  return total;
}

Shape concat_shapes(const Shape& a, const Shape& b) {
  Shape out;
  out.names.reserve(a.names.size() + b.names.size());
  out.names.insert(out.names.end(), a.names.begin(), a.names.end());
  out.names.insert(out.names.end(), b.names.begin(), b.names.end());
  return out;
}

bool valid_under(const BaseSignature& sig, const Shape& s) {
  for (const auto& name : s.names) {
    if (!sig.contains(name)) return false;
  }
  return true;
}

namespace {

std::string_view trim(std::string_view sv) {
  while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.front()))) sv.remove_prefix(1);
  while (!sv.empty() && std::isspace(static_cast<unsigned char>(sv.back()))) sv.remove_suffix(1);
  return sv;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) fields.push_back(line.substr(start, i - start));
  }
  return fields;
}

}  // namespace

BaseSignature parse_signature(std::string_view text) {
  BaseSignature sig;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = (nl == std::string_view::npos) ? std::string_view{} : text.substr(nl + 1);

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;

    auto fields = split_fields(line);
    if (fields.size() != 3 || fields[0] != "shape") {
      throw ParseError("line " + std::to_string(line_no) +
                           ": expected 'shape <name> <arity>'",
                       line_no);
    }
    if (!is_valid_shape_name(fields[1])) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid shape name '" +
                           std::string(fields[1]) + "'",
                       line_no);
    }
    std::uint32_t ar = 0;
    const char* first = fields[2].data();
    const char* last = first + fields[2].size();
    auto [ptr, ec] = std::from_chars(first, last, ar);
    if (ec != std::errc{} || ptr != last) {
      throw ParseError("line " + std::to_string(line_no) + ": invalid arity '" +
                           std::string(fields[2]) + "'",
                       line_no);
    }
    try {
      sig.add_shape(std::string(fields[1]), ar);
    } catch (const Error& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
    }
  }
  return sig;
}

}  // namespace plump
