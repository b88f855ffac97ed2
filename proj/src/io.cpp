#include "recten/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "recten/error.hpp"

namespace recten {

using nlohmann::json;

namespace {

int require_positive_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ValidationError(fmt::format("tensor file is missing \"{}\"", key));
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 1)
    throw ValidationError(fmt::format("\"{}\" must be a positive integer", key));
  return v.get<int>();
}

MultiIndex read_index(const json& record, const char* key, std::size_t expected, int bound, std::size_t pos) {
  if (!record.contains(key) || !record.at(key).is_array())
    throw ValidationError(fmt::format("entries[{}]: \"{}\" must be an array of integers", pos, key));
  const json& arr = record.at(key);
  if (arr.size() != expected)
    throw ValidationError(
        fmt::format("entries[{}]: \"{}\" has {} components, expected {}", pos, key, arr.size(), expected));
  std::vector<int> comps;
  for (const json& c : arr) {
    if (!c.is_number_integer()) throw ValidationError(fmt::format("entries[{}]: \"{}\" holds a non-integer", pos, key));
    const long long v = c.get<long long>();
    if (v < 1 || v > bound)
      throw ValidationError(
          fmt::format("entries[{}]: \"{}\" = {} has component {} outside 1..{}", pos, key, arr.dump(), v, bound));
    comps.push_back(static_cast<int>(v));
  }
  return MultiIndex(std::move(comps));
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

RectangularTensor parse_tensor(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("malformed tensor JSON at byte {}: {}", e.byte, e.what()));
  }
  if (!doc.is_object()) throw ValidationError("tensor file must be a JSON object");

  Shape shape{require_positive_int(doc, "p"), require_positive_int(doc, "q"), require_positive_int(doc, "m"),
              require_positive_int(doc, "n")};
  if (shape.m < 2 || shape.n < 2) throw ValidationError("\"m\" and \"n\" must be at least 2");

  const json entries = doc.value("entries", json::array());
  if (!entries.is_array()) throw ValidationError("\"entries\" must be an array");

  std::vector<Entry> parsed;
  parsed.reserve(entries.size());
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json& rec = entries[k];
    if (!rec.is_object()) throw ValidationError(fmt::format("entries[{}] must be an object", k));
    Entry e;
    e.rows = read_index(rec, "i", static_cast<std::size_t>(shape.p), shape.m, k);
    e.cols = read_index(rec, "j", static_cast<std::size_t>(shape.q), shape.n, k);
    if (!rec.contains("v") || !rec.at("v").is_number())
      throw ValidationError(fmt::format("entries[{}]: \"v\" must be a number", k));
    e.value = rec.at("v").get<double>();
    if (!std::isfinite(e.value)) throw ValidationError(fmt::format("entries[{}]: \"v\" is not finite", k));
    parsed.push_back(std::move(e));
  }

  try {
    return RectangularTensor(shape, std::move(parsed));
  } catch (const Error& e) {
    throw ValidationError(e.what());
  }
}

std::string serialize_tensor(const RectangularTensor& a) {
  json entries = json::array();
  for (const Entry& e : a.entries())
    entries.push_back({{"i", e.rows.components()}, {"j", e.cols.components()}, {"v", e.value}});
  json doc = {{"p", a.p()}, {"q", a.q()}, {"m", a.m()}, {"n", a.n()}, {"entries", std::move(entries)}};
  return doc.dump(2) + "\n";
}

std::vector<double> parse_candidates(std::string_view text) {
  std::vector<double> values;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const std::string token = trim(line);
    if (!token.empty()) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(v))
        throw ParseError(fmt::format("line {}: \"{}\" is not a finite real", line_no, token));
      values.push_back(v);
    }
    if (end == text.size()) break;
    pos = end + 1;
  }
  return values;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(fmt::format("cannot open {}", path.string()));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RectangularTensor load_tensor(const std::filesystem::path& path) { return parse_tensor(read_file(path)); }

IndexSubset parse_subset(std::string_view text, int n) {
  std::vector<int> members;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    const std::string token = trim(text.substr(pos, end - pos));
    int v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
      throw SubsetError(fmt::format("cannot parse subset \"{}\"", text));
    members.push_back(v);
    if (end == text.size()) break;
    pos = end + 1;
  }
  return IndexSubset(std::move(members), n);
}

}  // namespace recten
