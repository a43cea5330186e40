#include "render.hpp"

#include <algorithm>
#include <sstream>

namespace gelfand::cli {

namespace {

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// First top-level array whose entries are objects.
const Json* primary_table(const Json& doc, std::string* name) {
  if (!doc.is_object()) return nullptr;
  for (const auto& [key, value] : doc.items())
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      if (name) *name = key;
      return &value;
    }
  return nullptr;
}

std::vector<std::string> columns(const Json& rows) {
  std::vector<std::string> cols;
  for (const auto& row : rows)
    for (const auto& [key, value] : row.items())
      if (std::find(cols.begin(), cols.end(), key) == cols.end()) cols.push_back(key);
  return cols;
}

std::string render_csv(const Json& doc) {
  std::ostringstream os;
  if (const Json* rows = primary_table(doc, nullptr)) {
    const auto cols = columns(*rows);
    for (std::size_t c = 0; c < cols.size(); ++c) os << (c ? "," : "") << csv_escape(cols[c]);
    os << "\n";
    for (const auto& row : *rows) {
      for (std::size_t c = 0; c < cols.size(); ++c) {
        if (c) os << ",";
        if (row.contains(cols[c])) os << csv_escape(cell(row[cols[c]]));
      }
      os << "\n";
    }
    return os.str();
  }
  os << "key,value\n";
  if (doc.is_object())
    for (const auto& [key, value] : doc.items()) os << csv_escape(key) << "," << csv_escape(cell(value)) << "\n";
  return os.str();
}

void render_table(std::ostringstream& os, const Json& rows) {
  const auto cols = columns(rows);
  std::vector<std::size_t> width(cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) width[c] = cols[c].size();
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : rows) {
    std::vector<std::string> line;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      line.push_back(row.contains(cols[c]) ? cell(row[cols[c]]) : "");
      width[c] = std::max(width[c], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    os << " ";
    for (std::size_t c = 0; c < line.size(); ++c) {
      os << " " << line[c];
      if (c + 1 < line.size()) os << std::string(width[c] - line[c].size(), ' ');
    }
    os << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

std::string render_pretty(const Json& doc) {
  std::ostringstream os;
  if (!doc.is_object()) return doc.dump(2) + "\n";
  for (const auto& [key, value] : doc.items()) {
    if (value.is_array() && !value.empty() && value.front().is_object()) {
      os << key << ":\n";
      render_table(os, value);
    } else {
      os << key << ": " << cell(value) << "\n";
    }
  }
  return os.str();
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "pretty") return Format::pretty;
  throw InvalidParameters("unknown format '" + name + "'");
}

std::string render(const Json& doc, Format format) {
  switch (format) {
    case Format::json: return doc.dump(2) + "\n";
    case Format::csv: return render_csv(doc);
    case Format::pretty: return render_pretty(doc);
  }
  return {};
}

}  // namespace gelfand::cli
