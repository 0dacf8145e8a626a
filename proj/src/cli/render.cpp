#include <algorithm>
#include <stdexcept>

#include "cgw/cli.hpp"
#include "cgw/error.hpp"

namespace cgw::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render_json(const Report& r, std::ostream& out) {
  Json doc;
  doc["header"] = r.header;
  doc["summary"] = r.summary;
  Json tables = Json::object();
  for (const auto& t : r.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      Json obj = Json::object();
      for (std::size_t c = 0; c < t.columns.size(); ++c) obj[t.columns[c]] = row.at(c);
      rows.push_back(std::move(obj));
    }
    tables[t.name] = std::move(rows);
  }
  doc["tables"] = std::move(tables);
  doc["warnings"] = r.warnings;
  out << doc.dump(2) << '\n';
}

void render_csv(const Report& r, std::ostream& out) {
  out << "section,key,value\n";
  for (const auto& [k, v] : r.header.items()) out << "header," << csv_escape(k) << ',' << csv_escape(cell(v)) << '\n';
  for (const auto& [k, v] : r.summary.items()) out << "summary," << csv_escape(k) << ',' << csv_escape(cell(v)) << '\n';
  for (const auto& w : r.warnings) out << "warning,," << csv_escape(w) << '\n';
  for (const auto& t : r.tables) {
    out << "\n# " << t.name << '\n';
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_escape(t.columns[c]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(cell(row[c]));
      out << '\n';
    }
  }
}

void render_text(const Report& r, std::ostream& out) {
  for (const auto& [k, v] : r.header.items()) out << k << ": " << cell(v) << '\n';
  out << '\n';
  for (const auto& [k, v] : r.summary.items()) out << k << ": " << cell(v) << '\n';
  for (const auto& w : r.warnings) out << "warning: " << w << '\n';
  for (const auto& t : r.tables) {
    out << '\n' << t.name << '\n';
    std::vector<std::size_t> width(t.columns.size());
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows)
      for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], cell(row[c]).size());
    auto line = [&](auto get) {
      for (std::size_t c = 0; c < t.columns.size(); ++c) {
        const std::string s = get(c);
        out << s << std::string(c + 1 < t.columns.size() ? width[c] - s.size() + 2 : 0, ' ');
      }
      out << '\n';
    };
    line([&](std::size_t c) { return t.columns[c]; });
    for (const auto& row : t.rows) line([&](std::size_t c) { return cell(row[c]); });
  }
}

}  // namespace

void render(const Report& report, const std::string& format, std::ostream& out) {
  if (format == "json")
    render_json(report, out);
  else if (format == "csv")
    render_csv(report, out);
  else if (format == "text")
    render_text(report, out);
  else
    throw UnsupportedError("unknown output format '" + format + "'");
}

}  // namespace cgw::cli
