#include "posethom/report.hpp"

#include "posethom/error.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

namespace posethom {

using Json = nlohmann::ordered_json;

HomologyTable make_table(std::string name, const ChainComplex& c, const HomologySummary& h) {
  HomologyTable t{std::move(name), {}};
  for (std::size_t n = 0; n < h.degrees.size(); ++n) {
    DegreeRow row{n, n < c.ranks.size() ? c.ranks[n] : 0, h.degrees[n].betti, {}};
    for (const auto& q : h.degrees[n].torsion) row.torsion.push_back(q.str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

Json to_json(const Report& r) {
  Json j = Json::object();
  j["command"] = r.command;
  j["input_digest"] = r.input_digest;
  Json tables = Json::array();
  for (const auto& t : r.tables) {
    Json rows = Json::array();
    for (const auto& row : t.rows) {
      rows.push_back(Json{{"degree", row.degree}, {"rank", row.rank}, {"betti", row.betti}, {"torsion", row.torsion}});
    }
    tables.push_back(Json{{"name", t.name}, {"rows", rows}});
  }
  j["tables"] = tables;
  j["flags"] = Json::object();
  for (const auto& [k, v] : r.flags) j["flags"][k] = v;
  j["values"] = Json::object();
  for (const auto& [k, v] : r.values) j["values"][k] = v;
  j["listings"] = Json::object();
  for (const auto& [k, v] : r.listings) j["listings"][k] = v;
  j["notes"] = r.notes;
  if (r.error) {
    j["error"] = Json{{"code", r.error->code}, {"cause", r.error->cause}, {"message", r.error->message}};
  } else {
    j["error"] = nullptr;
  }
  return j;
}

std::string torsion_text(const std::vector<std::string>& torsion) {
  if (torsion.empty()) return "-";
  std::string out;
  for (const auto& q : torsion) out += (out.empty() ? "Z/" : " Z/") + q;
  return out;
}

}  // namespace

std::string emit_report(const Report& r, ReportFormat format) {
  if (format == ReportFormat::Machine) return to_json(r).dump(2) + "\n";

  std::ostringstream out;
  out << "command: " << r.command << "\n";
  out << "input:   " << r.input_digest << "\n";
  if (r.error) {
    out << "error:   " << r.error->code;
    if (!r.error->cause.empty()) out << " (" << r.error->cause << ")";
    out << ": " << r.error->message << "\n";
  }
  if (!r.flags.empty()) {
    out << "\nflags\n";
    for (const auto& [k, v] : r.flags) out << "  " << std::left << std::setw(28) << k << (v ? "true" : "false") << "\n";
  }
  if (!r.values.empty()) {
    out << "\nvalues\n";
    for (const auto& [k, v] : r.values) out << "  " << std::left << std::setw(28) << k << v << "\n";
  }
  for (const auto& t : r.tables) {
    out << "\n" << t.name << "\n";
    out << "  " << std::right << std::setw(6) << "degree" << std::setw(8) << "rank" << std::setw(8) << "betti"
        << "  torsion\n";
    for (const auto& row : t.rows) {
      out << "  " << std::setw(6) << row.degree << std::setw(8) << row.rank << std::setw(8) << row.betti << "  "
          << torsion_text(row.torsion) << "\n";
    }
  }
  for (const auto& [k, lines] : r.listings) {
    out << "\n" << k << "\n";
    for (const auto& line : lines) out << "  " << line << "\n";
  }
  if (!r.notes.empty()) {
    out << "\nnotes\n";
    for (const auto& n : r.notes) out << "  - " << n << "\n";
  }
  return out.str();
}

Report parse_machine_report(const std::string& text) {
  try {
    const Json j = Json::parse(text);
    Report r;
    r.command = j.at("command").get<std::string>();
    r.input_digest = j.at("input_digest").get<std::string>();
    for (const auto& t : j.at("tables")) {
      HomologyTable table{t.at("name").get<std::string>(), {}};
      for (const auto& row : t.at("rows")) {
        table.rows.push_back(DegreeRow{row.at("degree").get<std::size_t>(), row.at("rank").get<std::size_t>(),
                                       row.at("betti").get<std::size_t>(),
                                       row.at("torsion").get<std::vector<std::string>>()});
      }
      r.tables.push_back(std::move(table));
    }
    for (const auto& [k, v] : j.at("flags").items()) r.flags[k] = v.get<bool>();
    for (const auto& [k, v] : j.at("values").items()) r.values[k] = v.get<std::string>();
    for (const auto& [k, v] : j.at("listings").items()) r.listings[k] = v.get<std::vector<std::string>>();
    r.notes = j.at("notes").get<std::vector<std::string>>();
    if (!j.at("error").is_null()) {
      const auto& e = j.at("error");
      r.error = ReportError{e.at("code").get<std::string>(), e.at("cause").get<std::string>(),
                            e.at("message").get<std::string>()};
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("machine report: ") + e.what());
  }
}

}  // namespace posethom
