#pragma once

#include "posethom/chain_complex.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace posethom {

struct DegreeRow {
  std::size_t degree = 0;
  std::size_t rank = 0;  // rank of the (co)chain group
  std::size_t betti = 0;
  std::vector<std::string> torsion;

  friend bool operator==(const DegreeRow&, const DegreeRow&) = default;
};

struct HomologyTable {
  std::string name;  // e.g. "H_*(order complex)"
  std::vector<DegreeRow> rows;

  friend bool operator==(const HomologyTable&, const HomologyTable&) = default;
};

struct ReportError {
  std::string code;
  std::string cause;  // empty when the error wraps nothing
  std::string message;

  friend bool operator==(const ReportError&, const ReportError&) = default;
};

/// Result of one command. Maps keep keys sorted so both emissions are stable.
struct Report {
  std::string command;
  std::string input_digest;  // "crc32:xxxxxxxx"
  std::vector<HomologyTable> tables;
  std::map<std::string, bool> flags;
  std::map<std::string, std::string> values;
  std::map<std::string, std::vector<std::string>> listings;
  std::vector<std::string> notes;
  std::optional<ReportError> error;

  friend bool operator==(const Report&, const Report&) = default;
};

/// Table rows from a complex and its homology (ranks from the complex).
HomologyTable make_table(std::string name, const ChainComplex& c, const HomologySummary& h);

enum class ReportFormat { Text, Machine };

std::string emit_report(const Report& r, ReportFormat format);
/// Inverse of the machine emission. Throws ParseError.
Report parse_machine_report(const std::string& text);

}  // namespace posethom
