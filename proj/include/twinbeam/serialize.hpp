#pragma once

// JSON and CSV export. CSV files start with '#'-prefixed provenance lines, then a row of
// column names; complex values occupy a re/im column pair.

#include "twinbeam/conditional.hpp"
#include "twinbeam/fock.hpp"
#include "twinbeam/povm.hpp"

#include <json.hpp>

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace twinbeam {

inline constexpr const char* kVersion = "0.1.0";

using json = nlohmann::ordered_json;

// {"dim": d, "rows": [[[re, im], ...], ...]}
json to_json(const FockOperator& op);
FockOperator fock_from_json(const json& j);

std::string to_string(PovmKind kind);
json to_json(const Outcome& outcome);
json to_json(const PovmElement& element);
json to_json(const ConditionalResult& result);

// Ordered key/value lines written ahead of the data.
using Provenance = std::map<std::string, std::string>;
Provenance base_provenance(int dim, double tail_tolerance);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void add(std::vector<double> row);
};

void write_csv(std::ostream& os, const Table& table, const Provenance& provenance);
// Rows (n, m, re, im) for n, m <= max_n.
Table matrix_table(const FockOperator& op, int max_n);

// Shortest round-trip representation, identical across runs.
std::string format_number(double v);

}  // namespace twinbeam
