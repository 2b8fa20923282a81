#include "twinbeam/serialize.hpp"

#include "twinbeam/error.hpp"

#include <charconv>
#include <cmath>

namespace twinbeam {

json to_json(const FockOperator& op) {
  json rows = json::array();
  for (int n = 0; n < op.dim(); ++n) {
    json row = json::array();
    for (int m = 0; m < op.dim(); ++m) row.push_back({op(n, m).real(), op(n, m).imag()});
    rows.push_back(std::move(row));
  }
  return {{"dim", op.dim()}, {"rows", std::move(rows)}};
}

FockOperator fock_from_json(const json& j) {
  const int dim = j.at("dim").get<int>();
  const json& rows = j.at("rows");
  if (dim < 1 || rows.size() != static_cast<size_t>(dim)) {
    throw PreconditionError("operator JSON: row count does not match dim");
  }
  Matrix m(dim, dim);
  for (int n = 0; n < dim; ++n) {
    if (rows[n].size() != static_cast<size_t>(dim)) {
      throw PreconditionError("operator JSON: ragged row " + std::to_string(n));
    }
    for (int k = 0; k < dim; ++k) m(n, k) = cplx(rows[n][k].at(0).get<double>(), rows[n][k].at(1).get<double>());
  }
  return FockOperator(std::move(m));
}

std::string to_string(PovmKind kind) {
  switch (kind) {
    case PovmKind::NoClick: return "no_click";
    case PovmKind::Click: return "click";
    case PovmKind::Homodyne: return "homodyne";
    case PovmKind::BinnedHomodyne: return "binned_homodyne";
    case PovmKind::Heterodyne: return "heterodyne";
  }
  return "unknown";
}

json to_json(const Outcome& outcome) {
  if (const auto* i = std::get_if<int>(&outcome)) return *i;
  if (const auto* x = std::get_if<double>(&outcome)) return *x;
  const cplx a = std::get<cplx>(outcome);
  return {a.real(), a.imag()};
}

json to_json(const PovmElement& element) {
  json j;
  j["kind"] = to_string(element.kind);
  j["outcome"] = to_json(element.outcome);
  j["eta"] = element.meta.eta;
  if (element.kind == PovmKind::BinnedHomodyne) j["delta"] = element.meta.delta;
  j["operator"] = to_json(element.op);
  return j;
}

json to_json(const ConditionalResult& result) {
  json j;
  j["probability"] = result.probability;
  j["state"] = to_json(result.state);
  if ((result.post_state.matrix() - result.state.matrix()).cwiseAbs().maxCoeff() != 0.0) {
    j["post_state"] = to_json(result.post_state);
  }
  return j;
}

Provenance base_provenance(int dim, double tail_tolerance) {
  return {{"twinbeam", kVersion},
          {"truncation_dim", std::to_string(dim)},
          {"tail_tolerance", format_number(tail_tolerance)}};
}

void Table::add(std::vector<double> row) {
  if (row.size() != columns.size()) throw PreconditionError("table row has the wrong width");
  rows.push_back(std::move(row));
}

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const Table& table, const Provenance& provenance) {
  for (const auto& [key, value] : provenance) os << "# " << key << "=" << value << "\n";
  for (size_t c = 0; c < table.columns.size(); ++c) os << (c ? "," : "") << table.columns[c];
  os << "\n";
  for (const auto& row : table.rows) {
    for (size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << format_number(row[c]);
    os << "\n";
  }
}

Table matrix_table(const FockOperator& op, int max_n) {
  if (max_n < 0 || max_n >= op.dim()) throw PreconditionError("max-n must lie in [0, dim)");
  Table t{{"n", "m", "re", "im"}, {}};
  for (int n = 0; n <= max_n; ++n) {
    for (int m = 0; m <= max_n; ++m) t.add({double(n), double(m), op(n, m).real(), op(n, m).imag()});
  }
  return t;
}

}  // namespace twinbeam
