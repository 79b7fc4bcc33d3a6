#include "hermeis/serialize.hpp"

#include <sstream>

namespace hermeis::io {

json to_json(const hermitian::HermitianFourierTable& table) {
  json j;
  j["weight"] = table.weight();
  j["delta"] = table.field().delta_value();
  j["trace_bound"] = table.trace_bound();
  json entries = json::array();
  for (const auto& [t, v] : table.entries()) {
    json e;
    e["T"] = {t.n, t.m, t.p, t.q};
    e["value"] = to_fraction_string(v);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

json to_json(const siegel::SiegelFourierTable& table) {
  json j;
  j["weight"] = table.weight();
  j["trace_bound"] = table.trace_bound();
  json entries = json::array();
  for (const auto& [r, v] : table.entries()) {
    json e;
    e["R"] = {r.a, r.b, r.c};
    e["value"] = to_fraction_string(v);
    entries.push_back(std::move(e));
  }
  j["entries"] = std::move(entries);
  return j;
}

json to_json(const restriction::ScanReport& report) {
  json j;
  j["weight"] = report.weight;
  j["delta_min"] = report.min_abs_delta;
  j["delta_max"] = report.max_abs_delta;
  json rows = json::array();
  for (const auto& row : report.rows) {
    json r;
    r["delta"] = row.delta;
    r["witness"] = {row.witness.a, row.witness.b, row.witness.c};
    r["value"] = to_fraction_string(row.value);
    r["verdict"] = restriction::to_string(row.verdict);
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["summary"] = {{"fields", report.rows.size()},
                  {"nonzero", report.nonzero_count()},
                  {"zero", report.zero_count()}};
  return j;
}

json to_json(const shimura::CoefficientSequence& seq, Int t) {
  json j;
  j["k"] = seq.weight_tag;
  j["t"] = t;
  j["M"] = seq.length();
  json values = json::array();
  for (const Rational& v : seq.values) values.push_back(to_fraction_string(v));
  j["values"] = std::move(values);
  return j;
}

std::string to_csv(const hermitian::HermitianFourierTable& table) {
  std::ostringstream os;
  os << "n,m,p,q,value\n";
  for (const auto& [t, v] : table.entries())
    os << t.n << "," << t.m << "," << t.p << "," << t.q << ","
       << to_fraction_string(v) << "\n";
  return os.str();
}

std::string to_csv(const siegel::SiegelFourierTable& table) {
  std::ostringstream os;
  os << "a,b,c,value\n";
  for (const auto& [r, v] : table.entries())
    os << r.a << "," << r.b << "," << r.c << "," << to_fraction_string(v) << "\n";
  return os.str();
}

std::string to_csv(const restriction::ScanReport& report) {
  std::ostringstream os;
  os << "delta,witness_a,witness_b,witness_c,value,verdict\n";
  for (const auto& row : report.rows)
    os << row.delta << "," << row.witness.a << "," << row.witness.b << ","
       << row.witness.c << "," << to_fraction_string(row.value) << ","
       << restriction::to_string(row.verdict) << "\n";
  return os.str();
}

shimura::CoefficientSequence sequence_from_json(const json& j) {
  shimura::CoefficientSequence seq;
  seq.weight_tag = j.at("k").get<unsigned>();
  for (const auto& v : j.at("values"))
    seq.values.push_back(rational_from_string(v.get<std::string>()));
  if (j.contains("M") && j.at("M").get<Int>() != seq.length())
    throw std::invalid_argument("sequence: length field disagrees with values");
  return seq;
}

}  // namespace hermeis::io
