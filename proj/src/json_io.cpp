#include "arinf/json_io.hpp"

#include <fstream>
#include <stdexcept>

namespace arinf {

namespace {

std::vector<int> int_list(const Json& j, const std::string& field) {
  if (!j.is_array()) throw std::invalid_argument("field '" + field + "' must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("field '" + field + "' must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

HodgeDatum datum_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("variety spec must be a JSON object");
  HodgeDatum d;
  d.name = j.value("name", std::string("unnamed"));
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw std::invalid_argument("field 'dim' must be an integer");
  d.n = j.at("dim").get<int>();
  if (d.n < 0) throw std::invalid_argument("field 'dim' must be non-negative");

  const std::string field = j.value("field", std::string("C"));
  if (field == "C")
    d.field = Field::C;
  else if (field == "R")
    d.field = Field::R;
  else
    throw std::invalid_argument("field 'field' must be \"C\" or \"R\"");

  if (!j.contains("hodge") || !j.at("hodge").is_array())
    throw std::invalid_argument("field 'hodge' must be an array of rows");
  const auto& rows = j.at("hodge");
  if (static_cast<int>(rows.size()) != d.n + 1)
    throw std::invalid_argument("field 'hodge' must have dim+1 rows");
  d.h.assign(static_cast<std::size_t>(d.n + 1), std::vector<int>(static_cast<std::size_t>(d.n + 1), 0));
  for (int p = 0; p <= d.n; ++p) {
    const auto row = int_list(rows[static_cast<std::size_t>(p)], "hodge");
    if (static_cast<int>(row.size()) != d.n + 1)
      throw std::invalid_argument("field 'hodge' rows must have dim+1 entries");
    d.h[static_cast<std::size_t>(p)] = row;
  }

  if (j.contains("h_plus")) d.h_plus = int_list(j.at("h_plus"), "h_plus");
  if (j.contains("h_minus")) d.h_minus = int_list(j.at("h_minus"), "h_minus");

  const auto problems = validate(d);
  if (!problems.empty()) {
    std::string msg = "invalid variety spec:";
    for (const auto& p : problems) msg += " " + p + ";";
    throw std::invalid_argument(msg);
  }
  return d;
}

HodgeDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("cannot parse spec file " + path + ": " + e.what());
  }
  return datum_from_json(j);
}

HodgeDatum resolve_datum(const std::string& spec) {
  for (const auto& name : builtin_names())
    if (name == spec) return builtin_datum(spec);
  return load_datum(spec);
}

Json datum_to_json(const HodgeDatum& d) {
  Json j;
  j["name"] = d.name;
  j["dim"] = d.n;
  j["field"] = d.field == Field::C ? "C" : "R";
  j["hodge"] = d.h;
  if (d.h_plus) j["h_plus"] = *d.h_plus;
  if (d.h_minus) j["h_minus"] = *d.h_minus;
  return j;
}

Json report_envelope(const std::string& command, const Window& window) {
  Json j;
  j["schema"] = 1;
  j["command"] = command;
  j["window"] = {{"rmin", window.rmin}, {"rmax", window.rmax}, {"kmax", window.kmax}};
  return j;
}

}  // namespace arinf
