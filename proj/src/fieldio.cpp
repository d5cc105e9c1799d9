#include "berezin/fieldio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "berezin/errors.hpp"

namespace berezin::fieldio {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_atomic(const std::filesystem::path& path, std::string_view contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw Error("cannot open " + tmp.string() + " for writing");
    os.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!os) throw Error("write to " + tmp.string() + " failed");
  }
  std::filesystem::rename(tmp, path);
}

std::string field_to_json(const fieldgrid::Field& f) {
  f.validate();
  std::string out;
  out.reserve(f.values.size() * 48 + 128);
  out += "{\"version\":" + std::to_string(kFieldFormatVersion);
  out += ",\"n\":" + std::to_string(f.grid.n);
  out += ",\"points_per_axis\":" + std::to_string(f.grid.points_per_axis);
  out += ",\"half_width\":" + format_double(f.grid.half_width);
  out += ",\"values\":[";
  for (std::size_t p = 0; p < f.values.size(); ++p) {
    if (p) out += ',';
    out += '[' + format_double(f.values[p].real()) + ',' + format_double(f.values[p].imag()) + ']';
  }
  out += "]}\n";
  return out;
}

namespace {

const json& require(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("field file: missing key '") + key + "'");
  return obj.at(key);
}

template <class T>
T require_number(const json& obj, const char* key) {
  const json& v = require(obj, key);
  if (!v.is_number()) throw ParseError(std::string("field file: key '") + key + "' is not a number");
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw ParseError(std::string("field file: key '") + key + "' is not an integer");
  }
  return v.get<T>();
}

}  // namespace

fieldgrid::Field field_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("field file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("field file: top level is not an object");
  const int version = require_number<int>(doc, "version");
  if (version != kFieldFormatVersion) {
    throw ParseError("field file: key 'version' has unsupported value " + std::to_string(version));
  }
  fieldgrid::GridSpec grid{require_number<int>(doc, "n"), require_number<int>(doc, "points_per_axis"),
                           require_number<double>(doc, "half_width")};
  try {
    grid.validate();
  } catch (const Error& e) {
    throw ParseError(std::string("field file: grid keys invalid: ") + e.what());
  }
  const json& values = require(doc, "values");
  if (!values.is_array()) throw ParseError("field file: key 'values' is not an array");
  if (values.size() != grid.size()) {
    throw ParseError("field file: key 'values' has " + std::to_string(values.size()) + " entries, grid needs " +
                     std::to_string(grid.size()));
  }
  fieldgrid::Field f{grid, std::vector<fieldgrid::cplx>(grid.size())};
  for (std::size_t p = 0; p < values.size(); ++p) {
    const json& v = values[p];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
      throw ParseError("field file: key 'values' entry " + std::to_string(p) + " is not [re, im]");
    }
    f.values[p] = {v[0].get<double>(), v[1].get<double>()};
  }
  return f;
}

void save_field(const std::filesystem::path& path, const fieldgrid::Field& f) {
  write_atomic(path, field_to_json(f));
}

fieldgrid::Field load_field(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("cannot read " + path.string());
  std::ostringstream ss;
  ss << is.rdbuf();
  return field_from_json(ss.str());
}

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
    out += '\n';
  }
  return out;
}

std::string slice_csv(const fieldgrid::Field& f, int axis) {
  const auto& g = f.grid;
  if (axis < 0 || axis >= g.dims()) throw DomainError("slice_csv: axis out of range");
  const auto N = static_cast<std::size_t>(g.points_per_axis);
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < N; ++i) {
    std::size_t flat = 0;
    for (int a = 0; a < g.dims(); ++a) flat = flat * N + (a == axis ? i : N / 2);
    rows.push_back({g.coordinate(static_cast<int>(i)), f.values[flat].real(), f.values[flat].imag()});
  }
  return to_csv({"x", "re", "im"}, rows);
}

}  // namespace berezin::fieldio
