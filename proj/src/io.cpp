#include "fhcopula/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace fhc::io {

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void emit(std::ostringstream& out, const nlohmann::json& j, int depth) {
  const std::string pad(2 * (depth + 1), ' ');
  const std::string close_pad(2 * depth, ' ');
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      if (j.empty()) {
        out << "{}";
        return;
      }
      out << "{\n";
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out << ",\n";
        first = false;
        out << pad << nlohmann::json(key).dump() << ": ";
        emit(out, value, depth + 1);
      }
      out << '\n' << close_pad << '}';
      return;
    }
    case nlohmann::json::value_t::array: {
      if (j.empty()) {
        out << "[]";
        return;
      }
      out << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out << ",\n";
        out << pad;
        emit(out, j[i], depth + 1);
      }
      out << '\n' << close_pad << ']';
      return;
    }
    case nlohmann::json::value_t::number_float: {
      const double x = j.get<double>();
      out << (std::isfinite(x) ? format_double(x) : "null");
      return;
    }
    default:
      out << j.dump();
  }
}

}  // namespace

std::string dump_json(const nlohmann::json& j) {
  std::ostringstream out;
  emit(out, j, 0);
  out << '\n';
  return out.str();
}

void write_csv(std::ostream& out, const SampleBatch& batch) {
  out << "u,v\n";
  for (const SquarePoint& p : batch.pairs) {
    out << format_double(p.u()) << ',' << format_double(p.v()) << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<GaussianPair>& pairs) {
  out << "x,y\n";
  for (const GaussianPair& p : pairs) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << contents;
    if (!f.flush()) throw std::runtime_error("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace fhc::io
