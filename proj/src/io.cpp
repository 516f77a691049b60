#include "lgeom/io.hpp"

#include <cstdio>
#include <fstream>

namespace lgeom::io {

std::string format_real(double x) {
  if (x == 0.0) x = 0.0;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace {

void append_vec(std::string& out, const LVec3& p) {
  out += format_real(p.x1);
  out += ',';
  out += format_real(p.x2);
  out += ',';
  out += format_real(p.x3);
}

}  // namespace

std::string curve_csv(std::span<const double> v, std::span<const LVec3> points) {
  if (v.size() != points.size()) throw std::invalid_argument("curve_csv: size mismatch");
  std::string out = "v,x1,x2,x3\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += format_real(v[i]);
    out += ',';
    append_vec(out, points[i]);
    out += '\n';
  }
  return out;
}

std::string evolute_csv(std::span<const EvoluteSample> samples) {
  std::string out = "v,x1,x2,x3,kg\n";
  for (const auto& s : samples) {
    out += format_real(s.v);
    out += ',';
    append_vec(out, s.point);
    out += ',';
    out += format_real(s.kg);
    out += '\n';
  }
  return out;
}

std::string surface_obj(const SurfacePatch& patch) {
  std::string out = "# timelike constant slope surface, " + std::to_string(patch.nu) + " x " +
                    std::to_string(patch.nv) + " vertices\n";
  for (const auto& p : patch.vertices) {
    out += "v ";
    out += format_real(p.x1);
    out += ' ';
    out += format_real(p.x2);
    out += ' ';
    out += format_real(p.x3);
    out += '\n';
  }
  auto idx = [&](std::size_t i, std::size_t j) { return std::to_string(i * patch.nv + j + 1); };
  for (std::size_t i = 0; i + 1 < patch.nu; ++i) {
    for (std::size_t j = 0; j + 1 < patch.nv; ++j) {
      out += "f " + idx(i, j) + ' ' + idx(i, j + 1) + ' ' + idx(i + 1, j + 1) + ' ' +
             idx(i + 1, j) + '\n';
    }
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw IoError("cannot open '" + path + "' for writing");
  os.write(content.data(), static_cast<std::streamsize>(content.size()));
  os.close();
  if (!os) throw IoError("failed writing '" + path + "'");
}

}  // namespace lgeom::io
