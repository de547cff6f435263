#include "multijoint/io.h"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <sstream>

#include "json_codec.h"
#include "multijoint/errors.h"

namespace multijoint {

using internal::Json;

std::string SerializeLineFamilies(const LineFamilies& f) {
  return internal::LineFamiliesToJson(f).dump();
}

LineFamilies ParseLineFamilies(std::string_view text) {
  return internal::LineFamiliesFromJson(internal::ParseJson(text, "line families"));
}

std::string SerializeCurveFamilies(const CurveFamilies& f) {
  return internal::CurveFamiliesToJson(f).dump();
}

CurveFamilies ParseCurveFamilies(std::string_view text, int default_bound) {
  return internal::CurveFamiliesFromJson(internal::ParseJson(text, "curve families"),
                                         default_bound);
}

std::string SerializePartition(const Partition& p) { return internal::PartitionToJson(p).dump(); }

Partition ParsePartition(std::string_view text) {
  return internal::PartitionFromJson(internal::ParseJson(text, "partition"));
}

std::string SerializePoints(std::vector<Point3> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Json out = Json::array();
  for (const auto& p : points) out.push_back(internal::PointToJson(p));
  return out.dump();
}

std::string SerializeAlgebraicPoints(std::vector<AlgebraicPoint3> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  Json out = Json::array();
  for (const auto& p : points) out.push_back(internal::AlgebraicPointToJson(p));
  return out.dump();
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading: " + std::strerror(errno));
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buf.str();
}

void WriteTextFile(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing: " + std::strerror(errno));
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.flush();
  if (!out) throw IoError("error writing '" + path + "'");
}

}  // namespace multijoint
