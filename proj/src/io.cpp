#include "seqmon/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "seqmon/errors.hpp"

namespace seqmon {
namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& token, const std::string& path, std::size_t line) {
  std::size_t consumed = 0;
  double value;
  try {
    value = std::stod(token, &consumed);
  } catch (const std::exception&) {
    throw ParseError(path + ":" + std::to_string(line) + ": cannot parse '" + token + "'");
  }
  if (consumed != token.size()) {
    throw ParseError(path + ":" + std::to_string(line) + ": trailing junk in '" + token + "'");
  }
  if (!std::isfinite(value)) {
    throw ParseError(path + ":" + std::to_string(line) + ": non-finite value '" + token + "'");
  }
  return value;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::vector<double> read_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open series file '" + path + "'");
  std::vector<double> out;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string token = trim(line);
    if (token.empty()) continue;
    if (first) {
      first = false;
      std::string lowered = token;
      std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                     [](unsigned char c) { return std::tolower(c); });
      if (lowered == "value") continue;
    }
    out.push_back(parse_double(token, path, lineno));
  }
  if (out.empty()) throw EmptyFile("series file '" + path + "' holds no observations");
  return out;
}

void write_series(const std::string& path, std::span<const double> series) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write series file '" + path + "'");
  for (double y : series) out << fmt17(y) << '\n';
  if (!out) throw IoError("failed writing series file '" + path + "'");
}

CalibrationKey CalibrationKey::from_spec(const LimitFunctionalSpec& spec, double alpha,
                                         double kappa, std::size_t replications,
                                         std::size_t grid, std::uint64_t seed) {
  CalibrationKey key;
  key.kind = spec.cache_kind();
  key.zeta = spec.zeta;
  key.kernel = spec.kernel.name();
  key.alpha = alpha;
  key.kappa = kappa;
  key.replications = replications;
  key.grid = grid;
  key.seed = seed;
  return key;
}

CalibrationCache::CalibrationCache(std::string path) : path_(std::move(path)) { load(); }

void CalibrationCache::load() {
  if (path_.empty() || !std::filesystem::exists(path_)) return;
  std::ifstream in(path_);
  if (!in) throw IoError("cannot open calibration cache '" + path_ + "'");
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string row = trim(line);
    if (row.empty()) continue;
    if (lineno == 1 && row.rfind("kind,", 0) == 0) continue;  // header
    std::stringstream ss(row);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 10) {
      throw IoError("calibration cache '" + path_ + "' row " + std::to_string(lineno) +
                    ": expected 10 fields, got " + std::to_string(fields.size()));
    }
    try {
      Row r;
      r.key.kind = fields[0];
      r.key.zeta = std::stod(fields[1]);
      r.key.kernel = fields[2];
      r.key.alpha = std::stod(fields[3]);
      r.key.kappa = std::stod(fields[4]);
      r.key.replications = std::stoull(fields[5]);
      r.key.grid = std::stoull(fields[6]);
      r.key.seed = std::stoull(fields[7]);
      r.control_limit = std::stod(fields[8]);
      r.se = std::stod(fields[9]);
      if (!std::isfinite(r.control_limit) || !(r.control_limit > 0.0)) {
        throw IoError("control limit must be finite and positive");
      }
      if (lookup(r.key)) {
        throw IoError("duplicate key");
      }
      rows_.push_back(std::move(r));
    } catch (const IoError& e) {
      throw IoError("calibration cache '" + path_ + "' row " + std::to_string(lineno) + ": " +
                    e.what());
    } catch (const std::exception& e) {
      throw IoError("calibration cache '" + path_ + "' row " + std::to_string(lineno) +
                    ": bad field (" + e.what() + ")");
    }
  }
}

std::optional<CalibrationResult> CalibrationCache::lookup(const CalibrationKey& key) const {
  for (const auto& row : rows_) {
    if (row.key == key) {
      CalibrationResult result;
      result.control_limit = row.control_limit;
      result.quantile_se = row.se;
      result.alpha = key.alpha;
      result.kappa = key.kappa;
      result.replications = key.replications;
      result.grid = key.grid;
      result.seed = key.seed;
      return result;
    }
  }
  return std::nullopt;
}

void CalibrationCache::insert(const CalibrationKey& key, const CalibrationResult& result) {
  if (lookup(key)) return;  // identical key -> identical value by reproducibility
  Row row{key, result.control_limit, result.quantile_se};
  rows_.push_back(row);
  if (!path_.empty()) append_to_disk(row);
}

void CalibrationCache::append_to_disk(const Row& row) const {
  const bool fresh = !std::filesystem::exists(path_) || std::filesystem::file_size(path_) == 0;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot write calibration cache '" + path_ + "'");
  if (fresh) out << "kind,zeta,kernel,alpha,kappa,R,G,seed,c,se\n";
  out << row.key.kind << ',' << fmt17(row.key.zeta) << ',' << row.key.kernel << ','
      << fmt17(row.key.alpha) << ',' << fmt17(row.key.kappa) << ',' << row.key.replications
      << ',' << row.key.grid << ',' << row.key.seed << ',' << fmt17(row.control_limit) << ','
      << fmt17(row.se) << '\n';
  if (!out) throw IoError("failed writing calibration cache '" + path_ + "'");
}

CalibrationResult load_or_calibrate(CalibrationCache& cache, const LimitFunctionalSpec& spec,
                                    double alpha, double kappa, std::size_t replications,
                                    std::size_t grid, std::uint64_t seed, unsigned threads) {
  const auto key = CalibrationKey::from_spec(spec, alpha, kappa, replications, grid, seed);
  if (auto hit = cache.lookup(key)) return *hit;
  const auto result = calibrate(spec, default_direction(spec.kind), alpha, kappa, replications,
                                grid, seed, threads);
  cache.insert(key, result);
  return result;
}

}  // namespace seqmon
