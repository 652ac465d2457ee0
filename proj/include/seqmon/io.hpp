#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "seqmon/calibrate.hpp"

namespace seqmon {

/// Reads a series file: one decimal observation per line, optional leading
/// header line "value". Non-finite entries are rejected with the line number.
std::vector<double> read_series(const std::string& path);

/// Writes one observation per line with 17 significant digits (lossless
/// double round trip).
void write_series(const std::string& path, std::span<const double> series);

/// Identity of one calibration run; every field participates in the lookup.
struct CalibrationKey {
  std::string kind;    // canonical functional identity, e.g. "u1" or "uz(a=-15)"
  double zeta = 0.0;
  std::string kernel;  // kernel shape name
  double alpha = 0.0;
  double kappa = 0.0;
  std::size_t replications = 0;
  std::size_t grid = 0;
  std::uint64_t seed = 0;

  bool operator==(const CalibrationKey&) const = default;
  static CalibrationKey from_spec(const LimitFunctionalSpec& spec, double alpha, double kappa,
                                  std::size_t replications, std::size_t grid,
                                  std::uint64_t seed);
};

/// CSV-backed store of calibrated control limits. Header:
/// kind,zeta,kernel,alpha,kappa,R,G,seed,c,se. Values round-trip losslessly
/// (17 significant digits). Appends write through to disk.
class CalibrationCache {
 public:
  CalibrationCache() = default;  // in-memory only
  explicit CalibrationCache(std::string path);  // loads if the file exists

  std::optional<CalibrationResult> lookup(const CalibrationKey& key) const;
  void insert(const CalibrationKey& key, const CalibrationResult& result);

  std::size_t size() const { return rows_.size(); }
  const std::string& path() const { return path_; }

 private:
  struct Row {
    CalibrationKey key;
    double control_limit;
    double se;
  };
  void load();
  void append_to_disk(const Row& row) const;

  std::string path_;  // empty -> in-memory only
  std::vector<Row> rows_;
};

/// Returns the cached control limit for the key derived from the arguments,
/// or runs the calibration, persists it and returns it. The monitoring
/// direction is the natural one for the functional kind.
CalibrationResult load_or_calibrate(CalibrationCache& cache, const LimitFunctionalSpec& spec,
                                    double alpha, double kappa, std::size_t replications,
                                    std::size_t grid, std::uint64_t seed, unsigned threads = 0);

}  // namespace seqmon
