#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seqmon/rng.hpp"

namespace seqmon {

/// Innovation drawer; defaults to standard normal draws from the stream.
using InnovationFn = std::function<double(RngStream&)>;

/// AR(1) with MA(1) errors: Y_0 = 0, Y_n = phi Y_{n-1} + e_n - beta e_{n-1},
/// e_0 drawn fresh. Returns Y_1..Y_N.
std::vector<double> gen_arma11(double phi, double beta, std::size_t n, RngStream& rng,
                               const InnovationFn& innovation = {});

/// The change-point models come in two named flavours: the AR-coefficient
/// switch used in the simulation study and the partial-sum form used for the
/// limit theory.
enum class ChangeVariant { ar_switch, partial_sum };

/// Unit root before floor(N theta), stationary after.
/// ar_switch:  Y_n = phi_n Y_{n-1} + e_n with phi_n = 1 then phi_post.
/// partial_sum: Y_i = sum_{j<=i} u_j (u_0 included) before the change,
///              eta * u_i from the change on.
std::vector<double> gen_cp_i1_to_i0(double theta, double phi_post, double eta, std::size_t n,
                                    RngStream& rng, ChangeVariant variant,
                                    const InnovationFn& innovation = {});

/// Stationary before floor(N theta), unit root after.
/// ar_switch:  phi_n = phi_pre then 1.
/// partial_sum: Y_i = u_i before the change, Y_{i-1} + u_i from the change on.
std::vector<double> gen_cp_i0_to_i1(double theta, double phi_pre, std::size_t n,
                                    RngStream& rng, ChangeVariant variant,
                                    const InnovationFn& innovation = {});

/// Near-unit-root array: Y_n = (1 + a/N) Y_{n-1} + u_n started from 0, so
/// a = 0 recovers a pure random walk. a is restricted to [-N/2, N/2] as a
/// sanity range.
std::vector<double> gen_local_to_unity(double a, std::size_t n, RngStream& rng,
                                       const InnovationFn& innovation = {});

/// Stationary noise plus a local deterministic trend:
/// Y_n = m0((n - floor(N theta))/N) / sqrt(N) + u_n. m0 must vanish on
/// negatives; the `truncated_linear_trend` helper builds the slope-a ramp
/// m0(x) = a x on [0,1], 0 elsewhere.
std::vector<double> gen_local_trend(const std::function<double(double)>& m0, double theta,
                                    std::size_t n, RngStream& rng,
                                    const InnovationFn& innovation = {});

std::function<double(double)> truncated_linear_trend(double slope);

/// Serializable description of a generator, the unit shared by the
/// experiment harness, the JSON config surface and the CLI.
struct DgpSpec {
  enum class Kind { arma11, cp_i1_to_i0, cp_i0_to_i1, local_to_unity, local_trend };
  Kind kind = Kind::arma11;
  std::size_t length = 250;  // N
  double phi = 0.0;          // arma11
  double beta = 0.0;         // arma11
  double theta = 0.5;        // change-point / trend onset fraction
  double phi_post = 0.5;     // cp_i1_to_i0, ar_switch
  double phi_pre = 0.6;      // cp_i0_to_i1, ar_switch
  double eta = 1.0;          // cp_i1_to_i0, partial_sum scale
  ChangeVariant variant = ChangeVariant::ar_switch;
  double a = 0.0;            // local_to_unity
  double slope = 1.0;        // local_trend ramp slope

  void validate() const;
  std::string describe() const;
  bool has_changepoint() const {
    return kind == Kind::cp_i1_to_i0 || kind == Kind::cp_i0_to_i1 || kind == Kind::local_trend;
  }
  std::size_t changepoint_index() const;  // floor(N theta)

  static DgpSpec::Kind kind_from_name(const std::string& name);
  static std::string kind_name(Kind kind);
};

/// Dispatches on the description. Bit-reproducible function of
/// (description, seed, stream).
std::vector<double> generate(const DgpSpec& spec, RngStream& rng,
                             const InnovationFn& innovation = {});

}  // namespace seqmon
