#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qtree/errors.hpp"
#include "qtree/graph.hpp"

namespace qtree {

// Layer count used throughout: L = 4(d+1).
constexpr std::uint32_t default_layer_count(std::uint32_t d) {
  return 4 * (d + 1);
}

// Monotone discretization of [0,1] into L equal-measure segments
// I_l = [(l-1)/L, l/L) for l < L, I_L = [(L-1)/L, 1]. Layers are 1..L.
class Quantizer {
 public:
  explicit Quantizer(std::uint32_t layer_count);

  std::uint32_t layer_count() const { return layers_; }

  std::uint32_t quantize(double x) const;

 private:
  std::uint32_t layers_;
};

enum class RankMode { FullyIndependent, KWise, Explicit };

// Rank mode as it appears in CLI flags and config files: "full" or "kwise:<k>".
struct RankModeSpec {
  RankMode mode = RankMode::FullyIndependent;
  std::uint32_t k = 0;  // only for KWise

  bool operator==(const RankModeSpec&) const = default;
  std::string to_string() const;
  static RankModeSpec parse(const std::string& text);
};

// Deterministic seeded map from vertex id to a rank in [0,1), computable on
// demand per vertex. Ranks are 64-bit fixed-precision values; rank() scales
// them to a double. No global precomputation in either seeded mode.
class RankOracle {
 public:
  static RankOracle fully_independent(std::uint64_t seed, VertexId n);

  // Degree-(k-1) polynomial over a prime field p > max(n, 2^31); any k
  // distinct vertices get jointly uniform values at the field's resolution.
  static RankOracle k_wise(std::uint64_t seed, VertexId n, std::uint32_t k);

  static RankOracle make(const RankModeSpec& spec, std::uint64_t seed, VertexId n);

  // Fixed rank table, for prescribed-rank tests and tools.
  static RankOracle with_ranks(std::vector<double> ranks);

  VertexId vertex_count() const { return n_; }
  RankMode mode() const { return mode_; }
  std::uint64_t seed() const { return seed_; }
  std::uint32_t k_param() const { return k_; }
  std::uint64_t field_prime() const { return prime_; }

  // 64-bit fixed-precision rank; the value is bits / 2^64 in [0,1).
  std::uint64_t rank_bits(VertexId v) const;

  double rank(VertexId v) const {
    return static_cast<double>(rank_bits(v)) * 0x1.0p-64;
  }

  std::uint32_t layer(const Quantizer& q, VertexId v) const {
    return q.quantize(rank(v));
  }

 private:
  RankOracle() = default;

  RankMode mode_ = RankMode::FullyIndependent;
  std::uint64_t seed_ = 0;
  VertexId n_ = 0;
  std::uint32_t k_ = 0;
  std::uint64_t prime_ = 0;
  std::vector<std::uint64_t> coeffs_;  // KWise polynomial coefficients
  std::vector<std::uint64_t> table_;   // Explicit mode
};

// Deterministic 64-bit primality (Miller-Rabin with fixed witness set).
bool is_prime_u64(std::uint64_t x);
std::uint64_t next_prime_above(std::uint64_t x);

}  // namespace qtree
