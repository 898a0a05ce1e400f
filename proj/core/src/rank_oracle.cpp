#include "qtree/rank_oracle.hpp"

#include <cmath>

#include "qtree/prng.hpp"

namespace qtree {

Quantizer::Quantizer(std::uint32_t layer_count) : layers_(layer_count) {
  if (layers_ < 1) throw ParamError("quantizer needs at least one layer");
}

std::uint32_t Quantizer::quantize(double x) const {
  if (!(x >= 0.0 && x <= 1.0))
    throw InputError("quantize input " + std::to_string(x) + " outside [0, 1]");
  const double l = layers_;
  auto layer = static_cast<std::uint32_t>(x * l) + 1;
  if (layer > layers_) layer = layers_;
  // Fix up float rounding so the segment convention holds exactly.
  while (layer > 1 && x < (layer - 1) / l) --layer;
  while (layer < layers_ && x >= layer / l) ++layer;
  return layer;
}

std::string RankModeSpec::to_string() const {
  switch (mode) {
    case RankMode::FullyIndependent: return "full";
    case RankMode::KWise: return "kwise:" + std::to_string(k);
    case RankMode::Explicit: return "explicit";
  }
  return "unknown";
}

RankModeSpec RankModeSpec::parse(const std::string& text) {
  if (text == "full") return {RankMode::FullyIndependent, 0};
  if (text.rfind("kwise:", 0) == 0) {
    const std::string arg = text.substr(6);
    std::uint64_t k = 0;
    try {
      std::size_t pos = 0;
      k = std::stoull(arg, &pos);
      if (pos != arg.size()) throw std::invalid_argument(arg);
    } catch (const std::exception&) {
      throw ParamError("bad k in rank mode '" + text + "'");
    }
    if (k < 1 || k > 64) throw ParamError("kwise k must be in [1, 64]");
    return {RankMode::KWise, static_cast<std::uint32_t>(k)};
  }
  throw ParamError("unknown rank mode '" + text + "' (expected full or kwise:<k>)");
}

// --- primality --------------------------------------------------------------

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    if (x % p == 0) return x == p;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit integers.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL,
                          23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime_above(std::uint64_t x) {
  std::uint64_t c = x + 1;
  if (c <= 2) return 2;
  if (c % 2 == 0) ++c;
  while (!is_prime_u64(c)) c += 2;
  return c;
}

// --- oracle -----------------------------------------------------------------

RankOracle RankOracle::fully_independent(std::uint64_t seed, VertexId n) {
  RankOracle o;
  o.mode_ = RankMode::FullyIndependent;
  o.seed_ = seed;
  o.n_ = n;
  return o;
}

RankOracle RankOracle::k_wise(std::uint64_t seed, VertexId n, std::uint32_t k) {
  if (k < 1) throw ParamError("k-wise independence needs k >= 1");
  RankOracle o;
  o.mode_ = RankMode::KWise;
  o.seed_ = seed;
  o.n_ = n;
  o.k_ = k;
  o.prime_ = next_prime_above(std::max<std::uint64_t>(n, 1ULL << 31));
  o.coeffs_.resize(k);
  // Counter-mode derivation of the polynomial's coefficients. The modulo
  // bias is p / 2^64 < 2^-32, far below anything the experiments resolve.
  for (std::uint32_t i = 0; i < k; ++i)
    o.coeffs_[i] = child_seed(seed, 0x6b776973ULL + i) % o.prime_;
  return o;
}

RankOracle RankOracle::make(const RankModeSpec& spec, std::uint64_t seed,
                            VertexId n) {
  switch (spec.mode) {
    case RankMode::FullyIndependent: return fully_independent(seed, n);
    case RankMode::KWise: return k_wise(seed, n, spec.k);
    case RankMode::Explicit:
      throw ParamError("explicit rank mode requires a rank table");
  }
  throw ParamError("invalid rank mode");
}

RankOracle RankOracle::with_ranks(std::vector<double> ranks) {
  RankOracle o;
  o.mode_ = RankMode::Explicit;
  o.n_ = static_cast<VertexId>(ranks.size());
  o.table_.reserve(ranks.size());
  for (double r : ranks) {
    if (!(r >= 0.0 && r <= 1.0))
      throw ParamError("explicit rank outside [0, 1]");
    long double scaled = static_cast<long double>(r) * 0x1.0p64L;
    std::uint64_t bits =
        scaled >= 0x1.0p64L ? ~std::uint64_t{0} : static_cast<std::uint64_t>(scaled);
    o.table_.push_back(bits);
  }
  return o;
}

std::uint64_t RankOracle::rank_bits(VertexId v) const {
  if (v >= n_)
    throw InputError("vertex id " + std::to_string(v) + " out of range [0, " +
                     std::to_string(n_) + ")");
  switch (mode_) {
    case RankMode::FullyIndependent:
      return mix64(seed_ ^ mix64(v + 0x243f6a8885a308d3ULL));
    case RankMode::KWise: {
      // Horner evaluation of the degree-(k-1) polynomial at point v.
      std::uint64_t acc = 0;
      for (std::uint32_t i = k_; i-- > 0;) {
        acc = (static_cast<unsigned __int128>(acc) * v + coeffs_[i]) % prime_;
      }
      // Scale the field value to 64-bit fixed precision; injective since
      // 2^64 / p > 1.
      return static_cast<std::uint64_t>(
          (static_cast<unsigned __int128>(acc) << 64) / prime_);
    }
    case RankMode::Explicit:
      return table_[v];
  }
  return 0;
}

}  // namespace qtree
