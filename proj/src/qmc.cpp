#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include <boost/random/sobol.hpp>

#include "resmahler/mahler_numeric.hpp"

namespace resmahler {
namespace {

using Complex = std::complex<double>;

constexpr std::uint64_t kBlockSize = 4096;
constexpr std::uint64_t kMinSamples = 1024;
constexpr std::size_t kMaxVariables = 64;
constexpr double kZeroThreshold = 1e-300;
constexpr int kMaxNudges = 16;
// Relative size of floating-point error in a replicate mean.
constexpr double kRoundoffFloor = 1e-12;

using SobolEngine = boost::random::sobol_engine<std::uint32_t, 32>;

// Flattened polynomial with per-variable power tables.
class TorusIntegrand {
 public:
  explicit TorusIntegrand(const ComplexLaurent& p) : vars_(p.num_vars()) {
    lo_.assign(vars_, 0);
    hi_.assign(vars_, 0);
    for (const auto& [e, c] : p.terms()) {
      for (std::size_t j = 0; j < vars_; ++j) {
        lo_[j] = std::min(lo_[j], e[j]);
        hi_[j] = std::max(hi_[j], e[j]);
      }
    }
    offsets_.resize(vars_ + 1, 0);
    for (std::size_t j = 0; j < vars_; ++j)
      offsets_[j + 1] = offsets_[j] + static_cast<std::size_t>(hi_[j] - lo_[j] + 1);
    for (const auto& [e, c] : p.terms()) {
      coeffs_.push_back(c);
      for (std::size_t j = 0; j < vars_; ++j)
        index_.push_back(offsets_[j] + static_cast<std::size_t>(e[j] - lo_[j]));
    }
  }

  std::size_t vars() const { return vars_; }
  std::size_t table_size() const { return offsets_.back(); }

  // |P(e^{2 pi i u})|; `powers` is scratch of size table_size().
  double modulus(std::span<const double> u, std::vector<Complex>& powers) const {
    for (std::size_t j = 0; j < vars_; ++j) {
      const double angle = 2.0 * std::numbers::pi * u[j];
      const Complex z(std::cos(angle), std::sin(angle));
      Complex* row = powers.data() + offsets_[j] - lo_[j];  // row[k] = z^k
      row[0] = 1.0;
      for (int k = 1; k <= hi_[j]; ++k) row[k] = row[k - 1] * z;
      const Complex zinv = std::conj(z);
      for (int k = -1; k >= lo_[j]; --k) row[k] = row[k + 1] * zinv;
    }
    Complex sum = 0.0;
    const std::size_t* idx = index_.data();
    for (const Complex& c : coeffs_) {
      Complex term = c;
      for (std::size_t j = 0; j < vars_; ++j) term *= powers[*idx++];
      sum += term;
    }
    return std::abs(sum);
  }

 private:
  std::size_t vars_;
  std::vector<int> lo_, hi_;
  std::vector<std::size_t> offsets_;
  std::vector<Complex> coeffs_;
  std::vector<std::size_t> index_;
};

struct BlockResult {
  double sum = 0.0;
  double compensation = 0.0;
  double abs_sum = 0.0;
  std::uint64_t resampled = 0;

  void add(double x) {
    const double t = sum + x;
    compensation += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
    abs_sum += std::abs(x);
  }
  double total() const { return sum + compensation; }
};

struct BlockTask {
  unsigned shift;
  std::uint64_t begin;
  std::uint64_t end;
};

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double log_modulus(const TorusIntegrand& f, std::vector<double>& u, std::vector<Complex>& scratch,
                   BlockResult& out) {
  double m = f.modulus(u, scratch);
  for (int nudge = 0; m < kZeroThreshold && nudge < kMaxNudges; ++nudge) {
    ++out.resampled;
    for (double& x : u) x = std::nextafter(x, 1.0);
    m = f.modulus(u, scratch);
  }
  return std::log(std::max(m, kZeroThreshold));
}

BlockResult run_qmc_block(const TorusIntegrand& f, const BlockTask& task,
                          std::span<const std::uint32_t> shift) {
  BlockResult out;
  const std::size_t d = f.vars();
  std::vector<double> u(d);
  std::vector<Complex> scratch(f.table_size());
  SobolEngine engine(d);
  std::uint64_t k = task.begin;
  // The engine's seed(i) lands on sequence point i + 1; point 0 is the origin.
  if (k == 0) {
    for (std::size_t j = 0; j < d; ++j) u[j] = (static_cast<double>(shift[j]) + 0.5) * 0x1.0p-32;
    out.add(log_modulus(f, u, scratch, out));
    k = 1;
  }
  if (k < task.end) engine.seed(static_cast<std::uint32_t>(k - 1));
  for (; k < task.end; ++k) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::uint32_t bits = engine() ^ shift[j];
      u[j] = (static_cast<double>(bits) + 0.5) * 0x1.0p-32;
    }
    out.add(log_modulus(f, u, scratch, out));
  }
  return out;
}

BlockResult run_mc_block(const TorusIntegrand& f, const BlockTask& task, std::uint64_t seed) {
  BlockResult out;
  const std::size_t d = f.vars();
  std::vector<double> u(d);
  std::vector<Complex> scratch(f.table_size());
  std::mt19937_64 rng(splitmix64(seed ^ splitmix64((static_cast<std::uint64_t>(task.shift) << 40) ^ task.begin)));
  for (std::uint64_t k = task.begin; k < task.end; ++k) {
    for (std::size_t j = 0; j < d; ++j) u[j] = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
    out.add(log_modulus(f, u, scratch, out));
  }
  return out;
}

}  // namespace

unsigned resolve_thread_count(unsigned requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("RESMAHLER_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
      // Unparsable values fall through to the hardware default.
    }
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

MahlerEstimate mm_qmc(const ComplexLaurent& p, const QmcOptions& options) {
  if (p.is_zero()) throw DomainError("Mahler measure of the zero polynomial is undefined");
  if (options.samples < kMinSamples) throw InputError("mm_qmc: need at least 1024 samples");
  if (options.shifts < 2) throw InputError("mm_qmc: need at least 2 randomization shifts");
  if (p.num_vars() > kMaxVariables) throw InputError("mm_qmc: too many variables");
  const std::uint64_t per_shift = options.samples / options.shifts;
  if (per_shift == 0) throw InputError("mm_qmc: fewer samples than shifts");

  const MahlerMethod method =
      options.method == SamplingMethod::kQmc ? MahlerMethod::kQmc : MahlerMethod::kMonteCarlo;
  const std::uint64_t total = per_shift * options.shifts;

  if (p.num_vars() == 0) {
    const double v = std::log(std::abs(p.terms().begin()->second));
    return {v, kRoundoffFloor * (1.0 + std::abs(v)), total, method, 0};
  }

  const TorusIntegrand integrand(p);
  const std::size_t d = integrand.vars();

  std::mt19937_64 shift_rng(options.seed);
  std::vector<std::uint32_t> shifts(static_cast<std::size_t>(options.shifts) * d);
  for (auto& s : shifts) s = static_cast<std::uint32_t>(shift_rng() >> 32);

  std::vector<BlockTask> tasks;
  for (unsigned r = 0; r < options.shifts; ++r)
    for (std::uint64_t b = 0; b < per_shift; b += kBlockSize)
      tasks.push_back({r, b, std::min(per_shift, b + kBlockSize)});

  std::vector<BlockResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      const BlockTask& t = tasks[i];
      results[i] = method == MahlerMethod::kQmc
                       ? run_qmc_block(integrand, t, std::span(shifts).subspan(std::size_t{t.shift} * d, d))
                       : run_mc_block(integrand, t, options.seed);
    }
  };
  const unsigned nthreads =
      static_cast<unsigned>(std::min<std::size_t>(resolve_thread_count(options.threads), tasks.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(nthreads);
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  }

  // Deterministic merge in block order.
  std::vector<double> replicate(options.shifts, 0.0);
  double abs_total = 0.0;
  std::uint64_t resampled = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    replicate[tasks[i].shift] += results[i].total();
    abs_total += results[i].abs_sum;
    resampled += results[i].resampled;
  }
  double mean = 0.0;
  for (double& r : replicate) {
    r /= static_cast<double>(per_shift);
    mean += r;
  }
  mean /= options.shifts;
  double ss = 0.0;
  for (double r : replicate) ss += (r - mean) * (r - mean);
  const double r_count = options.shifts;
  const double statistical = std::sqrt(ss / (r_count * (r_count - 1.0)));
  const double floor = kRoundoffFloor * (1.0 + abs_total / static_cast<double>(total));
  return {mean, std::hypot(statistical, floor), total, method, resampled};
}

MahlerEstimate mm_qmc(const ComplexLaurent& p, std::uint64_t samples, std::uint64_t seed) {
  QmcOptions options;
  options.samples = samples;
  options.seed = seed;
  return mm_qmc(p, options);
}

MahlerEstimate mm_qmc(const RationalLaurent& p, const QmcOptions& options) {
  return mm_qmc(to_complex(p), options);
}

}  // namespace resmahler
