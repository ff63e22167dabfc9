#include <doctest.h>

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "muord/kernels.hpp"

using namespace muord::kernels;

namespace {

// Straight transcription of the kernel contract, kept deliberately naive.
std::vector<std::uint64_t> reference_histogram(const HistogramJob& job) {
  std::vector<std::uint64_t> hist(job.delta, 0);
  for (std::uint64_t r = job.row_begin; r < job.row_end; ++r) {
    for (std::uint32_t c0 = 0; c0 < job.p; ++c0) {
      int s = 0;
      for (int i = 0; i < job.nterms; ++i) {
        const std::uint32_t c = (c0 + job.p - job.shift[i]) % job.p;
        s += job.weight[i] * job.table[r * job.p + c];
      }
      ++hist[s % job.delta];
    }
  }
  return hist;
}

struct RandomJob {
  std::vector<std::uint8_t> table;
  HistogramJob job;
};

RandomJob random_job(std::mt19937_64& rng, std::uint32_t p, int rows, int delta, int nterms) {
  RandomJob out;
  out.table.resize(static_cast<std::size_t>(rows) * p);
  std::uniform_int_distribution<int> entry(0, delta - 1);
  for (auto& x : out.table) x = static_cast<std::uint8_t>(entry(rng));
  out.job.table = out.table.data();
  out.job.p = p;
  out.job.row_begin = rows > 2 ? 1 : 0;
  out.job.row_end = rows;
  out.job.nterms = nterms;
  out.job.delta = delta;
  std::uniform_int_distribution<std::uint32_t> shift(0, p - 1);
  std::uniform_int_distribution<int> weight(1, delta - 1 > 0 ? delta - 1 : 1);
  for (int i = 0; i < nterms; ++i) {
    out.job.shift[i] = shift(rng);
    out.job.weight[i] = static_cast<std::uint8_t>(weight(rng));
  }
  return out;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar kernel matches the naive definition") {
  std::mt19937_64 rng(12345);
  for (std::uint32_t p : {2u, 3u, 7u, 31u, 67u}) {
    for (int delta : {2, 3, 5, 16}) {
      auto rj = random_job(rng, p, 5, delta, 1 + static_cast<int>(rng() % kMaxTerms));
      std::vector<std::uint64_t> hist(delta, 0);
      exponent_histogram_scalar(rj.job, hist.data());
      CHECK(hist == reference_histogram(rj.job));
    }
  }
}

TEST_CASE("AVX2 kernel is equivalent to the scalar kernel") {
  if (!cpu_has_avx2()) {
    MESSAGE("CPU without AVX2: vector path not exercised");
    return;
  }
  std::mt19937_64 rng(20261016);
  int cases = 0;
  // Row lengths straddle the 32-byte lane width, including primes below it.
  for (std::uint32_t p : {3u, 5u, 13u, 29u, 31u, 37u, 61u, 97u, 101u, 257u, 1009u}) {
    for (int delta = 1; delta <= kMaxDelta; ++delta) {
      for (int nterms : {1, 2, 3, 5, 8, kMaxTerms}) {
        auto rj = random_job(rng, p, 4, delta, nterms);
        std::vector<std::uint64_t> a(delta, 0), b(delta, 0);
        exponent_histogram_scalar(rj.job, a.data());
        exponent_histogram_avx2(rj.job, b.data());
        CHECK(a == b);
        ++cases;
      }
    }
  }
  CHECK(cases > 1000);
}

TEST_CASE("histograms accumulate rather than overwrite") {
  std::mt19937_64 rng(7);
  auto rj = random_job(rng, 41, 3, 6, 4);
  std::vector<std::uint64_t> hist(6, 1);
  exponent_histogram()(rj.job, hist.data());
  std::uint64_t total = 0;
  for (auto h : hist) total += h;
  CHECK(total == 6 + (rj.job.row_end - rj.job.row_begin) * 41);
}

TEST_CASE("runtime selection") {
  // The choice is made once per process; ctest runs without MUORD_SIMD.
  const HistogramFn chosen = exponent_histogram();
  const char* env = std::getenv("MUORD_SIMD");
  const bool forced = env != nullptr && std::string(env) == "scalar";
  if (cpu_has_avx2() && !forced) {
    CHECK(chosen == &exponent_histogram_avx2);
    CHECK(exponent_histogram_name() == "avx2");
  } else {
    CHECK(chosen == &exponent_histogram_scalar);
    CHECK(exponent_histogram_name() == "scalar");
  }
}

}  // TEST_SUITE
