#pragma once

// Internal sampling helpers shared by the verification drivers and the
// trace oracle.  Uniform doubles come straight from the mt19937_64 output
// stream instead of std::uniform_real_distribution, whose output is
// implementation-defined; replaying a seed must yield identical bytes
// everywhere.

#include <complex>
#include <cstdint>
#include <random>

namespace markoff::detail {

inline double unit_double(std::mt19937_64& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

inline std::complex<double> disk_sample(std::mt19937_64& eng, double radius) {
  for (;;) {
    double x = 2.0 * unit_double(eng) - 1.0;
    double y = 2.0 * unit_double(eng) - 1.0;
    if (x * x + y * y <= 1.0) return {x * radius, y * radius};
  }
}

// SplitMix64 finalizer; derives decorrelated per-chunk engine seeds so that
// results do not depend on how chunks are distributed across workers.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace markoff::detail
