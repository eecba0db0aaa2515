#include "examtt/rng.hpp"

#include "examtt/error.hpp"

namespace examtt {

namespace {

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

uint64_t derive_seed(uint64_t master, std::string_view label, uint64_t index) {
  uint64_t h = 0xcbf29ce484222325ULL ^ master;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  h = splitmix64(h);
  return splitmix64(h ^ index);
}

size_t Rng::uniform_index(size_t n) {
  if (n == 0) fail(ErrorCode::invalid_argument, "uniform_index: empty range");
  // Lemire's multiply-shift with rejection of the biased low region.
  uint64_t range = n;
  __uint128_t prod = static_cast<__uint128_t>(next()) * range;
  auto low = static_cast<uint64_t>(prod);
  if (low < range) {
    uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      prod = static_cast<__uint128_t>(next()) * range;
      low = static_cast<uint64_t>(prod);
    }
  }
  return static_cast<size_t>(prod >> 64);
}

int Rng::uniform_int(int lo, int hi) {
  if (lo > hi) fail(ErrorCode::invalid_argument, "uniform_int: empty range");
  return lo + static_cast<int>(uniform_index(static_cast<size_t>(hi) - lo + 1));
}

double Rng::uniform01() {
  return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

}  // namespace examtt
