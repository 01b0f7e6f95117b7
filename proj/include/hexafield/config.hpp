#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace hexafield {

/// Enumeration fences. Every brute-force routine checks the relevant cap
/// before starting and throws CapacityError when it is exceeded.
struct Caps {
  std::size_t oracle_order = 9;         // axiom oracle, 4-full / 0/0 checks
  std::size_t table_order = 64;         // hexagon tables and fast checks
  std::size_t automorphism_order = 16;  // Aut(G) enumeration
  std::size_t census_hexagons = 22;     // exhaustive 2^#hex sweeps
  std::size_t field_q = 1'000'000;      // finite field size
  std::size_t fetvins_m = 2;            // rows of a FETVINS system
  std::size_t fetvins_carrier = 6;      // carrier size for FETVINS brute force
  std::size_t skew_order = 24;          // skew hexagon tables
  std::size_t skew_oracle_order = 8;    // skew axiom oracle
};

/// Number of workers: explicit value, else HEXAFIELD_THREADS, else hardware.
inline unsigned resolve_threads(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HEXAFIELD_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into a fixed number of chunks (independent of the
/// worker count), evaluates `chunk_fn(begin, end)` for each, and folds the
/// chunk results in chunk order. Output is therefore identical for any
/// number of workers as long as chunk_fn is a pure function of its range.
template <class T, class ChunkFn, class Combine>
T parallel_reduce(std::uint64_t count, unsigned threads, T init, ChunkFn&& chunk_fn,
                  Combine&& combine) {
  if (count == 0) return init;
  constexpr std::uint64_t kMaxChunks = 512;
  const std::uint64_t chunks = std::min<std::uint64_t>(kMaxChunks, count);
  const std::uint64_t step = (count + chunks - 1) / chunks;
  const std::uint64_t n_chunks = (count + step - 1) / step;
  std::vector<T> partial(n_chunks, init);
  std::atomic<std::uint64_t> next{0};
  std::vector<std::exception_ptr> errors(n_chunks);
  auto worker = [&] {
    for (std::uint64_t c = next.fetch_add(1); c < n_chunks; c = next.fetch_add(1)) {
      const std::uint64_t begin = c * step;
      const std::uint64_t end = std::min(count, begin + step);
      try {
        partial[c] = chunk_fn(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    }
  };
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(std::max(1u, threads), n_chunks));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  T acc = init;
  for (auto& p : partial) acc = combine(std::move(acc), std::move(p));
  return acc;
}

}  // namespace hexafield
