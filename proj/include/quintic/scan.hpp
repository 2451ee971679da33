/**
 * @file scan.hpp
 * @brief Classify every 5th-power-free n in a range on a worker pool; output order is n ascending
 *        whatever the number of workers.
 */
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "quintic/classification.hpp"
#include "quintic/errors.hpp"

namespace quintic {

struct ScanEntry {
  std::uint64_t n = 0;
  RadicandVariant variant = RadicandVariant::NoMatch;

  friend bool operator==(const ScanEntry&, const ScanEntry&) = default;
};

inline constexpr std::uint64_t kScanChunk = 4096;

inline std::vector<ScanEntry> scan_range(std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1) {
  if (lo <= 1 || lo > hi) throw InputError("scan_range: need 1 < lo <= hi");
  jobs = std::max(1u, jobs);
  const std::uint64_t chunks = (hi - lo) / kScanChunk + 1;
  std::vector<std::vector<ScanEntry>> parts(chunks);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      const std::uint64_t a = lo + c * kScanChunk;
      const std::uint64_t b = std::min(hi, a + (kScanChunk - 1));
      auto& out = parts[c];
      try {
        for (std::uint64_t n = a;; ++n) {
          try {
            out.push_back(ScanEntry{n, classify_radicand(n).variant});
          } catch (const NotFifthPowerFree&) {
          }
          if (n == b) break;
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = chunks;
        return;
      }
    }
  };

  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<ScanEntry> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

inline std::string format_scan(const std::vector<ScanEntry>& entries) {
  std::string s;
  for (const auto& e : entries) {
    s += std::to_string(e.n);
    s += ' ';
    s += to_string(e.variant);
    s += '\n';
  }
  return s;
}

}  // namespace quintic
