#pragma once

#include <atomic>
#include <cstdint>

// Bookkeeping for peak matrix/grid memory. Counts payload bytes of Grid,
// VectorField and the dense matrices the solvers allocate; allocator overhead
// and small metadata are deliberately ignored so the numbers are stable
// across platforms.

namespace qn::mem {

namespace detail {
inline std::atomic<std::uint64_t> current_{0};
inline std::atomic<std::uint64_t> peak_{0};
inline std::atomic<std::uint64_t> window_peak_{0};
}  // namespace detail

inline void add(std::uint64_t bytes) {
  std::uint64_t cur = detail::current_.fetch_add(bytes) + bytes;
  std::uint64_t p = detail::peak_.load();
  while (cur > p && !detail::peak_.compare_exchange_weak(p, cur)) {
  }
  p = detail::window_peak_.load();
  while (cur > p && !detail::window_peak_.compare_exchange_weak(p, cur)) {
  }
}

inline void sub(std::uint64_t bytes) { detail::current_.fetch_sub(bytes); }

inline std::uint64_t current() { return detail::current_.load(); }
inline std::uint64_t peak() { return detail::peak_.load(); }

// Window accounting: window_begin() starts a fresh high-water mark at the
// current level; window_peak() reads it. Windows do not nest.
inline void window_begin() { detail::window_peak_.store(detail::current_.load()); }
inline std::uint64_t window_peak() { return detail::window_peak_.load(); }

// RAII tag for a dense matrix owned by a scope (Eigen buffers etc).
struct Block {
  std::uint64_t bytes = 0;
  explicit Block(std::uint64_t b) : bytes(b) { add(b); }
  Block(const Block&) = delete;
  Block& operator=(const Block&) = delete;
  ~Block() { sub(bytes); }
};

}  // namespace qn::mem
