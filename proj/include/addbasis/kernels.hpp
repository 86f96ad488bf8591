#pragma once

// Bit-vector sumset kernels over a finite integer window.
//
// A BitWindow stores membership for every integer of [lo, hi]. The sumset
// kernels compute {a + b} restricted to [a.lo() + b.lo(), hi]. Three
// implementations produce identical results:
//   sumset_reference  pairwise bit loop, serial; the test oracle
//   sumset_serial     word-level shift-or, serial
//   sumset_parallel   word-level, output words partitioned across OpenMP threads
// sumset_window() picks serial or parallel by output size.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace addbasis::kernels {

using Int = std::int64_t;

class BitWindow {
 public:
  BitWindow() = default;
  /// Empty window when hi < lo.
  BitWindow(Int lo, Int hi);

  Int lo() const noexcept { return lo_; }
  Int hi() const noexcept { return lo_ + static_cast<Int>(size_) - 1; }
  std::size_t size() const noexcept { return size_; }
  bool empty_range() const noexcept { return size_ == 0; }

  bool test(Int x) const noexcept;
  void set(Int x) noexcept;
  std::size_t count() const noexcept;
  bool none() const noexcept { return count() == 0; }

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  /// 64 bits starting at bit offset `pos` (relative to lo); bits outside the
  /// window read as zero. `pos` may be negative.
  std::uint64_t extract64(std::int64_t pos) const noexcept;

  std::vector<Int> elements() const;

  friend bool operator==(const BitWindow&, const BitWindow&) = default;

 private:
  Int lo_ = 0;
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

BitWindow sumset_reference(const BitWindow& a, const BitWindow& b, Int hi);
BitWindow sumset_serial(const BitWindow& a, const BitWindow& b, Int hi);
BitWindow sumset_parallel(const BitWindow& a, const BitWindow& b, Int hi);

/// Output word count at or above which sumset_window() goes parallel.
inline constexpr std::size_t kParallelWordThreshold = 512;

BitWindow sumset_window(const BitWindow& a, const BitWindow& b, Int hi);

}  // namespace addbasis::kernels
