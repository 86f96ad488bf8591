#include "addbasis/kernels.hpp"

#include <algorithm>
#include <bit>

namespace addbasis::kernels {

namespace {

constexpr std::size_t kWordBits = 64;

std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Offsets of the set bits, relative to lo.
std::vector<std::size_t> set_offsets(const BitWindow& w) {
  std::vector<std::size_t> out;
  const auto words = w.words();
  for (std::size_t i = 0; i < words.size(); ++i) {
    std::uint64_t word = words[i];
    while (word != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

BitWindow output_window(const BitWindow& a, const BitWindow& b, Int hi) {
  if (a.empty_range() || b.empty_range()) return BitWindow(0, -1);
  return BitWindow(a.lo() + b.lo(), hi);
}

void trim_tail(BitWindow& out) {
  const std::size_t rem = out.size() % kWordBits;
  if (rem != 0 && !out.words().empty()) out.words().back() &= (std::uint64_t{1} << rem) - 1;
}

}  // namespace

BitWindow::BitWindow(Int lo, Int hi) : lo_(lo) {
  size_ = hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0;
  words_.assign(words_for(size_), 0);
}

bool BitWindow::test(Int x) const noexcept {
  if (x < lo_ || x > hi()) return false;
  const auto off = static_cast<std::size_t>(x - lo_);
  return (words_[off / kWordBits] >> (off % kWordBits)) & 1U;
}

void BitWindow::set(Int x) noexcept {
  if (x < lo_ || x > hi()) return;
  const auto off = static_cast<std::size_t>(x - lo_);
  words_[off / kWordBits] |= std::uint64_t{1} << (off % kWordBits);
}

std::size_t BitWindow::count() const noexcept {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::uint64_t BitWindow::extract64(std::int64_t pos) const noexcept {
  const auto nwords = static_cast<std::int64_t>(words_.size());
  auto word_at = [&](std::int64_t i) -> std::uint64_t {
    return (i >= 0 && i < nwords) ? words_[static_cast<std::size_t>(i)] : 0;
  };
  // floor division so negative positions land in the right word
  std::int64_t q = pos >= 0 ? pos / 64 : -((-pos + 63) / 64);
  const auto r = static_cast<unsigned>(pos - q * 64);
  if (r == 0) return word_at(q);
  return (word_at(q) >> r) | (word_at(q + 1) << (64 - r));
}

std::vector<Int> BitWindow::elements() const {
  std::vector<Int> out;
  for (auto off : set_offsets(*this)) out.push_back(lo_ + static_cast<Int>(off));
  return out;
}

BitWindow sumset_reference(const BitWindow& a, const BitWindow& b, Int hi) {
  BitWindow out = output_window(a, b, hi);
  for (Int x : a.elements()) {
    for (Int y : b.elements()) {
      if (x + y > hi) break;
      out.set(x + y);
    }
  }
  return out;
}

BitWindow sumset_serial(const BitWindow& a, const BitWindow& b, Int hi) {
  BitWindow out = output_window(a, b, hi);
  if (out.empty_range()) return out;
  auto dst = out.words();
  const auto nout = static_cast<std::int64_t>(dst.size());
  const auto nb = static_cast<std::int64_t>(b.words().size());
  for (std::size_t shift : set_offsets(a)) {
    const auto s = static_cast<std::int64_t>(shift);
    const std::int64_t first = s / 64;
    if (first >= nout) break;
    const std::int64_t last = std::min(nout - 1, (s + nb * 64 - 1) / 64);
    for (std::int64_t w = first; w <= last; ++w) dst[static_cast<std::size_t>(w)] |= b.extract64(w * 64 - s);
  }
  trim_tail(out);
  return out;
}

BitWindow sumset_parallel(const BitWindow& a, const BitWindow& b, Int hi) {
  BitWindow out = output_window(a, b, hi);
  if (out.empty_range()) return out;
  const std::vector<std::size_t> shifts = set_offsets(a);
  auto dst = out.words();
  const auto nout = static_cast<std::int64_t>(dst.size());
  const auto nb_bits = static_cast<std::int64_t>(b.size());
  std::uint64_t* data = dst.data();

  // Each output word is owned by one iteration; no write is shared.
#pragma omp parallel for schedule(static)
  for (std::int64_t w = 0; w < nout; ++w) {
    std::uint64_t acc = 0;
    const std::int64_t word_lo = w * 64;
    for (std::size_t shift : shifts) {
      const auto s = static_cast<std::int64_t>(shift);
      if (s > word_lo + 63) break;
      if (s + nb_bits <= word_lo) continue;
      acc |= b.extract64(word_lo - s);
    }
    data[w] = acc;
  }
  trim_tail(out);
  return out;
}

BitWindow sumset_window(const BitWindow& a, const BitWindow& b, Int hi) {
  const Int lo = a.lo() + b.lo();
  const std::size_t out_words = hi >= lo ? words_for(static_cast<std::size_t>(hi - lo + 1)) : 0;
  if (out_words >= kParallelWordThreshold) return sumset_parallel(a, b, hi);
  return sumset_serial(a, b, hi);
}

}  // namespace addbasis::kernels
