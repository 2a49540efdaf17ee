#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "redusat/kernels.hpp"

namespace redusat {

/// Dense bitset over clause ids of one formula. All binary operations
/// require both operands to come from the same formula (same capacity).
class ClauseIdSet {
 public:
  ClauseIdSet() = default;
  explicit ClauseIdSet(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  std::size_t capacity() const { return nbits_; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  bool subset_of(const ClauseIdSet& other) const {
    return kernels::active().subset(words_.data(), other.words_.data(), words_.size());
  }
  void operator|=(const ClauseIdSet& other) {
    kernels::active().or_inplace(words_.data(), other.words_.data(), words_.size());
  }
  bool intersects(const ClauseIdSet& other) const {
    return kernels::active().intersects(words_.data(), other.words_.data(), words_.size());
  }

  bool operator==(const ClauseIdSet& other) const {
    return nbits_ == other.nbits_ && words_ == other.words_;
  }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  /// Set bits in ascending order.
  std::vector<std::size_t> ids() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

 private:
  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace redusat
