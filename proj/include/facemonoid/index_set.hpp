#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "facemonoid/error.hpp"

namespace fm {

// Subset of the index set I = {0..n-1} (0-based internally; all I/O is
// 1-based).  Backed by a bitmask, so rank is capped at 31.
class IndexSet {
 public:
  static constexpr int kMaxRank = 31;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t bits) : bits_(bits) {}
  IndexSet(std::initializer_list<int> idx) {
    for (int i : idx) insert(i);
  }

  static constexpr IndexSet full(int n) {
    return IndexSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcount(bits_); }
  constexpr std::uint32_t bits() const { return bits_; }

  void insert(int i) {
    if (i < 0 || i >= kMaxRank) fail("BadIndex", "index out of range: " + std::to_string(i + 1));
    bits_ |= (std::uint32_t{1} << i);
  }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits_ | o.bits_); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits_ & o.bits_); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const IndexSet&) const = default;

  constexpr bool subset_of(IndexSet o) const { return (bits_ & ~o.bits_) == 0; }

  std::vector<int> elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctz(b));
    return out;
  }

  // "{1,3}" with 1-based indices, for error messages and reports.
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int i : elements()) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
    return s + "}";
  }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace fm
