#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "coxrow/errors.hpp"

namespace coxrow {

// Fixed-universe subset, stored as 64-bit blocks. Element order = bit index.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), blocks_((nbits + 63) / 64, 0) {}

  int universe_size() const { return nbits_; }

  bool test(int i) const { return (blocks_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { blocks_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { blocks_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t b : blocks_) c += std::popcount(b);
    return c;
  }
  bool empty() const {
    for (uint64_t b : blocks_)
      if (b) return false;
    return true;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t k = 0; k < blocks_.size(); ++k)
      if (blocks_[k] & ~o.blocks_[k]) return false;
    return true;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(nbits_);
    for (size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = blocks_[k] | o.blocks_[k];
    return r;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r(nbits_);
    for (size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = blocks_[k] & o.blocks_[k];
    return r;
  }
  // Set difference: bits of *this not in o.
  Bitset minus(const Bitset& o) const {
    Bitset r(nbits_);
    for (size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = blocks_[k] & ~o.blocks_[k];
    return r;
  }
  Bitset complement() const {
    Bitset r(nbits_);
    for (size_t k = 0; k < blocks_.size(); ++k) r.blocks_[k] = ~blocks_[k];
    r.trim();
    return r;
  }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && blocks_ == o.blocks_;
  }

  // (cardinality, lex) order used to fix the element order of ideal lattices.
  // Lex compares the sorted element sequences; equivalently the set owning the
  // smallest element of the symmetric difference comes first.
  static bool card_lex_less(const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (size_t k = 0; k < a.blocks_.size(); ++k) {
      uint64_t diff = a.blocks_[k] ^ b.blocks_[k];
      if (diff) {
        uint64_t low = diff & (~diff + 1);
        return a.blocks_[k] & low;
      }
    }
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    for (int i = 0; i < nbits_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  size_t hash() const {
    size_t h = std::hash<int>()(nbits_);
    for (uint64_t b : blocks_) h = h * 1000003u ^ std::hash<uint64_t>()(b);
    return h;
  }

 private:
  void trim() {
    if (nbits_ & 63) blocks_.back() &= (uint64_t(1) << (nbits_ & 63)) - 1;
  }

  int nbits_ = 0;
  std::vector<uint64_t> blocks_;
};

struct BitsetHash {
  size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace coxrow
