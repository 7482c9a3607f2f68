#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace relalg {

// Square boolean matrix with 64-bit packed rows.  Used for plane incidence
// and for relational composition of representations (boolean matrix product).
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n)
      : n_(n), words_(n > 0 ? (n + 63) / 64 : 0),
        bits_(static_cast<std::size_t>(n_) * words_, 0) {}

  int size() const { return n_; }

  bool get(int i, int j) const {
    return (row(i)[j >> 6] >> (j & 63)) & 1u;
  }
  void set(int i, int j) { row(i)[j >> 6] |= std::uint64_t{1} << (j & 63); }
  void clear(int i, int j) { row(i)[j >> 6] &= ~(std::uint64_t{1} << (j & 63)); }
  void flip(int i, int j) { row(i)[j >> 6] ^= std::uint64_t{1} << (j & 63); }

  const std::uint64_t* row(int i) const {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }
  std::uint64_t* row(int i) {
    return bits_.data() + static_cast<std::size_t>(i) * words_;
  }
  int words_per_row() const { return words_; }

  // Boolean matrix product: out(i,j) = OR_k this(i,k) & other(k,j).
  BitMatrix product(const BitMatrix& other) const {
    BitMatrix out(n_);
    for (int i = 0; i < n_; ++i) {
      const std::uint64_t* r = row(i);
      std::uint64_t* o = out.row(i);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t word = r[w];
        while (word) {
          int k = w * 64 + std::countr_zero(word);
          word &= word - 1;
          const std::uint64_t* ok = other.row(k);
          for (int v = 0; v < words_; ++v) o[v] |= ok[v];
        }
      }
    }
    return out;
  }

  BitMatrix transposed() const {
    BitMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int w = 0; w < words_; ++w) {
        std::uint64_t word = row(i)[w];
        while (word) {
          int j = w * 64 + std::countr_zero(word);
          word &= word - 1;
          out.set(j, i);
        }
      }
    return out;
  }

  BitMatrix& operator|=(const BitMatrix& other) {
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= other.bits_[i];
    return *this;
  }

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

  bool intersects(const BitMatrix& other) const {
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] & other.bits_[i]) return true;
    return false;
  }

  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (std::uint64_t w : bits_) c += std::popcount(w);
    return c;
  }

  int row_count(int i) const {
    int c = 0;
    for (int w = 0; w < words_; ++w) c += std::popcount(row(i)[w]);
    return c;
  }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace relalg
