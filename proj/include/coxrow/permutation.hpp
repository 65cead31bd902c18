#pragma once

#include <vector>

#include "coxrow/errors.hpp"
#include "coxrow/matrix.hpp"

namespace coxrow {

// Permutation as a matrix: image[j] = i means entry (i,j) = 1, i.e. e_j -> e_i.
class Permutation {
 public:
  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int i : image_) {
      if (i < 0 || i >= static_cast<int>(image_.size()) || seen[i])
        raise(Errc::NotBijective, "image is not a bijection");
      seen[i] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int j) const { return image_[j]; }
  const std::vector<int>& image() const { return image_; }

  bool operator==(const Permutation& o) const { return image_ == o.image_; }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (size_t j = 0; j < image_.size(); ++j) inv[image_[j]] = static_cast<int>(j);
    return Permutation(std::move(inv));
  }

  RationalMatrix to_matrix() const {
    RationalMatrix m(size(), size());
    for (int j = 0; j < size(); ++j) m.at(image_[j], j) = 1;
    return m;
  }

  // P^{-1} * A: permuted copy with row i taken from row image[i] of A.
  RationalMatrix inverse_times(const RationalMatrix& a) const {
    if (a.rows() != size()) raise(Errc::DimensionMismatch, "permutation/row count mismatch");
    RationalMatrix r(a.rows(), a.cols());
    for (int i = 0; i < size(); ++i)
      for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(image_[i], j);
    return r;
  }

  // Cycles sorted by smallest member; singletons included.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(image_.size(), false);
    for (int s = 0; s < size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> cyc;
      int x = s;
      while (!seen[x]) {
        seen[x] = true;
        cyc.push_back(x);
        x = image_[x];
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

 private:
  std::vector<int> image_;
};

}  // namespace coxrow
