#ifndef RICLAB_SUBSETS_HPP
#define RICLAB_SUBSETS_HPP

#include <vector>

namespace riclab {

// min(C(n, k), cap + 1); saturates instead of overflowing.
inline unsigned long long binomial_capped(int n, int k, unsigned long long cap) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    const auto f = static_cast<unsigned long long>(n - k + i);
    // saturate if the exact product c*f would wrap: the true count already
    // exceeds any representable cap
    if (c > ~0ULL / f) return cap + 1;
    // c * f stays exact: it equals i! * C(n-k+i, i).
    c = c * f / static_cast<unsigned long long>(i);
    if (c > cap) return cap + 1;
  }
  return c;
}

// Lexicographic enumeration of all k-subsets of {0, ..., n-1}.
class SubsetIterator {
 public:
  SubsetIterator(int n, int k) : n_(n), k_(k), idx_(static_cast<std::size_t>(k > 0 ? k : 0)) {
    for (int i = 0; i < k_; ++i) idx_[static_cast<std::size_t>(i)] = i;
    done_ = (k_ <= 0 || k_ > n_);
  }

  bool done() const { return done_; }
  const std::vector<int>& current() const { return idx_; }

  void advance() {
    int i = k_ - 1;
    while (i >= 0 && idx_[static_cast<std::size_t>(i)] == n_ - k_ + i) --i;
    if (i < 0) {
      done_ = true;
      return;
    }
    ++idx_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k_; ++j)
      idx_[static_cast<std::size_t>(j)] = idx_[static_cast<std::size_t>(j - 1)] + 1;
  }

 private:
  int n_;
  int k_;
  std::vector<int> idx_;
  bool done_ = true;
};

}  // namespace riclab

#endif
