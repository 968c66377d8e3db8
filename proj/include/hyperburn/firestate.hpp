#pragma once

#include <cstdint>
#include <vector>

namespace hb {

// Set of burning vertices as a fixed-width bit vector of length n.
class FireState {
 public:
  explicit FireState(int n);
  static FireState from_vertices(int n, const std::vector<int>& vs);

  int size() const { return n_; }
  int count() const;
  bool test(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }
  void set(int v) { w_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  bool none() const;
  bool all() const;
  bool is_subset_of(const FireState& other) const;

  FireState& operator|=(const FireState& other);

  std::vector<int> vertices() const;
  const std::vector<std::uint64_t>& words() const { return w_; }

  friend bool operator==(const FireState& a, const FireState& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }

 private:
  int n_;
  std::vector<std::uint64_t> w_;
};

}  // namespace hb
