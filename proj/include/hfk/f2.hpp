#pragma once

// Dense linear algebra over F2 on boost::dynamic_bitset rows.

#include <cstddef>
#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hfk::f2 {

using Vector = boost::dynamic_bitset<>;

/// Incrementally built echelon basis; each stored vector is keyed by its
/// lowest set bit.
class EchelonBasis {
 public:
  /// Reduces `v` in place against the basis; returns true if the remainder is zero.
  bool reduce(Vector& v) const
  {
    for (auto p = v.find_first(); p != Vector::npos; p = v.find_first()) {
      auto it = rows_.find(p);
      if (it == rows_.end()) return false;
      v ^= it->second;
    }
    return true;
  }

  bool contains(Vector v) const { return reduce(v); }

  /// Returns true if `v` was independent of the current span.
  bool insert(Vector v)
  {
    if (reduce(v)) return false;
    rows_.emplace(v.find_first(), std::move(v));
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::map<std::size_t, Vector> rows_;
};

inline std::size_t rank(const std::vector<Vector>& columns)
{
  EchelonBasis b;
  for (const auto& c : columns) b.insert(c);
  return b.rank();
}

/// Kernel of the linear map sending source basis vector i to images[i].
/// Returned vectors are over the source basis (size images.size()).
inline std::vector<Vector> kernel(const std::vector<Vector>& images)
{
  const std::size_t n = images.size();
  std::map<std::size_t, std::pair<Vector, Vector>> pivots;  // low -> (image, combination)
  std::vector<Vector> out;
  for (std::size_t i = 0; i < n; ++i) {
    Vector v = images[i];
    Vector comb(n);
    comb.set(i);
    for (auto p = v.find_first(); p != Vector::npos; p = v.find_first()) {
      auto it = pivots.find(p);
      if (it == pivots.end()) break;
      v ^= it->second.first;
      comb ^= it->second.second;
    }
    if (v.none())
      out.push_back(std::move(comb));
    else {
      const std::size_t low = v.find_first();
      pivots.emplace(low, std::make_pair(std::move(v), std::move(comb)));
    }
  }
  return out;
}

}  // namespace hfk::f2
