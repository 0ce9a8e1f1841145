#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace domcol {

using Vertex = int;
using Color = int;
inline constexpr Color kUncolored = -1;

// Dense bitmask over at most 64 vertices; the exponential solvers work on these.
using Mask = std::uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int i) { return Mask{1} << i; }

/// Membership set over vertex ids 0..universe-1. Backed by 64-bit words so it
/// works for any n, with a cheap conversion to Mask when n <= 64.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet of(int universe, std::initializer_list<Vertex> vs);
  static VertexSet of(int universe, const std::vector<Vertex>& vs);
  static VertexSet full(int universe);
  static VertexSet from_mask(int universe, Mask m);

  int universe() const { return universe_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  int size() const;
  bool empty() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet operator|(const VertexSet& o) const;
  VertexSet operator&(const VertexSet& o) const;
  VertexSet operator-(const VertexSet& o) const;  // set difference
  VertexSet complement() const;
  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  bool operator==(const VertexSet& o) const = default;

  std::vector<Vertex> members() const;
  Mask to_mask() const;  // requires universe <= 64

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Mask bits = words_[w];
      while (bits) {
        f(static_cast<Vertex>(w * 64 + lowest_bit(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  void check(Vertex v) const;
  void check_same(const VertexSet& o) const;

  int universe_ = 0;
  std::vector<Mask> words_;
};

}  // namespace domcol
