#include "domcol/vertex_set.hpp"

#include <string>

#include "domcol/errors.hpp"

namespace domcol {

VertexSet::VertexSet(int universe) : universe_(universe), words_((universe + 63) / 64, 0) {
  if (universe < 0) throw UsageError("negative vertex-set universe");
}

VertexSet VertexSet::of(int universe, std::initializer_list<Vertex> vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe, const std::vector<Vertex>& vs) {
  VertexSet s(universe);
  for (Vertex v : vs) s.insert(v);
  return s;
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::from_mask(int universe, Mask m) {
  if (universe > 64) throw UsageError("mask conversion needs universe <= 64");
  if (universe < 64 && (m >> universe) != 0) throw UsageError("mask has bits outside universe");
  VertexSet s(universe);
  if (!s.words_.empty()) s.words_[0] = m;
  return s;
}

void VertexSet::check(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw UsageError("vertex " + std::to_string(v) + " out of range [0," +
                     std::to_string(universe_) + ")");
  }
}

void VertexSet::check_same(const VertexSet& o) const {
  if (o.universe_ != universe_) throw UsageError("vertex sets over different universes");
}

bool VertexSet::contains(Vertex v) const {
  if (v < 0 || v >= universe_) return false;
  return (words_[v / 64] >> (v % 64)) & 1;
}

void VertexSet::insert(Vertex v) {
  check(v);
  words_[v / 64] |= bit(v % 64);
}

void VertexSet::erase(Vertex v) {
  check(v);
  words_[v / 64] &= ~bit(v % 64);
}

int VertexSet::size() const {
  int s = 0;
  for (Mask w : words_) s += popcount(w);
  return s;
}

bool VertexSet::empty() const {
  for (Mask w : words_)
    if (w) return false;
  return true;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

VertexSet VertexSet::operator|(const VertexSet& o) const {
  VertexSet r = *this;
  r |= o;
  return r;
}

VertexSet VertexSet::operator&(const VertexSet& o) const {
  VertexSet r = *this;
  r &= o;
  return r;
}

VertexSet VertexSet::operator-(const VertexSet& o) const {
  check_same(o);
  VertexSet r = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
  return r;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  check_same(o);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

Mask VertexSet::to_mask() const {
  if (universe_ > 64) throw UsageError("mask conversion needs universe <= 64");
  return words_.empty() ? 0 : words_[0];
}

}  // namespace domcol
