#pragma once

#include <cassert>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace gcx {

/// Binary heap over vertex ids with a position index, so a vertex's key can
/// be changed or removed in O(log n). `Before(a_key, a, b_key, b)` is true when
/// vertex a belongs above vertex b; it must be a strict total order, so fold
/// the tie-break into it.
template <typename Key, typename Before>
class IndexedHeap {
 public:
  explicit IndexedHeap(std::size_t capacity, Before before = {})
      : before_(std::move(before)), key_(capacity), pos_(capacity, kAbsent) {
    heap_.reserve(capacity);
  }

  bool empty() const noexcept { return heap_.empty(); }
  std::size_t size() const noexcept { return heap_.size(); }
  bool contains(Vertex v) const noexcept { return pos_[v] != kAbsent; }

  Vertex top() const {
    assert(!heap_.empty());
    return heap_.front();
  }
  const Key& key(Vertex v) const { return key_[v]; }

  void push(Vertex v, Key k) {
    assert(!contains(v));
    key_[v] = std::move(k);
    pos_[v] = heap_.size();
    heap_.push_back(v);
    sift_up(pos_[v]);
  }

  Vertex pop() {
    const Vertex v = top();
    erase(v);
    return v;
  }

  /// Changes the key of a queued vertex in either direction.
  void update(Vertex v, Key k) {
    assert(contains(v));
    key_[v] = std::move(k);
    sift_up(pos_[v]);
    sift_down(pos_[v]);
  }

  void erase(Vertex v) {
    assert(contains(v));
    const auto i = pos_[v];
    const Vertex last = heap_.back();
    heap_.pop_back();
    pos_[v] = kAbsent;
    if (last != v) {
      heap_[i] = last;
      pos_[last] = i;
      sift_up(i);
      sift_down(pos_[last]);
    }
  }

 private:
  static constexpr std::size_t kAbsent = std::numeric_limits<std::size_t>::max();

  bool above(std::size_t i, std::size_t j) const {
    return before_(key_[heap_[i]], heap_[i], key_[heap_[j]], heap_[j]);
  }

  void swap_slots(std::size_t i, std::size_t j) {
    std::swap(heap_[i], heap_[j]);
    pos_[heap_[i]] = i;
    pos_[heap_[j]] = j;
  }

  void sift_up(std::size_t i) {
    while (i > 0) {
      const auto parent = (i - 1) / 2;
      if (!above(i, parent)) break;
      swap_slots(i, parent);
      i = parent;
    }
  }

  void sift_down(std::size_t i) {
    for (;;) {
      const auto l = 2 * i + 1;
      const auto r = l + 1;
      auto best = i;
      if (l < heap_.size() && above(l, best)) best = l;
      if (r < heap_.size() && above(r, best)) best = r;
      if (best == i) return;
      swap_slots(i, best);
      i = best;
    }
  }

  Before before_;
  std::vector<Key> key_;
  std::vector<std::size_t> pos_;
  std::vector<Vertex> heap_;
};

// Common orderings: larger key first / smaller key first, ties to the smaller
// vertex index.
struct MaxKeyFirst {
  template <typename K>
  bool operator()(const K& a, Vertex va, const K& b, Vertex vb) const {
    return a != b ? a > b : va < vb;
  }
};

struct MinKeyFirst {
  template <typename K>
  bool operator()(const K& a, Vertex va, const K& b, Vertex vb) const {
    return a != b ? a < b : va < vb;
  }
};

}  // namespace gcx
