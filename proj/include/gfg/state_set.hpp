#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace gfg {

using StateId = std::uint32_t;
using LetterId = std::uint32_t;

/// A subset of {0, ..., universe-1}. Iteration is always in ascending order,
/// which is the declaration order of the owning automaton's states.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}
  StateSet(std::size_t universe, std::initializer_list<StateId> members) : StateSet(universe) {
    for (StateId s : members) insert(s);
  }
  StateSet(std::size_t universe, const std::vector<StateId>& members) : StateSet(universe) {
    for (StateId s : members) insert(s);
  }

  static StateSet full(std::size_t universe) {
    StateSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(static_cast<StateId>(i));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(StateId s) const noexcept {
    return s < universe_ && ((words_[s / 64] >> (s % 64)) & 1u) != 0;
  }
  void insert(StateId s) { words_.at(s / 64) |= (std::uint64_t{1} << (s % 64)); }
  void erase(StateId s) { words_.at(s / 64) &= ~(std::uint64_t{1} << (s % 64)); }

  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  std::size_t size() const noexcept {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool intersects(const StateSet& o) const noexcept {
    const std::size_t n = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < n; ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }
  bool is_subset_of(const StateSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      const std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
      if ((words_[i] & ~other) != 0) return false;
    }
    return true;
  }

  StateSet& operator|=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  StateSet& operator&=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= i < o.words_.size() ? o.words_[i] : 0;
    return *this;
  }
  StateSet& operator-=(const StateSet& o) {
    for (std::size_t i = 0; i < words_.size() && i < o.words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }
  friend bool operator==(const StateSet& a, const StateSet& b) = default;

  StateSet complement() const { return full(universe_) - *this; }

  /// Smallest member; undefined on the empty set.
  StateId front() const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] != 0) return static_cast<StateId>(i * 64 + std::countr_zero(words_[i]));
    return 0;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w != 0) {
        f(static_cast<StateId>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<StateId> elements() const {
    std::vector<StateId> out;
    out.reserve(size());
    for_each([&](StateId s) { out.push_back(s); });
    return out;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace gfg
