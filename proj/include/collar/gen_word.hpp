#pragma once

#include <map>
#include <string>
#include <vector>

#include "collar/common.hpp"

namespace collar {

/// One letter of a word in a presentation: a generator name with exponent +1 or -1.
struct Letter {
  std::string gen;
  int exp = 1;
  friend bool operator==(const Letter& a, const Letter& b) = default;
};

/// A word over named generators. Free reduction cancels adjacent inverse pairs.
class GenWord {
 public:
  GenWord() = default;
  explicit GenWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
    for (const auto& l : letters_)
      if (l.exp != 1 && l.exp != -1) throw ValidationError("letter exponent must be +1 or -1");
  }

  static GenWord gen(const std::string& name, int exp = 1) {
    return GenWord({Letter{name, exp}});
  }

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  GenWord operator*(const GenWord& o) const {
    std::vector<Letter> ls = letters_;
    ls.insert(ls.end(), o.letters_.begin(), o.letters_.end());
    return GenWord(std::move(ls));
  }

  GenWord inverse() const {
    std::vector<Letter> ls;
    ls.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      ls.push_back(Letter{it->gen, -it->exp});
    return GenWord(std::move(ls));
  }

  GenWord pow(int e) const {
    GenWord base = e < 0 ? inverse() : *this;
    GenWord acc;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) acc = acc * base;
    return acc;
  }

  /// Stack-based free reduction; idempotent.
  GenWord free_reduce() const {
    std::vector<Letter> stack;
    for (const auto& l : letters_) {
      if (!stack.empty() && stack.back().gen == l.gen && stack.back().exp == -l.exp)
        stack.pop_back();
      else
        stack.push_back(l);
    }
    return GenWord(std::move(stack));
  }

  /// Exponent sum of one generator (invariant under free reduction).
  int exponent_sum(const std::string& g) const {
    int s = 0;
    for (const auto& l : letters_)
      if (l.gen == g) s += l.exp;
    return s;
  }

  /// Substitute each generator by its image word (exponents respected).
  GenWord substitute(const std::map<std::string, GenWord>& images) const {
    std::vector<Letter> ls;
    for (const auto& l : letters_) {
      auto it = images.find(l.gen);
      if (it == images.end()) throw ValidationError("unmapped generator: " + l.gen);
      GenWord piece = l.exp == 1 ? it->second : it->second.inverse();
      ls.insert(ls.end(), piece.letters().begin(), piece.letters().end());
    }
    return GenWord(std::move(ls));
  }

  std::string str() const {
    if (letters_.empty()) return "1";
    std::string s;
    for (const auto& l : letters_) {
      if (!s.empty()) s += " ";
      s += l.gen;
      if (l.exp == -1) s += "^-1";
    }
    return s;
  }

  friend bool operator==(const GenWord& a, const GenWord& b) = default;

 private:
  std::vector<Letter> letters_;
};

inline GenWord free_reduce(const GenWord& w) { return w.free_reduce(); }

}  // namespace collar
