#pragma once

#include <string>
#include <vector>

#include "spectra/errors.hpp"

namespace spectra {

// A labelled permutation pair: the combinatorial state of an interval
// exchange. Labels are stored as indices 0..n-1 into a shared name table;
// `top` and `bottom` are the two orderings of those labels.
class Permutation {
 public:
  Permutation(std::vector<std::string> names, std::vector<int> top,
              std::vector<int> bottom);

  // Two-line text form, e.g. "A B C D / D C B A".
  static Permutation parse(const std::string& text);
  std::string str() const;

  int size() const { return int(top_.size()); }
  const std::vector<int>& top() const { return top_; }
  const std::vector<int>& bottom() const { return bottom_; }
  const std::string& name(int label) const { return names_[label]; }
  const std::vector<std::string>& names() const { return names_; }

  // No proper prefix of the top row uses the same label set as the
  // equal-length prefix of the bottom row.
  bool irreducible() const;

  // Position of each top-slot's label within the bottom row:
  // bottom_position_of_top(i) == j  iff  top[i] == bottom[j].
  std::vector<int> bottom_positions() const;

  bool operator==(const Permutation& o) const {
    return names_ == o.names_ && top_ == o.top_ && bottom_ == o.bottom_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<int> top_;
  std::vector<int> bottom_;
};

}  // namespace spectra
