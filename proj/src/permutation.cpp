#include "spectra/permutation.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace spectra {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

}  // namespace

Permutation::Permutation(std::vector<std::string> names, std::vector<int> top,
                         std::vector<int> bottom)
    : names_(std::move(names)), top_(std::move(top)), bottom_(std::move(bottom)) {
  const int n = int(names_.size());
  if (n < 2) throw ParseError("permutation needs at least 2 labels");
  if (int(top_.size()) != n || int(bottom_.size()) != n)
    throw ParseError("permutation rows must use every label once");
  std::vector<char> seen_top(n, 0), seen_bot(n, 0);
  for (int i = 0; i < n; ++i) {
    if (top_[i] < 0 || top_[i] >= n || seen_top[top_[i]]++)
      throw ParseError("top row is not a permutation of the labels");
    if (bottom_[i] < 0 || bottom_[i] >= n || seen_bot[bottom_[i]]++)
      throw ParseError("bottom row is not a permutation of the labels");
  }
}

Permutation Permutation::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos)
    throw ParseError("permutation text needs a '/' separator: \"" + text + "\"");
  auto top_tokens = split_tokens(text.substr(0, slash));
  auto bottom_tokens = split_tokens(text.substr(slash + 1));
  if (top_tokens.empty() || top_tokens.size() != bottom_tokens.size())
    throw ParseError("permutation rows must have the same number of labels");

  std::vector<std::string> names = top_tokens;  // label order = top order
  std::map<std::string, int> index;
  for (int i = 0; i < int(names.size()); ++i) {
    if (!index.emplace(names[i], i).second)
      throw ParseError("duplicate label \"" + names[i] + "\"");
  }
  std::vector<int> top(names.size()), bottom(names.size());
  for (int i = 0; i < int(names.size()); ++i) top[i] = i;
  for (int i = 0; i < int(bottom_tokens.size()); ++i) {
    auto it = index.find(bottom_tokens[i]);
    if (it == index.end())
      throw ParseError("bottom label \"" + bottom_tokens[i] + "\" not in top row");
    bottom[i] = it->second;
  }
  return Permutation(std::move(names), std::move(top), std::move(bottom));
}

std::string Permutation::str() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (i) out += ' ';
    out += names_[top_[i]];
  }
  out += " /";
  for (int i = 0; i < size(); ++i) {
    out += ' ';
    out += names_[bottom_[i]];
  }
  return out;
}

bool Permutation::irreducible() const {
  const int n = size();
  std::vector<char> in_top(n, 0), in_bottom(n, 0);
  int overlap = 0;  // |top prefix ∩ bottom prefix|
  for (int k = 0; k < n - 1; ++k) {
    in_top[top_[k]] = 1;
    in_bottom[bottom_[k]] = 1;
    overlap += in_bottom[top_[k]] ? 1 : 0;
    overlap += (in_top[bottom_[k]] && top_[k] != bottom_[k]) ? 1 : 0;
    if (overlap == k + 1) return false;
  }
  return true;
}

std::vector<int> Permutation::bottom_positions() const {
  const int n = size();
  std::vector<int> where(n), out(n);
  for (int j = 0; j < n; ++j) where[bottom_[j]] = j;
  for (int i = 0; i < n; ++i) out[i] = where[top_[i]];
  return out;
}

}  // namespace spectra
