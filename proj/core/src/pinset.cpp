#include "pinnacle/pinset.hpp"

#include <algorithm>
#include <stdexcept>

namespace pinnacle {

PinSet::PinSet(std::vector<int> ascending) : elems_(std::move(ascending)) {
  int prev = 1;
  for (int v : elems_) {
    if (v < 2) throw std::invalid_argument("pinnacle values must be >= 2");
    if (v <= prev) throw std::invalid_argument("pinnacle set must be strictly increasing");
    prev = v;
  }
}

int PinSet::max() const {
  if (elems_.empty()) throw std::invalid_argument("max of empty pinnacle set");
  return elems_.back();
}

bool PinSet::contains(int value) const {
  return std::binary_search(elems_.begin(), elems_.end(), value);
}

bool PinSet::admissible() const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] <= 2 * static_cast<int>(i + 1)) return false;
  }
  return true;
}

std::string PinSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  out += '}';
  return out;
}

std::size_t PinSetHash::operator()(const PinSet& s) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : s.elements()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

Decomposition decompose(const PinSet& s) {
  if (s.empty()) throw std::invalid_argument("no decomposition of empty set");
  int t = s.max() - 1;
  while (s.contains(t)) --t;
  std::vector<int> below;
  for (int v : s.elements()) {
    if (v < t) below.push_back(v);
  }
  return Decomposition{t, PinSet(std::move(below)), t + 1, s.max()};
}

namespace {

void extend(std::vector<int>& prefix, int max_value, std::vector<PinSet>& out) {
  out.emplace_back(prefix);
  int from = prefix.empty() ? 3 : prefix.back() + 1;
  // next element sits at position |prefix|+1 and must exceed twice that
  int least = 2 * (static_cast<int>(prefix.size()) + 1) + 1;
  for (int v = std::max(from, least); v <= max_value; ++v) {
    prefix.push_back(v);
    extend(prefix, max_value, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<PinSet> enumerate_pinsets(int max_value) {
  std::vector<PinSet> out;
  std::vector<int> prefix;
  extend(prefix, max_value, out);
  return out;
}

bool componentwise_leq(const PinSet& a, const PinSet& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("componentwise comparison requires equal sizes");
  }
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.elements()[i] > b.elements()[i]) return false;
  }
  return true;
}

}  // namespace pinnacle
