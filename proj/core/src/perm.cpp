#include "pinnacle/perm.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_set>

namespace pinnacle {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = static_cast<int>(word_.size());
  if (n == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > n || seen[v]) {
      throw std::invalid_argument("word is not a permutation of 1..n");
    }
    seen[v] = true;
  }
}

Permutation Permutation::unchecked(std::vector<int> word) {
  Permutation p;
  p.word_ = std::move(word);
  return p;
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw std::invalid_argument("identity requires n >= 1");
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = i + 1;
  return unchecked(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> w;
  if (text.find(',') != std::string_view::npos) {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t next = text.find(',', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string piece(text.substr(pos, next - pos));
      try {
        std::size_t used = 0;
        int v = std::stoi(piece, &used);
        if (used != piece.size()) throw std::invalid_argument("");
        w.push_back(v);
      } catch (const std::exception&) {
        throw std::invalid_argument("bad permutation literal: '" + piece + "'");
      }
      pos = next + 1;
    }
  } else {
    // compact digit form, one value per character; only sound for n <= 9
    for (char c : text) {
      if (c < '1' || c > '9') {
        throw std::invalid_argument("compact permutation form accepts digits 1-9 only");
      }
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

PinSet Permutation::pinnacle_set() const {
  std::vector<int> pins;
  for (std::size_t i = 1; i + 1 < word_.size(); ++i) {
    if (word_[i - 1] < word_[i] && word_[i] > word_[i + 1]) pins.push_back(word_[i]);
  }
  std::sort(pins.begin(), pins.end());
  return PinSet(std::move(pins));
}

std::vector<int> Permutation::peak_positions() const {
  std::vector<int> out;
  for (std::size_t i = 1; i + 1 < word_.size(); ++i) {
    if (word_[i - 1] < word_[i] && word_[i] > word_[i + 1]) {
      out.push_back(static_cast<int>(i) + 1);
    }
  }
  return out;
}

std::vector<int> Permutation::vale_values() const {
  std::vector<int> out;
  const std::size_t n = word_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const bool left_ok = (i == 0) || word_[i - 1] > word_[i];
    const bool right_ok = (i + 1 == n) || word_[i + 1] > word_[i];
    if (left_ok && right_ok) out.push_back(word_[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Factorization Permutation::factorize(int k) const {
  auto it = std::find(word_.begin(), word_.end(), k);
  if (it == word_.end()) throw std::invalid_argument("letter does not occur in permutation");
  const auto pos = static_cast<std::size_t>(it - word_.begin());

  std::size_t b = pos;
  while (b > 0 && word_[b - 1] < k) --b;
  std::size_t g = pos + 1;
  while (g < word_.size() && word_[g] < k) ++g;

  Factorization f;
  f.pivot = k;
  f.alpha.assign(word_.begin(), word_.begin() + b);
  f.beta.assign(word_.begin() + b, word_.begin() + pos);
  f.gamma.assign(word_.begin() + pos + 1, word_.begin() + g);
  f.delta.assign(word_.begin() + g, word_.end());
  return f;
}

Permutation Permutation::phi(int k) const {
  Factorization f = factorize(k);
  std::vector<int> w;
  w.reserve(word_.size());
  w.insert(w.end(), f.alpha.begin(), f.alpha.end());
  w.insert(w.end(), f.gamma.begin(), f.gamma.end());
  w.push_back(k);
  w.insert(w.end(), f.beta.begin(), f.beta.end());
  w.insert(w.end(), f.delta.begin(), f.delta.end());
  return unchecked(std::move(w));
}

Permutation Permutation::phi_set(const std::vector<int>& xs) const {
  std::vector<int> sorted(xs);
  std::sort(sorted.begin(), sorted.end());
  Permutation out = *this;
  for (int k : sorted) out = out.phi(k);
  return out;
}

std::vector<Permutation> Permutation::orbit() const {
  std::unordered_set<Permutation, PermutationHash> seen{*this};
  std::deque<Permutation> queue{*this};
  const std::vector<int> vales = vale_values();
  while (!queue.empty()) {
    Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (int k : cur.word_) {
      if (std::binary_search(vales.begin(), vales.end(), k)) continue;  // phi_k fixes
      Permutation next = cur.phi(k);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> Permutation::orbit_via_subsets() const {
  std::vector<int> nonvales;
  const std::vector<int> vales = vale_values();
  for (int v : word_) {
    if (!std::binary_search(vales.begin(), vales.end(), v)) nonvales.push_back(v);
  }
  std::sort(nonvales.begin(), nonvales.end());
  if (nonvales.size() > 24) throw std::length_error("orbit too large to enumerate by subsets");

  std::unordered_set<Permutation, PermutationHash> seen;
  for (std::size_t mask = 0; mask < (std::size_t{1} << nonvales.size()); ++mask) {
    Permutation cur = *this;
    for (std::size_t i = 0; i < nonvales.size(); ++i) {
      if (mask & (std::size_t{1} << i)) cur = cur.phi(nonvales[i]);
    }
    seen.insert(std::move(cur));
  }
  std::vector<Permutation> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool Permutation::satisfies_rep_conditions() const {
  if (word_.front() != 1) return false;
  for (std::size_t i = 1; i + 1 < word_.size(); ++i) {
    if (word_[i - 1] > word_[i] && word_[i] > word_[i + 1]) return false;  // double descent
  }
  const PinSet pins = pinnacle_set();
  for (int k : pins.elements()) {
    Factorization f = factorize(k);
    // pinnacles have nonempty beta and gamma
    if (*std::min_element(f.beta.begin(), f.beta.end()) >=
        *std::min_element(f.gamma.begin(), f.gamma.end())) {
      return false;
    }
  }
  return true;
}

Permutation Permutation::lex_min_of_orbit() const {
  std::vector<Permutation> orb = orbit();
  return orb.front();  // orbit() returns sorted
}

long Permutation::inversions() const {
  long count = 0;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    for (std::size_t j = i + 1; j < word_.size(); ++j) {
      if (word_[i] > word_[j]) ++count;
    }
  }
  return count;
}

namespace {

std::vector<int> swap_values(const std::vector<int>& w, int i) {
  std::vector<int> out(w);
  for (int& x : out) {
    if (x == i) x = i + 1;
    else if (x == i + 1) x = i;
  }
  return out;
}

}  // namespace

std::vector<Permutation> Permutation::covers_down() const {
  std::vector<Permutation> out;
  std::vector<int> pos(word_.size() + 2, 0);
  for (std::size_t i = 0; i < word_.size(); ++i) pos[word_[i]] = static_cast<int>(i);
  for (int i = 1; i < size(); ++i) {
    if (pos[i + 1] < pos[i]) out.push_back(unchecked(swap_values(word_, i)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> Permutation::covers_up() const {
  std::vector<Permutation> out;
  std::vector<int> pos(word_.size() + 2, 0);
  for (std::size_t i = 0; i < word_.size(); ++i) pos[word_[i]] = static_cast<int>(i);
  for (int i = 1; i < size(); ++i) {
    if (pos[i] < pos[i + 1]) out.push_back(unchecked(swap_values(word_, i)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(word_[i]);
  }
  return out;
}

std::string Permutation::compact() const {
  if (size() > 9) throw std::invalid_argument("compact form requires n <= 9");
  std::string out;
  for (int v : word_) out += static_cast<char>('0' + v);
  return out;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (int v : p.word()) {
    h ^= static_cast<std::size_t>(v);
    h *= 0x100000001b3ull;
  }
  return h;
}

Permutation standardize(const std::vector<int>& word) {
  std::map<int, int> rank;
  for (int v : word) {
    if (!rank.emplace(v, 0).second) {
      throw std::invalid_argument("standardize requires distinct letters");
    }
  }
  int next = 1;
  for (auto& [value, r] : rank) r = next++;
  std::vector<int> out;
  out.reserve(word.size());
  for (int v : word) out.push_back(rank[v]);
  return Permutation(std::move(out));
}

}  // namespace pinnacle
