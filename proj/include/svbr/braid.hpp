#ifndef SVBR_BRAID_HPP
#define SVBR_BRAID_HPP

// Braid words on n strands.  Strands are numbered by their position at the
// top of the diagram; sigma_i crosses the strand in position i in front of
// the strand in position i+1.  Words are read top to bottom, so in a
// product a*b the word a acts first.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace svbr {

struct Permutation {
  // images[i-1] = rho(i), positions 1-based.
  int size = 0;
  std::vector<int> images;

  static Permutation identity(int n) {
    Permutation p;
    p.size = n;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
  }
  int operator()(int i) const { return images.at(i - 1); }
  bool is_identity() const {
    for (int i = 1; i <= size; ++i)
      if ((*this)(i) != i) return false;
    return true;
  }
  Permutation inverse() const {
    Permutation p = identity(size);
    for (int i = 1; i <= size; ++i) p.images[(*this)(i)-1] = i;
    return p;
  }
  // this first, then q.
  Permutation then(const Permutation& q) const {
    if (size != q.size) throw std::invalid_argument("permutation size mismatch");
    Permutation p = identity(size);
    for (int i = 1; i <= size; ++i) p.images[i - 1] = q((*this)(i));
    return p;
  }
  bool operator==(const Permutation& o) const {
    return size == o.size && images == o.images;
  }
};

inline std::vector<int> free_reduce(std::vector<int> w) {
  std::vector<int> out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g) out.pop_back();
    else out.push_back(g);
  }
  return out;
}

struct Braid {
  int strands = 1;
  std::vector<int> word;  // letters g, 1 <= |g| <= strands-1

  Braid() = default;
  Braid(int n, std::vector<int> w) : strands(n), word(free_reduce(std::move(w))) {
    check();
  }
  static Braid identity(int n) { return Braid(n, {}); }

  void check() const {
    if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
    for (int g : word)
      if (g == 0 || std::abs(g) > strands - 1)
        throw std::invalid_argument("braid letter out of range");
  }

  bool operator==(const Braid& o) const {
    return strands == o.strands && word == o.word;
  }
};

inline Braid compose(const Braid& a, const Braid& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand mismatch in braid composition");
  std::vector<int> w = a.word;
  w.insert(w.end(), b.word.begin(), b.word.end());
  return Braid(a.strands, std::move(w));
}

inline Braid inverse(const Braid& b) {
  std::vector<int> w;
  w.reserve(b.word.size());
  for (auto it = b.word.rbegin(); it != b.word.rend(); ++it) w.push_back(-*it);
  return Braid(b.strands, std::move(w));
}

inline Permutation permutation_of(const Braid& b) {
  // at[p-1] = strand currently in position p.
  std::vector<int> at(b.strands);
  std::iota(at.begin(), at.end(), 1);
  for (int g : b.word) {
    int j = std::abs(g);
    std::swap(at[j - 1], at[j]);
  }
  Permutation rho = Permutation::identity(b.strands);
  for (int p = 1; p <= b.strands; ++p) rho.images[at[p - 1] - 1] = p;
  return rho;
}

inline bool is_pure(const Braid& b) { return permutation_of(b).is_identity(); }

// Doubles the strand that starts in top position i.  The two copies travel
// as a parallel cable along the old strand; every letter is rewritten
// locally against the cable's current position.
inline Braid double_strand(const Braid& b, int i) {
  if (i < 1 || i > b.strands) throw std::out_of_range("strand index out of range");
  std::vector<int> out;
  int p = i;  // current position of the doubled strand in the old braid
  for (int g : b.word) {
    int j = std::abs(g), s = g > 0 ? 1 : -1;
    if (j == p) {            // cable at (p,p+1) crosses the strand at p+2
      out.push_back(s * (p + 1));
      out.push_back(s * p);
      p += 1;
    } else if (j == p - 1) { // strand at p-1 crosses the cable at (p,p+1)
      out.push_back(s * (p - 1));
      out.push_back(s * p);
      p -= 1;
    } else if (j < p - 1) {
      out.push_back(g);
    } else {                 // j > p: both strands lie beyond the cable
      out.push_back(s * (j + 1));
    }
  }
  return Braid(b.strands + 1, std::move(out));
}

// Deletes the strand that starts in top position i.
inline Braid remove_strand(const Braid& b, int i) {
  if (i < 1 || i > b.strands) throw std::out_of_range("strand index out of range");
  if (b.strands == 1) throw std::invalid_argument("cannot remove the only strand");
  std::vector<int> out;
  int p = i;
  for (int g : b.word) {
    int j = std::abs(g), s = g > 0 ? 1 : -1;
    if (j == p) p += 1;
    else if (j == p - 1) p -= 1;
    else if (j < p - 1) out.push_back(g);
    else out.push_back(s * (j - 1));
  }
  return Braid(b.strands - 1, std::move(out));
}

// The block of strands in positions [q, q+w1) crosses the block in
// positions [q+w1, q+w1+w2); sign +1 puts the left block in front.
inline Braid block_transposition(int strands, int q, int w1, int w2, int sign) {
  std::vector<int> w;
  if (sign >= 0) {
    for (int a = w1 - 1; a >= 0; --a)
      for (int c = 0; c < w2; ++c) w.push_back(q + a + c);
  } else {
    // under-crossing: the inverse of the over-crossing with swapped widths
    for (int a = w2 - 1; a >= 0; --a)
      for (int c = 0; c < w1; ++c) w.push_back(q + a + c);
    std::reverse(w.begin(), w.end());
    for (int& g : w) g = -g;
  }
  return Braid(strands, std::move(w));
}

namespace detail {

// Exact equality via the action on the standard curve system of the
// punctured disk: loops x_1..x_n around the punctures generate a free
// group, sigma_j maps x_j -> x_j x_{j+1} x_j^{-1}, x_{j+1} -> x_j, and the
// action is faithful, so a braid is trivial iff the integer letter vectors
// of all n image words are fixed.
inline void substitute_conjugate(std::vector<std::vector<int>>& img, int j, bool pos) {
  auto inv = [](const std::vector<int>& w) {
    std::vector<int> r;
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(-*it);
    return r;
  };
  auto cat = [](std::initializer_list<const std::vector<int>*> parts) {
    std::vector<int> r;
    for (auto* p : parts) r.insert(r.end(), p->begin(), p->end());
    return free_reduce(std::move(r));
  };
  std::vector<int>& a = img[j - 1];
  std::vector<int>& b = img[j];
  if (pos) {
    std::vector<int> ai = inv(a);
    std::vector<int> na = cat({&a, &b, &ai});
    b = a;
    a = std::move(na);
  } else {
    std::vector<int> bi = inv(b);
    std::vector<int> nb = cat({&bi, &a, &b});
    a = b;
    b = std::move(nb);
  }
}

inline bool acts_trivially(const Braid& b) {
  std::vector<std::vector<int>> img(b.strands);
  for (int t = 0; t < b.strands; ++t) img[t] = {t + 1};
  for (int g : b.word) substitute_conjugate(img, std::abs(g), g > 0);
  for (int t = 0; t < b.strands; ++t)
    if (img[t] != std::vector<int>{t + 1}) return false;
  return true;
}

}  // namespace detail

inline bool equal(const Braid& a, const Braid& b) {
  if (a.strands != b.strands) throw std::invalid_argument("strand mismatch in braid equality");
  if (a.word == b.word) return true;
  long ea = 0, eb = 0;
  for (int g : a.word) ea += g > 0 ? 1 : -1;
  for (int g : b.word) eb += g > 0 ? 1 : -1;
  if (ea != eb) return false;
  if (!(permutation_of(a) == permutation_of(b))) return false;
  return detail::acts_trivially(compose(a, inverse(b)));
}

inline bool is_trivial(const Braid& b) { return equal(b, Braid::identity(b.strands)); }

inline std::string print_braid(const Braid& b) {
  std::ostringstream os;
  os << "B" << b.strands << ": ";
  if (b.word.empty()) {
    os << "e";
  } else {
    for (size_t i = 0; i < b.word.size(); ++i) {
      if (i) os << ",";
      os << b.word[i];
    }
  }
  return os.str();
}

inline Braid parse_braid(const std::string& text) {
  std::string t = text;
  auto bad = [&]() -> std::runtime_error {
    return std::runtime_error("cannot parse braid: " + text);
  };
  size_t pos = t.find_first_not_of(" \t");
  if (pos == std::string::npos || t[pos] != 'B') throw bad();
  size_t colon = t.find(':', pos);
  if (colon == std::string::npos) throw bad();
  int n = 0;
  try {
    n = std::stoi(t.substr(pos + 1, colon - pos - 1));
  } catch (...) {
    throw bad();
  }
  std::string rest = t.substr(colon + 1);
  std::vector<int> w;
  std::string tok;
  std::istringstream is(rest);
  while (std::getline(is, tok, ',')) {
    size_t b0 = tok.find_first_not_of(" \t\r\n");
    if (b0 == std::string::npos) throw bad();
    size_t b1 = tok.find_last_not_of(" \t\r\n");
    tok = tok.substr(b0, b1 - b0 + 1);
    if (tok == "e" && w.empty()) {
      if (std::getline(is, tok, ',')) throw bad();
      return Braid(n, {});
    }
    try {
      w.push_back(std::stoi(tok));
    } catch (...) {
      throw bad();
    }
  }
  if (w.empty()) throw bad();
  return Braid(n, std::move(w));
}

}  // namespace svbr

#endif
