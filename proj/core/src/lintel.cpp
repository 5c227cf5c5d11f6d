#include "gauss_lintel/lintel.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "canon.hpp"

namespace gauss_lintel {

namespace detail {

void pairing_of(std::span<const Chord> chords, std::vector<int>& out) {
  out.assign(chords.size() * 2, -1);
  for (const Chord& c : chords) {
    out[c.first] = c.second;
    out[c.second] = c.first;
  }
}

void sorted_chords_of_pairing(std::span<const int> pairing,
                              std::vector<Chord>& out) {
  out.clear();
  const int m = static_cast<int>(pairing.size());
  for (int e = 0; e < m; ++e) {
    if (pairing[e] > e) out.push_back({e, pairing[e]});
  }
}

namespace {

// Lexicographic comparison of the transform (inv, s) of `pairing` against the
// sorted chords B, without materializing the transform. Under the transform,
// endpoint e is paired with
//   inv = 0:  (pairing[(e - s) mod 2n] + s) mod 2n
//   inv = 1:  (s - pairing[(s - e) mod 2n]) mod 2n
// and the transform's sorted chords are (e, q(e)) for ascending e with
// q(e) > e, so they can be streamed against B chord by chord. The very first
// chord of both sides starts at 0, so mismatches usually resolve immediately.
int compare_transform(const int* pairing, int m, bool inv, int s,
                      const Chord* b) {
  int k = 0;
  int idx = inv ? s : (s == 0 ? 0 : m - s);
  for (int e = 0; e < m; ++e) {
    int q;
    if (!inv) {
      q = pairing[idx] + s;
      if (q >= m) q -= m;
      if (++idx == m) idx = 0;
    } else {
      q = s - pairing[idx];
      if (q < 0) q += m;
      if (--idx < 0) idx = m - 1;
    }
    if (q > e) {
      if (e != b[k].first) return e < b[k].first ? -1 : 1;
      if (q != b[k].second) return q < b[k].second ? -1 : 1;
      ++k;
    }
  }
  return 0;
}

void write_transform(const int* pairing, int m, bool inv, int s,
                     std::vector<Chord>& out) {
  out.clear();
  int idx = inv ? s : (s == 0 ? 0 : m - s);
  for (int e = 0; e < m; ++e) {
    int q;
    if (!inv) {
      q = pairing[idx] + s;
      if (q >= m) q -= m;
      if (++idx == m) idx = 0;
    } else {
      q = s - pairing[idx];
      if (q < 0) q += m;
      if (--idx < 0) idx = m - 1;
    }
    if (q > e) out.push_back({e, q});
  }
}

}  // namespace

void canonical_chords(std::span<const int> pairing,
                      std::vector<Chord>& chords) {
  const int m = static_cast<int>(pairing.size());
  for (int inv = 0; inv < 2; ++inv) {
    for (int s = 0; s < m; ++s) {
      if (inv == 0 && s == 0) continue;  // identity: `chords` itself
      if (compare_transform(pairing.data(), m, inv != 0, s, chords.data()) <
          0) {
        write_transform(pairing.data(), m, inv != 0, s, chords);
      }
    }
  }
}

bool is_self_canonical(std::span<const int> pairing,
                       std::span<const Chord> sorted) {
  const int m = static_cast<int>(pairing.size());
  for (int inv = 0; inv < 2; ++inv) {
    for (int s = 0; s < m; ++s) {
      if (inv == 0 && s == 0) continue;
      if (compare_transform(pairing.data(), m, inv != 0, s, sorted.data()) <
          0) {
        return false;
      }
    }
  }
  return true;
}

SortedLintel make_sorted_unchecked(std::vector<Chord> chords) {
  return SortedLintel(std::move(chords), SortedLintel::unchecked_t{});
}

}  // namespace detail

Lintel::Lintel(std::vector<Chord> chords) : chords_(std::move(chords)) {
  const int n = size();
  if (n == 0) throw InvalidLintel("a lintel needs at least one chord");
  const int m = 2 * n;
  std::vector<char> used(m, 0);
  for (const Chord& c : chords_) {
    for (int e : {c.first, c.second}) {
      if (e < 0 || e >= m) {
        throw InvalidLintel("endpoint " + std::to_string(e) +
                            " outside 0.." + std::to_string(m - 1));
      }
      if (used[e]) {
        throw InvalidLintel("endpoint " + std::to_string(e) + " used twice");
      }
      used[e] = 1;
    }
    if (((c.first - c.second) & 1) == 0) {
      throw C1Violation("chord [" + std::to_string(c.first) + "," +
                        std::to_string(c.second) +
                        "] has even endpoint difference");
    }
  }
}

int Lintel::partner(int e) const {
  for (const Chord& c : chords_) {
    if (c.first == e) return c.second;
    if (c.second == e) return c.first;
  }
  throw OutOfRange("endpoint " + std::to_string(e) + " outside 0.." +
                   std::to_string(positions() - 1));
}

SortedLintel::SortedLintel(const Lintel& raw) {
  const int m = raw.positions();
  std::vector<int> partner(m, -1);
  for (const Chord& c : raw.chords()) {
    partner[std::min(c.first, c.second)] = std::max(c.first, c.second);
  }
  chords_.reserve(raw.size());
  for (int e = 0; e < m; ++e) {
    if (partner[e] >= 0) chords_.push_back({e, partner[e]});
  }
}

SortedLintel::SortedLintel(std::vector<Chord> chords, unchecked_t) {
  chords_ = std::move(chords);
}

GaussWord::GaussWord(std::vector<int> symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty() || symbols_.size() % 2 != 0) {
    throw NotDoubleOccurrence("word length must be a positive even number");
  }
  std::map<int, int> counts;
  for (int s : symbols_) ++counts[s];
  for (const auto& [sym, count] : counts) {
    if (count != 2) {
      throw NotDoubleOccurrence("symbol " + std::to_string(sym) + " occurs " +
                                std::to_string(count) + " times, expected 2");
    }
  }
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  if (n == 0) throw InvalidPermutation("empty permutation");
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 0 || v >= n) {
      throw InvalidPermutation("image " + std::to_string(v) + " outside 0.." +
                               std::to_string(n - 1));
    }
    if (seen[v]) {
      throw InvalidPermutation("image " + std::to_string(v) + " repeated");
    }
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidPermutation("size must be positive");
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = i;
  return Permutation(std::move(img));
}

int Permutation::operator()(int i) const {
  if (i < 0 || i >= size()) {
    throw OutOfRange("index " + std::to_string(i) + " outside 0.." +
                     std::to_string(size() - 1));
  }
  return images_[i];
}

SortedLintel from_gauss_word(const GaussWord& w) {
  const auto& sym = w.symbols();
  const int m = w.length();
  std::vector<Chord> chords;
  chords.reserve(w.size());
  std::map<int, int> first_pos;
  for (int i = 0; i < m; ++i) {
    auto [it, inserted] = first_pos.try_emplace(sym[i], i);
    if (!inserted) {
      const int j = it->second;
      if (((i - j) & 1) == 0) {
        throw C1Violation("symbol " + std::to_string(sym[i]) +
                          " occurs at positions " + std::to_string(j) +
                          " and " + std::to_string(i) +
                          " (even difference)");
      }
      chords.push_back({j, i});
    }
  }
  std::sort(chords.begin(), chords.end());
  return detail::make_sorted_unchecked(std::move(chords));
}

GaussWord to_gauss_word(const Lintel& L) {
  std::vector<int> sym(L.positions());
  int label = 1;
  for (const Chord& c : L.chords()) {
    sym[c.first] = label;
    sym[c.second] = label;
    ++label;
  }
  return GaussWord(std::move(sym));
}

SortedLintel sort_lintel(const Lintel& L) { return SortedLintel(L); }

std::strong_ordering l_compare(const SortedLintel& a, const SortedLintel& b) {
  if (a.size() != b.size()) {
    throw SizeMismatch("cannot L-compare lintels of sizes " +
                       std::to_string(a.size()) + " and " +
                       std::to_string(b.size()));
  }
  return a.chords() <=> b.chords();
}

Lintel cyclic_shift(const Lintel& L, int s) {
  const int m = L.positions();
  s = ((s % m) + m) % m;
  std::vector<Chord> out;
  out.reserve(L.size());
  for (const Chord& c : L.chords()) {
    out.push_back({(c.first + s) % m, (c.second + s) % m});
  }
  return Lintel(std::move(out));
}

Lintel invert(const Lintel& L) {
  const int m = L.positions();
  std::vector<Chord> out;
  out.reserve(L.size());
  for (const Chord& c : L.chords()) {
    out.push_back({(m - c.first) % m, (m - c.second) % m});
  }
  return Lintel(std::move(out));
}

SortedLintel canonical_lintel(const Lintel& L) {
  std::vector<int> pairing;
  detail::pairing_of(L.chords(), pairing);
  std::vector<Chord> chords;
  detail::sorted_chords_of_pairing(pairing, chords);
  detail::canonical_chords(pairing, chords);
  return detail::make_sorted_unchecked(std::move(chords));
}

bool is_canonical(const SortedLintel& L) {
  std::vector<int> pairing;
  detail::pairing_of(L.chords(), pairing);
  return detail::is_self_canonical(pairing, L.chords());
}

SortedLintel beta(const Permutation& p) {
  const int n = p.size();
  std::vector<int> partner(2 * n);
  for (int i = 0; i < n; ++i) {
    const int odd = 2 * i + 1;
    const int even = 2 * p.images()[i];
    partner[odd] = even;
    partner[even] = odd;
  }
  std::vector<Chord> chords;
  chords.reserve(n);
  for (int e = 0; e < 2 * n; ++e) {
    if (partner[e] > e) chords.push_back({e, partner[e]});
  }
  return detail::make_sorted_unchecked(std::move(chords));
}

}  // namespace gauss_lintel
