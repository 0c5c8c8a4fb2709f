#pragma once

// Independent brute-force oracles used only by the tests.  Everything in
// this header is deliberately written from first principles (explicit
// element sets, naive closure, exhaustive search) so that it shares no
// code path with the library implementation it cross-checks.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "frattini/perm.hpp"

namespace oracle {

using frattini::Perm;
using frattini::Point;

// Exhaustive closure of a generating set under multiplication.
inline std::set<Perm> closure(const std::vector<Perm>& gens, std::size_t cap = 1000000) {
  std::set<Perm> elems;
  if (gens.empty()) return elems;
  elems.insert(Perm(gens.front().degree()));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Perm> snapshot(elems.begin(), elems.end());
    for (const Perm& a : snapshot)
      for (const Perm& g : gens) {
        Perm p = a * g;
        if (elems.insert(p).second) grew = true;
        if (elems.size() > cap) throw std::runtime_error("oracle closure cap exceeded");
      }
  }
  return elems;
}

// All subgroups of a small group, as sorted element vectors, found by
// repeatedly extending known subgroups with one extra element.
inline std::set<std::vector<Perm>> all_subgroups_brute(const std::vector<Perm>& elements) {
  std::size_t degree = elements.front().degree();
  auto as_sorted = [](const std::set<Perm>& s) {
    return std::vector<Perm>(s.begin(), s.end());
  };
  std::set<std::vector<Perm>> known;
  std::vector<std::vector<Perm>> frontier;
  std::vector<Perm> triv{Perm(degree)};
  known.insert(triv);
  frontier.push_back(triv);
  while (!frontier.empty()) {
    std::vector<Perm> h = frontier.back();
    frontier.pop_back();
    for (const Perm& x : elements) {
      if (std::binary_search(h.begin(), h.end(), x)) continue;
      std::vector<Perm> gens = h;
      gens.push_back(x);
      std::vector<Perm> ext = as_sorted(closure(gens));
      if (known.insert(ext).second) frontier.push_back(ext);
    }
  }
  return known;
}

// Conjugacy classes by direct conjugation of every element by every element.
inline std::vector<std::set<Perm>> conjugacy_classes_brute(const std::vector<Perm>& elements) {
  std::set<Perm> seen;
  std::vector<std::set<Perm>> classes;
  for (const Perm& x : elements) {
    if (seen.count(x)) continue;
    std::set<Perm> cls;
    for (const Perm& g : elements) cls.insert(x.conjugated_by(g));
    for (const Perm& y : cls) seen.insert(y);
    classes.push_back(std::move(cls));
  }
  return classes;
}

// Normal subgroups = subgroups that are unions of conjugacy classes.
inline std::set<std::vector<Perm>> normal_subgroups_brute(const std::vector<Perm>& elements) {
  auto classes = conjugacy_classes_brute(elements);
  std::set<std::vector<Perm>> out;
  for (const auto& sub : all_subgroups_brute(elements)) {
    std::set<Perm> s(sub.begin(), sub.end());
    bool union_of_classes = true;
    for (const auto& cls : classes) {
      bool some = false, all = true;
      for (const Perm& x : cls) {
        if (s.count(x))
          some = true;
        else
          all = false;
      }
      if (some && !all) {
        union_of_classes = false;
        break;
      }
    }
    if (union_of_classes) out.insert(sub);
  }
  return out;
}

// |Aut(G)| by exhaustive search over all image tuples of a generating
// tuple.  Each candidate map is extended over the whole group via words in
// the generators and accepted only when it is a bijective homomorphism.
inline std::uint64_t automorphism_count_brute(const std::vector<Perm>& gens,
                                              const std::vector<Perm>& elements) {
  std::size_t degree = gens.front().degree();
  std::set<Perm> whole(elements.begin(), elements.end());

  // Express every element as a word in the generators (BFS).
  std::map<Perm, std::vector<std::size_t>> word;
  word[Perm(degree)] = {};
  std::vector<Perm> queue{Perm(degree)};
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Perm nxt = cur * gens[gi];
      if (word.count(nxt)) continue;
      auto w = word[cur];
      w.push_back(gi);
      word[nxt] = std::move(w);
      queue.push_back(nxt);
    }
  }
  if (word.size() != elements.size()) throw std::runtime_error("oracle: gens do not generate");

  std::uint64_t count = 0;
  std::vector<std::size_t> pick(gens.size(), 0);
  const std::size_t n = elements.size();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < gens.size(); ++i) total *= n;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    std::vector<Perm> img;
    img.reserve(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      img.push_back(elements[c % n]);
      c /= n;
    }
    // Evaluate the induced map on every element and test bijectivity.
    std::set<Perm> image_set;
    std::map<Perm, Perm> phi;
    bool ok = true;
    for (const auto& [x, w] : word) {
      Perm y(degree);
      for (std::size_t gi : w) y = y * img[gi];
      if (!whole.count(y) || !image_set.insert(y).second) {
        ok = false;
        break;
      }
      phi.emplace(x, y);
    }
    if (!ok) continue;
    // Homomorphism check over all pairs.
    for (const Perm& a : elements) {
      for (const Perm& b : elements) {
        if (!(phi.at(a * b) == phi.at(a) * phi.at(b))) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) ++count;
  }
  return count;
}

// ---- 4-element field and 2x2 determinant-1 matrices over it ----------

// GF(4) = {0, 1, w, w+1} with w^2 = w + 1; elements coded 0..3 as bit
// pairs (b0 = constant term, b1 = coefficient of w).
inline unsigned gf4_add(unsigned a, unsigned b) { return a ^ b; }
inline unsigned gf4_mul(unsigned a, unsigned b) {
  unsigned r = 0;
  for (unsigned i = 0; i < 2; ++i)
    if (b & (1u << i)) {
      unsigned t = a;
      for (unsigned k = 0; k < i; ++k) {
        t <<= 1;
        if (t & 4) t = (t & 3) ^ 3;  // reduce w^2 -> w + 1
      }
      r ^= t;
    }
  return r;
}

struct Mat2 {
  unsigned a, b, c, d;
  friend auto operator<=>(const Mat2&, const Mat2&) = default;
};

// Every 2x2 matrix over GF(4) with determinant 1.
inline std::vector<Mat2> sl2_gf4_matrices() {
  std::vector<Mat2> out;
  for (unsigned a = 0; a < 4; ++a)
    for (unsigned b = 0; b < 4; ++b)
      for (unsigned c = 0; c < 4; ++c)
        for (unsigned d = 0; d < 4; ++d) {
          unsigned det = gf4_add(gf4_mul(a, d), gf4_mul(b, c));
          if (det == 1) out.push_back({a, b, c, d});
        }
  return out;
}

// ---- quaternion group multiplication table ---------------------------

// Q8 = {1, -1, i, -i, j, -j, k, -k} coded 0..7 in that order; the table is
// written out from the defining relations i^2 = j^2 = k^2 = ijk = -1.
inline const std::vector<std::vector<int>>& q8_table() {
  static const std::vector<std::vector<int>> t = {
      {0, 1, 2, 3, 4, 5, 6, 7},  // 1
      {1, 0, 3, 2, 5, 4, 7, 6},  // -1
      {2, 3, 1, 0, 6, 7, 5, 4},  // i
      {3, 2, 0, 1, 7, 6, 4, 5},  // -i
      {4, 5, 7, 6, 1, 0, 2, 3},  // j
      {5, 4, 6, 7, 0, 1, 3, 2},  // -j
      {6, 7, 4, 5, 3, 2, 1, 0},  // k
      {7, 6, 5, 4, 2, 3, 0, 1},  // -k
  };
  return t;
}

// Element orders of a finite group presented by its multiplication table.
inline std::vector<std::uint64_t> table_orders(const std::vector<std::vector<int>>& table) {
  std::vector<std::uint64_t> out;
  for (std::size_t x = 0; x < table.size(); ++x) {
    std::uint64_t n = 1;
    std::size_t cur = x;
    while (cur != 0) {
      cur = static_cast<std::size_t>(table[cur][x]);
      ++n;
      if (n > table.size() + 1) throw std::runtime_error("oracle: table is not a group");
    }
    out.push_back(n);
  }
  return out;
}

// Frattini subgroup of a small group from its full subgroup list:
// intersection of the maximal proper subgroups.
inline std::vector<Perm> frattini_brute(const std::vector<Perm>& elements) {
  auto subs = all_subgroups_brute(elements);
  std::vector<Perm> whole(elements.begin(), elements.end());
  std::sort(whole.begin(), whole.end());
  std::vector<std::vector<Perm>> proper;
  for (const auto& s : subs)
    if (s.size() < whole.size()) proper.push_back(s);
  std::vector<std::vector<Perm>> maximal;
  for (const auto& s : proper) {
    bool is_max = true;
    for (const auto& t : proper)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(s);
  }
  if (maximal.empty()) return whole;  // no proper subgroup: Phi(G) = G
  std::vector<Perm> inter = maximal.front();
  for (std::size_t i = 1; i < maximal.size(); ++i) {
    std::vector<Perm> next;
    std::set_intersection(inter.begin(), inter.end(), maximal[i].begin(), maximal[i].end(),
                          std::back_inserter(next));
    inter = std::move(next);
  }
  return inter;
}

}  // namespace oracle
