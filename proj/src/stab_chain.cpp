#include "frattini/stab_chain.hpp"

#include <cassert>

namespace frattini {

StabChain::StabChain(std::vector<Perm> gens, std::size_t degree) : degree_(degree) {
  if (degree == 0) throw ValidationError("group degree must be >= 1");
  for (const Perm& g : gens) {
    if (g.degree() != degree)
      throw ValidationError("generator degree does not match group degree");
  }
  for (const Perm& g : gens) {
    if (g.is_identity() || contains(g)) continue;
    insert_generator(0, g);
  }
  order_ = 1;
  for (const ChainLevel& l : levels_) order_ *= l.orbit.size();
#ifndef NDEBUG
  for (const Perm& g : gens) assert(contains(g));
#endif
}

std::pair<std::size_t, Perm> StabChain::sift(const Perm& g) const {
  Perm h = g;
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    const ChainLevel& l = levels_[i];
    Point pt = h(l.base);
    std::int32_t idx = l.pos[pt];
    if (idx < 0) return {i, h};
    h = h * l.transversal[static_cast<std::size_t>(idx)].inverse();
  }
  return {levels_.size(), h};
}

bool StabChain::contains(const Perm& g) const {
  if (g.degree() != degree_) throw DomainError("degree mismatch in membership test");
  auto [lvl, res] = sift(g);
  return lvl == levels_.size() && res.is_identity();
}

void StabChain::insert_generator(std::size_t level, const Perm& g) {
  if (g.is_identity()) return;
  if (level == levels_.size()) {
    ChainLevel l;
    l.base = g.smallest_moved();
    levels_.push_back(std::move(l));
  }
  levels_[level].gens.push_back(g);
  close_level(level);
}

void StabChain::rebuild_orbit(std::size_t level) {
  ChainLevel& l = levels_[level];
  l.orbit.assign(1, l.base);
  l.pos.assign(degree_, -1);
  l.pos[l.base] = 0;
  l.transversal.assign(1, Perm(degree_));
  for (std::size_t i = 0; i < l.orbit.size(); ++i) {
    for (const Perm& g : l.gens) {
      Point q = g(l.orbit[i]);
      if (l.pos[q] < 0) {
        l.pos[q] = static_cast<std::int32_t>(l.orbit.size());
        l.orbit.push_back(q);
        l.transversal.push_back(l.transversal[i] * g);
      }
    }
  }
}

void StabChain::close_level(std::size_t level) {
  rebuild_orbit(level);
  // Schreier generators of the point stabilizer; any non-trivial residue
  // joins the next level's generating set (it fixes this level's base and
  // all earlier ones) and that level is re-closed recursively.  Access by
  // index throughout: deeper insertions may reallocate levels_.
  for (std::size_t i = 0; i < levels_[level].orbit.size(); ++i) {
    for (std::size_t gi = 0; gi < levels_[level].gens.size(); ++gi) {
      Perm s = levels_[level].gens[gi];
      Point q = s(levels_[level].orbit[i]);
      Perm schreier = levels_[level].transversal[i] * s *
                      levels_[level].transversal[static_cast<std::size_t>(levels_[level].pos[q])]
                          .inverse();
      if (schreier.is_identity()) continue;
      // Reduce against the deeper levels before inserting.
      Perm h = schreier;
      for (std::size_t j = level + 1; j < levels_.size(); ++j) {
        const ChainLevel& dl = levels_[j];
        Point pt = h(dl.base);
        std::int32_t idx = dl.pos[pt];
        if (idx < 0) break;
        h = h * dl.transversal[static_cast<std::size_t>(idx)].inverse();
      }
      if (!h.is_identity()) insert_generator(level + 1, h);
    }
  }
}

std::vector<Perm> StabChain::strong_generators() const {
  std::vector<Perm> out;
  for (const ChainLevel& l : levels_)
    for (const Perm& g : l.gens) out.push_back(g);
  if (out.empty()) out.push_back(Perm(degree_));
  return out;
}

}  // namespace frattini
