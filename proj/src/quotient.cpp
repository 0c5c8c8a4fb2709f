#include "frattini/quotient.hpp"

namespace frattini {

Quotient::Quotient(const Group& g, const Group& n) : kernel_(n), quotient_(g) {
  if (!subgroup_le(n, g)) throw DomainError("quotient: kernel is not a subgroup");
  if (!is_normal_in(n, g)) throw DomainError("quotient: kernel is not normal");

  if (n.is_trivial()) {
    trivial_kernel_ = true;
    return;  // quotient_ already holds a copy of g
  }

  const std::uint64_t index = g.order() / n.order();
  if (index == 1) {
    quotient_ = Group::trivial(1);
    reps_.push_back(Perm(g.degree()));
    return;
  }

  reps_.push_back(Perm(g.degree()));
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const Perm& x : g.generators()) {
      Perm t = reps_[i] * x;
      bool known = false;
      for (const Perm& r : reps_) {
        if (kernel_.contains(t * r.inverse())) {
          known = true;
          break;
        }
      }
      if (!known) reps_.push_back(std::move(t));
    }
  }
  if (reps_.size() != index)
    throw DomainError("quotient: coset enumeration does not match the index");

  std::vector<Perm> qgens;
  for (const Perm& x : g.generators()) {
    std::vector<Point> img(reps_.size());
    for (std::size_t j = 0; j < reps_.size(); ++j)
      img[j] = static_cast<Point>(coset_of(reps_[j] * x));
    qgens.push_back(Perm(std::move(img)));
  }
  quotient_ = Group(reps_.size(), std::move(qgens));
  if (quotient_.order() != index)
    throw DomainError("quotient: coset action is not faithful");  // impossible for a normal kernel
}

std::uint32_t Quotient::coset_of(const Perm& x) const {
  for (std::size_t j = 0; j < reps_.size(); ++j)
    if (kernel_.contains(x * reps_[j].inverse())) return static_cast<std::uint32_t>(j);
  throw DomainError("quotient: element is not in the source group");
}

Perm Quotient::project(const Perm& x) const {
  if (trivial_kernel_) return x;
  std::vector<Point> img(reps_.size());
  for (std::size_t j = 0; j < reps_.size(); ++j)
    img[j] = static_cast<Point>(coset_of(reps_[j] * x));
  return Perm(std::move(img));
}

Group Quotient::project_subgroup(const Group& h) const {
  std::vector<Perm> gens;
  for (const Perm& x : h.generators()) gens.push_back(project(x));
  return subgroup_of(quotient_, std::move(gens));
}

}  // namespace frattini
