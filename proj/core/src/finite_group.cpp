#include "sscover/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace sscover {

FiniteGroup::FiniteGroup(std::vector<Permutation> elements,
                         std::vector<Permutation> generators)
    : elements_(std::move(elements)), generators_(std::move(generators)) {}

FiniteGroup FiniteGroup::closure(std::vector<Permutation> generators,
                                 std::size_t cap) {
  if (generators.empty()) return trivial(1);
  int degree = generators.front().degree();
  for (const auto &g : generators)
    if (g.degree() != degree)
      throw std::invalid_argument("generators have mixed degrees");

  std::set<Permutation> elements;
  std::deque<Permutation> frontier;
  Permutation id = Permutation::identity(degree);
  elements.insert(id);
  frontier.push_back(id);
  while (!frontier.empty()) {
    Permutation current = frontier.front();
    frontier.pop_front();
    for (const auto &g : generators) {
      Permutation next = g * current;
      if (elements.insert(next).second) {
        if (elements.size() > cap)
          throw std::length_error("group closure exceeds the element cap");
        frontier.push_back(next);
      }
    }
  }

  std::vector<Permutation> sorted(elements.begin(), elements.end());
  std::vector<Permutation> gens;
  for (auto &g : generators)
    if (std::find(gens.begin(), gens.end(), g) == gens.end())
      gens.push_back(std::move(g));
  return FiniteGroup(std::move(sorted), std::move(gens));
}

FiniteGroup FiniteGroup::trivial(int degree) {
  return FiniteGroup({Permutation::identity(degree)}, {});
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic(n) needs n >= 1");
  if (n == 1) return trivial(1);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  return closure({Permutation(std::move(images))});
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw std::invalid_argument("dihedral(n) needs n >= 1");
  if (n == 1) return closure({Permutation::parse("(0 1)", 2)});
  if (n == 2)
    return closure({Permutation::parse("(0 1)", 4), Permutation::parse("(2 3)", 4)});
  std::vector<int> rot(static_cast<std::size_t>(n)), refl(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    rot[static_cast<std::size_t>(i)] = (i + 1) % n;
    refl[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return closure({Permutation(std::move(rot)), Permutation(std::move(refl))});
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric(n) needs n >= 1");
  if (n == 1) return trivial(1);
  std::vector<int> cyc(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cyc[static_cast<std::size_t>(i)] = (i + 1) % n;
  return closure({Permutation::parse("(0 1)", n), Permutation(std::move(cyc))});
}

FiniteGroup FiniteGroup::alternating(int n) {
  if (n < 1) throw std::invalid_argument("alternating(n) needs n >= 1");
  if (n <= 2) return trivial(n);
  if (n == 3) return closure({Permutation::parse("(0 1 2)", 3)});
  Permutation three = Permutation::parse("(0 1 2)", n);
  std::vector<int> images(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i;
  if (n % 2 == 1) {
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = (i + 1) % n;
  } else {
    // an (n-1)-cycle on {1, ..., n-1}
    for (int i = 1; i < n; ++i) images[static_cast<std::size_t>(i)] = 1 + (i % (n - 1));
  }
  return closure({three, Permutation(std::move(images))});
}

FiniteGroup FiniteGroup::semidirect_with_inversion(const FiniteGroup &g) {
  if (!g.is_abelian())
    throw std::invalid_argument("semidirect_with_inversion needs an abelian group");
  int n = static_cast<int>(g.order());
  auto translation = [&](const Permutation &by) {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      images[static_cast<std::size_t>(i)] =
          static_cast<int>(g.index_of(by * g.elements()[static_cast<std::size_t>(i)]));
    return Permutation(std::move(images));
  };
  std::vector<int> inv(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    inv[static_cast<std::size_t>(i)] =
        static_cast<int>(g.index_of(g.elements()[static_cast<std::size_t>(i)].inverse()));

  std::vector<Permutation> gens;
  for (const auto &gen : g.generators()) gens.push_back(translation(gen));
  gens.push_back(Permutation(std::move(inv)));
  return closure(std::move(gens));
}

int FiniteGroup::degree() const { return elements_.front().degree(); }

bool FiniteGroup::contains(const Permutation &p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t FiniteGroup::index_of(const Permutation &p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p)
    throw std::invalid_argument("permutation is not a group element");
  return static_cast<std::size_t>(it - elements_.begin());
}

bool FiniteGroup::is_abelian() const {
  for (const auto &a : generators_)
    for (const auto &b : generators_)
      if (a * b != b * a) return false;
  return true;
}

std::optional<Permutation> FiniteGroup::cyclic_witness() const {
  for (const auto &g : elements_)
    if (g.order() == order()) return g;
  return std::nullopt;
}

bool FiniteGroup::operator==(const FiniteGroup &other) const {
  return degree() == other.degree() && elements_ == other.elements_;
}

namespace {

FiniteGroup one_factor_from_name(const std::string &name) {
  if (name.size() < 2)
    throw std::invalid_argument("unknown group name: " + name);
  char kind = name.front();
  int n = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(name[i])))
      throw std::invalid_argument("unknown group name: " + name);
    n = n * 10 + (name[i] - '0');
  }
  if (n < 1) throw std::invalid_argument("unknown group name: " + name);
  switch (kind) {
    case 'C': return FiniteGroup::cyclic(n);
    case 'D': return FiniteGroup::dihedral(n);
    case 'S': return FiniteGroup::symmetric(n);
    case 'A': return FiniteGroup::alternating(n);
    default: throw std::invalid_argument("unknown group name: " + name);
  }
}

}  // namespace

FiniteGroup group_from_name(const std::string &name) {
  std::vector<FiniteGroup> factors;
  std::size_t start = 0;
  for (;;) {
    std::size_t sep = name.find('x', start);
    std::string part = name.substr(start, sep == std::string::npos ? sep : sep - start);
    factors.push_back(one_factor_from_name(part));
    if (sep == std::string::npos) break;
    start = sep + 1;
  }
  if (factors.size() == 1) return factors.front();

  int total = 0;
  for (const auto &f : factors) total += f.degree();
  std::vector<Permutation> gens;
  int offset = 0;
  for (const auto &f : factors) {
    for (const auto &g : f.generators()) {
      std::vector<int> images(static_cast<std::size_t>(total));
      for (int i = 0; i < total; ++i) images[static_cast<std::size_t>(i)] = i;
      for (int i = 0; i < f.degree(); ++i)
        images[static_cast<std::size_t>(offset + i)] = offset + g(i);
      gens.push_back(Permutation(std::move(images)));
    }
    offset += f.degree();
  }
  return FiniteGroup::closure(std::move(gens));
}

}  // namespace sscover
