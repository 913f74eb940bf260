#include "sscover/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sscover {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty())
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 0 || v >= degree())
      throw std::invalid_argument("permutation image out of range");
    if (seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation images are not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int degree) {
  if (degree <= 0)
    throw std::invalid_argument("permutation degree must be positive");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::parse(const std::string &text, int degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size())
    throw std::invalid_argument("empty permutation string");
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw std::invalid_argument("expected '(' in cycle notation: " + text);
    ++i;
    std::vector<int> cycle;
    for (;;) {
      skip_ws();
      if (i == text.size())
        throw std::invalid_argument("unterminated cycle in: " + text);
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("expected point or ')' in cycle notation: " + text);
      int value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        ++i;
      }
      cycle.push_back(value);
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
  }

  int max_point = -1;
  for (const auto &cycle : cycles)
    for (int v : cycle) max_point = std::max(max_point, v);
  if (degree < 0) degree = max_point + 1;
  if (degree < 1) degree = 1;
  if (max_point >= degree)
    throw std::invalid_argument("cycle mentions point beyond degree: " + text);

  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> moved(static_cast<std::size_t>(degree), false);
  for (const auto &cycle : cycles) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      int from = cycle[k];
      int to = cycle[(k + 1) % cycle.size()];
      if (moved[static_cast<std::size_t>(from)])
        throw std::invalid_argument("point repeated across cycles: " + text);
      moved[static_cast<std::size_t>(from)] = true;
      images[static_cast<std::size_t>(from)] = to;
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x)
    if (images_[static_cast<std::size_t>(x)] != x) return false;
  return true;
}

Permutation operator*(const Permutation &a, const Permutation &b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("cannot compose permutations of different degree");
  std::vector<int> images(static_cast<std::size_t>(a.degree()));
  for (int x = 0; x < a.degree(); ++x)
    images[static_cast<std::size_t>(x)] = a(b(x));
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> images(images_.size());
  for (int x = 0; x < degree(); ++x)
    images[static_cast<std::size_t>(images_[static_cast<std::size_t>(x)])] = x;
  return Permutation(std::move(images));
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (const auto &cycle : cycles())
    result = std::lcm(result, static_cast<std::uint64_t>(cycle.size()));
  return result;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> result;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      seen[static_cast<std::size_t>(x)] = true;
      cycle.push_back(x);
      x = images_[static_cast<std::size_t>(x)];
    } while (x != start);
    if (cycle.size() >= 2) result.push_back(std::move(cycle));
  }
  return result;
}

std::string Permutation::to_cycles() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto &cycle : cs) {
    out << '(';
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (k) out << ' ';
      out << cycle[k];
    }
    out << ')';
  }
  return out.str();
}

}  // namespace sscover
