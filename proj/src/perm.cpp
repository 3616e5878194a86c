#include "cosetmg/perm.hpp"

#include <limits>
#include <numeric>
#include <sstream>

#include "cosetmg/errors.hpp"

namespace cosetmg {

Perm::Perm(int degree) : images_(degree) {
  if (degree < 0) throw Error("permutation degree must be nonnegative");
  std::iota(images_.begin(), images_.end(), 0);
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 0 || v >= degree() || seen[v]) throw Error("images are not a bijection of {0..n-1}");
    seen[v] = 1;
  }
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
  return Perm(std::move(inv));
}

int Perm::order() const {
  std::vector<char> seen(images_.size(), 0);
  long long ord = 1;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, static_cast<long long>(len));
    if (ord > std::numeric_limits<int>::max()) throw Error("permutation order overflows int");
  }
  return static_cast<int>(ord);
}

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree()) throw Error("degree mismatch in composition");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i) img[i] = p(q(i));
  return Perm(std::move(img));
}

Perm parse_cycles(const std::string& text, int degree) {
  Perm result(degree);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
  };
  std::vector<std::vector<int>> cycles;
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw Error("expected '(' in cycle notation: " + text);
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!isdigit(static_cast<unsigned char>(text[pos])))
        throw Error("expected point in cycle notation: " + text);
      int v = 0;
      while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
        v = 10 * v + (text[pos++] - '0');
      if (v >= degree) throw Error("cycle point exceeds degree");
      cycle.push_back(v);
      skip_ws();
    }
    if (pos == text.size()) throw Error("unterminated cycle: " + text);
    ++pos;  // ')'
    for (std::size_t i = 0; i < cycle.size(); ++i)
      for (std::size_t j = i + 1; j < cycle.size(); ++j)
        if (cycle[i] == cycle[j]) throw Error("repeated point inside a cycle");
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  // right to left, as function composition
  for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 0);
    const auto& c = *it;
    for (std::size_t i = 0; i < c.size(); ++i) img[c[i]] = c[(i + 1) % c.size()];
    result = Perm(std::move(img)) * result;
  }
  return result;
}

std::string to_cycles(const Perm& p) {
  std::vector<char> seen(p.degree(), 0);
  std::ostringstream out;
  bool any = false;
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) {
      seen[i] = 1;
      continue;
    }
    out << '(';
    bool first = true;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      if (!first) out << ' ';
      out << j;
      first = false;
    }
    out << ')';
    any = true;
  }
  if (!any) return "()";
  return out.str();
}

}  // namespace cosetmg
