#include "cgt/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cgt {

Perm::Perm(int degree) {
  if (degree < 1)
    throw DomainError("permutation degree must be at least 1");
  images_.resize(degree);
  for (int i = 0; i < degree; ++i)
    images_[i] = i + 1;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n < 1)
    throw DomainError("permutation degree must be at least 1");
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 1 || v > n)
      throw DomainError("image value out of range");
    if (seen[v - 1])
      throw DomainError("image sequence is not a bijection");
    seen[v - 1] = 1;
  }
}

int Perm::image(int point) const {
  if (point < 1 || point > degree())
    throw DomainError("point out of range");
  return images_[point - 1];
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1)
      return false;
  return true;
}

int Perm::smallest_moved() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1)
      return i + 1;
  return 0;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i)
    inv[images_[i] - 1] = i + 1;
  return Perm(std::move(inv));
}

Perm Perm::power(std::uint64_t e) const {
  Perm result(degree());
  Perm sq = *this;
  while (e > 0) {
    if (e & 1)
      result = compose(result, sq);
    sq = compose(sq, sq);
    e >>= 1;
  }
  return result;
}

std::string Perm::cycles() const { return format_cycles(*this); }

Perm compose(const Perm& p, const Perm& q) {
  if (p.degree() != q.degree())
    throw DomainError("degree mismatch in composition");
  std::vector<int> img(p.degree());
  for (int i = 0; i < p.degree(); ++i)
    img[i] = q.images()[p.images()[i] - 1];
  return Perm(std::move(img));
}

Perm parse_cycles(const std::string& text, int degree) {
  if (degree < 1)
    throw ParseError("degree must be at least 1");
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i)
    img[i] = i + 1;
  std::vector<char> seen(degree, 0);

  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_ws();
  if (i >= n)
    throw ParseError("empty cycle expression");

  bool any_cycle = false;
  while (i < n) {
    if (text[i] != '(')
      throw ParseError("expected '(' in cycle expression");
    ++i;
    any_cycle = true;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i >= n)
        throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected point or ')' in cycle");
      int value = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > degree)
          throw ParseError("point out of range in cycle expression");
        ++i;
      }
      if (value < 1 || value > degree)
        throw ParseError("point out of range in cycle expression");
      if (seen[value - 1])
        throw ParseError("repeated point in cycle expression");
      seen[value - 1] = 1;
      cyc.push_back(value);
    }
    for (std::size_t j = 0; j + 1 < cyc.size(); ++j)
      img[cyc[j] - 1] = cyc[j + 1];
    if (cyc.size() >= 2)
      img[cyc.back() - 1] = cyc.front();
    skip_ws();
  }
  if (!any_cycle)
    throw ParseError("empty cycle expression");
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::ostringstream out;
  std::vector<char> visited(p.degree(), 0);
  bool any = false;
  for (int start = 1; start <= p.degree(); ++start) {
    if (visited[start - 1] || p.images()[start - 1] == start)
      continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      visited[x - 1] = 1;
      if (!first)
        out << ' ';
      out << x;
      first = false;
      x = p.images()[x - 1];
    } while (x != start);
    out << ')';
  }
  if (!any)
    return "()";
  return out.str();
}

std::vector<int> apply_to_tuple(const Perm& p, const std::vector<int>& tuple) {
  std::vector<int> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i)
    out[i] = p.image(tuple[i]);
  return out;
}

} // namespace cgt
