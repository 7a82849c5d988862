#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cgt/errors.hpp"

namespace cgt {

/// A permutation of {1..n}, stored as the sequence of images of 1..n.
///
/// Values are immutable after construction.  Products compose left to
/// right: (p * q) maps x to q(p(x)), i.e. p acts first.  All points in
/// the public interface are 1-based, matching standard cycle notation.
class Perm {
public:
  /// Identity on {1..degree}.
  explicit Perm(int degree);

  /// From an image sequence (1-based values); throws DomainError if the
  /// sequence is not a bijection of {1..n}.
  explicit Perm(std::vector<int> images);

  static Perm identity(int degree) { return Perm(degree); }

  int degree() const { return static_cast<int>(images_.size()); }

  /// Image of a point; throws DomainError if out of range.
  int image(int point) const;

  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  /// Smallest moved point, or 0 for the identity.
  int smallest_moved() const;

  Perm inverse() const;

  /// p.power(e) = p composed with itself e times (e >= 0).
  Perm power(std::uint64_t e) const;

  std::string cycles() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  /// Lexicographic order on image sequences (degrees must match in practice;
  /// shorter sequences compare first).
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

private:
  std::vector<int> images_; // images_[i] = image of point i+1
};

/// compose(p, q) maps x to q(p(x)).  Throws DomainError on degree mismatch.
Perm compose(const Perm& p, const Perm& q);

inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// Parse whitespace-separated cycles, e.g. "(1 2 3 4)(5 6)"; "()" is the
/// identity.  Every point must lie in {1..degree} and may appear at most
/// once in the whole expression.
Perm parse_cycles(const std::string& text, int degree);

/// Canonical cycle notation: fixed points omitted, cycles sorted by their
/// smallest element, each cycle written starting from its smallest element.
/// The identity prints as "()".
std::string format_cycles(const Perm& p);

/// Coordinatewise image of a tuple of points.
std::vector<int> apply_to_tuple(const Perm& p, const std::vector<int>& tuple);

} // namespace cgt
