#include "cgt/group.hpp"

#include <algorithm>
#include <sstream>

namespace cgt {

GeneratedGroup::GeneratedGroup(int degree_, std::vector<Perm> generators_)
    : degree(degree_), generators(std::move(generators_)) {
  if (degree < 1)
    throw DomainError("group degree must be at least 1");
  if (generators.empty())
    throw DomainError("generator list must be nonempty");
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw DomainError("generator degree mismatch");
}

GeneratedGroup GeneratedGroup::trivial(int degree_) {
  return GeneratedGroup(degree_, {Perm::identity(degree_)});
}

GeneratedGroup parse_group_spec(const std::string& text) {
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw ParseError("group spec must be \"degree: gen1, gen2, ...\"");
  int degree = 0;
  {
    std::istringstream in(text.substr(0, colon));
    if (!(in >> degree))
      throw ParseError("bad degree in group spec");
    std::string rest;
    if (in >> rest)
      throw ParseError("bad degree in group spec");
    if (degree < 1)
      throw ParseError("degree must be at least 1");
  }
  std::vector<Perm> gens;
  std::string body = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string piece = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    // skip blank pieces only if the whole body is blank
    bool blank = piece.find_first_not_of(" \t\r\n") == std::string::npos;
    if (!blank)
      gens.push_back(parse_cycles(piece, degree));
    else if (comma != std::string::npos || !gens.empty() || pos != 0)
      throw ParseError("empty generator in group spec");
    if (comma == std::string::npos)
      break;
    pos = comma + 1;
  }
  if (gens.empty())
    throw ParseError("group spec has no generators");
  return GeneratedGroup(degree, std::move(gens));
}

std::string format_group(const GeneratedGroup& g) {
  std::ostringstream out;
  out << g.degree << ": ";
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (i)
      out << ", ";
    out << format_cycles(g.generators[i]);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// StabilizerChain

StabilizerChain::StabilizerChain(int degree) : degree_(degree) {
  if (degree < 1)
    throw DomainError("chain degree must be at least 1");
}

void StabilizerChain::add_level(int beta) {
  Level lvl;
  lvl.beta = beta;
  lvl.orbit = {beta};
  lvl.trans_index.assign(degree_ + 1, -1);
  lvl.trans_index[beta] = 0;
  lvl.trans.push_back(Perm::identity(degree_));
  base_.push_back(beta);
  levels_.push_back(std::move(lvl));
}

void StabilizerChain::recompute_orbit(Level& lvl) const {
  lvl.orbit.assign(1, lvl.beta);
  lvl.trans_index.assign(degree_ + 1, -1);
  lvl.trans_index[lvl.beta] = 0;
  lvl.trans.assign(1, Perm::identity(degree_));
  for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
    for (const Perm& s : lvl.gens) {
      const int image = s.image(lvl.orbit[k]);
      if (lvl.trans_index[image] < 0) {
        lvl.trans_index[image] = static_cast<int>(lvl.orbit.size());
        lvl.orbit.push_back(image);
        lvl.trans.push_back(compose(lvl.trans[k], s));
      }
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm p, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lvl = levels_[i];
    const int image = p.image(lvl.beta);
    const int idx = lvl.trans_index[image];
    if (idx < 0)
      return {std::move(p), i};
    p = compose(p, lvl.trans[idx].inverse());
  }
  return {std::move(p), levels_.size()};
}

void StabilizerChain::insert(const Perm& p) {
  if (p.degree() != degree_)
    throw DomainError("degree mismatch in chain insert");
  if (p.is_identity())
    return;
  auto [residue, level] = strip(p, 0);
  if (residue.is_identity())
    return;
  if (level == levels_.size())
    add_level(residue.smallest_moved());
  // The residue fixes every base point above its level, so it is a strong
  // generator for all levels down to `level`.
  for (std::size_t l = 0; l <= level; ++l) {
    levels_[l].gens.push_back(residue);
    recompute_orbit(levels_[l]);
  }
  verify_from_bottom();
}

void StabilizerChain::verify_from_bottom() {
  std::size_t i = levels_.size();
  while (i-- > 0) {
  restart_level:
    Level& lvl = levels_[i];
    for (std::size_t k = 0; k < lvl.orbit.size(); ++k) {
      for (const Perm& s : lvl.gens) {
        const int image = s.image(lvl.orbit[k]);
        const Perm sg = compose(compose(lvl.trans[k], s), lvl.trans[lvl.trans_index[image]].inverse());
        if (sg.is_identity())
          continue;
        auto [residue, j] = strip(sg, i + 1);
        if (residue.is_identity())
          continue;
        if (j == levels_.size())
          add_level(residue.smallest_moved());
        for (std::size_t l = i + 1; l <= j; ++l) {
          levels_[l].gens.push_back(residue);
          recompute_orbit(levels_[l]);
        }
        i = j;
        goto restart_level;
      }
    }
  }
}

StabilizerChain StabilizerChain::build(int degree, const std::vector<Perm>& generators,
                                       const std::vector<int>& seed_base) {
  StabilizerChain chain(degree);
  for (int beta : seed_base) {
    if (beta < 1 || beta > degree)
      throw DomainError("seed base point out of range");
    chain.add_level(beta);
  }
  for (const Perm& g : generators) {
    if (g.degree() != degree)
      throw DomainError("generator degree mismatch");
    chain.insert(g);
  }
  return chain;
}

std::uint64_t StabilizerChain::order() const {
  std::uint64_t result = 1;
  for (const Level& lvl : levels_)
    result *= static_cast<std::uint64_t>(lvl.orbit.size());
  return result;
}

std::vector<std::uint64_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::uint64_t> sizes;
  for (const Level& lvl : levels_)
    sizes.push_back(lvl.orbit.size());
  return sizes;
}

bool StabilizerChain::contains(const Perm& p) const {
  if (p.degree() != degree_)
    throw DomainError("degree mismatch in membership test");
  return strip(p, 0).first.is_identity();
}

Perm StabilizerChain::sift(const Perm& p) const { return strip(p, 0).first; }

std::vector<Perm> StabilizerChain::stabilizer_generators(std::size_t level) const {
  if (level >= levels_.size())
    return {};
  return levels_[level].gens;
}

std::vector<Perm> StabilizerChain::elements(std::uint64_t cap) const {
  if (order() > cap)
    throw CapExceededError("group too large to enumerate (order " + std::to_string(order()) +
                           " exceeds cap " + std::to_string(cap) + ")");
  std::vector<Perm> result{Perm::identity(degree_)};
  for (std::size_t i = levels_.size(); i-- > 0;) {
    const Level& lvl = levels_[i];
    std::vector<Perm> next;
    next.reserve(result.size() * lvl.trans.size());
    for (const Perm& u : lvl.trans)
      for (const Perm& r : result)
        next.push_back(compose(r, u));
    result = std::move(next);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Group-level operations

namespace {

// Smallest point moved by any of the perms, or 0 if all are trivial.
int smallest_moved_point(const std::vector<Perm>& gens) {
  int best = 0;
  for (const Perm& g : gens) {
    const int m = g.smallest_moved();
    if (m != 0 && (best == 0 || m < best))
      best = m;
  }
  return best;
}

} // namespace

StabilizerChain build_chain(const GeneratedGroup& g) {
  // Greedy base: descend through stabilizers, always fixing the smallest
  // moved point of the current stabilizer, then rebuild once with the full
  // base prescribed so that base() reports exactly the greedy sequence.
  std::vector<int> greedy;
  std::vector<Perm> current = g.generators;
  while (true) {
    const int beta = smallest_moved_point(current);
    if (beta == 0)
      break;
    greedy.push_back(beta);
    StabilizerChain step = StabilizerChain::build(g.degree, current, {beta});
    current = step.stabilizer_generators(1);
    if (current.empty())
      break;
  }
  return StabilizerChain::build(g.degree, g.generators, greedy);
}

std::uint64_t order(const GeneratedGroup& g) { return build_chain(g).order(); }

bool contains(const GeneratedGroup& g, const Perm& p) { return build_chain(g).contains(p); }

std::vector<std::vector<int>> orbits(const GeneratedGroup& g) {
  std::vector<std::vector<int>> result;
  std::vector<char> visited(g.degree + 1, 0);
  for (int start = 1; start <= g.degree; ++start) {
    if (visited[start])
      continue;
    std::vector<int> orbit{start};
    visited[start] = 1;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (const Perm& s : g.generators) {
        const int image = s.image(orbit[k]);
        if (!visited[image]) {
          visited[image] = 1;
          orbit.push_back(image);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.push_back(std::move(orbit));
  }
  return result;
}

GeneratedGroup point_stabilizer(const GeneratedGroup& g, int point) {
  if (point < 1 || point > g.degree)
    throw DomainError("stabilizer point out of range");
  StabilizerChain chain = StabilizerChain::build(g.degree, g.generators, {point});
  std::vector<Perm> gens = chain.stabilizer_generators(1);
  if (gens.empty())
    gens.push_back(Perm::identity(g.degree));
  return GeneratedGroup(g.degree, std::move(gens));
}

bool is_abelian(const GeneratedGroup& g) {
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    for (std::size_t j = i + 1; j < g.generators.size(); ++j)
      if (compose(g.generators[i], g.generators[j]) != compose(g.generators[j], g.generators[i]))
        return false;
  return true;
}

bool is_transitive(const GeneratedGroup& g) { return orbits(g).size() == 1; }

bool is_regular(const GeneratedGroup& g) {
  return is_transitive(g) && order(g) == static_cast<std::uint64_t>(g.degree);
}

GeneratedGroup disjoint_union_product(const std::vector<GeneratedGroup>& parts) {
  if (parts.empty())
    throw DomainError("disjoint union of no parts");
  int total = 0;
  for (const GeneratedGroup& part : parts)
    total += part.degree;
  std::vector<Perm> gens;
  int offset = 0;
  for (const GeneratedGroup& part : parts) {
    for (const Perm& p : part.generators) {
      std::vector<int> img(total);
      for (int i = 0; i < total; ++i)
        img[i] = i + 1;
      for (int i = 0; i < part.degree; ++i)
        img[offset + i] = offset + p.images()[i];
      gens.emplace_back(std::move(img));
    }
    offset += part.degree;
  }
  return GeneratedGroup(total, std::move(gens));
}

bool is_subgroup_of(const GeneratedGroup& a, const StabilizerChain& b_chain) {
  if (a.degree != b_chain.degree())
    throw DomainError("degree mismatch in subgroup test");
  for (const Perm& g : a.generators)
    if (!b_chain.contains(g))
      return false;
  return true;
}

bool group_equal(const GeneratedGroup& a, const GeneratedGroup& b) {
  if (a.degree != b.degree)
    return false;
  StabilizerChain cb = build_chain(b);
  if (build_chain(a).order() != cb.order())
    return false;
  return is_subgroup_of(a, cb);
}

} // namespace cgt
