#include "cgt/closure.hpp"

#include <algorithm>
#include <numeric>

namespace cgt {

OrbitColoring::OrbitColoring(int degree, int arity, std::vector<std::int32_t> colors,
                             int color_count)
    : degree_(degree), arity_(arity), color_count_(color_count), colors_(std::move(colors)) {}

std::int64_t OrbitColoring::encode(const std::vector<int>& tuple) const {
  std::int64_t code = 0;
  for (int v : tuple)
    code = code * degree_ + (v - 1);
  return code;
}

std::vector<int> OrbitColoring::decode(std::int64_t code) const {
  std::vector<int> tuple(arity_);
  for (int i = arity_ - 1; i >= 0; --i) {
    tuple[i] = static_cast<int>(code % degree_) + 1;
    code /= degree_;
  }
  return tuple;
}

std::int32_t OrbitColoring::color_of_tuple(const std::vector<int>& tuple) const {
  if (static_cast<int>(tuple.size()) != arity_)
    throw DomainError("tuple arity mismatch");
  for (int v : tuple)
    if (v < 1 || v > degree_)
      throw DomainError("tuple entry out of range");
  return colors_[encode(tuple)];
}

OrbitColoring tuple_orbits(const GeneratedGroup& g, int k, const SearchLimits& limits) {
  if (k < 1)
    throw DomainError("tuple arity must be at least 1");
  std::int64_t cells = 1;
  for (int i = 0; i < k; ++i) {
    if (cells > limits.tuple_table / g.degree)
      throw CapExceededError("k-tuple table exceeds cap");
    cells *= g.degree;
  }

  const int n = g.degree;
  std::vector<std::int32_t> colors(cells, -1);
  std::vector<int> tuple(k), image(k);
  std::vector<std::int64_t> stack;
  int color_count = 0;

  for (std::int64_t start = 0; start < cells; ++start) {
    if (colors[start] >= 0)
      continue;
    // start is the smallest code of a fresh orbit: codes below it are done.
    ++color_count;
    colors[start] = static_cast<std::int32_t>(start);
    stack.assign(1, start);
    while (!stack.empty()) {
      std::int64_t code = stack.back();
      stack.pop_back();
      std::int64_t c = code;
      for (int i = k - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(c % n) + 1;
        c /= n;
      }
      for (const Perm& s : g.generators) {
        std::int64_t mapped = 0;
        for (int i = 0; i < k; ++i)
          mapped = mapped * n + (s.images()[tuple[i] - 1] - 1);
        if (colors[mapped] < 0) {
          colors[mapped] = static_cast<std::int32_t>(start);
          stack.push_back(mapped);
        }
      }
    }
  }
  return OrbitColoring(n, k, std::move(colors), color_count);
}

namespace {

// Backtracking over point images in increasing point order.  After the
// image of point i is chosen, every tuple whose entries are all assigned
// and whose maximum entry is i must map to a tuple of equal color; a
// mismatch prunes the branch.  Acceptances arrive in lexicographic order
// of image sequences.
class ColorSearch {
public:
  ColorSearch(const OrbitColoring& coloring, const std::function<bool(const Perm&)>& fn)
      : col_(coloring), fn_(fn), n_(coloring.degree()), k_(coloring.arity()) {
    tuples_by_max_.resize(n_ + 1);
    std::vector<int> tuple;
    for (std::int64_t code = 0; code < col_.table_size(); ++code) {
      tuple = col_.decode(code);
      tuples_by_max_[*std::max_element(tuple.begin(), tuple.end())].push_back(code);
    }
    image_.assign(n_ + 1, 0);
    used_.assign(n_ + 1, false);
  }

  bool run() { return descend(1); }

private:
  bool descend(int point) {
    if (point > n_) {
      std::vector<int> img(image_.begin() + 1, image_.end());
      return fn_(Perm(std::move(img)));
    }
    for (int candidate = 1; candidate <= n_; ++candidate) {
      if (used_[candidate])
        continue;
      image_[point] = candidate;
      if (consistent(point)) {
        used_[candidate] = true;
        const bool keep_going = descend(point + 1);
        used_[candidate] = false;
        if (!keep_going) {
          image_[point] = 0;
          return false;
        }
      }
    }
    image_[point] = 0;
    return true;
  }

  bool consistent(int point) const {
    std::vector<int> tuple(k_);
    for (std::int64_t code : tuples_by_max_[point]) {
      std::int64_t c = code;
      std::int64_t mapped = 0;
      for (int i = k_ - 1; i >= 0; --i) {
        tuple[i] = static_cast<int>(c % n_) + 1;
        c /= n_;
      }
      for (int i = 0; i < k_; ++i)
        mapped = mapped * n_ + (image_[tuple[i]] - 1);
      if (col_.color_of_code(mapped) != col_.color_of_code(code))
        return false;
    }
    return true;
  }

  const OrbitColoring& col_;
  const std::function<bool(const Perm&)>& fn_;
  int n_;
  int k_;
  std::vector<std::vector<std::int64_t>> tuples_by_max_;
  std::vector<int> image_;
  std::vector<bool> used_;
};

// Deterministic generator reduction: sift accepted elements in arrival
// order through an incrementally grown chain, keeping those that enlarge
// the group.
struct Reducer {
  explicit Reducer(int degree) : chain(degree) {}

  void offer(const Perm& p) {
    if (!chain.contains(p)) {
      kept.push_back(p);
      chain.insert(p);
    }
  }

  GeneratedGroup result(int degree) const {
    if (kept.empty())
      return GeneratedGroup::trivial(degree);
    return GeneratedGroup(degree, kept);
  }

  StabilizerChain chain;
  std::vector<Perm> kept;
};

GeneratedGroup closure_k1(const GeneratedGroup& g) {
  // A permutation preserves the 1-orbits iff it preserves each orbit
  // setwise, so the closure is the direct product of full symmetric
  // groups on the orbits.
  std::vector<Perm> gens;
  for (const std::vector<int>& orbit : orbits(g)) {
    if (orbit.size() >= 2) {
      std::vector<int> img(g.degree);
      std::iota(img.begin(), img.end(), 1);
      img[orbit[0] - 1] = orbit[1];
      img[orbit[1] - 1] = orbit[0];
      gens.emplace_back(std::move(img));
    }
    if (orbit.size() >= 3) {
      std::vector<int> img(g.degree);
      std::iota(img.begin(), img.end(), 1);
      for (std::size_t i = 0; i + 1 < orbit.size(); ++i)
        img[orbit[i] - 1] = orbit[i + 1];
      img[orbit.back() - 1] = orbit[0];
      gens.emplace_back(std::move(img));
    }
  }
  if (gens.empty())
    return GeneratedGroup::trivial(g.degree);
  return GeneratedGroup(g.degree, std::move(gens));
}

std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    r *= i;
  return r;
}

void check_search_degree(const GeneratedGroup& g, const SearchLimits& limits) {
  if (g.degree > limits.closure_degree)
    throw CapExceededError("degree " + std::to_string(g.degree) +
                           " exceeds closure search cap " +
                           std::to_string(limits.closure_degree));
}

} // namespace

bool for_each_color_preserving(const OrbitColoring& coloring,
                               const std::function<bool(const Perm&)>& fn) {
  ColorSearch search(coloring, fn);
  return search.run();
}

GeneratedGroup k_closure(const GeneratedGroup& g, int k, const SearchLimits& limits) {
  if (k < 1)
    throw DomainError("closure arity must be at least 1");
  check_search_degree(g, limits);
  if (k == 1)
    return closure_k1(g);

  const OrbitColoring coloring = tuple_orbits(g, k, limits);
  Reducer reducer(g.degree);
  for_each_color_preserving(coloring, [&](const Perm& p) {
    reducer.offer(p);
    return true;
  });
  return reducer.result(g.degree);
}

GeneratedGroup k_closure_naive(const GeneratedGroup& g, int k, const SearchLimits& limits) {
  if (k < 1)
    throw DomainError("closure arity must be at least 1");
  if (g.degree > limits.naive_degree)
    throw CapExceededError("degree " + std::to_string(g.degree) +
                           " exceeds naive closure cap " + std::to_string(limits.naive_degree));
  const OrbitColoring coloring = tuple_orbits(g, k, limits);

  const int n = g.degree;
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<int> tuple;
  Reducer reducer(n);
  do {
    bool ok = true;
    for (std::int64_t code = 0; code < coloring.table_size() && ok; ++code) {
      tuple = coloring.decode(code);
      std::int64_t mapped = 0;
      for (int i = 0; i < k; ++i)
        mapped = mapped * n + (img[tuple[i] - 1] - 1);
      ok = coloring.color_of_code(mapped) == coloring.color_of_code(code);
    }
    if (ok)
      reducer.offer(Perm(img));
  } while (std::next_permutation(img.begin(), img.end()));
  return reducer.result(n);
}

bool is_k_closed(const GeneratedGroup& g, int k, const SearchLimits& limits) {
  if (k < 1)
    throw DomainError("closure arity must be at least 1");
  check_search_degree(g, limits);
  if (k == 1) {
    std::uint64_t full = 1;
    for (const std::vector<int>& orbit : orbits(g))
      full *= factorial(orbit.size());
    return build_chain(g).order() == full;
  }
  const OrbitColoring coloring = tuple_orbits(g, k, limits);
  const StabilizerChain chain = build_chain(g);
  return for_each_color_preserving(coloring,
                                   [&](const Perm& p) { return chain.contains(p); });
}

} // namespace cgt
