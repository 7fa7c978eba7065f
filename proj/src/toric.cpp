#include "koszul_lab/toric.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace koszul {

YMonomial::YMonomial(IntVector exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw std::invalid_argument("monomial exponent must be nonnegative");
    degree_ += e;
  }
}

YMonomial YMonomial::from_indices(std::size_t variables, std::span<const std::size_t> indices) {
  IntVector exps(variables, 0);
  for (std::size_t i : indices) {
    if (i >= variables) throw std::invalid_argument("monomial variable index out of range");
    ++exps[i];
  }
  return YMonomial(std::move(exps));
}

std::vector<std::size_t> YMonomial::indices() const {
  std::vector<std::size_t> out;
  out.reserve(static_cast<std::size_t>(degree_));
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    for (int k = 0; k < exponents_[i]; ++k) out.push_back(i);
  return out;
}

bool YMonomial::divides(const YMonomial& other) const {
  for (std::size_t i = 0; i < exponents_.size(); ++i)
    if (exponents_[i] > other.exponents_[i]) return false;
  return true;
}

YMonomial operator*(const YMonomial& a, const YMonomial& b) {
  IntVector e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.exponents()[i];
  return YMonomial(std::move(e));
}

YMonomial operator/(const YMonomial& a, const YMonomial& b) {
  IntVector e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] -= b.exponents()[i];
  return YMonomial(std::move(e));
}

YMonomial lcm(const YMonomial& a, const YMonomial& b) {
  IntVector e = a.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
  return YMonomial(std::move(e));
}

bool coprime(const YMonomial& a, const YMonomial& b) {
  for (std::size_t i = 0; i < a.variables(); ++i)
    if (a.exponents()[i] > 0 && b.exponents()[i] > 0) return false;
  return true;
}

bool index_lex_less(const YMonomial& a, const YMonomial& b) { return a.indices() < b.indices(); }

IntVector image(const MonoidBasis& b, const YMonomial& m) {
  if (m.variables() != b.size()) throw std::invalid_argument("monomial does not match the basis size");
  IntVector out(static_cast<std::size_t>(b.dimension()), 0);
  for (std::size_t i = 0; i < m.variables(); ++i) {
    const int e = m.exponents()[i];
    if (e == 0) continue;
    const auto& g = b.generator(i);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] += e * g[k];
  }
  return out;
}

Binomial make_binomial(const MonoidBasis& b, YMonomial lhs, YMonomial rhs) {
  if (lhs == rhs) throw std::invalid_argument("binomial sides coincide");
  if (lhs.degree() != rhs.degree()) throw std::invalid_argument("binomial sides differ in degree");
  IntVector fiber = image(b, lhs);
  if (fiber != image(b, rhs)) throw std::invalid_argument("binomial sides have different images");
  if (index_lex_less(rhs, lhs)) std::swap(lhs, rhs);
  return Binomial{std::move(lhs), std::move(rhs), std::move(fiber)};
}

TermOrder::TermOrder(std::vector<std::size_t> rank) : rank_(std::move(rank)) {
  std::vector<std::size_t> check = rank_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw std::invalid_argument("term order rank is not a permutation");
}

TermOrder TermOrder::identity(std::size_t variables) {
  std::vector<std::size_t> rank(variables);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  return TermOrder(std::move(rank));
}

std::strong_ordering TermOrder::compare(const YMonomial& a, const YMonomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  // Reverse lexicographic: the smallest variable where the exponents differ
  // decides, and more of it means smaller.
  for (auto it = rank_.rbegin(); it != rank_.rend(); ++it) {
    const int ea = a.exponents()[*it];
    const int eb = b.exponents()[*it];
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

Binomial TermOrder::orient(Binomial f) const {
  if (less(f.lhs, f.rhs)) std::swap(f.lhs, f.rhs);
  return f;
}

namespace {

// All multisets of size d from {0..t-1} in lexicographic order.
std::vector<YMonomial> monomials_of_degree(std::size_t t, int d) {
  std::vector<YMonomial> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(d), 0);
  if (d == 0) return {YMonomial(IntVector(t, 0))};
  while (true) {
    out.push_back(YMonomial::from_indices(t, idx));
    int pos = d - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == t - 1) --pos;
    if (pos < 0) break;
    const std::size_t next = idx[static_cast<std::size_t>(pos)] + 1;
    for (auto k = static_cast<std::size_t>(pos); k < idx.size(); ++k) idx[k] = next;
  }
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Fibers fibers(const MonoidBasis& b, int max_degree) {
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  Fibers out;
  for (int d = 0; d <= max_degree; ++d) {
    auto& level = out.by_degree.emplace_back();
    for (auto& m : monomials_of_degree(b.size(), d)) level[image(b, m)].push_back(std::move(m));
  }
  return out;
}

std::vector<Binomial> minimal_generators(const MonoidBasis& b, int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("minimal generators need a degree bound >= 2");
  const Fibers all = fibers(b, max_degree);
  std::vector<Binomial> gens;
  for (int d = 2; d <= max_degree; ++d) {
    const std::size_t lower = gens.size();
    for (const auto& [fiber, members] : all.by_degree[static_cast<std::size_t>(d)]) {
      if (members.size() < 2) continue;
      std::map<IntVector, std::size_t> position;
      for (std::size_t i = 0; i < members.size(); ++i) position.emplace(members[i].exponents(), i);
      UnionFind components(members.size());
      for (std::size_t g = 0; g < lower; ++g) {
        const auto& move = gens[g];
        for (std::size_t i = 0; i < members.size(); ++i) {
          const auto& m = members[i];
          if (move.lhs.divides(m)) components.unite(i, position.at((m / move.lhs * move.rhs).exponents()));
          if (move.rhs.divides(m)) components.unite(i, position.at((m / move.rhs * move.lhs).exponents()));
        }
      }
      // Members are index-lex sorted, so the first member seen in each
      // component is its smallest.
      std::vector<std::size_t> representatives;
      std::set<std::size_t> seen;
      for (std::size_t i = 0; i < members.size(); ++i)
        if (seen.insert(components.find(i)).second) representatives.push_back(i);
      for (std::size_t c = 1; c < representatives.size(); ++c)
        gens.push_back(Binomial{members[representatives[0]], members[representatives[c]], fiber});
    }
  }
  return gens;
}

std::vector<std::size_t> generator_degree_counts(std::span<const Binomial> gens, int max_degree) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(std::max(max_degree, 0)) + 1, 0);
  for (const auto& g : gens)
    if (g.degree() <= max_degree) ++counts[static_cast<std::size_t>(g.degree())];
  return counts;
}

bool is_quadratically_generated(const MonoidBasis& b, int max_degree) {
  if (max_degree < 3) throw std::invalid_argument("quadratic generation check needs a degree bound >= 3");
  const auto gens = minimal_generators(b, max_degree);
  return std::all_of(gens.begin(), gens.end(), [](const Binomial& g) { return g.degree() <= 2; });
}

YMonomial normal_form(YMonomial m, std::span<const Binomial> basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : basis) {
      if (g.lhs.divides(m)) {
        m = m / g.lhs * g.rhs;
        changed = true;
        break;
      }
    }
  }
  return m;
}

bool reduces_to_zero(const Binomial& f, std::span<const Binomial> basis) {
  return normal_form(f.lhs, basis) == normal_form(f.rhs, basis);
}

bool s_pairs_reduce_to_zero(const MonoidBasis& b, std::span<const Binomial> basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const YMonomial m = lcm(basis[i].lhs, basis[j].lhs);
      const YMonomial left = m / basis[i].lhs * basis[i].rhs;
      const YMonomial right = m / basis[j].lhs * basis[j].rhs;
      if (image(b, left) != image(b, right)) return false;
      if (normal_form(left, basis) != normal_form(right, basis)) return false;
    }
  }
  return true;
}

namespace {

// Difference of two equal-image monomials as an oriented binomial, or
// nullopt when they coincide.
std::optional<Binomial> oriented(const MonoidBasis& b, const TermOrder& order, YMonomial x, YMonomial y) {
  if (x == y) return std::nullopt;
  IntVector fiber = image(b, x);
  if (fiber != image(b, y)) throw std::logic_error("buchberger: binomial left its fiber");
  return order.orient(Binomial{std::move(x), std::move(y), std::move(fiber)});
}

}  // namespace

GroebnerResult buchberger(const MonoidBasis& b, std::span<const Binomial> gens, const TermOrder& order,
                          std::optional<int> max_degree) {
  if (order.rank().size() != b.size()) throw std::invalid_argument("term order does not match the basis size");
  GroebnerResult result;
  std::vector<Binomial> basis;

  using Pair = std::tuple<int, std::size_t, std::size_t>;  // (lcm degree, i, j)
  std::priority_queue<Pair, std::vector<Pair>, std::greater<>> pairs;
  auto add = [&](Binomial f) {
    const std::size_t k = basis.size();
    basis.push_back(std::move(f));
    for (std::size_t i = 0; i < k; ++i) pairs.emplace(lcm(basis[i].lhs, basis[k].lhs).degree(), i, k);
  };

  for (const auto& g : gens) {
    if (auto f = oriented(b, order, normal_form(g.lhs, basis), normal_form(g.rhs, basis))) add(std::move(*f));
  }
  while (!pairs.empty()) {
    auto [degree, i, j] = pairs.top();
    pairs.pop();
    if (coprime(basis[i].lhs, basis[j].lhs)) continue;
    if (max_degree && degree > *max_degree) {
      result.complete = false;
      ++result.skipped_pairs;
      continue;
    }
    const YMonomial m = lcm(basis[i].lhs, basis[j].lhs);
    YMonomial left = normal_form(m / basis[i].lhs * basis[i].rhs, basis);
    YMonomial right = normal_form(m / basis[j].lhs * basis[j].rhs, basis);
    if (auto f = oriented(b, order, std::move(left), std::move(right))) add(std::move(*f));
  }

  // Keep one element per minimal leading term, then reduce tails.
  std::vector<Binomial> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !basis[j].lhs.divides(basis[i].lhs)) continue;
      redundant = basis[j].lhs != basis[i].lhs || j < i;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (auto& f : minimal) {
    f.rhs = normal_form(f.rhs, minimal);
    if (f.rhs == f.lhs || image(b, f.rhs) != f.fiber) throw std::logic_error("buchberger: tail reduction failed");
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Binomial& x, const Binomial& y) { return order.less(x.lhs, y.lhs); });
  result.basis = std::move(minimal);
  return result;
}

GbSearchOutcome quadratic_gb_search(const MonoidBasis& b, std::size_t attempts, std::uint64_t seed,
                                    int degree_bound) {
  GbSearchOutcome outcome;
  const auto gens = minimal_generators(b, std::max(degree_bound, 3));
  outcome.quadratically_generated =
      std::all_of(gens.begin(), gens.end(), [](const Binomial& g) { return g.degree() <= 2; });
  if (!outcome.quadratically_generated) return outcome;

  auto all_quadratic = [](const std::vector<Binomial>& basis) {
    return std::all_of(basis.begin(), basis.end(), [](const Binomial& g) { return g.degree() <= 2; });
  };

  std::mt19937_64 rng(seed);
  std::set<std::vector<std::size_t>> tried;
  std::vector<std::size_t> rank = TermOrder::identity(b.size()).rank();
  for (std::size_t attempt = 0; attempt < attempts; ++attempt) {
    if (attempt > 0) {
      // Redraw on repeats; give up when the permutation space looks exhausted.
      int redraws = 0;
      do {
        std::shuffle(rank.begin(), rank.end(), rng);
      } while (tried.contains(rank) && ++redraws < 256);
      if (tried.contains(rank)) break;
    }
    tried.insert(rank);
    ++outcome.attempts_tried;
    const TermOrder order(rank);
    if (!all_quadratic(buchberger(b, gens, order, 3).basis)) continue;
    auto full = buchberger(b, gens, order);
    if (all_quadratic(full.basis)) {
      outcome.found = QuadraticGb{order, std::move(full.basis), attempt};
      return outcome;
    }
  }
  return outcome;
}

Binomial walk_binomial(const Graph& g, std::span<const std::size_t> walk) {
  if (walk.empty() || walk.size() % 2 != 0) throw std::invalid_argument("walk must have even positive length");
  for (std::size_t e : walk)
    if (e >= g.size()) throw std::invalid_argument("walk edge index out of range");

  // Orient the first edge so the walk continues; try both endpoints.
  auto traverse = [&](Vertex start) -> bool {
    Vertex at = start;
    for (std::size_t e : walk) {
      const Edge& edge = g.edges()[e];
      if (edge.u == at) {
        at = edge.v;
      } else if (edge.v == at) {
        at = edge.u;
      } else {
        return false;
      }
    }
    return at == start;
  };
  const Edge& first = g.edges()[walk.front()];
  if (!traverse(first.u) && !traverse(first.v))
    throw std::invalid_argument("edge sequence is not a closed walk");

  IntVector odd(g.size(), 0);
  IntVector even(g.size(), 0);
  for (std::size_t k = 0; k < walk.size(); ++k) ++(k % 2 == 0 ? odd : even)[walk[k]];
  YMonomial lhs(std::move(odd));
  YMonomial rhs(std::move(even));
  if (lhs == rhs) throw std::invalid_argument("walk binomial is degenerate (both sides equal)");
  const MonoidBasis basis = edge_ring_basis(g);
  IntVector fiber = image(basis, lhs);
  if (fiber != image(basis, rhs)) throw std::logic_error("walk binomial sides have different images");
  return Binomial{std::move(lhs), std::move(rhs), std::move(fiber)};
}

}  // namespace koszul
