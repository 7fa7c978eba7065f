#include "koszul_lab/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace koszul {

MonoidBasis::MonoidBasis(int dimension, std::vector<IntVector> generators)
    : dimension_(dimension), generators_(std::move(generators)) {
  if (dimension_ < 1) throw std::invalid_argument("monoid basis: dimension must be positive");
  if (generators_.empty()) throw std::invalid_argument("monoid basis: no generators");
  std::set<IntVector> seen;
  for (const auto& g : generators_) {
    if (g.size() != static_cast<std::size_t>(dimension_))
      throw std::invalid_argument("monoid basis: generator length differs from dimension");
    if (std::any_of(g.begin(), g.end(), [](int x) { return x < 0; }))
      throw std::invalid_argument("monoid basis: negative exponent");
    const int sum = std::accumulate(g.begin(), g.end(), 0);
    if (sum == 0) throw std::invalid_argument("monoid basis: zero generator");
    if (weight_ == 0) weight_ = sum;
    if (sum != weight_) throw std::invalid_argument("monoid basis: generators are not homogeneous");
    if (!seen.insert(g).second) throw std::invalid_argument("monoid basis: repeated generator");
  }
}

std::optional<int> MonoidBasis::degree_of(const IntVector& v) const {
  if (v.size() != static_cast<std::size_t>(dimension_)) return std::nullopt;
  if (std::any_of(v.begin(), v.end(), [](int x) { return x < 0; })) return std::nullopt;
  const int sum = std::accumulate(v.begin(), v.end(), 0);
  if (sum % weight_ != 0) return std::nullopt;
  return sum / weight_;
}

MonoidBasis MonoidBasis::permute_coordinates(std::span<const int> perm) const {
  if (perm.size() != static_cast<std::size_t>(dimension_))
    throw std::invalid_argument("permute_coordinates: size mismatch");
  std::vector<IntVector> moved;
  moved.reserve(generators_.size());
  for (const auto& g : generators_) {
    IntVector out(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) out.at(static_cast<std::size_t>(perm[i])) = g[i];
    moved.push_back(std::move(out));
  }
  return MonoidBasis(dimension_, std::move(moved));
}

MonoidBasis edge_ring_basis(const Graph& g) {
  if (g.size() == 0) throw std::invalid_argument("edge ring of an edgeless graph has no generators");
  std::vector<IntVector> gens;
  gens.reserve(g.size());
  for (const auto& e : g.edges()) {
    IntVector v(static_cast<std::size_t>(g.order()), 0);
    v[e.u - 1] = 1;
    v[e.v - 1] = 1;
    gens.push_back(std::move(v));
  }
  return MonoidBasis(g.order(), std::move(gens));
}

MonoidBasis veronese_basis(int n, int d) {
  if (d < 2 || d >= n) {
    throw std::invalid_argument("squarefree Veronese needs 2 <= d < n, got n=" + std::to_string(n) +
                                " d=" + std::to_string(d));
  }
  std::vector<IntVector> gens;
  // Lexicographic d-subsets via a descending 0/1 selector.
  std::vector<int> selector(static_cast<std::size_t>(n), 0);
  std::fill(selector.begin(), selector.begin() + d, 1);
  do {
    gens.push_back(selector);
  } while (std::prev_permutation(selector.begin(), selector.end()));
  return MonoidBasis(n, std::move(gens));
}

MonoidElement make_element(const MonoidBasis& b, IntVector v) {
  auto degree = b.degree_of(v);
  if (!degree || !membership(v, b)) throw std::invalid_argument("vector is not an element of the semigroup");
  return MonoidElement{std::move(v), *degree};
}

GradedElements::GradedElements(const MonoidBasis& b, int max_degree) : basis_(b) {
  if (max_degree < 0) throw std::invalid_argument("negative degree bound");
  layers_.push_back({IntVector(static_cast<std::size_t>(b.dimension()), 0)});
  lookup_.emplace_back(layers_.front().begin(), layers_.front().end());
  for (int d = 1; d <= max_degree; ++d) {
    std::unordered_set<IntVector, IntVectorHash> next;
    for (const auto& x : layers_.back()) {
      for (const auto& g : b.generators()) {
        IntVector y = x;
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += g[i];
        next.insert(std::move(y));
      }
    }
    std::vector<IntVector> sorted(next.begin(), next.end());
    std::sort(sorted.begin(), sorted.end());
    layers_.push_back(std::move(sorted));
    lookup_.push_back(std::move(next));
  }
}

bool GradedElements::contains(const IntVector& v, int d) const {
  if (d < 0 || d > max_degree()) return false;
  return lookup_[static_cast<std::size_t>(d)].contains(v);
}

GradedElements elements_up_to_degree(const MonoidBasis& b, int max_degree) { return GradedElements(b, max_degree); }

bool membership(const IntVector& v, const MonoidBasis& b) {
  auto degree = b.degree_of(v);
  if (!degree) return false;
  // Layered search restricted to vectors dominated by v.
  std::set<IntVector> layer{IntVector(v.size(), 0)};
  for (int d = 0; d < *degree && !layer.empty(); ++d) {
    std::set<IntVector> next;
    for (const auto& x : layer) {
      for (const auto& g : b.generators()) {
        IntVector y = x;
        bool fits = true;
        for (std::size_t i = 0; i < y.size() && fits; ++i) fits = (y[i] += g[i]) <= v[i];
        if (fits) next.insert(std::move(y));
      }
    }
    layer = std::move(next);
  }
  return layer.contains(v);
}

namespace {

// out = a - b, elementwise.
void subtract(const IntVector& a, const IntVector& b, IntVector& out) {
  out.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
}

// Minimal generators of {s : s - u in S, s - v in S} from a precomputed table.
std::vector<MonoidIdealWitness> intersection_min_gens(const GradedElements& table, const MonoidElement& u,
                                                      const MonoidElement& v, int min_degree, int max_degree) {
  const auto& b = table.basis();
  IntVector scratch;
  IntVector inner;
  auto in_ideal = [&](const IntVector& s, int d) {
    subtract(s, u.exponents, inner);
    if (!table.contains(inner, d - u.degree)) return false;
    subtract(s, v.exponents, inner);
    return table.contains(inner, d - v.degree);
  };

  std::vector<MonoidIdealWitness> out;
  const int lowest = std::max({min_degree, u.degree, v.degree});
  for (int d = lowest; d <= max_degree; ++d) {
    for (const auto& s : table.layer(d)) {
      if (!in_ideal(s, d)) continue;
      bool minimal = true;
      for (const auto& g : b.generators()) {
        subtract(s, g, scratch);
        if (table.contains(scratch, d - 1) && in_ideal(scratch, d - 1)) {
          minimal = false;
          break;
        }
      }
      if (!minimal) continue;
      MonoidIdealWitness w;
      w.ideal_generators = {u.exponents, v.exponents};
      w.element = s;
      w.degree = d;
      w.quotient.resize(s.size());
      for (std::size_t i = 0; i < s.size(); ++i) w.quotient[i] = s[i] - u.exponents[i] - v.exponents[i];
      w.quotient_in_monoid = membership(w.quotient, b);
      out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace

std::vector<MonoidIdealWitness> principal_intersection_min_gens(const MonoidElement& u, const MonoidElement& v,
                                                                const MonoidBasis& b, int max_degree) {
  const GradedElements table(b, max_degree);
  return intersection_min_gens(table, u, v, 0, max_degree);
}

PairwiseVerdict strongly_koszul_pairwise(const MonoidBasis& b, int max_degree) {
  if (max_degree < 2) throw std::invalid_argument("pairwise oracle needs a degree bound >= 2");
  const GradedElements table(b, max_degree);
  PairwiseVerdict verdict;
  verdict.degree_bound = max_degree;
  const std::size_t t = b.size();
  for (int d = 3; d <= max_degree; ++d) {
    for (std::size_t i = 0; i < t; ++i) {
      for (std::size_t j = i + 1; j < t; ++j) {
        auto gens = intersection_min_gens(table, {b.generator(i), 1}, {b.generator(j), 1}, d, d);
        if (!gens.empty()) {
          verdict.passed = false;
          verdict.failure = PairwiseFailure{i, j, std::move(gens.front())};
          return verdict;
        }
      }
    }
  }
  return verdict;
}

namespace {

// First minimal generator of degree >= 2 of (prefix) : a_x, if any.
std::optional<std::pair<IntVector, int>> colon_violation(const GradedElements& table,
                                                         std::span<const std::size_t> prefix, std::size_t x) {
  const auto& b = table.basis();
  const auto& ax = b.generator(x);
  IntVector shifted;
  IntVector scratch;
  auto in_colon = [&](const IntVector& s, int d) {
    shifted = s;
    for (std::size_t i = 0; i < s.size(); ++i) shifted[i] += ax[i];
    for (std::size_t k : prefix) {
      IntVector rest(shifted.size());
      for (std::size_t i = 0; i < s.size(); ++i) rest[i] = shifted[i] - b.generator(k)[i];
      if (table.contains(rest, d)) return true;
    }
    return false;
  };
  for (int d = 2; d <= table.max_degree(); ++d) {
    for (const auto& s : table.layer(d)) {
      if (!in_colon(s, d)) continue;
      bool minimal = true;
      for (const auto& g : b.generators()) {
        subtract(s, g, scratch);
        if (table.contains(scratch, d - 1) && in_colon(scratch, d - 1)) {
          minimal = false;
          break;
        }
      }
      if (minimal) return std::make_pair(s, d);
    }
  }
  return std::nullopt;
}

ColonVerdict colon_check_with(const GradedElements& table, std::span<const std::size_t> subsequence) {
  ColonVerdict verdict;
  verdict.degree_bound = table.max_degree();
  for (std::size_t j = 1; j < subsequence.size(); ++j) {
    if (auto hit = colon_violation(table, subsequence.first(j), subsequence[j])) {
      verdict.passed = false;
      verdict.failure = ColonFailure{{subsequence.begin(), subsequence.end()}, j, std::move(hit->first), hit->second};
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

ColonVerdict colon_subset_check(const MonoidBasis& b, std::span<const std::size_t> subsequence, int max_degree) {
  for (std::size_t j = 0; j < subsequence.size(); ++j) {
    if (subsequence[j] >= b.size()) throw std::invalid_argument("colon check: generator index out of range");
    if (j > 0 && subsequence[j] <= subsequence[j - 1])
      throw std::invalid_argument("colon check: subsequence must be strictly increasing");
  }
  const GradedElements table(b, max_degree);
  return colon_check_with(table, subsequence);
}

ColonVerdict colon_check_all_subsequences(const MonoidBasis& b, int max_degree) {
  if (b.size() > 20) throw std::invalid_argument("colon check: too many generators for exhaustive subsequences");
  const GradedElements table(b, max_degree);
  ColonVerdict verdict;
  verdict.degree_bound = max_degree;
  const std::size_t t = b.size();
  std::vector<std::size_t> subsequence;
  for (std::size_t mask = 1; mask < (std::size_t{1} << t); ++mask) {
    subsequence.clear();
    for (std::size_t i = 0; i < t; ++i)
      if (mask & (std::size_t{1} << i)) subsequence.push_back(i);
    // Earlier positions were already covered by the mask without the last element.
    if (subsequence.size() < 2) continue;
    auto hit = colon_violation(table, std::span<const std::size_t>(subsequence).first(subsequence.size() - 1),
                               subsequence.back());
    if (hit) {
      verdict.passed = false;
      verdict.failure = ColonFailure{subsequence, subsequence.size() - 1, std::move(hit->first), hit->second};
      return verdict;
    }
  }
  return verdict;
}

std::vector<std::size_t> hilbert_function(const MonoidBasis& b, int max_degree) {
  const GradedElements table(b, max_degree);
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(table.layer(d).size());
  return out;
}

}  // namespace koszul
