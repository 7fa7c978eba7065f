#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "koszul_lab/graph.hpp"

namespace koszul {

using IntVector = std::vector<int>;

struct IntVectorHash {
  std::size_t operator()(const IntVector& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

/// Generators of a homogeneous affine semigroup: distinct nonzero
/// nonnegative vectors with a common coordinate sum.
class MonoidBasis {
 public:
  /// Throws std::invalid_argument when the generators violate the above.
  MonoidBasis(int dimension, std::vector<IntVector> generators);

  int dimension() const noexcept { return dimension_; }
  std::size_t size() const noexcept { return generators_.size(); }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const IntVector& generator(std::size_t i) const { return generators_.at(i); }

  /// Coordinate sum shared by every generator.
  int generator_weight() const noexcept { return weight_; }

  /// Number of generators any representation of v must use, if v is
  /// nonnegative, of the right length and weight-divisible.
  std::optional<int> degree_of(const IntVector& v) const;

  /// Same semigroup with ambient coordinates permuted: coordinate i moves to perm[i].
  MonoidBasis permute_coordinates(std::span<const int> perm) const;

 private:
  int dimension_;
  std::vector<IntVector> generators_;
  int weight_ = 0;
};

/// One generator per edge, in the graph's edge order: the indicator vector
/// of the two endpoints. Throws std::invalid_argument for an edgeless graph.
MonoidBasis edge_ring_basis(const Graph& g);

/// Indicator vectors of the d-subsets of {1..n}, lexicographic.
/// Throws std::invalid_argument unless 2 <= d < n.
MonoidBasis veronese_basis(int n, int d);

struct MonoidElement {
  IntVector exponents;
  int degree = 0;

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
};

/// Certified element; throws std::invalid_argument if v is not in the semigroup.
MonoidElement make_element(const MonoidBasis& b, IntVector v);

/// Distinct semigroup elements of each degree 0..D, built layer by layer.
class GradedElements {
 public:
  GradedElements(const MonoidBasis& b, int max_degree);

  int max_degree() const noexcept { return static_cast<int>(layers_.size()) - 1; }
  const MonoidBasis& basis() const noexcept { return basis_; }

  /// Sorted elements of degree d.
  const std::vector<IntVector>& layer(int d) const { return layers_.at(static_cast<std::size_t>(d)); }

  /// Membership of v among elements of degree d; false outside 0..D.
  bool contains(const IntVector& v, int d) const;

 private:
  MonoidBasis basis_;
  std::vector<std::vector<IntVector>> layers_;
  std::vector<std::unordered_set<IntVector, IntVectorHash>> lookup_;
};

GradedElements elements_up_to_degree(const MonoidBasis& b, int max_degree);

/// Exact test whether v is a nonnegative integer combination of generators.
bool membership(const IntVector& v, const MonoidBasis& b);

struct MonoidIdealWitness {
  std::vector<IntVector> ideal_generators;
  IntVector element;
  int degree = 0;
  IntVector quotient;  // element minus the sum of the ideal generators
  bool quotient_in_monoid = false;
};

/// Minimal generators of (u) intersect (v) of degree <= max_degree, by degree
/// then lexicographically.
std::vector<MonoidIdealWitness> principal_intersection_min_gens(const MonoidElement& u, const MonoidElement& v,
                                                                const MonoidBasis& b, int max_degree);

struct PairwiseFailure {
  std::size_t first = 0;
  std::size_t second = 0;
  MonoidIdealWitness witness;
};

/// Pass means: every (a_i) intersect (a_j) has no minimal generator of degree
/// 3..D. The claim is bounded by D.
struct PairwiseVerdict {
  bool passed = true;
  int degree_bound = 0;
  std::optional<PairwiseFailure> failure;
};

/// The failure reported is the smallest by (degree, pair, element), so it is
/// stable under raising the bound. Throws std::invalid_argument when D < 2.
PairwiseVerdict strongly_koszul_pairwise(const MonoidBasis& b, int max_degree);

struct ColonFailure {
  std::vector<std::size_t> subsequence;
  std::size_t position = 0;  // index into subsequence of the colon element
  IntVector element;         // minimal generator of degree >= 2
  int degree = 0;
};

struct ColonVerdict {
  bool passed = true;
  int degree_bound = 0;
  std::optional<ColonFailure> failure;
};

/// For each position j >= 1 of the (strictly increasing) subsequence, the
/// colon ideal (a_{i_0}, ..., a_{i_{j-1}}) : a_{i_j} must have only degree-1
/// minimal generators up to degree D.
ColonVerdict colon_subset_check(const MonoidBasis& b, std::span<const std::size_t> subsequence, int max_degree);

/// colon_subset_check over every increasing subsequence of the generators.
ColonVerdict colon_check_all_subsequences(const MonoidBasis& b, int max_degree);

/// Number of distinct elements in each degree 0..D.
std::vector<std::size_t> hilbert_function(const MonoidBasis& b, int max_degree);

}  // namespace koszul
