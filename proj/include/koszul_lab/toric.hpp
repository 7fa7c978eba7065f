#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "koszul_lab/graph.hpp"
#include "koszul_lab/semigroup.hpp"

namespace koszul {

/// Monomial in the presentation variables Y_1..Y_t, stored as an exponent
/// vector. Variable indices are 0-based in code; serialization is 1-based.
class YMonomial {
 public:
  YMonomial() = default;
  explicit YMonomial(IntVector exponents);

  static YMonomial from_indices(std::size_t variables, std::span<const std::size_t> indices);

  std::size_t variables() const noexcept { return exponents_.size(); }
  int degree() const noexcept { return degree_; }
  const IntVector& exponents() const noexcept { return exponents_; }

  /// Sorted multiset of variable indices (0-based).
  std::vector<std::size_t> indices() const;

  bool divides(const YMonomial& other) const;

  friend bool operator==(const YMonomial&, const YMonomial&) = default;

 private:
  IntVector exponents_;
  int degree_ = 0;
};

YMonomial operator*(const YMonomial& a, const YMonomial& b);
/// Exact quotient; requires b | a.
YMonomial operator/(const YMonomial& a, const YMonomial& b);
YMonomial lcm(const YMonomial& a, const YMonomial& b);
bool coprime(const YMonomial& a, const YMonomial& b);

/// Lexicographic order of the sorted index lists.
bool index_lex_less(const YMonomial& a, const YMonomial& b);

/// Image exponent vector under Y_i -> a_i.
IntVector image(const MonoidBasis& b, const YMonomial& m);

/// lhs - rhs with equal images. Outside a Groebner basis lhs is the
/// index-lexicographically smaller side; inside one it is the leading term.
struct Binomial {
  YMonomial lhs;
  YMonomial rhs;
  IntVector fiber;

  int degree() const noexcept { return lhs.degree(); }
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

/// Validates lhs != rhs, equal degree and equal image; normalizes orientation.
/// Throws std::invalid_argument.
Binomial make_binomial(const MonoidBasis& b, YMonomial lhs, YMonomial rhs);

/// Graded reverse lexicographic order on permuted variables:
/// rank[0] is the largest variable, rank[t-1] the smallest.
class TermOrder {
 public:
  explicit TermOrder(std::vector<std::size_t> rank);
  static TermOrder identity(std::size_t variables);

  const std::vector<std::size_t>& rank() const noexcept { return rank_; }
  std::strong_ordering compare(const YMonomial& a, const YMonomial& b) const;
  bool less(const YMonomial& a, const YMonomial& b) const { return compare(a, b) < 0; }

  /// lhs becomes the leading term.
  Binomial orient(Binomial f) const;

 private:
  std::vector<std::size_t> rank_;
};

/// Degree-d Y-monomials grouped by image, for d = 0..D. Members of each
/// fiber are listed in index-lexicographic order.
struct Fibers {
  std::vector<std::map<IntVector, std::vector<YMonomial>>> by_degree;
};

Fibers fibers(const MonoidBasis& b, int max_degree);

/// Minimal binomial generators of the toric ideal in degrees 2..D, by degree.
/// Within a fiber the components under lower-degree moves are ordered by
/// their smallest member and the first component's representative is joined
/// to every other component's representative.
std::vector<Binomial> minimal_generators(const MonoidBasis& b, int max_degree);

/// Count of minimal generators per degree 0..D.
std::vector<std::size_t> generator_degree_counts(std::span<const Binomial> gens, int max_degree);

/// No minimal generator of degree 3..D. Throws std::invalid_argument when D < 3.
bool is_quadratically_generated(const MonoidBasis& b, int max_degree);

/// Reduce a monomial by a Groebner basis whose lhs are leading terms.
YMonomial normal_form(YMonomial m, std::span<const Binomial> basis);

bool reduces_to_zero(const Binomial& f, std::span<const Binomial> basis);

/// Buchberger's criterion checked on every pair, coprime or not.
bool s_pairs_reduce_to_zero(const MonoidBasis& b, std::span<const Binomial> basis);

struct GroebnerResult {
  std::vector<Binomial> basis;  // reduced, sorted by leading term ascending
  /// False when S-pairs above the degree cap were skipped; the basis is
  /// then only a truncated basis.
  bool complete = true;
  std::size_t skipped_pairs = 0;
};

/// Binomial Buchberger with pairs taken by increasing lcm degree and the
/// coprime leading term criterion.
GroebnerResult buchberger(const MonoidBasis& b, std::span<const Binomial> gens, const TermOrder& order,
                          std::optional<int> max_degree = std::nullopt);

struct QuadraticGb {
  TermOrder order;
  std::vector<Binomial> basis;
  std::size_t attempt = 0;  // 0 is the identity order
};

struct GbSearchOutcome {
  bool quadratically_generated = false;
  std::size_t attempts_tried = 0;
  std::optional<QuadraticGb> found;
};

/// Try the identity order, then distinct seeded random variable rankings,
/// until a reduced basis consisting only of quadrics appears. Failure is not
/// a proof of nonexistence.
GbSearchOutcome quadratic_gb_search(const MonoidBasis& b, std::size_t attempts, std::uint64_t seed,
                                    int degree_bound = 4);

/// Alternating binomial of an even closed walk given as 0-based edge
/// indices: odd positions form lhs, even positions rhs (no reorientation).
/// Throws std::invalid_argument for an open, odd or broken walk or when the
/// two sides coincide.
Binomial walk_binomial(const Graph& g, std::span<const std::size_t> walk);

}  // namespace koszul
