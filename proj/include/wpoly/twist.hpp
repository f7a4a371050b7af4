#pragma once

// Multivariate twist polynomial of a colored graph, its specialization to
// brackets, and the p-statistic.

#include <map>
#include <string>
#include <vector>

#include "wpoly/graph.hpp"
#include "wpoly/laurent.hpp"

namespace wpoly {

/// Polynomial in x_1..x_k with Laurent coefficients in A.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;

  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<Exponents, LaurentPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const LaurentPoly& c);
  LaurentPoly coeff(const Exponents& e) const;

  /// Substitutes x_i = values[i] and returns the resulting Laurent polynomial.
  LaurentPoly evaluate(const std::vector<LaurentPoly>& values) const;

  /// One term per line, exponent vectors in ascending lexicographic order:
  /// "x1*x3^2: A^2 - 1".
  std::string to_string() const;

  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  int nvars_;
  std::map<Exponents, LaurentPoly> terms_;
};

/// d^E times W with symbolic weights: chain i -> (1, (x_i - 1)/d), sheaf i ->
/// ((x_i - 1)/d, 1).  Throws NormalizationFailure if a coefficient keeps a d
/// denominator, GraphError if G is disconnected.
MultiPoly twist_polynomial(const ColoredGraph& g);

/// A^sum(r) * P(A, (-A^-4)^r_1, ...) / d^E with r_i = n_i for chains and
/// -n_i for sheafs.  Equals the bracket of G with lengths n.
LaurentPoly specialize_twist(const MultiPoly& p, const ColoredGraph& g,
                             const std::vector<int>& n);

struct PStatistic {
  int p = 0;
  EdgeSubset witness;
};

/// max over spanning trees F of #sheafs in F + #chains outside F.
PStatistic p_statistic(const ColoredGraph& g);

struct NormScan {
  Integer max_norm_sq;
  std::vector<int> argmax;
  std::vector<std::pair<std::vector<int>, Integer>> samples;
};

/// l2_norm_sq(d^p <G with lengths t>) for each sample length vector.
NormScan norm_bound_scan(const ColoredGraph& g,
                         const std::vector<std::vector<int>>& samples);

/// Every vector in {+-1, ..., +-bound}^k.
std::vector<std::vector<int>> signed_box(int k, int bound);

}  // namespace wpoly
