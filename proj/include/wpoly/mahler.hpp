#pragma once

// Roots, Mahler measure, equimodular points and divergence certificates.

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "wpoly/family.hpp"
#include "wpoly/laurent.hpp"

namespace wpoly {

using Complex = std::complex<long double>;

struct Tolerances {
  double resid = 1e-10;   // relative residual of a root
  double zero = 1e-8;     // |lambda| below this counts as a zero
  double eqm = 1e-8;      // allowed | |l1| - |l2| | relative to max(1, |l|)
  double margin = 1e-2;   // |z| - 1 needed for a divergence witness
};

struct Root {
  Complex value;
  long double residual = 0;  // |p(z)| / sum |c_k| |z|^k
  long double modulus = 0;
};

struct RootSet {
  std::vector<Root> roots;  // sorted by (re, im)
  long double lead_coeff_abs = 0;
  int low_exp = 0;  // f = A^low_exp * p with p(0) != 0
};

/// All roots of A^-low f.  Polynomials in A^g are solved in A^g first.
/// Throws Error when the residual bound cannot be met.
RootSet roots(const LaurentPoly& f, double tol_resid = 1e-10);

double mahler(const LaurentPoly& f, double tol_resid = 1e-10);
double euclidean_mahler(const LaurentPoly& f, double tol_resid = 1e-10);

/// v(t) = -(l1 + l2)^2 + t l1 l2, split as constant + t * t_coeff.
struct VPoly {
  LaurentPoly constant;
  LaurentPoly t_coeff;
  /// Scaled to integer coefficients: q v(p/q).  Requires 0 <= t <= 4.
  LaurentPoly at(const mpq_class& t) const;
  std::string to_string() const;
};
VPoly v_poly(const LaurentPoly& lambda1, const LaurentPoly& lambda2);
LaurentPoly v_poly(const LaurentPoly& lambda1, const LaurentPoly& lambda2,
                   const mpq_class& t);

struct EquimodularPoint {
  mpq_class t;
  Complex z;
  bool isolated = false;
  long double lambda_mod = 0;
};

struct EquimodularResult {
  std::vector<EquimodularPoint> points;  // sorted by (t, re, im)
  int dropped_zero = 0;  // roots where a lambda vanishes
  int rejected = 0;      // roots failing the equal-modulus cross-check
};

/// k/20 for k = 0..80: covers 0, 5/4 and 4.
std::vector<mpq_class> default_t_grid();
std::vector<mpq_class> parse_t_grid(const std::string& text);

EquimodularResult equimodular_points(const LaurentPoly& lambda1, const LaurentPoly& lambda2,
                                     const std::vector<mpq_class>& t_grid,
                                     const Tolerances& tol = {});

enum class Verdict { Diverges, NoCertificate, NotApplicable };
const char* verdict_name(Verdict v);

struct Certificate {
  Verdict verdict = Verdict::NoCertificate;
  std::optional<EquimodularPoint> witness;
  std::string reason;
  int points = 0;
  long double max_modulus = 0;
};

Certificate divergence_certificate(const FamilyForm& f,
                                   const std::vector<mpq_class>& t_grid,
                                   const Tolerances& tol = {});
Certificate divergence_certificate(const LaurentPoly& lambda1, const LaurentPoly& lambda2,
                                   const std::vector<mpq_class>& t_grid,
                                   const Tolerances& tol = {});

struct TrendRow {
  int n;
  double mahler;
  double euclidean_mahler;
};
std::vector<TrendRow> mahler_trend(const FamilyForm& f, const std::vector<int>& n_list,
                                   double tol_resid = 1e-10);

}  // namespace wpoly
