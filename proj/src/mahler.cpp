#include "wpoly/mahler.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace wpoly {

namespace {

using Real = long double;
using Coeffs = std::vector<Real>;  // c[0] + c[1] z + ...

constexpr Real kPi = 3.141592653589793238462643383279502884L;

Real to_real(const Integer& c) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, c.get_mpz_t());
  return std::ldexp(static_cast<Real>(mant), static_cast<int>(exp));
}

struct Eval {
  Complex p, dp;
  Real scale;
};

Eval horner(const Coeffs& c, Complex z) {
  Complex p = 0, dp = 0;
  Real scale = 0;
  const Real r = std::abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * z + p;
    p = p * z + c[i];
    scale = scale * r + std::fabs(c[i]);
  }
  return {p, dp, scale};
}

Real residual(const Coeffs& c, Complex z) {
  const Eval e = horner(c, z);
  return e.scale > 0 ? std::abs(e.p) / e.scale : 0;
}

// Starting points on circles whose radii come from the upper convex hull of
// (i, log|c_i|).
std::vector<Complex> initial_guesses(const Coeffs& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<int> idx;
  for (int i = 0; i <= n; ++i)
    if (c[i] != 0) idx.push_back(i);
  auto lg = [&](int i) { return std::log(std::fabs(c[i])); };
  std::vector<int> hull;
  for (int i : idx) {
    while (hull.size() >= 2) {
      const int a = hull[hull.size() - 2], b = hull.back();
      // drop b when it lies on or below the chord a-i
      if ((lg(b) - lg(a)) * (i - a) <= (lg(i) - lg(a)) * (b - a)) hull.pop_back();
      else break;
    }
    hull.push_back(i);
  }
  std::vector<Complex> z;
  for (std::size_t s = 0; s + 1 < hull.size(); ++s) {
    const int i = hull[s], j = hull[s + 1], m = j - i;
    const Real r = std::exp((lg(i) - lg(j)) / m);
    for (int k = 0; k < m; ++k) {
      const Real ang = 2 * kPi * k / m + 2 * kPi * static_cast<Real>(s) / (n + 1) + 0.4L;
      z.push_back(std::polar(r, ang));
    }
  }
  return z;
}

std::vector<Complex> aberth(const Coeffs& c) {
  const int n = static_cast<int>(c.size()) - 1;
  std::vector<Complex> z = initial_guesses(c);
  std::vector<char> done(n, 0);
  const Real eps = 8 * std::numeric_limits<Real>::epsilon();
  for (int iter = 0; iter < 2000; ++iter) {
    bool all = true;
    for (int k = 0; k < n; ++k) {
      if (done[k]) continue;
      const Eval e = horner(c, z[k]);
      if (e.p == Complex(0)) {
        done[k] = 1;
        continue;
      }
      const Complex ratio = e.p / e.dp;
      Complex s = 0;
      for (int j = 0; j < n; ++j)
        if (j != k) s += Real(1) / (z[k] - z[j]);
      const Complex w = ratio / (Real(1) - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      if (std::abs(w) <= eps * std::max(Real(1), std::abs(z[k]))) done[k] = 1;
      else all = false;
    }
    if (all) break;
  }
  return z;
}

std::vector<Complex> companion_roots(const Coeffs& c) {
  const int n = static_cast<int>(c.size()) - 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) m(i, n - 1) = -static_cast<double>(c[i] / c[n]);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw Error("companion eigenvalue solver failed");
  std::vector<Complex> out;
  for (int i = 0; i < n; ++i)
    out.emplace_back(es.eigenvalues()[i].real(), es.eigenvalues()[i].imag());
  return out;
}

void polish(const Coeffs& c, std::vector<Complex>& z) {
  for (Complex& r : z) {
    for (int step = 0; step < 4; ++step) {
      const Eval e = horner(c, r);
      if (e.dp == Complex(0)) break;
      const Complex next = r - e.p / e.dp;
      if (!(residual(c, next) < residual(c, r))) break;
      r = next;
    }
  }
}

Real max_residual(const Coeffs& c, const std::vector<Complex>& z) {
  Real m = 0;
  for (const Complex& r : z) m = std::max(m, residual(c, r));
  return m;
}

std::vector<Complex> solve(const Coeffs& c, double tol) {
  if (c.size() <= 1) return {};
  std::vector<Complex> z = aberth(c);
  polish(c, z);
  Real worst = max_residual(c, z);
  if (worst > tol) {
    std::vector<Complex> alt = companion_roots(c);
    polish(c, alt);
    const Real alt_worst = max_residual(c, alt);
    if (alt_worst < worst) {
      z = std::move(alt);
      worst = alt_worst;
    }
  }
  if (worst > tol) {
    std::ostringstream os;
    os << "root finder did not converge (best relative residual " << static_cast<double>(worst)
       << ", degree " << c.size() - 1 << ")";
    throw Error(os.str());
  }
  return z;
}

// f = A^low * p(A), p(A) = q(A^g).
struct Reduced {
  Coeffs p, q;
  int g = 1;
  int low = 0;
  Real lead = 0;
};

Reduced reduce(const LaurentPoly& f) {
  if (f.is_zero()) throw Error("roots of the zero polynomial");
  Reduced r;
  r.low = f.low();
  const auto& dense = f.dense();
  for (const auto& c : dense) r.p.push_back(to_real(c));
  int g = 0;
  for (std::size_t i = 1; i < dense.size(); ++i)
    if (dense[i] != 0) g = std::gcd(g, static_cast<int>(i));
  r.g = std::max(g, 1);
  for (std::size_t i = 0; i < dense.size(); i += r.g) r.q.push_back(r.p[i]);
  r.lead = std::fabs(r.p.back());
  return r;
}

bool complex_less(const Complex& a, const Complex& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

Real log_measure(const LaurentPoly& f, double tol, bool with_lead) {
  const Reduced r = reduce(f);
  Real s = with_lead ? std::log(r.lead) : 0;
  // M(q(A^g)) = M(q)
  for (const Complex& y : solve(r.q, tol)) s += std::log(std::max(Real(1), std::abs(y)));
  return s;
}

}  // namespace

RootSet roots(const LaurentPoly& f, double tol_resid) {
  const Reduced r = reduce(f);
  RootSet out;
  out.low_exp = r.low;
  out.lead_coeff_abs = r.lead;
  std::vector<Complex> z;
  for (const Complex& y : solve(r.q, tol_resid)) {
    if (r.g == 1) {
      z.push_back(y);
      continue;
    }
    const Real mod = std::pow(std::abs(y), Real(1) / r.g);
    const Real arg = std::arg(y) / r.g;
    for (int k = 0; k < r.g; ++k) z.push_back(std::polar(mod, arg + 2 * kPi * k / r.g));
  }
  if (r.g > 1) polish(r.p, z);
  for (const Complex& x : z) {
    const Real res = residual(r.p, x);
    if (res > tol_resid) throw Error("root residual above tolerance after expansion");
    out.roots.push_back({x, res, std::abs(x)});
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const Root& a, const Root& b) { return complex_less(a.value, b.value); });
  return out;
}

double mahler(const LaurentPoly& f, double tol_resid) {
  return static_cast<double>(std::exp(log_measure(f, tol_resid, true)));
}

double euclidean_mahler(const LaurentPoly& f, double tol_resid) {
  return static_cast<double>(std::exp(log_measure(f, tol_resid, false)));
}

// --- equimodular curve ------------------------------------------------------

LaurentPoly VPoly::at(const mpq_class& t) const {
  if (t < 0 || t > 4) throw Error("t must lie in [0, 4]");
  return constant * Integer(t.get_den()) + t_coeff * Integer(t.get_num());
}

std::string VPoly::to_string() const {
  return "(" + constant.to_string() + ") + t*(" + t_coeff.to_string() + ")";
}

VPoly v_poly(const LaurentPoly& lambda1, const LaurentPoly& lambda2) {
  const LaurentPoly s = lambda1 + lambda2;
  return {-(s * s), lambda1 * lambda2};
}

LaurentPoly v_poly(const LaurentPoly& lambda1, const LaurentPoly& lambda2, const mpq_class& t) {
  return v_poly(lambda1, lambda2).at(t);
}

std::vector<mpq_class> default_t_grid() {
  std::vector<mpq_class> out;
  for (int k = 0; k <= 80; ++k) {
    mpq_class t(k, 20);
    t.canonicalize();
    out.push_back(t);
  }
  return out;
}

namespace {

mpq_class parse_rational(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw Error("empty t value");
  mpq_class out;
  try {
    const auto dot = s.find('.');
    if (dot != std::string::npos) {
      const std::string frac = s.substr(dot + 1);
      if (frac.find_first_not_of("0123456789") != std::string::npos)
        throw Error("bad decimal");
      mpz_class num(s.substr(0, dot) + frac), den = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
      out = mpq_class(num, den);
    } else {
      out = mpq_class(s);
    }
  } catch (const std::invalid_argument&) {
    throw Error("bad t value '" + s + "'");
  }
  out.canonicalize();
  return out;
}

}  // namespace

std::vector<mpq_class> parse_t_grid(const std::string& text) {
  if (text == "default") return default_t_grid();
  // "a:b:n" -> n uniform points from a to b
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto p1 = text.find(':'), p2 = text.rfind(':');
    const mpq_class a = parse_rational(text.substr(0, p1));
    const mpq_class b = parse_rational(text.substr(p1 + 1, p2 - p1 - 1));
    const int n = std::stoi(text.substr(p2 + 1));
    if (n < 2) throw Error("t grid needs at least two points");
    std::vector<mpq_class> out;
    for (int k = 0; k < n; ++k) {
      mpq_class t = a + (b - a) * mpq_class(k, n - 1);
      t.canonicalize();
      out.push_back(t);
    }
    return out;
  }
  std::vector<mpq_class> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw Error("empty t grid");
  return out;
}

EquimodularResult equimodular_points(const LaurentPoly& lambda1, const LaurentPoly& lambda2,
                                     const std::vector<mpq_class>& t_grid,
                                     const Tolerances& tol) {
  const VPoly v = v_poly(lambda1, lambda2);
  EquimodularResult out;
  for (const mpq_class& t : t_grid) {
    const LaurentPoly vt = v.at(t);
    if (vt.is_zero() || vt.is_monomial()) continue;
    const RootSet rs = roots(vt, tol.resid);
    // derivative of the cleared polynomial, for the Jacobian test
    Coeffs p;
    for (const auto& c : vt.dense()) p.push_back(to_real(c));
    Coeffs dp;
    for (std::size_t i = 1; i < p.size(); ++i) dp.push_back(p[i] * static_cast<Real>(i));
    for (const Root& r : rs.roots) {
      const Real l1 = std::abs(lambda1.eval(r.value));
      const Real l2 = std::abs(lambda2.eval(r.value));
      if (l1 < tol.zero || l2 < tol.zero) {
        ++out.dropped_zero;
        continue;
      }
      const Real mod = (l1 + l2) / 2;
      if (std::fabs(l1 - l2) > tol.eqm * std::max(Real(1), mod)) {
        ++out.rejected;
        continue;
      }
      const Eval e = horner(dp, r.value);
      const bool isolated = std::abs(e.p) < tol.zero * std::max(e.scale, Real(1e-300));
      out.points.push_back({t, r.value, isolated, mod});
    }
  }
  std::stable_sort(out.points.begin(), out.points.end(),
                   [](const EquimodularPoint& a, const EquimodularPoint& b) {
                     if (a.t != b.t) return a.t < b.t;
                     return complex_less(a.z, b.z);
                   });
  return out;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Diverges: return "DIVERGES";
    case Verdict::NoCertificate: return "NO CERTIFICATE";
    case Verdict::NotApplicable: return "NOT APPLICABLE";
  }
  return "?";
}

Certificate divergence_certificate(const LaurentPoly& lambda1, const LaurentPoly& lambda2,
                                   const std::vector<mpq_class>& t_grid,
                                   const Tolerances& tol) {
  Certificate cert;
  if (lambda1.is_zero() || lambda2.is_zero()) {
    cert.verdict = Verdict::NotApplicable;
    cert.reason = "a dominant term vanishes identically";
    return cert;
  }
  if (lambda1 == lambda2 || lambda1 == -lambda2) {
    cert.verdict = Verdict::NotApplicable;
    cert.reason = "lambda1 = +-lambda2: constant ratio of modulus 1";
    return cert;
  }
  const EquimodularResult eq = equimodular_points(lambda1, lambda2, t_grid, tol);
  cert.points = static_cast<int>(eq.points.size());
  const mpq_class preferred(5, 4);
  const EquimodularPoint* best = nullptr;
  const EquimodularPoint* best_pref = nullptr;
  for (const EquimodularPoint& p : eq.points) {
    const Real m = std::abs(p.z);
    cert.max_modulus = std::max(cert.max_modulus, m);
    if (p.isolated || p.t <= 0 || p.t >= 4 || m <= 1 + tol.margin) continue;
    if (!best || m > std::abs(best->z)) best = &p;
    if (p.t == preferred && (!best_pref || m > std::abs(best_pref->z))) best_pref = &p;
  }
  if (best_pref) best = best_pref;
  if (best) {
    cert.verdict = Verdict::Diverges;
    cert.witness = *best;
    cert.reason = "non-isolated equimodular point outside the unit circle";
  } else {
    cert.verdict = Verdict::NoCertificate;
    cert.reason = "no non-isolated equimodular point with |z| > 1 + margin (inconclusive)";
  }
  return cert;
}

Certificate divergence_certificate(const FamilyForm& f, const std::vector<mpq_class>& t_grid,
                                   const Tolerances& tol) {
  return divergence_certificate(f.lambda1, f.lambda2, t_grid, tol);
}

std::vector<TrendRow> mahler_trend(const FamilyForm& f, const std::vector<int>& n_list,
                                   double tol_resid) {
  if (!std::is_sorted(n_list.begin(), n_list.end())) throw Error("n list must be ascending");
  std::vector<TrendRow> out;
  for (int n : n_list) {
    const LaurentPoly b = family_bracket(f, n);
    out.push_back({n, mahler(b, tol_resid), euclidean_mahler(b, tol_resid)});
  }
  return out;
}

}  // namespace wpoly
