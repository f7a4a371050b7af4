#include "wpoly/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <sstream>

namespace wpoly {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const Integer& c, int exponent) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = exponent;
  return p;
}

const LaurentPoly& LaurentPoly::d() {
  static const LaurentPoly value = monomial(-1, -2) + monomial(-1, 2);
  return value;
}

LaurentPoly LaurentPoly::from_terms(
    const std::vector<std::pair<int, Integer>>& terms) {
  LaurentPoly out;
  for (const auto& [e, c] : terms) out += monomial(c, e);
  return out;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(last),
                coeffs_.end());
  coeffs_.erase(coeffs_.begin(),
                coeffs_.begin() + static_cast<std::ptrdiff_t>(first));
  low_ += static_cast<int>(first);
}

Integer LaurentPoly::coeff(int exponent) const {
  if (is_zero() || exponent < low() || exponent > high()) return 0;
  return coeffs_[static_cast<std::size_t>(exponent - low_)];
}

std::vector<std::pair<int, Integer>> LaurentPoly::terms() const {
  std::vector<std::pair<int, Integer>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) out.emplace_back(low_ + static_cast<int>(i), coeffs_[i]);
  return out;
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(
      coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && abs(coeffs_[0]) == 1;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  const int lo = std::min(low(), rhs.low());
  const int hi = std::max(high(), rhs.high());
  if (lo < low_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(low_ - lo), 0);
    low_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1), 0);
  const auto offset = static_cast<std::size_t>(rhs.low_ - lo);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[offset + i] += rhs.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  return *this += -rhs;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.low_ = a.low_ + b.low_;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpz_addmul(out.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                 b.coeffs_[j].get_mpz_t());
    }
  }
  out.trim();
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  return *this = *this * rhs;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& k) {
  if (k == 0) return *this = LaurentPoly();
  for (auto& c : coeffs_) c *= k;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

LaurentPoly LaurentPoly::pow(int e) const {
  if (e < 0) {
    if (!is_unit()) throw NonInvertible();
    // (+-A^k)^-1 = +-A^-k
    return monomial(coeffs_[0], -low_).pow(-e);
  }
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::mirrored() const {
  LaurentPoly out;
  if (is_zero()) return out;
  out.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  out.low_ = -high();
  return out;
}

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw Error("substitute_power: exponent must be nonzero");
  LaurentPoly out;
  for (const auto& [e, c] : terms()) out += monomial(c, e * k);
  return out;
}

Integer LaurentPoly::l2_norm_sq() const {
  Integer s = 0;
  for (const auto& c : coeffs_) s += c * c;
  return s;
}

namespace {

template <class Real>
std::complex<Real> horner(const std::vector<Integer>& coeffs, int low,
                          std::complex<Real> z) {
  if (coeffs.empty()) return {0, 0};
  if (z == std::complex<Real>(0, 0)) {
    if (low < 0) throw Error("pole at origin");
    return low == 0 ? std::complex<Real>(static_cast<Real>(coeffs[0].get_d()), 0)
                    : std::complex<Real>(0, 0);
  }
  std::complex<Real> acc(0, 0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * z + static_cast<Real>(it->get_d());
  return acc * std::pow(z, low);
}

}  // namespace

std::complex<double> LaurentPoly::eval(std::complex<double> z) const {
  return horner<double>(coeffs_, low_, z);
}

std::complex<long double> LaurentPoly::eval(std::complex<long double> z) const {
  return horner<long double>(coeffs_, low_, z);
}

long double LaurentPoly::abs_scale(std::complex<long double> z) const {
  const long double r = std::abs(z);
  long double s = 0;
  for (const auto& [e, c] : terms())
    s += std::fabs(static_cast<long double>(c.get_d())) * std::pow(r, e);
  return s;
}

std::string LaurentPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int e = high(); e >= low(); --e) {
    const Integer& c = coeffs_[static_cast<std::size_t>(e - low_)];
    if (c == 0) continue;
    const bool neg = c < 0;
    const Integer mag = neg ? Integer(-c) : c;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << '*';
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

namespace {

class TermParser {
 public:
  TermParser(std::string_view text, char var) : s_(text), var_(var) {}

  LaurentPoly run() {
    LaurentPoly out;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term(sign);
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial parse error at offset " +
                     std::to_string(pos_) + ": " + why);
  }
  std::string digits() {
    std::string out;
    while (std::isdigit(static_cast<unsigned char>(peek()))) out += s_[pos_++];
    return out;
  }

  LaurentPoly term(int sign) {
    Integer coeff = 1;
    bool have_coeff = false;
    const std::string num = digits();
    if (!num.empty()) {
      coeff = Integer(num);
      have_coeff = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        skip_ws();
        if (peek() != var_) fail("expected variable after '*'");
      }
    }
    int exponent = 0;
    if (peek() == var_) {
      ++pos_;
      exponent = 1;
      skip_ws();
      if (peek() == '^') {
        ++pos_;
        skip_ws();
        int esign = 1;
        if (peek() == '-') {
          esign = -1;
          ++pos_;
        } else if (peek() == '+') {
          ++pos_;
        }
        const std::string e = digits();
        if (e.empty()) fail("expected exponent");
        exponent = esign * std::stoi(e);
      }
    } else if (!have_coeff) {
      fail("expected coefficient or variable");
    }
    return LaurentPoly::monomial(coeff * sign, exponent);
  }

  std::string_view s_;
  char var_;
  std::size_t pos_ = 0;
};

// Division of ordinary polynomials given by dense coefficient vectors with
// nonzero constant and leading terms.
std::optional<std::vector<Integer>> poly_divide(std::vector<Integer> num,
                                                const std::vector<Integer>& den) {
  if (num.size() < den.size()) return std::nullopt;
  const std::size_t qlen = num.size() - den.size() + 1;
  std::vector<Integer> q(qlen, 0);
  const Integer& lead = den.back();
  Integer r;
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = num[k + den.size() - 1];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return std::nullopt;
    mpz_divexact(r.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    q[k] = r;
    for (std::size_t j = 0; j < den.size(); ++j) {
      if (den[j] == 0) continue;
      mpz_submul(num[k + j].get_mpz_t(), r.get_mpz_t(), den[j].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i + 1 < den.size(); ++i)
    if (num[i] != 0) return std::nullopt;
  return q;
}

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, char var) {
  return TermParser(text, var).run();
}

std::optional<LaurentPoly> try_exact_div(const LaurentPoly& f,
                                         const LaurentPoly& g) {
  if (g.is_zero()) throw Error("division by zero polynomial");
  if (f.is_zero()) return LaurentPoly();
  // Both dense vectors start at a nonzero coefficient, so f / g reduces to
  // ordinary polynomial division after shifting by A^(low f - low g).
  auto q = poly_divide(f.dense(), g.dense());
  if (!q) return std::nullopt;
  std::vector<std::pair<int, Integer>> terms;
  for (std::size_t i = 0; i < q->size(); ++i)
    if ((*q)[i] != 0)
      terms.emplace_back(f.low() - g.low() + static_cast<int>(i), (*q)[i]);
  return LaurentPoly::from_terms(terms);
}

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
  auto q = try_exact_div(f, g);
  if (!q) throw NotDivisible();
  return *std::move(q);
}

LaurentPoly d_pow(int k) {
  if (k < 0) throw NonInvertible();
  static std::mutex mu;
  static std::vector<LaurentPoly> cache{LaurentPoly(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * LaurentPoly::d());
  return cache[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------

DRingElem DRingElem::normalized() const {
  DRingElem out = *this;
  while (out.dexp_ < 0 && !out.num_.is_zero()) {
    auto q = try_exact_div(out.num_, LaurentPoly::d());
    if (!q) break;
    out.num_ = *std::move(q);
    ++out.dexp_;
  }
  return out;
}

DRingElem DRingElem::fully_reduced() const {
  DRingElem out = *this;
  while (!out.num_.is_zero()) {
    auto q = try_exact_div(out.num_, LaurentPoly::d());
    if (!q) break;
    out.num_ = *std::move(q);
    ++out.dexp_;
  }
  return out;
}

std::optional<LaurentPoly> DRingElem::to_laurent() const {
  DRingElem n = normalized();
  if (n.dexp_ < 0) return std::nullopt;
  return n.num_ * d_pow(n.dexp_);
}

DRingElem& DRingElem::operator+=(const DRingElem& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  if (dexp_ == rhs.dexp_) {
    num_ += rhs.num_;
  } else if (dexp_ < rhs.dexp_) {
    num_ += rhs.num_ * d_pow(rhs.dexp_ - dexp_);
  } else {
    num_ = num_ * d_pow(dexp_ - rhs.dexp_) + rhs.num_;
    dexp_ = rhs.dexp_;
  }
  if (num_.is_zero()) dexp_ = 0;
  return *this;
}

DRingElem& DRingElem::operator*=(const DRingElem& rhs) {
  num_ *= rhs.num_;
  dexp_ = num_.is_zero() ? 0 : dexp_ + rhs.dexp_;
  return *this;
}

bool operator==(const DRingElem& a, const DRingElem& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const int m = std::min(a.dexp_, b.dexp_);
  return a.num_ * d_pow(a.dexp_ - m) == b.num_ * d_pow(b.dexp_ - m);
}

DRingElem DRingElem::pow(int e) const {
  return {num_.pow(e), dexp_ * e};  // LaurentPoly::pow rejects non-unit inverses
}

std::string DRingElem::to_string() const {
  DRingElem n = normalized();
  if (n.dexp_ == 0) return n.num_.to_string();
  return "(" + n.num_.to_string() + ")*d^" + std::to_string(n.dexp_);
}

}  // namespace wpoly
