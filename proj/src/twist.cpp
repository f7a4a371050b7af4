#include "wpoly/twist.hpp"

#include <sstream>

#include "wpoly/wpoly.hpp"

namespace wpoly {

void MultiPoly::add_term(const Exponents& e, const LaurentPoly& c) {
  if (static_cast<int>(e.size()) != nvars_) throw Error("exponent vector length mismatch");
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

LaurentPoly MultiPoly::evaluate(const std::vector<LaurentPoly>& values) const {
  if (static_cast<int>(values.size()) != nvars_) throw Error("wrong number of values");
  LaurentPoly total;
  for (const auto& [e, c] : terms_) {
    LaurentPoly term = c;
    for (int i = 0; i < nvars_; ++i)
      if (e[i] != 0) term *= values[i].pow(e[i]);
    total += term;
  }
  return total;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << '\n';
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i + 1);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    os << (mono.empty() ? "1" : mono) << ": " << c.to_string();
  }
  return os.str();
}

namespace {

// Polynomials in x_1..x_k over the d-localized ring; only what the subset sum
// needs.
class SymbolicElem {
 public:
  SymbolicElem() = default;
  SymbolicElem(int nvars, const DRingElem& c) {
    if (!c.is_zero()) terms_.emplace(MultiPoly::Exponents(nvars, 0), c);
  }
  static SymbolicElem var_minus_one_over_d(int nvars, int i) {
    SymbolicElem s;
    MultiPoly::Exponents e(nvars, 0);
    s.terms_.emplace(e, DRingElem(LaurentPoly(-1), -1));
    e[i] = 1;
    s.terms_.emplace(e, DRingElem(LaurentPoly(1), -1));
    return s;
  }

  SymbolicElem& operator+=(const SymbolicElem& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend SymbolicElem operator*(const SymbolicElem& a, const SymbolicElem& b) {
    SymbolicElem out;
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        MultiPoly::Exponents e = ea;
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add(e, ca * cb);
      }
    return out;
  }
  SymbolicElem times_dpow(int k) const {
    SymbolicElem out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.times_dpow(k));
    return out;
  }
  const std::map<MultiPoly::Exponents, DRingElem>& terms() const { return terms_; }

 private:
  void add(const MultiPoly::Exponents& e, const DRingElem& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(e, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  std::map<MultiPoly::Exponents, DRingElem> terms_;
};

struct SymbolicPair {
  SymbolicElem x, y;
};

}  // namespace

MultiPoly twist_polynomial(const ColoredGraph& g) {
  g.validate();
  if (!is_connected(g)) throw GraphError("not connected");
  const int k = g.ecount();
  std::vector<SymbolicPair> w;
  const SymbolicElem one(k, DRingElem(1));
  for (int i = 0; i < k; ++i) {
    const SymbolicElem v = SymbolicElem::var_minus_one_over_d(k, i);
    if (g.edges[i].color == Color::Chain) w.push_back({one, v});
    else w.push_back({v, one});
  }
  SymbolicElem total;
  for (const auto& [e, v] : subset_buckets(g, w, one)) total += v.times_dpow(e + k);
  MultiPoly out(k);
  for (const auto& [e, c] : total.terms()) {
    auto p = c.to_laurent();
    if (!p) throw NormalizationFailure("twist polynomial coefficient keeps a d denominator");
    out.add_term(e, *p);
  }
  return out;
}

LaurentPoly specialize_twist(const MultiPoly& p, const ColoredGraph& g,
                             const std::vector<int>& n) {
  if (static_cast<int>(n.size()) != g.ecount() || p.nvars() != g.ecount())
    throw Error("length vector does not match the graph");
  std::vector<LaurentPoly> values;
  int shift = 0;
  for (int i = 0; i < g.ecount(); ++i) {
    if (n[i] == 0) throw GraphError("lengths must be nonzero");
    const int r = g.edges[i].color == Color::Chain ? n[i] : -n[i];
    shift += r;
    values.push_back(LaurentPoly::monomial(r % 2 ? -1 : 1, -4 * r));
  }
  const LaurentPoly value = p.evaluate(values).shifted(shift);
  auto q = try_exact_div(value, d_pow(g.ecount()));
  if (!q) throw NormalizationFailure("specialized twist polynomial not divisible by d^E");
  return *q;
}

PStatistic p_statistic(const ColoredGraph& g) {
  PStatistic best{-1, {}};
  for_each_spanning_tree(g, [&](const EdgeSubset& f) {
    int p = 0;
    for (int i = 0; i < g.ecount(); ++i) {
      const bool in = f.contains(i);
      if ((g.edges[i].color == Color::Sheaf) == in) ++p;
    }
    if (p > best.p) best = {p, f};
  });
  return best;
}

NormScan norm_bound_scan(const ColoredGraph& g,
                         const std::vector<std::vector<int>>& samples) {
  const int p = p_statistic(g).p;
  const LaurentPoly dp = d_pow(p);
  NormScan out;
  out.max_norm_sq = -1;
  for (const auto& t : samples) {
    const Integer norm = (dp * kauffman_bracket(with_lengths(g, t))).l2_norm_sq();
    out.samples.emplace_back(t, norm);
    if (norm > out.max_norm_sq) {
      out.max_norm_sq = norm;
      out.argmax = t;
    }
  }
  return out;
}

std::vector<std::vector<int>> signed_box(int k, int bound) {
  std::vector<int> values;
  for (int v = -bound; v <= bound; ++v)
    if (v != 0) values.push_back(v);
  std::vector<std::vector<int>> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : out)
      for (int v : values) {
        next.push_back(prefix);
        next.back().push_back(v);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace wpoly
