//
// Copyright (c) 2026 The restricted-trace Contributors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "restricted_trace/delta_sum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace restricted_trace {

namespace {

Index floor_div(Index num, Index den) {
  Index q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Index ceil_div(Index num, Index den) { return -floor_div(-num, den); }

Index mod_inverse(Index a, Index p) {
  // extended Euclid on (a mod p, p); gcd is 1 by construction
  Index old_r = ((a % p) + p) % p, r = p;
  Index old_s = 1, s = 0;
  while (r != 0) {
    const Index q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  return ((old_s % p) + p) % p;
}

/// Solutions of the delta constraint as (n, m) = (n0 + n_step*s, m0 + m_step*s), s in Z.
struct SolutionLine {
  bool empty = false;
  Index n0 = 0, n_step = 0;
  Index m0 = 0, m_step = 0;
};

SolutionLine solve(const LinearDelta& d) {
  SolutionLine line;
  if (d.b == 0) {
    if (d.c % d.a != 0) return {true};
    line.n0 = -d.c / d.a;
    line.m_step = 1;
    return line;
  }
  const Index abs_b = std::abs(d.b);
  const Index g = std::gcd(std::abs(d.a), abs_b);
  if (d.c % g != 0) return {true};
  const Index period = abs_b / g;
  Index n0 = 0;
  if (period > 1) {
    const Index rhs = ((-(d.c / g)) % period + period) % period;
    n0 = (rhs * mod_inverse(d.a / g, period)) % period;
  }
  line.n0 = n0;
  line.n_step = period;
  line.m0 = -(d.a * n0 + d.c) / d.b;
  line.m_step = -(d.a * period) / d.b;
  return line;
}

/// lo <= alpha*s + beta <= hi; cutoff constraints use lo = -L, hi = L.
struct Constraint {
  Index alpha;
  Index beta;
  IndexRange range;
  bool cutoff;
};

class TermCounter {
 public:
  TermCounter(const DeltaTerm& term, CutoffScheme scheme) : line_(solve(term.delta())) {
    if (line_.empty) return;
    const bool cut_n = scheme != CutoffScheme::CutoffOnM;
    const bool cut_m = scheme != CutoffScheme::CutoffOnN;
    constraints_.push_back({line_.n_step, line_.n0, term.n_range(), false});
    constraints_.push_back({line_.m_step, line_.m0, term.m_range(), false});
    if (cut_n) constraints_.push_back({line_.n_step, line_.n0, {}, true});
    if (cut_m) constraints_.push_back({line_.m_step, line_.m0, {}, true});
  }

  bool empty() const { return line_.empty; }

  Index count(Index cutoff) const {
    if (line_.empty) return 0;
    std::optional<Index> s_lo, s_hi;
    auto raise_lo = [&](Index v) { s_lo = s_lo ? std::max(*s_lo, v) : v; };
    auto lower_hi = [&](Index v) { s_hi = s_hi ? std::min(*s_hi, v) : v; };
    for (const auto& c : constraints_) {
      const std::optional<Index> lo = c.cutoff ? std::optional<Index>(-cutoff) : c.range.lo;
      const std::optional<Index> hi = c.cutoff ? std::optional<Index>(cutoff) : c.range.hi;
      if (c.alpha == 0) {
        if ((lo && c.beta < *lo) || (hi && c.beta > *hi)) return 0;
        continue;
      }
      if (lo) {
        if (c.alpha > 0) raise_lo(ceil_div(*lo - c.beta, c.alpha));
        else lower_hi(floor_div(*lo - c.beta, c.alpha));
      }
      if (hi) {
        if (c.alpha > 0) lower_hi(floor_div(*hi - c.beta, c.alpha));
        else raise_lo(ceil_div(*hi - c.beta, c.alpha));
      }
    }
    if (!s_lo || !s_hi) {
      throw UnboundedInnerSum("inner sum has infinitely many delta solutions");
    }
    return std::max<Index>(0, *s_hi - *s_lo + 1);
  }

  /// Cutoff beyond which the set of active bounds no longer changes.
  Index settled_cutoff() const {
    Index a = 1, b = 0;
    for (const auto& c : constraints_) {
      a = std::max(a, std::abs(c.alpha));
      b = std::max(b, std::abs(c.beta));
      if (c.range.lo) b = std::max(b, std::abs(*c.range.lo));
      if (c.range.hi) b = std::max(b, std::abs(*c.range.hi));
    }
    return 4 * (a + 1) * (a + 1) * (b + 1);
  }

  /// Period of the floor terms contributed by cutoff bounds.
  Index period() const {
    Index p = 1;
    for (const auto& c : constraints_) {
      if (c.cutoff && c.alpha != 0) p = std::lcm(p, std::abs(c.alpha));
    }
    return p;
  }

 private:
  SolutionLine line_;
  std::vector<Constraint> constraints_;
};

}  // namespace

DeltaTerm::DeltaTerm(GaussianRational coeff, IndexRange n_range, IndexRange m_range,
                     LinearDelta delta)
    : coeff_(std::move(coeff)), n_range_(n_range), m_range_(m_range), delta_(delta) {
  if (delta_.a == 0 && delta_.b == 0) {
    throw std::invalid_argument("delta must involve at least one summation index");
  }
  if (n_range_.is_empty() || m_range_.is_empty()) {
    throw std::invalid_argument("summation ranges must be nonempty");
  }
}

DeltaSumExpr concat(const DeltaSumExpr& a, const DeltaSumExpr& b) {
  DeltaSumExpr out = a;
  out.terms.insert(out.terms.end(), b.terms.begin(), b.terms.end());
  return out;
}

std::string to_string(CutoffScheme scheme) {
  switch (scheme) {
    case CutoffScheme::CutoffOnN: return "cutoff-n";
    case CutoffScheme::CutoffOnM: return "cutoff-m";
    case CutoffScheme::SquareSymmetric: return "square";
  }
  return "unknown";
}

std::optional<CutoffScheme> scheme_from_string(const std::string& name) {
  if (name == "cutoff-n") return CutoffScheme::CutoffOnN;
  if (name == "cutoff-m") return CutoffScheme::CutoffOnM;
  if (name == "square") return CutoffScheme::SquareSymmetric;
  return std::nullopt;
}

AffineLimit operator+(const AffineLimit& a, const AffineLimit& b) {
  return {a.slope + b.slope, a.value + b.value, std::max(a.stabilizes_at, b.stabilizes_at)};
}

Index count_solutions(const DeltaTerm& term, CutoffScheme scheme, Index cutoff) {
  return TermCounter(term, scheme).count(cutoff);
}

GaussianRational evaluate_at(const DeltaSumExpr& expr, CutoffScheme scheme, Index cutoff) {
  GaussianRational sum;
  for (const auto& term : expr.terms) {
    sum += term.coeff() * GaussianRational(count_solutions(term, scheme, cutoff));
  }
  return sum;
}

AffineLimit evaluate(const DeltaTerm& term, CutoffScheme scheme) {
  const TermCounter counter(term, scheme);
  if (counter.empty()) return {};
  const Index start = counter.settled_cutoff();
  const Index period = counter.period();

  // Past `start` the count is a degree-one quasi-polynomial with the given
  // period, so constant increments over one full period make it affine.
  const Index step = counter.count(start + 1) - counter.count(start);
  Index prev = counter.count(start);
  for (Index cutoff = start + 1; cutoff <= start + period; ++cutoff) {
    const Index cur = counter.count(cutoff);
    if (cur - prev != step) {
      throw NonAffineCount("lattice count oscillates with period " + std::to_string(period));
    }
    prev = cur;
  }
  const Index intercept = counter.count(start) - step * start;
  Index stable = start;
  while (stable > 0 && counter.count(stable - 1) == step * (stable - 1) + intercept) --stable;

  return {term.coeff() * GaussianRational(step), term.coeff() * GaussianRational(intercept),
          stable};
}

AffineLimit evaluate(const DeltaSumExpr& expr, CutoffScheme scheme) {
  AffineLimit total;
  for (const auto& term : expr.terms) total = total + evaluate(term, scheme);
  return total;
}

DeltaSumExpr index_swap(const DeltaSumExpr& expr) {
  DeltaSumExpr out;
  for (const auto& t : expr.terms) {
    const LinearDelta& d = t.delta();
    out.terms.emplace_back(t.coeff(), t.m_range(), t.n_range(), LinearDelta{d.b, d.a, d.c});
  }
  return out;
}

namespace {

void require_positive(Index j) {
  if (j < 1) throw std::invalid_argument("harmonic j must be a positive integer");
}

// 1/(4i) = -i/4, 1/(2i) = -i/2
GaussianRational over_i(long den) { return {Rational(0), Rational(-1, den)}; }

}  // namespace

DeltaSumExpr f2_expr(Index j) {
  require_positive(j);
  const GaussianRational c = -over_i(4);
  const LinearDelta delta{1, 1, -j};  // delta(m - j + n)
  return {{DeltaTerm(c, IndexRange::at_least(0), IndexRange::at_least(1), delta),
           DeltaTerm(c, IndexRange::at_least(1), IndexRange::at_least(0), delta)}};
}

DeltaSumExpr a1a2_expr(Index j) {
  require_positive(j);
  const auto nonneg = IndexRange::at_least(0);
  return {{DeltaTerm(over_i(4), nonneg, nonneg, {1, -1, -j}),     // delta(n - j - m)
           DeltaTerm(-over_i(4), nonneg, nonneg, {1, -1, j})}};   // delta(n + j - m)
}

DeltaSumExpr a1ja2_expr(Index j) {
  require_positive(j);
  const auto nonneg = IndexRange::at_least(0);
  return {{DeltaTerm(over_i(2), IndexRange::all(), nonneg, {-1, 1, j}),    // delta(m + j - n)
           DeltaTerm(-over_i(2), IndexRange::all(), nonneg, {1, -1, j})}}; // delta(n + j - m)
}

std::optional<DeltaSumExpr> named_expr(const std::string& name, Index j) {
  if (name == "f2") return f2_expr(j);
  if (name == "a1a2") return a1a2_expr(j);
  if (name == "a1ja2") return a1ja2_expr(j);
  return std::nullopt;
}

}  // namespace restricted_trace
