#include "hyperlog/lp.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace hyperlog {

// ---------------------------------------------------------------------------
// Expressions and systems

LinExpr& LinExpr::add(const std::string& var, const Rational& c) {
  if (c == 0) return *this;
  Rational& slot = coeffs[var];
  slot += c;
  if (slot == 0) coeffs.erase(var);
  return *this;
}

LinExpr& LinExpr::add(const LinExpr& e, const Rational& scale) {
  for (const auto& [v, c] : e.coeffs) add(v, c * scale);
  constant += e.constant * scale;
  return *this;
}

void LinSystem::add(const LinExpr& lhs, Rel rel, const LinExpr& rhs) {
  LinExpr d = lhs;
  d.add(rhs, -1);
  rows.push_back({d.coeffs, rel, d.constant});
}

void LinSystem::bound(const std::string& var, std::optional<Rational> lower, std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) throw std::invalid_argument("inconsistent bounds for " + var);
  bounds[var] = {std::move(lower), std::move(upper)};
}

std::vector<std::string> LinSystem::variables() const {
  std::vector<std::string> out;
  auto note = [&](const std::string& v) {
    if (std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  };
  for (const auto& r : rows)
    for (const auto& [v, c] : r.coeffs) note(v);
  for (const auto& [v, b] : bounds) note(v);
  return out;
}

std::string LinSystem::dump() const {
  std::ostringstream os;
  for (const auto& r : rows) {
    bool first = true;
    for (const auto& [v, c] : r.coeffs) {
      if (!first) os << " + ";
      os << to_string(c) << "*" << v;
      first = false;
    }
    if (r.constant != 0 || first) os << (first ? "" : " + ") << to_string(r.constant);
    os << (r.rel == Rel::Gt ? " > 0" : r.rel == Rel::Ge ? " >= 0" : " = 0") << "\n";
  }
  for (const auto& [v, b] : bounds) {
    os << (b.lower ? to_string(*b.lower) : "-inf") << " <= " << v << " <= "
       << (b.upper ? to_string(*b.upper) : "+inf") << "\n";
  }
  return os.str();
}

bool satisfies(const LinSystem& sys, const std::map<std::string, Rational>& x) {
  auto val = [&](const std::string& v) -> Rational {
    auto it = x.find(v);
    return it == x.end() ? Rational(0) : it->second;
  };
  for (const auto& r : sys.rows) {
    Rational s = r.constant;
    for (const auto& [v, c] : r.coeffs) s += c * val(v);
    if (r.rel == Rel::Gt ? !(s > 0) : r.rel == Rel::Ge ? !(s >= 0) : s != 0) return false;
  }
  for (const auto& [v, b] : sys.bounds) {
    if (b.lower && val(v) < *b.lower) return false;
    if (b.upper && val(v) > *b.upper) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Fourier–Motzkin

namespace {

struct Bits {
  std::vector<std::uint64_t> w;
  void set(std::size_t i) {
    if (w.size() <= i / 64) w.resize(i / 64 + 1, 0);
    w[i / 64] |= std::uint64_t{1} << (i % 64);
  }
  Bits operator|(const Bits& o) const {
    Bits r;
    r.w.resize(std::max(w.size(), o.w.size()), 0);
    for (std::size_t i = 0; i < w.size(); ++i) r.w[i] |= w[i];
    for (std::size_t i = 0; i < o.w.size(); ++i) r.w[i] |= o.w[i];
    return r;
  }
  std::size_t count() const {
    std::size_t n = 0;
    for (auto x : w) n += static_cast<std::size_t>(std::popcount(x));
    return n;
  }
};

// a·x + c ▷ 0 with ▷ = '>' when strict, '≥' otherwise.
struct Row {
  std::vector<Rational> a;
  Rational c;
  bool strict = false;
  Bits hist;
};

bool zero_row(const Row& r) {
  return std::all_of(r.a.begin(), r.a.end(), [](const Rational& q) { return q == 0; });
}

bool constant_holds(const Row& r) { return r.strict ? r.c > 0 : r.c >= 0; }

void scale_primitive(Row& r) {
  for (const auto& q : r.a)
    if (q != 0) {
      Rational s = abs(q);
      if (s != 1) {
        for (auto& x : r.a) x /= s;
        r.c /= s;
      }
      return;
    }
}

// Keeps the strongest row per coefficient direction.
class RowSet {
 public:
  // Returns false if a constant row is violated.
  bool insert(Row r) {
    if (zero_row(r)) return constant_holds(r);
    scale_primitive(r);
    auto it = index_.find(r.a);
    if (it == index_.end()) {
      index_.emplace(r.a, rows_.size());
      rows_.push_back(std::move(r));
      return true;
    }
    Row& old = rows_[it->second];
    if (r.c < old.c || (r.c == old.c && r.strict && !old.strict)) old = std::move(r);
    return true;
  }
  std::vector<Row>& rows() { return rows_; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<std::vector<Rational>, std::size_t> index_;
  std::vector<Row> rows_;
};

struct Stage {
  std::size_t var;
  std::vector<Row> pos, neg;
};

struct Subst {
  std::size_t var;
  std::vector<Rational> a;  // x_var = a·x + c, a[var] = 0
  Rational c;
};

void substitute(std::vector<Rational>& a, Rational& c, const Subst& s) {
  Rational k = a[s.var];
  if (k == 0) return;
  a[s.var] = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (s.a[i] != 0) a[i] += k * s.a[i];
  c += k * s.c;
}

struct Bound {
  Rational value;
  bool strict;
};

Rational choose(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
  if (lo && !lo->strict) return lo->value;
  if (lo && hi) return (lo->value + hi->value) / 2;
  if (lo) return lo->value + 1;
  if (hi) return hi->strict ? hi->value - 1 : hi->value;
  return 0;
}

}  // namespace

namespace {

FeasibilityResult fm_run(const LinSystem& sys, std::size_t row_limit, bool prune) {
  const auto names = sys.variables();
  const std::size_t n = names.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[names[i]] = i;

  std::vector<Row> ineqs;
  std::vector<Row> eqs;
  for (const auto& r : sys.rows) {
    Row row{std::vector<Rational>(n), r.constant, r.rel == Rel::Gt, {}};
    for (const auto& [v, c] : r.coeffs) row.a[idx.at(v)] = c;
    (r.rel == Rel::Eq ? eqs : ineqs).push_back(std::move(row));
  }
  for (const auto& [v, b] : sys.bounds) {
    if (b.lower) {
      Row row{std::vector<Rational>(n), -*b.lower, false, {}};
      row.a[idx.at(v)] = 1;
      ineqs.push_back(std::move(row));
    }
    if (b.upper) {
      Row row{std::vector<Rational>(n), *b.upper, false, {}};
      row.a[idx.at(v)] = -1;
      ineqs.push_back(std::move(row));
    }
  }

  FeasibilityResult infeasible{false, {}, "fm"};

  // Equalities: Gaussian substitution.
  std::vector<Subst> substs;
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    Row& q = eqs[e];
    auto j = std::find_if(q.a.begin(), q.a.end(), [](const Rational& x) { return x != 0; });
    if (j == q.a.end()) {
      if (q.c != 0) return infeasible;
      continue;
    }
    std::size_t var = static_cast<std::size_t>(j - q.a.begin());
    Rational piv = q.a[var];
    Subst s{var, std::vector<Rational>(n), -q.c / piv};
    for (std::size_t k = 0; k < n; ++k)
      if (k != var && q.a[k] != 0) s.a[k] = -q.a[k] / piv;
    for (std::size_t f = e + 1; f < eqs.size(); ++f) substitute(eqs[f].a, eqs[f].c, s);
    for (auto& r : ineqs) substitute(r.a, r.c, s);
    substs.push_back(std::move(s));
  }

  RowSet current;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    ineqs[i].hist.set(i);
    if (!current.insert(std::move(ineqs[i]))) return infeasible;
  }

  std::vector<Stage> stages;
  std::size_t eliminated = 0;
  while (true) {
    auto& rows = current.rows();
    std::vector<std::size_t> pos(n, 0), neg(n, 0);
    for (const auto& r : rows)
      for (std::size_t k = 0; k < n; ++k) {
        int s = sgn(r.a[k]);
        if (s > 0) ++pos[k];
        if (s < 0) ++neg[k];
      }
    std::optional<std::size_t> pick;
    long best = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (pos[k] + neg[k] == 0) continue;
      long score = static_cast<long>(pos[k] * neg[k]) - static_cast<long>(pos[k] + neg[k]);
      if (!pick || score < best) {
        pick = k;
        best = score;
      }
    }
    if (!pick) break;
    const std::size_t j = *pick;
    ++eliminated;
    Stage st{j, {}, {}};
    RowSet next;
    for (auto& r : rows) {
      int s = sgn(r.a[j]);
      if (s > 0)
        st.pos.push_back(r);
      else if (s < 0)
        st.neg.push_back(r);
      else if (!next.insert(r))
        return infeasible;
    }
    for (const auto& p : st.pos)
      for (const auto& q : st.neg) {
        Bits h = p.hist | q.hist;
        if (prune && h.count() > eliminated + 1) continue;  // Chernikov redundancy
        Row r{std::vector<Rational>(n), 0, p.strict || q.strict, std::move(h)};
        Rational wp = -q.a[j], wq = p.a[j];
        for (std::size_t k = 0; k < n; ++k) r.a[k] = wp * p.a[k] + wq * q.a[k];
        r.a[j] = 0;
        r.c = wp * p.c + wq * q.c;
        if (!next.insert(std::move(r))) return infeasible;
        if (next.size() > row_limit) throw LpResourceError("Fourier-Motzkin row limit exceeded");
      }
    stages.push_back(std::move(st));
    current = std::move(next);
  }

  // Back-substitution.
  std::vector<std::optional<Rational>> x(n);
  auto value = [&](std::size_t k) -> Rational { return x[k] ? *x[k] : Rational(0); };
  for (auto it = stages.rbegin(); it != stages.rend(); ++it) {
    const std::size_t j = it->var;
    std::optional<Bound> lo, hi;
    auto rest = [&](const Row& r) {
      Rational s = r.c;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j && r.a[k] != 0) s += r.a[k] * value(k);
      return s;
    };
    for (const auto& r : it->pos) {
      Bound b{-rest(r) / r.a[j], r.strict};
      if (!lo || b.value > lo->value || (b.value == lo->value && b.strict)) lo = b;
    }
    for (const auto& r : it->neg) {
      Bound b{rest(r) / -r.a[j], r.strict};
      if (!hi || b.value < hi->value || (b.value == hi->value && b.strict)) hi = b;
    }
    x[j] = choose(lo, hi);
  }
  for (auto it = substs.rbegin(); it != substs.rend(); ++it) {
    Rational s = it->c;
    for (std::size_t k = 0; k < n; ++k)
      if (it->a[k] != 0) s += it->a[k] * value(k);
    x[it->var] = s;
  }

  FeasibilityResult res{true, {}, "fm"};
  for (std::size_t k = 0; k < n; ++k) res.witness[names[k]] = value(k);
  return res;
}

}  // namespace

FeasibilityResult feasible_fm(const LinSystem& sys, std::size_t row_limit) {
  // Pruning only drops derived rows, so an infeasible verdict stands; a
  // feasible one is re-derived without pruning if its witness fails.
  auto res = fm_run(sys, row_limit, true);
  if (!res.feasible || satisfies(sys, res.witness)) return res;
  res = fm_run(sys, row_limit, false);
  if (res.feasible && !satisfies(sys, res.witness))
    throw std::logic_error("Fourier-Motzkin witness failed self-check");
  return res;
}

// ---------------------------------------------------------------------------
// Exact simplex (two-phase, Bland's rule)

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;

struct LpResult {
  enum class Status { Optimal, Infeasible, Unbounded } status;
  Vec z;
};

class Tableau {
 public:
  Tableau(Mat a, Vec b) : t_(std::move(a)), b_(std::move(b)) {
    m_ = t_.size();
    n_ = m_ ? t_[0].size() : 0;
  }

  // min cost·z subject to A z = b, z ≥ 0.
  LpResult solve(const Vec& cost) {
    for (std::size_t i = 0; i < m_; ++i)
      if (b_[i] < 0) {
        for (auto& q : t_[i]) q = -q;
        b_[i] = -b_[i];
      }
    const std::size_t n0 = n_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t k = 0; k < m_; ++k) t_[i].push_back(Rational(i == k ? 1 : 0));
      basis_.push_back(n0 + i);
    }
    n_ = n0 + m_;
    allowed_.assign(n_, true);

    // Phase 1.
    r_.assign(n_, 0);
    rhs_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n0; ++j) r_[j] -= t_[i][j];
      rhs_ -= b_[i];
    }
    if (!run()) throw std::logic_error("phase 1 unbounded");
    if (rhs_ != 0) return {LpResult::Status::Infeasible, {}};

    // Drive artificials out of the basis.
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n0) {
        ++i;
        continue;
      }
      std::size_t j = 0;
      while (j < n0 && t_[i][j] == 0) ++j;
      if (j < n0) {
        pivot(i, j);
        ++i;
      } else {
        t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(i));
        b_.erase(b_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
    for (std::size_t j = n0; j < n_; ++j) allowed_[j] = false;

    // Phase 2.
    r_.assign(n_, 0);
    rhs_ = 0;
    for (std::size_t j = 0; j < n0; ++j) r_[j] = cost[j];
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) r_[j] -= cb * t_[i][j];
      rhs_ -= cb * b_[i];
    }
    if (!run()) return {LpResult::Status::Unbounded, {}};
    Vec z(n0, 0);
    for (std::size_t i = 0; i < m_; ++i) z[basis_[i]] = b_[i];
    return {LpResult::Status::Optimal, std::move(z)};
  }

 private:
  // Returns false when unbounded.
  bool run() {
    while (true) {
      std::size_t enter = n_;
      for (std::size_t j = 0; j < n_; ++j)
        if (allowed_[j] && r_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == n_) return true;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (t_[i][enter] <= 0) continue;
        Rational ratio = b_[i] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t i, std::size_t j) {
    Rational p = t_[i][j];
    if (p != 1) {
      for (auto& q : t_[i]) q /= p;
      b_[i] /= p;
    }
    for (std::size_t k = 0; k < m_; ++k) {
      if (k == i || t_[k][j] == 0) continue;
      Rational f = t_[k][j];
      for (std::size_t c = 0; c < n_; ++c)
        if (t_[i][c] != 0) t_[k][c] -= f * t_[i][c];
      b_[k] -= f * b_[i];
    }
    if (r_[j] != 0) {
      Rational f = r_[j];
      for (std::size_t c = 0; c < n_; ++c)
        if (t_[i][c] != 0) r_[c] -= f * t_[i][c];
      rhs_ -= f * b_[i];
    }
    basis_[i] = j;
  }

  Mat t_;
  Vec b_;
  std::size_t m_ = 0, n_ = 0;
  std::vector<std::size_t> basis_;
  std::vector<bool> allowed_;
  Vec r_;
  Rational rhs_;
};

}  // namespace

std::optional<std::vector<Rational>> solve_nonneg(const std::vector<std::vector<Rational>>& a,
                                                  const std::vector<Rational>& b) {
  if (a.empty()) return std::vector<Rational>{};
  Tableau t(a, b);
  auto res = t.solve(Vec(a[0].size(), 0));
  if (res.status != LpResult::Status::Optimal) return std::nullopt;
  return res.z;
}

FeasibilityResult feasible_simplex(const LinSystem& sys) {
  const auto names = sys.variables();
  const std::size_t n = names.size();
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx[names[i]] = i;

  struct Lin {
    Vec a;
    Rational c;
    Rel rel;
  };
  std::vector<Lin> rows;
  for (const auto& r : sys.rows) {
    Lin l{Vec(n, 0), r.constant, r.rel};
    for (const auto& [v, c] : r.coeffs) l.a[idx.at(v)] = c;
    rows.push_back(std::move(l));
  }
  for (const auto& [v, b] : sys.bounds) {
    if (b.lower) {
      Lin l{Vec(n, 0), -*b.lower, Rel::Ge};
      l.a[idx.at(v)] = 1;
      rows.push_back(std::move(l));
    }
    if (b.upper) {
      Lin l{Vec(n, 0), *b.upper, Rel::Ge};
      l.a[idx.at(v)] = -1;
      rows.push_back(std::move(l));
    }
  }
  std::size_t nineq = 0;
  bool strict = false;
  for (const auto& r : rows) {
    if (r.rel != Rel::Eq) ++nineq;
    if (r.rel == Rel::Gt) strict = true;
  }
  // Columns: x⁺ (n), x⁻ (n), slacks (nineq), ε, slack of ε ≤ 1.
  const std::size_t eps = 2 * n + nineq;
  const std::size_t cols = eps + 2;
  Mat a;
  Vec b;
  std::size_t s = 2 * n;
  for (const auto& r : rows) {
    Vec row(cols, 0);
    for (std::size_t k = 0; k < n; ++k) {
      row[k] = r.a[k];
      row[n + k] = -r.a[k];
    }
    if (r.rel != Rel::Eq) row[s++] = -1;
    if (r.rel == Rel::Gt) row[eps] = -1;
    a.push_back(std::move(row));
    b.push_back(-r.c);
  }
  Vec erow(cols, 0);
  erow[eps] = 1;
  erow[eps + 1] = 1;
  a.push_back(std::move(erow));
  b.push_back(1);
  Vec cost(cols, 0);
  cost[eps] = -1;

  Tableau t(std::move(a), std::move(b));
  auto res = t.solve(cost);
  FeasibilityResult out{false, {}, "simplex"};
  if (res.status != LpResult::Status::Optimal) return out;
  if (strict && res.z[eps] <= 0) return out;
  out.feasible = true;
  for (std::size_t k = 0; k < n; ++k) out.witness[names[k]] = res.z[k] - res.z[n + k];
  if (!satisfies(sys, out.witness)) throw std::logic_error("simplex witness failed self-check");
  return out;
}

FeasibilityResult feasible(const LinSystem& sys, const LpOptions& opts) {
  try {
    return feasible_fm(sys, opts.fm_row_limit);
  } catch (const LpResourceError&) {
    if (!opts.simplex_fallback) throw;
  }
  return feasible_simplex(sys);
}

// ---------------------------------------------------------------------------
// Atomic hypersequents

namespace {

void require_atomic(const Hypersequent& g, bool allow_bot) {
  for (const auto& s : g.components)
    for (const auto* side : {&s.left, &s.right})
      for (const auto& f : *side)
        if (!(f.is_var() || (allow_bot && f.is(Kind::Bot))))
          throw std::invalid_argument("non-atomic input: " + render_formula(f));
}

std::vector<Integer> integer_scale(const std::vector<Rational>& lam) {
  Integer l = 1;
  for (const auto& q : lam) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<Integer> out;
  Integer g = 0;
  for (const auto& q : lam) {
    Rational s = q * l;
    Integer v = s.get_num();
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g > 1)
    for (auto& v : out) v /= g;
  return out;
}

std::vector<std::string> atom_names(const Hypersequent& g) {
  std::vector<std::string> out;
  for (const auto& s : g.components)
    for (const auto* side : {&s.left, &s.right})
      for (const auto& f : *side)
        if (f.is_var()) out.push_back(f.name());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

long signed_count(const Sequent& s, const Formula& q) {
  return static_cast<long>(count(s.left, q)) - static_cast<long>(count(s.right, q));
}

Sequent combine(const Hypersequent& g, const std::vector<Integer>& lam) {
  Sequent out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    std::size_t k = lam[i].get_ui();
    out = merge(out, scale(g.components[i], k));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Integer>> lambda_certificate(const Hypersequent& g) {
  require_atomic(g, false);
  const auto atoms = atom_names(g);
  const std::size_t n = g.size();
  Mat a;
  Vec b;
  for (const auto& name : atoms) {
    Formula q = Formula::var(name);
    Vec row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = signed_count(g.components[i], q);
    a.push_back(std::move(row));
    b.push_back(0);
  }
  a.push_back(Vec(n, 1));
  b.push_back(1);
  auto sol = solve_nonneg(a, b);
  if (!sol) return std::nullopt;
  auto lam = integer_scale(*sol);
  Sequent merged = combine(g, lam);
  if (merged.left != merged.right) throw std::logic_error("lambda certificate failed self-check");
  return lam;
}

std::optional<std::vector<Integer>> lambda_certificate_l(const Hypersequent& g) {
  require_atomic(g, true);
  const auto atoms = atom_names(g);
  const std::size_t n = g.size(), k = atoms.size();
  // Columns: λ (n), s_q (k), u_q (k), w.
  const std::size_t cols = n + 2 * k + 1;
  Mat a;
  Vec b;
  for (std::size_t j = 0; j < k; ++j) {
    Formula q = Formula::var(atoms[j]);
    Vec row(cols, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = signed_count(g.components[i], q);  // −(Δ−Γ)
    row[n + j] = 1;
    row[n + k + j] = -1;
    a.push_back(std::move(row));
    b.push_back(0);
  }
  {
    Vec row(cols, 0);
    for (std::size_t i = 0; i < n; ++i) row[i] = signed_count(g.components[i], Formula::bot());
    for (std::size_t j = 0; j < k; ++j) row[n + j] = -1;
    row[cols - 1] = -1;
    a.push_back(std::move(row));
    b.push_back(0);
  }
  Vec ones(cols, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  a.push_back(std::move(ones));
  b.push_back(1);
  auto sol = solve_nonneg(a, b);
  if (!sol) return std::nullopt;
  auto lam = integer_scale(Vec(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n)));
  Sequent merged = combine(g, lam);
  if (!subset_star(merged.right, merged.left))
    throw std::logic_error("bounded lambda certificate failed self-check");
  return lam;
}

LinSystem refutation_system(const Hypersequent& g, Model model) {
  LinSystem sys;
  auto side = [&](const Multiset& xs) {
    LinExpr e;
    for (const auto& f : xs) {
      if (f.is_var())
        e.add(f.name(), 1);
      else if (f.is(Kind::Bot) && model == Model::UnitIntervalL)
        e.constant -= 1;
      else if (f.is(Kind::Top))
        continue;
      else
        throw std::invalid_argument("non-atomic input: " + render_formula(f));
    }
    return e;
  };
  for (const auto& s : g.components) sys.add(side(s.left), Rel::Gt, side(s.right));
  if (model == Model::UnitIntervalL)
    for (const auto& v : variables(g)) sys.bound(v, Rational(-1), Rational(0));
  return sys;
}

namespace {

Valuation to_valuation(const std::map<std::string, Rational>& w, const Hypersequent& g, Model model) {
  Valuation v;
  v.model = model;
  for (const auto& name : variables(g)) {
    auto it = w.find(name);
    v.set(name, it == w.end() ? Rational(0) : it->second);
  }
  return v;
}

}  // namespace

AtomicVerdict atomic_valid_a(const Hypersequent& g) {
  AtomicVerdict out;
  if (auto lam = lambda_certificate(g)) {
    out.valid = true;
    out.lambda = std::move(*lam);
    return out;
  }
  auto res = feasible(refutation_system(g, Model::Q));
  if (!res.feasible) throw std::logic_error("no certificate but refutation system infeasible: " + render(g));
  out.countermodel = to_valuation(res.witness, g, Model::Q);
  if (holds(g, out.countermodel)) throw std::logic_error("countermodel does not refute " + render(g));
  return out;
}

AtomicVerdict atomic_valid_l(const Hypersequent& g) {
  require_atomic(g, true);
  AtomicVerdict out;
  auto res = feasible(refutation_system(g, Model::UnitIntervalL));
  if (res.feasible) {
    out.countermodel = to_valuation(res.witness, g, Model::UnitIntervalL);
    if (holds(g, out.countermodel)) throw std::logic_error("countermodel does not refute " + render(g));
    return out;
  }
  auto lam = lambda_certificate_l(g);
  if (!lam) throw std::logic_error("refutation system infeasible but no bounded certificate: " + render(g));
  out.valid = true;
  out.lambda = std::move(*lam);
  return out;
}

bool subset_star(const Multiset& delta, const Multiset& gamma) {
  Multiset unmatched = ms_diff(delta, gamma);
  Multiset spare = ms_diff(gamma, delta);
  return unmatched.size() <= count(spare, Formula::bot());
}

}  // namespace hyperlog
