#include "rbh/rb.hpp"

#include <sstream>

namespace rbh {

namespace {

QVec zero_vec(int n) { return QVec(n, Rational(0)); }

std::string coords(std::span<const int> t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

// Value of f on a basis tuple, as a dense vector over the target.
QVec eval(const MultiMap& f, std::span<const int> tuple) {
  QVec v(f.tgt()->dim(), Rational(0));
  for (int out = 0; out < f.tgt()->dim(); ++out) v[out] = f.coef(tuple, out);
  return v;
}

}  // namespace

RBAlgebra RBAlgebra::make(int dim, Rational weight) {
  RBAlgebra a;
  a.dim = dim;
  a.weight = std::move(weight);
  a.mu.assign((std::size_t)dim * dim * dim, Rational(0));
  a.op.assign((std::size_t)dim * dim, Rational(0));
  a.space = std::make_shared<GradedSpace>(GradedSpace::ungraded(dim));
  return a;
}

QVec RBAlgebra::apply_T(const QVec& x) const {
  QVec y = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) y[j] += x[i] * t(i, j);
  }
  return y;
}

QVec RBAlgebra::product(const QVec& x, const QVec& y) const {
  QVec z = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j] == 0) continue;
      for (int k = 0; k < dim; ++k) z[k] += x[i] * y[j] * c(i, j, k);
    }
  }
  return z;
}

std::optional<std::string> RBAlgebra::validate_associativity() const {
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        QVec ei = zero_vec(dim), ej = zero_vec(dim), ek = zero_vec(dim);
        ei[i] = 1;
        ej[j] = 1;
        ek[k] = 1;
        QVec lhs = product(product(ei, ej), ek);
        QVec rhs = product(ei, product(ej, ek));
        if (lhs != rhs) {
          int triple[3] = {i, j, k};
          return "associativity fails at basis triple " + coords(triple);
        }
      }
  return std::nullopt;
}

std::optional<std::string> RBAlgebra::validate() const {
  if (auto w = validate_associativity()) return w;
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      QVec ei = zero_vec(dim), ej = zero_vec(dim);
      ei[i] = 1;
      ej[j] = 1;
      QVec lhs = product(apply_T(ei), apply_T(ej));
      QVec inner = product(ei, apply_T(ej));
      QVec tmp = product(apply_T(ei), ej);
      for (int u = 0; u < dim; ++u) inner[u] += tmp[u] + weight * c(i, j, u);
      QVec rhs = apply_T(inner);
      if (lhs != rhs) {
        int pair[2] = {i, j};
        return "Rota-Baxter relation fails at basis pair " + coords(pair);
      }
    }
  return std::nullopt;
}

MultiMap RBAlgebra::mu_map() const {
  MultiMap m(space.get(), space.get(), 2, 0, 0, 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k)
        if (c(i, j, k) != 0) {
          int in[2] = {i, j};
          m.add(in, k, c(i, j, k));
        }
  return m;
}

MultiMap RBAlgebra::t_map() const {
  MultiMap m(space.get(), space.get(), 1, 0, 0, 0);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (t(i, j) != 0) {
        int in[1] = {i};
        m.add(in, j, t(i, j));
      }
  return m;
}

RBBimodule RBBimodule::make(const RBAlgebra& A, int dim) {
  RBBimodule m;
  m.dim = dim;
  m.dimA = A.dim;
  m.left.assign((std::size_t)A.dim * dim * dim, Rational(0));
  m.right.assign((std::size_t)dim * A.dim * dim, Rational(0));
  m.opm.assign((std::size_t)dim * dim, Rational(0));
  m.space = std::make_shared<GradedSpace>(GradedSpace::ungraded(dim));
  return m;
}

RBBimodule RBBimodule::regular(const RBAlgebra& A) {
  RBBimodule m = make(A, A.dim);
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b)
      for (int k = 0; k < A.dim; ++k) {
        m.l(a, b, k) = A.c(a, b, k);
        m.r(a, b, k) = A.c(a, b, k);
      }
  m.opm = A.op;
  return m;
}

RBBimodule RBBimodule::zero_actions(const RBAlgebra& A, int dim,
                                    const std::vector<Rational>& tm) {
  RBBimodule m = make(A, dim);
  m.opm = tm;
  return m;
}

QVec RBBimodule::act_left(const RBAlgebra& A, int a, const QVec& m) const {
  (void)A;
  QVec out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (m[i] == 0) continue;
    for (int k = 0; k < dim; ++k) out[k] += m[i] * l(a, i, k);
  }
  return out;
}

QVec RBBimodule::act_right(const RBAlgebra& A, const QVec& m, int a) const {
  (void)A;
  QVec out = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (m[i] == 0) continue;
    for (int k = 0; k < dim; ++k) out[k] += m[i] * r(i, a, k);
  }
  return out;
}

QVec RBBimodule::apply_TM(const QVec& x) const {
  QVec y = zero_vec(dim);
  for (int i = 0; i < dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < dim; ++j) y[j] += x[i] * tm(i, j);
  }
  return y;
}

std::optional<std::string> RBBimodule::validate(const RBAlgebra& A) const {
  auto unit = [&](int i) {
    QVec v = zero_vec(dim);
    v[i] = 1;
    return v;
  };
  // Bimodule axioms over (A, mu).
  for (int a = 0; a < A.dim; ++a)
    for (int b = 0; b < A.dim; ++b)
      for (int m = 0; m < dim; ++m) {
        QVec em = unit(m);
        // (ab)m = a(bm)
        QVec lhs = zero_vec(dim);
        for (int k = 0; k < A.dim; ++k)
          if (A.c(a, b, k) != 0) {
            QVec t = act_left(A, k, em);
            for (int u = 0; u < dim; ++u) lhs[u] += A.c(a, b, k) * t[u];
          }
        QVec rhs = act_left(A, a, act_left(A, b, em));
        if (lhs != rhs) {
          int tr[3] = {a, b, m};
          return "left module axiom fails at " + coords(tr);
        }
        // (am)b = a(mb)
        lhs = act_right(A, act_left(A, a, em), b);
        rhs = act_left(A, a, act_right(A, em, b));
        if (lhs != rhs) {
          int tr[3] = {a, m, b};
          return "bimodule compatibility fails at " + coords(tr);
        }
        // m(ab) = (ma)b
        lhs = zero_vec(dim);
        for (int k = 0; k < A.dim; ++k)
          if (A.c(a, b, k) != 0) {
            QVec t = act_right(A, em, k);
            for (int u = 0; u < dim; ++u) lhs[u] += A.c(a, b, k) * t[u];
          }
        rhs = act_right(A, act_right(A, em, a), b);
        if (lhs != rhs) {
          int tr[3] = {m, a, b};
          return "right module axiom fails at " + coords(tr);
        }
      }
  // Rota-Baxter bimodule axioms.
  for (int a = 0; a < A.dim; ++a)
    for (int m = 0; m < dim; ++m) {
      QVec em = unit(m);
      QVec Ta = zero_vec(A.dim);
      for (int j = 0; j < A.dim; ++j) Ta[j] = A.t(a, j);
      QVec TMm = apply_TM(em);
      // T(a) T_M(m) = T_M(a T_M(m) + T(a) m + lambda a m)
      QVec lhs = zero_vec(dim);
      for (int j = 0; j < A.dim; ++j)
        if (Ta[j] != 0) {
          QVec t = act_left(A, j, TMm);
          for (int u = 0; u < dim; ++u) lhs[u] += Ta[j] * t[u];
        }
      QVec inner = act_left(A, a, TMm);
      for (int j = 0; j < A.dim; ++j)
        if (Ta[j] != 0) {
          QVec t = act_left(A, j, em);
          for (int u = 0; u < dim; ++u) inner[u] += Ta[j] * t[u];
        }
      {
        QVec t = act_left(A, a, em);
        for (int u = 0; u < dim; ++u) inner[u] += A.weight * t[u];
      }
      if (lhs != apply_TM(inner)) {
        int pr[2] = {a, m};
        return "Rota-Baxter bimodule axiom (left) fails at " + coords(pr);
      }
      // T_M(m) T(a) = T_M(m T(a) + T_M(m) a + lambda m a)
      lhs = zero_vec(dim);
      for (int j = 0; j < A.dim; ++j)
        if (Ta[j] != 0) {
          QVec t = act_right(A, TMm, j);
          for (int u = 0; u < dim; ++u) lhs[u] += Ta[j] * t[u];
        }
      inner = act_right(A, TMm, a);
      for (int j = 0; j < A.dim; ++j)
        if (Ta[j] != 0) {
          QVec t = act_right(A, em, j);
          for (int u = 0; u < dim; ++u) inner[u] += Ta[j] * t[u];
        }
      {
        QVec t = act_right(A, em, a);
        for (int u = 0; u < dim; ++u) inner[u] += A.weight * t[u];
      }
      if (lhs != apply_TM(inner)) {
        int pr[2] = {m, a};
        return "Rota-Baxter bimodule axiom (right) fails at " + coords(pr);
      }
    }
  return std::nullopt;
}

RBAlgebra star_product(const RBAlgebra& A) {
  RBAlgebra S = RBAlgebra::make(A.dim, A.weight);
  S.op = A.op;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      // e_i * e_j = e_i T(e_j) + T(e_i) e_j + lambda e_i e_j
      QVec ei = zero_vec(A.dim), ej = zero_vec(A.dim);
      ei[i] = 1;
      ej[j] = 1;
      QVec v = A.product(ei, A.apply_T(ej));
      QVec w = A.product(A.apply_T(ei), ej);
      for (int k = 0; k < A.dim; ++k) S.c(i, j, k) = v[k] + w[k] + A.weight * A.c(i, j, k);
    }
  return S;
}

RBBimodule derived_bimodule(const RBAlgebra& A, const RBBimodule& M) {
  RBBimodule D = RBBimodule::make(A, M.dim);
  D.opm = M.opm;
  for (int a = 0; a < A.dim; ++a)
    for (int m = 0; m < M.dim; ++m) {
      QVec em = zero_vec(M.dim);
      em[m] = 1;
      // a |> m = T(a) m - T_M(a m)
      QVec v = zero_vec(M.dim);
      for (int j = 0; j < A.dim; ++j)
        if (A.t(a, j) != 0) {
          QVec t = M.act_left(A, j, em);
          for (int u = 0; u < M.dim; ++u) v[u] += A.t(a, j) * t[u];
        }
      QVec w = M.apply_TM(M.act_left(A, a, em));
      for (int k = 0; k < M.dim; ++k) D.l(a, m, k) = v[k] - w[k];
      // m <| a = m T(a) - T_M(m a)
      v = zero_vec(M.dim);
      for (int j = 0; j < A.dim; ++j)
        if (A.t(a, j) != 0) {
          QVec t = M.act_right(A, em, j);
          for (int u = 0; u < M.dim; ++u) v[u] += A.t(a, j) * t[u];
        }
      w = M.apply_TM(M.act_right(A, em, a));
      for (int k = 0; k < M.dim; ++k) D.r(m, a, k) = v[k] - w[k];
    }
  return D;
}

RBAlgebra semidirect_product(const RBAlgebra& A, const RBBimodule& M) {
  int n = A.dim + M.dim;
  RBAlgebra S = RBAlgebra::make(n, A.weight);
  // basis: e_0..e_{dimA-1}, then f_0..f_{dimM-1}
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) S.c(i, j, k) = A.c(i, j, k);
  for (int a = 0; a < A.dim; ++a)
    for (int m = 0; m < M.dim; ++m)
      for (int k = 0; k < M.dim; ++k) {
        S.c(a, A.dim + m, A.dim + k) = M.l(a, m, k);
        S.c(A.dim + m, a, A.dim + k) = M.r(m, a, k);
      }
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) S.t(i, j) = A.t(i, j);
  for (int i = 0; i < M.dim; ++i)
    for (int j = 0; j < M.dim; ++j) S.t(A.dim + i, A.dim + j) = M.tm(i, j);
  return S;
}

MultiMap cochain(const RBAlgebra& A, const RBBimodule& M, int arity) {
  return MultiMap(A.space.get(), M.space.get(), arity, 0, 0, 0);
}

MultiMap hochschild_delta(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f) {
  const int n = f.arity();
  MultiMap out = cochain(A, M, n + 1);
  std::vector<int> a(n + 1, 0);
  while (true) {
    QVec acc = QVec(M.dim, Rational(0));
    int sgn_first = ((n + 1) % 2 == 0) ? 1 : -1;
    {
      QVec v = eval(f, std::span<const int>(a).subspan(1));
      QVec w = M.act_left(A, a[0], v);
      for (int u = 0; u < M.dim; ++u) acc[u] += sgn_first * w[u];
    }
    for (int i = 1; i <= n; ++i) {
      int sgn = ((n - i + 1) % 2 == 0) ? 1 : -1;
      for (int k = 0; k < A.dim; ++k) {
        const Rational& ck = A.c(a[i - 1], a[i], k);
        if (ck == 0) continue;
        std::vector<int> tup;
        tup.reserve(n);
        for (int t = 0; t < i - 1; ++t) tup.push_back(a[t]);
        tup.push_back(k);
        for (int t = i + 1; t <= n; ++t) tup.push_back(a[t]);
        QVec v = eval(f, tup);
        for (int u = 0; u < M.dim; ++u) acc[u] += sgn * ck * v[u];
      }
    }
    {
      QVec v = eval(f, std::span<const int>(a).first(n));
      QVec w = M.act_right(A, v, a[n]);
      for (int u = 0; u < M.dim; ++u) acc[u] += w[u];
    }
    for (int u = 0; u < M.dim; ++u)
      if (acc[u] != 0) out.add(a, u, acc[u]);
    int t = n;
    while (t >= 0 && ++a[t] == A.dim) a[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

MultiMap rbo_partial(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f) {
  const int n = f.arity();
  MultiMap out = cochain(A, M, n + 1);
  std::vector<int> a(n + 1, 0);
  while (true) {
    QVec acc = QVec(M.dim, Rational(0));
    int sgn_first = ((n + 1) % 2 == 0) ? 1 : -1;
    {
      // T(a_1) f(...) - T_M(a_1 f(...))
      QVec v = eval(f, std::span<const int>(a).subspan(1));
      QVec w = QVec(M.dim, Rational(0));
      for (int j = 0; j < A.dim; ++j)
        if (A.t(a[0], j) != 0) {
          QVec t = M.act_left(A, j, v);
          for (int u = 0; u < M.dim; ++u) w[u] += A.t(a[0], j) * t[u];
        }
      QVec z = M.apply_TM(M.act_left(A, a[0], v));
      for (int u = 0; u < M.dim; ++u) acc[u] += sgn_first * (w[u] - z[u]);
    }
    for (int i = 1; i <= n; ++i) {
      int sgn = ((n - i + 1) % 2 == 0) ? 1 : -1;
      // a_i T(a_{i+1}) + T(a_i) a_{i+1} + lambda a_i a_{i+1}, inserted at slot i
      QVec prod(A.dim, Rational(0));
      for (int j = 0; j < A.dim; ++j) {
        if (A.t(a[i], j) != 0)
          for (int k = 0; k < A.dim; ++k) prod[k] += A.t(a[i], j) * A.c(a[i - 1], j, k);
        if (A.t(a[i - 1], j) != 0)
          for (int k = 0; k < A.dim; ++k) prod[k] += A.t(a[i - 1], j) * A.c(j, a[i], k);
      }
      for (int k = 0; k < A.dim; ++k) prod[k] += A.weight * A.c(a[i - 1], a[i], k);
      for (int k = 0; k < A.dim; ++k) {
        if (prod[k] == 0) continue;
        std::vector<int> tup;
        tup.reserve(n);
        for (int t = 0; t < i - 1; ++t) tup.push_back(a[t]);
        tup.push_back(k);
        for (int t = i + 1; t <= n; ++t) tup.push_back(a[t]);
        QVec v = eval(f, tup);
        for (int u = 0; u < M.dim; ++u) acc[u] += sgn * prod[k] * v[u];
      }
    }
    {
      // f(...) T(a_{n+1}) - T_M(f(...) a_{n+1})
      QVec v = eval(f, std::span<const int>(a).first(n));
      QVec w = QVec(M.dim, Rational(0));
      for (int j = 0; j < A.dim; ++j)
        if (A.t(a[n], j) != 0) {
          QVec t = M.act_right(A, v, j);
          for (int u = 0; u < M.dim; ++u) w[u] += A.t(a[n], j) * t[u];
        }
      QVec z = M.apply_TM(M.act_right(A, v, a[n]));
      for (int u = 0; u < M.dim; ++u) acc[u] += w[u] - z[u];
    }
    for (int u = 0; u < M.dim; ++u)
      if (acc[u] != 0) out.add(a, u, acc[u]);
    int t = n;
    while (t >= 0 && ++a[t] == A.dim) a[t--] = 0;
    if (t < 0) break;
  }
  return out;
}

namespace {

// f o (T applied at one slot), by structure constants.
MultiMap apply_T_at_slot(const RBAlgebra& A, const MultiMap& f, int slot) {
  MultiMap r = MultiMap(f.dom(), f.tgt(), f.arity(), 0, 0, 0);
  for (const auto& term : f.terms()) {
    for (int b = 0; b < A.dim; ++b) {
      const Rational& tv = A.t(b, term.inputs[slot]);
      if (tv == 0) continue;
      std::vector<int> in = term.inputs;
      in[slot] = b;
      r.add(in, term.out, tv * term.c);
    }
  }
  return r;
}

MultiMap compose_TM(const RBBimodule& M, const MultiMap& f) {
  MultiMap r = MultiMap(f.dom(), f.tgt(), f.arity(), 0, 0, 0);
  for (const auto& term : f.terms())
    for (int u = 0; u < M.dim; ++u)
      if (M.tm(term.out, u) != 0) r.add(term.inputs, u, term.c * M.tm(term.out, u));
  return r;
}

}  // namespace

MultiMap phi(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f) {
  const int n = f.arity();
  if (n == 0) return f;  // Phi^0 = Id_M
  // f with T applied at the slots of each subset, built incrementally.
  std::vector<MultiMap> at(1u << n);
  at[0] = f;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    unsigned low = mask & (mask - 1);
    int slot = __builtin_ctz(mask);
    at[mask] = apply_T_at_slot(A, at[low], slot);
  }
  MultiMap out = at[(1u << n) - 1];
  for (unsigned mask = 0; mask + 1 < (1u << n); ++mask) {
    int k = __builtin_popcount(mask);
    Rational lp(1);  // lambda^{n-1-k}
    for (int i = 0; i < n - 1 - k; ++i) lp *= A.weight;
    MultiMap term = compose_TM(M, at[mask]);
    out += Rational(-1) * lp * term;
  }
  return out;
}

RBACochain rba_zero(const RBAlgebra& A, const RBBimodule& M, int n) {
  RBACochain c;
  c.n = n;
  c.f = cochain(A, M, n);
  if (n >= 1) c.g = cochain(A, M, n - 1);
  return c;
}

RBACochain rba_d(const RBAlgebra& A, const RBBimodule& M, const RBACochain& c) {
  RBACochain r;
  r.n = c.n + 1;
  r.f = hochschild_delta(A, M, c.f);
  MultiMap second = Rational(-1) * phi(A, M, c.f);
  if (c.g) second += Rational(-1) * rbo_partial(A, M, *c.g);
  r.g = second;
  return r;
}

bool rba_is_zero(const RBACochain& c) {
  return c.f.zero() && (!c.g || c.g->zero());
}

RBACochain rba_add(const RBACochain& a, const RBACochain& b, const Rational& coef_b) {
  RBACochain r = a;
  r.f += coef_b * b.f;
  if (r.g && b.g) *r.g += coef_b * *b.g;
  return r;
}

int alg_cochain_dim(const RBAlgebra& A, const RBBimodule& M, int n) {
  int d = M.dim;
  for (int i = 0; i < n; ++i) d *= A.dim;
  return d;
}

MultiMap alg_cochain_unit(const RBAlgebra& A, const RBBimodule& M, int n, int index) {
  MultiMap f = cochain(A, M, n);
  int out = index % M.dim;
  int rest = index / M.dim;
  std::vector<int> tup(n, 0);
  for (int i = n - 1; i >= 0; --i) {
    tup[i] = rest % A.dim;
    rest /= A.dim;
  }
  f.add(tup, out, Rational(1));
  return f;
}

QVec alg_cochain_coords(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f) {
  QVec v(alg_cochain_dim(A, M, f.arity()), Rational(0));
  for (const auto& t : f.terms()) {
    int flat = 0;
    for (int i = 0; i < f.arity(); ++i) flat = flat * A.dim + t.inputs[i];
    v[flat * M.dim + t.out] = t.c;
  }
  return v;
}

int rba_cochain_dim(const RBAlgebra& A, const RBBimodule& M, int n) {
  int d = alg_cochain_dim(A, M, n);
  if (n >= 1) d += alg_cochain_dim(A, M, n - 1);
  return d;
}

RBACochain rba_cochain_unit(const RBAlgebra& A, const RBBimodule& M, int n, int index) {
  RBACochain c = rba_zero(A, M, n);
  int df = alg_cochain_dim(A, M, n);
  if (index < df)
    c.f = alg_cochain_unit(A, M, n, index);
  else
    c.g = alg_cochain_unit(A, M, n - 1, index - df);
  return c;
}

QVec rba_cochain_coords(const RBAlgebra& A, const RBBimodule& M, const RBACochain& c) {
  QVec v = alg_cochain_coords(A, M, c.f);
  if (c.g) {
    QVec w = alg_cochain_coords(A, M, *c.g);
    v.insert(v.end(), w.begin(), w.end());
  }
  return v;
}

RBACochain rba_cochain_from_coords(const RBAlgebra& A, const RBBimodule& M, int n,
                                   const QVec& coords) {
  RBACochain c = rba_zero(A, M, n);
  int df = alg_cochain_dim(A, M, n);
  for (int i = 0; i < (int)coords.size(); ++i) {
    if (coords[i] == 0) continue;
    if (i < df) {
      MultiMap u = alg_cochain_unit(A, M, n, i);
      c.f += coords[i] * u;
    } else {
      MultiMap u = alg_cochain_unit(A, M, n - 1, i - df);
      *c.g += coords[i] * u;
    }
  }
  return c;
}

SparseMatrix differential_matrix(const RBAlgebra& A, const RBBimodule& M, Complex which, int n) {
  switch (which) {
    case Complex::Alg:
    case Complex::RBO: {
      int cols = alg_cochain_dim(A, M, n);
      int rows = alg_cochain_dim(A, M, n + 1);
      SparseMatrix m(rows, cols);
      for (int j = 0; j < cols; ++j) {
        MultiMap u = alg_cochain_unit(A, M, n, j);
        MultiMap du = (which == Complex::Alg) ? hochschild_delta(A, M, u) : rbo_partial(A, M, u);
        QVec col = alg_cochain_coords(A, M, du);
        for (int i = 0; i < rows; ++i)
          if (col[i] != 0) m.set(i, j, col[i]);
      }
      return m;
    }
    case Complex::RBA: {
      int cols = rba_cochain_dim(A, M, n);
      int rows = rba_cochain_dim(A, M, n + 1);
      SparseMatrix m(rows, cols);
      for (int j = 0; j < cols; ++j) {
        RBACochain u = rba_cochain_unit(A, M, n, j);
        RBACochain du = rba_d(A, M, u);
        QVec col = rba_cochain_coords(A, M, du);
        for (int i = 0; i < rows; ++i)
          if (col[i] != 0) m.set(i, j, col[i]);
      }
      return m;
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<CohomologyDegree> cohomology(const RBAlgebra& A, const RBBimodule& M,
                                         Complex which, int up_to) {
  std::vector<CohomologyDegree> out;
  SparseMatrix prev;  // d^{n-1}
  for (int n = 0; n <= up_to; ++n) {
    SparseMatrix dn = differential_matrix(A, M, which, n);
    std::vector<QVec> kern = kernel_basis(dn);
    std::vector<QVec> image_rows;
    if (n >= 1) {
      for (int j = 0; j < prev.cols(); ++j) {
        QVec col(prev.rows(), Rational(0));
        bool nz = false;
        for (int i = 0; i < prev.rows(); ++i) {
          col[i] = prev.get(i, j);
          if (col[i] != 0) nz = true;
        }
        if (nz) image_rows.push_back(std::move(col));
      }
    }
    std::vector<int> picked = independent_over(image_rows, kern, dn.cols());
    CohomologyDegree deg;
    deg.n = n;
    deg.betti = (int)picked.size();
    for (int i : picked) deg.representatives.push_back(kern[i]);
    out.push_back(std::move(deg));
    prev = std::move(dn);
  }
  return out;
}

bool les_consistent(const RBAlgebra& A, const RBBimodule& M, int up_to, std::string* detail) {
  // Induced map Phi*: HH^p -> H^p_RBO; rank computed on classes.
  auto hh = cohomology(A, M, Complex::Alg, up_to);
  auto hr = cohomology(A, M, Complex::RBO, up_to);
  auto ha = cohomology(A, M, Complex::RBA, up_to + 1);
  std::vector<int> phi_rank(up_to + 1, 0);
  for (int p = 0; p <= up_to; ++p) {
    SparseMatrix dprev = (p >= 1) ? differential_matrix(A, M, Complex::RBO, p - 1)
                                  : SparseMatrix(alg_cochain_dim(A, M, 0), 0);
    std::vector<QVec> image_rows;
    for (int j = 0; j < dprev.cols(); ++j) {
      QVec col(dprev.rows(), Rational(0));
      bool nz = false;
      for (int i = 0; i < dprev.rows(); ++i) {
        col[i] = dprev.get(i, j);
        if (col[i] != 0) nz = true;
      }
      if (nz) image_rows.push_back(std::move(col));
    }
    std::vector<QVec> images;
    for (const auto& rep : hh[p].representatives) {
      // rep are coordinates of an Alg cocycle; push through Phi^p.
      MultiMap f = cochain(A, M, p);
      for (int i = 0; i < (int)rep.size(); ++i)
        if (rep[i] != 0) {
          MultiMap u = alg_cochain_unit(A, M, p, i);
          f += rep[i] * u;
        }
      images.push_back(alg_cochain_coords(A, M, phi(A, M, f)));
    }
    phi_rank[p] = (int)independent_over(image_rows, images, alg_cochain_dim(A, M, p)).size();
  }
  bool ok = true;
  std::ostringstream os;
  for (int p = 0; p <= up_to; ++p) {
    int expected = hh[p].betti - phi_rank[p] + (p >= 1 ? hr[p - 1].betti - phi_rank[p - 1] : 0);
    if (ha[p].betti != expected) ok = false;
    os << "p=" << p << " dimH_RBA=" << ha[p].betti << " expected=" << expected << "; ";
  }
  if (detail) *detail = os.str();
  return ok;
}

}  // namespace rbh
