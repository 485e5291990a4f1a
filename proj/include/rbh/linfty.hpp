#pragma once

#include <functional>
#include <memory>
#include <random>
#include <string>

#include "rbh/graded.hpp"
#include "rbh/rb.hpp"

namespace rbh {

// Homogeneous element of C_RBA(V) = C_Alg(V) (+) C_RBO(V).
// Alg side: Hom((sV)^{ot n}, sV); RBO side: Hom((sV)^{ot n}, V).
struct LComponent {
  bool alg = true;
  MultiMap map;

  int arity() const { return map.arity(); }
  int degree() const { return map.degree(); }
};

// Formal sum of homogeneous components, kept merged by (side, arity, degree).
using LElement = std::vector<LComponent>;

void accumulate(LElement& e, const LComponent& c, const Rational& coef);
void accumulate(LElement& e, const LElement& o, const Rational& coef);
bool element_zero(const LElement& e);
bool element_equal(const LElement& a, const LElement& b);

// Carrier description: graded V, weight, and the arity truncation used for
// basis enumeration. The operators themselves never truncate outputs.
struct DeformComplex {
  std::shared_ptr<GradedSpace> V;
  Rational lambda;
  int arity_bound = 3;

  static DeformComplex make(std::vector<int> degrees, Rational lambda, int arity_bound);

  LComponent unit(bool alg, int arity, const std::vector<int>& inputs, int out) const;
  std::vector<LComponent> basis() const;  // all matrix units, arity <= bound
};

// The structure operators l_n of section 8, items (I)-(V), extended to all
// argument orders by the item (IV) permutation rule.
LElement l_op(const DeformComplex& cx, const std::vector<const LComponent*>& args);

// Generalized Jacobi sum at level n = args.size() (zero iff identity holds).
LElement jacobi_sum(const DeformComplex& cx, const std::vector<const LComponent*>& args);

struct LReport {
  bool ok = true;
  std::string first_failure;
  long checked = 0;
  long skipped_tuples = 0;  // tuples in patterns that vanish termwise by (V)
};

// Exhaustive generalized-Jacobi verification over basis multisets up to
// max_level. Patterns in which every term is annihilated by the dispatch
// table (item V) are counted, not evaluated.
LReport check_linfinity(const DeformComplex& cx, int max_level);

// l_n(x_sigma) = chi(sigma) l_n(x) on seeded random tuples and permutations.
LReport check_antisymmetry(const DeformComplex& cx, int max_level, int trials,
                           unsigned seed);

// Maurer-Cartan machinery. alpha must consist of degree -1 components.
LElement mc_residual(const DeformComplex& cx, const LElement& alpha);
bool mc_check(const DeformComplex& cx, const LElement& alpha);

// Twisted operator l_n^alpha applied to args; finite by arity counting, and
// guarded: throws if the sum fails to terminate below the provable cutoff.
LElement twisted_l(const DeformComplex& cx, const LElement& alpha,
                   const std::vector<const LComponent*>& args);

// The MC element (m, tau) of an ungraded Rota-Baxter algebra:
// m = -s mu (s^{-1})^{ot 2}, tau = T s^{-1}.
LElement alpha_from_rb(const DeformComplex& cx, const RBAlgebra& A);

// Read (mu, T) structure constants back from a degree -1 element.
void rb_from_alpha(const DeformComplex& cx, const LElement& alpha, RBAlgebra& out);

}  // namespace rbh
