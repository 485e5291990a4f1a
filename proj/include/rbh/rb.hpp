#pragma once

#include <memory>
#include <optional>
#include <string>

#include "rbh/graded.hpp"
#include "rbh/matrix.hpp"

namespace rbh {

// Rota-Baxter algebra of weight lambda, by structure constants:
// e_i e_j = sum_k mu[i][j][k] e_k and T(e_i) = sum_j T[i][j] e_j.
struct RBAlgebra {
  int dim = 0;
  Rational weight;
  std::vector<Rational> mu;  // dim^3, index ((i*dim)+j)*dim+k
  std::vector<Rational> op;  // dim^2, index i*dim+j
  std::shared_ptr<GradedSpace> space;  // ungraded carrier, shared for MultiMaps

  static RBAlgebra make(int dim, Rational weight);
  const Rational& c(int i, int j, int k) const { return mu[((std::size_t)i * dim + j) * dim + k]; }
  Rational& c(int i, int j, int k) { return mu[((std::size_t)i * dim + j) * dim + k]; }
  const Rational& t(int i, int j) const { return op[(std::size_t)i * dim + j]; }
  Rational& t(int i, int j) { return op[(std::size_t)i * dim + j]; }

  QVec apply_T(const QVec& x) const;
  QVec product(const QVec& x, const QVec& y) const;

  // First violated axiom with witnesses, or nullopt when valid.
  std::optional<std::string> validate() const;
  std::optional<std::string> validate_associativity() const;

  MultiMap mu_map() const;  // arity-2 MultiMap on the carrier
  MultiMap t_map() const;   // arity-1
};

// Rota-Baxter bimodule over an RBAlgebra. Actions by structure constants:
// e_a . f_m = sum_k left[a][m][k] f_k,  f_m . e_a = sum_k right[m][a][k] f_k.
struct RBBimodule {
  int dim = 0;
  int dimA = 0;
  std::vector<Rational> left;   // dimA * dimM * dimM
  std::vector<Rational> right;  // dimM * dimA * dimM
  std::vector<Rational> opm;    // dimM^2
  std::shared_ptr<GradedSpace> space;

  static RBBimodule make(const RBAlgebra& A, int dim);
  static RBBimodule regular(const RBAlgebra& A);  // M = A, T_M = T
  static RBBimodule zero_actions(const RBAlgebra& A, int dim,
                                 const std::vector<Rational>& tm);

  const Rational& l(int a, int m, int k) const { return left[((std::size_t)a * dim + m) * dim + k]; }
  Rational& l(int a, int m, int k) { return left[((std::size_t)a * dim + m) * dim + k]; }
  const Rational& r(int m, int a, int k) const { return right[((std::size_t)m * dimA + a) * dim + k]; }
  Rational& r(int m, int a, int k) { return right[((std::size_t)m * dimA + a) * dim + k]; }
  const Rational& tm(int i, int j) const { return opm[(std::size_t)i * dim + j]; }
  Rational& tm(int i, int j) { return opm[(std::size_t)i * dim + j]; }

  QVec act_left(const RBAlgebra& A, int a, const QVec& m) const;
  QVec act_right(const RBAlgebra& A, const QVec& m, int a) const;
  QVec apply_TM(const QVec& x) const;

  std::optional<std::string> validate(const RBAlgebra& A) const;
};

// Derived structures of section 4.
RBAlgebra star_product(const RBAlgebra& A);
RBBimodule derived_bimodule(const RBAlgebra& A, const RBBimodule& M);
RBAlgebra semidirect_product(const RBAlgebra& A, const RBBimodule& M);

// Hochschild-type cochains are arity-n MultiMaps A^{ot n} -> M (ungraded,
// shifts 0). C^0 = Hom(k, M) = M is the arity-0 case.
MultiMap cochain(const RBAlgebra& A, const RBBimodule& M, int arity);

MultiMap hochschild_delta(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f);
MultiMap rbo_partial(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f);
MultiMap phi(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f);

// Mapping-cone element of degree n: f in C^n_Alg, g in C^{n-1}_RBO (absent at n=0).
struct RBACochain {
  int n = 0;
  MultiMap f;
  std::optional<MultiMap> g;
};
RBACochain rba_zero(const RBAlgebra& A, const RBBimodule& M, int n);
RBACochain rba_d(const RBAlgebra& A, const RBBimodule& M, const RBACochain& c);
bool rba_is_zero(const RBACochain& c);
RBACochain rba_add(const RBACochain& a, const RBACochain& b, const Rational& coef_b);

// Basis bookkeeping: dim C^n_Alg(A,M) and unit cochains.
int alg_cochain_dim(const RBAlgebra& A, const RBBimodule& M, int n);
MultiMap alg_cochain_unit(const RBAlgebra& A, const RBBimodule& M, int n, int index);
QVec alg_cochain_coords(const RBAlgebra& A, const RBBimodule& M, const MultiMap& f);

int rba_cochain_dim(const RBAlgebra& A, const RBBimodule& M, int n);
RBACochain rba_cochain_unit(const RBAlgebra& A, const RBBimodule& M, int n, int index);
QVec rba_cochain_coords(const RBAlgebra& A, const RBBimodule& M, const RBACochain& c);
RBACochain rba_cochain_from_coords(const RBAlgebra& A, const RBBimodule& M, int n,
                                   const QVec& coords);

enum class Complex { Alg, RBO, RBA };

SparseMatrix differential_matrix(const RBAlgebra& A, const RBBimodule& M, Complex which, int n);

struct CohomologyDegree {
  int n = 0;
  int betti = 0;
  std::vector<QVec> representatives;  // cocycle coordinates
};
std::vector<CohomologyDegree> cohomology(const RBAlgebra& A, const RBBimodule& M,
                                         Complex which, int up_to);

// Long-exact-sequence bookkeeping for the mapping cone: checks
// dim H^p_RBA = dim HH^p - rank(Phi*_p) + dim H^{p-1}_RBO - rank(Phi*_{p-1})
// for p <= up_to, where Phi*_p is the map induced by Phi on cohomology.
bool les_consistent(const RBAlgebra& A, const RBBimodule& M, int up_to,
                    std::string* detail = nullptr);

}  // namespace rbh
