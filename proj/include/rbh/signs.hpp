#pragma once

#include <vector>

namespace rbh {

// Permutations are 0-based image tables: p[i] is where slot i goes.
using Perm = std::vector<int>;

Perm identity_perm(int n);
Perm compose_perm(const Perm& a, const Perm& b);  // (a.b)(i) = a(b(i))
Perm inverse_perm(const Perm& p);
int perm_sign(const Perm& p);

// Koszul sign: x_1 (.) ... (.) x_n = eps * x_{p(1)} (.) ... (.) x_{p(n)} in the
// free graded-symmetric algebra, degrees given per original slot.
int epsilon_sign(const Perm& p, const std::vector<int>& degrees);

// chi = sgn(p) * eps(p).
int chi_sign(const Perm& p, const std::vector<int>& degrees);

// All (i,j)-shuffles of S_{i+j}: increasing on 1..i and on i+1..i+j.
std::vector<Perm> shuffles(int i, int j);

std::vector<Perm> all_permutations(int n);

// Unique (tau in S_i, sigma in Sh(i, n-i), pi in S_{n-i}) with
// delta(l) = sigma(tau(l)) for l < i and delta(i+m) = sigma(i + pi(m)).
struct PermFactorization {
  Perm tau, sigma, pi;
};
PermFactorization factor_permutation(const Perm& delta, int i);

}  // namespace rbh
