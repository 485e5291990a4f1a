#include "rbh/signs.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rbh {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw std::invalid_argument("compose_perm");
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

Perm inverse_perm(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = (int)i;
  return q;
}

int perm_sign(const Perm& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

int epsilon_sign(const Perm& p, const std::vector<int>& degrees) {
  if (p.size() != degrees.size()) throw std::invalid_argument("epsilon_sign: length mismatch");
  // Every inversion (i<j, p(i)>p(j)) swaps x_{p(i)} past x_{p(j)}.
  long e = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) e += (long)degrees[p[i]] * degrees[p[j]];
  return (e % 2 == 0) ? 1 : -1;
}

int chi_sign(const Perm& p, const std::vector<int>& degrees) {
  return perm_sign(p) * epsilon_sign(p, degrees);
}

std::vector<Perm> shuffles(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("shuffles");
  int n = i + j;
  std::vector<Perm> out;
  std::vector<int> pick(i);
  // Choose the image set of the first block; monotonicity fixes the rest.
  std::vector<int> comb(i);
  std::iota(comb.begin(), comb.end(), 0);
  while (true) {
    Perm p(n);
    std::vector<char> used(n, 0);
    for (int k = 0; k < i; ++k) {
      p[k] = comb[k];
      used[comb[k]] = 1;
    }
    int pos = i;
    for (int v = 0; v < n; ++v)
      if (!used[v]) p[pos++] = v;
    out.push_back(std::move(p));
    if (i == 0) break;
    int k = i - 1;
    while (k >= 0 && comb[k] == n - i + k) --k;
    if (k < 0) break;
    ++comb[k];
    for (int t = k + 1; t < i; ++t) comb[t] = comb[t - 1] + 1;
  }
  return out;
}

std::vector<Perm> all_permutations(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

PermFactorization factor_permutation(const Perm& delta, int i) {
  int n = (int)delta.size();
  if (i < 1 || i > n - 1) throw std::invalid_argument("factor_permutation: i out of range");
  std::vector<int> first(delta.begin(), delta.begin() + i);
  std::vector<int> second(delta.begin() + i, delta.end());
  std::vector<int> sorted_first = first, sorted_second = second;
  std::sort(sorted_first.begin(), sorted_first.end());
  std::sort(sorted_second.begin(), sorted_second.end());
  Perm sigma(n), tau(i), pi(n - i);
  for (int k = 0; k < i; ++k) sigma[k] = sorted_first[k];
  for (int k = 0; k < n - i; ++k) sigma[i + k] = sorted_second[k];
  for (int l = 0; l < i; ++l) {
    int pos = (int)(std::lower_bound(sorted_first.begin(), sorted_first.end(), first[l]) -
                    sorted_first.begin());
    tau[l] = pos;
  }
  for (int m = 0; m < n - i; ++m) {
    int pos = (int)(std::lower_bound(sorted_second.begin(), sorted_second.end(), second[m]) -
                    sorted_second.begin());
    pi[m] = pos;
  }
  return {tau, sigma, pi};
}

}  // namespace rbh
