#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "rbh/rational.hpp"
#include "rbh/signs.hpp"

namespace rbh {

// Finite-dimensional graded vector space with a chosen ordered basis.
// Degrees are homological; cohomological statements use V^n = V_{-n}.
struct GradedSpace {
  std::vector<int> degrees;  // degree of basis vector i

  int dim() const { return (int)degrees.size(); }
  static GradedSpace ungraded(int n) { return GradedSpace{std::vector<int>(n, 0)}; }
  bool operator==(const GradedSpace&) const = default;

  // Dimension per degree, finitely supported.
  std::map<int, int> components() const {
    std::map<int, int> c;
    for (int d : degrees) ++c[d];
    return c;
  }
};

// Homogeneous multilinear map  (s^a dom)^{ot n} -> s^b tgt  with a, b in {0,1},
// stored as a sparse coefficient table (input tuple, output index) -> Q.
//
// Suspension is pure bookkeeping here: a basis vector of s^a dom has degree
// dom->degrees[i] + a. Moving between the V- and sV-indexed pictures is done
// by change_domain_shift / (de)suspend_target, which carry the Koszul signs of
// the two fixed isomorphisms f -> s^{-1} o f o s^{on} and g -> g o s^{on}.
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(const GradedSpace* dom, const GradedSpace* tgt, int arity, int dom_shift,
           int tgt_shift, int degree)
      : dom_(dom), tgt_(tgt), arity_(arity), dom_shift_(dom_shift), tgt_shift_(tgt_shift),
        degree_(degree) {
    if (arity < 0 || arity > kMaxArity) throw std::invalid_argument("MultiMap arity");
  }

  static MultiMap identity(const GradedSpace* sp, int shift);

  const GradedSpace* dom() const { return dom_; }
  const GradedSpace* tgt() const { return tgt_; }
  int arity() const { return arity_; }
  int dom_shift() const { return dom_shift_; }
  int tgt_shift() const { return tgt_shift_; }
  int degree() const { return degree_; }

  int in_degree(int b) const { return dom_->degrees[b] + dom_shift_; }
  int out_degree(int b) const { return tgt_->degrees[b] + tgt_shift_; }

  bool zero() const { return coef_.empty(); }
  std::size_t term_count() const { return coef_.size(); }

  void add(std::span<const int> inputs, int out, const Rational& c);
  Rational coef(std::span<const int> inputs, int out) const;

  // Same shape (spaces, arity, shifts, degree) required.
  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator*=(const Rational& c);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator*(const Rational& c, MultiMap m) { return m *= c; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a += Rational(-1) * b; }
  bool operator==(const MultiMap& o) const;

  bool same_shape(const MultiMap& o) const {
    return dom_ == o.dom_ && tgt_ == o.tgt_ && arity_ == o.arity_ &&
           dom_shift_ == o.dom_shift_ && tgt_shift_ == o.tgt_shift_ && degree_ == o.degree_;
  }
  bool homogeneous() const;  // every entry matches the declared degree

  struct Term {
    std::vector<int> inputs;
    int out;
    Rational c;
  };
  std::vector<Term> terms() const;

  // Entries grouped by output index: out -> list of (inputs, coefficient).
  std::map<int, std::vector<std::pair<std::vector<int>, Rational>>> by_output() const;

  static constexpr int kMaxArity = 15;

 private:
  std::uint64_t key(std::span<const int> inputs, int out) const;
  void unkey(std::uint64_t k, std::vector<int>& inputs, int& out) const;

  const GradedSpace* dom_ = nullptr;
  const GradedSpace* tgt_ = nullptr;
  int arity_ = 0;
  int dom_shift_ = 0, tgt_shift_ = 0;
  int degree_ = 0;
  std::map<std::uint64_t, Rational> coef_;
};

// F o (G_1 ot ... ot G_k) with the Koszul evaluation rule
// (-1)^{sum_{t<t'} |G_{t'}| * deg(block_t)}.
MultiMap tensor_compose(const MultiMap& F, const std::vector<const MultiMap*>& gs);

// sf o_i sg = sf o (Id^{i-1} ot sg ot Id^{m-i}), i is 1-based.
MultiMap circ(const MultiMap& f, int i, const MultiMap& g);

// Brace sf{sg_1,...,sg_n}: all maps (s dom)^{ot *} -> s dom over one space.
// n = 0 returns f; n > arity(f) returns the zero map of the right shape.
MultiMap brace(const MultiMap& f, const std::vector<const MultiMap*>& gs);

// [sf, sg]_G = sf{sg} - (-1)^{|sf||sg|} sg{sf}.
MultiMap gerstenhaber(const MultiMap& f, const MultiMap& g);

MultiMap suspend_target(const MultiMap& f);    // tgt V -> sV
MultiMap desuspend_target(const MultiMap& f);  // tgt sV -> V

// The hat/tilde isomorphisms: re-index the domain between V and sV tensors,
// with sign (-1)^{sum_i (n-1-i) |a_i|_V} from s^{ot n} (0-based slots).
MultiMap change_domain_shift(const MultiMap& f, int new_shift);

MultiMap zero_like(const MultiMap& f);

}  // namespace rbh
