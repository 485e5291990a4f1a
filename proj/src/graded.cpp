#include "rbh/graded.hpp"

#include <algorithm>

namespace rbh {

std::uint64_t MultiMap::key(std::span<const int> inputs, int out) const {
  std::uint64_t k = 0;
  for (int b : inputs) {
    if (b < 0 || b > 14) throw std::out_of_range("MultiMap basis index");
    k = (k << 4) | (std::uint64_t)(b + 1);
  }
  if (out < 0 || out > 14) throw std::out_of_range("MultiMap basis index");
  return (k << 4) | (std::uint64_t)(out + 1);
}

void MultiMap::unkey(std::uint64_t k, std::vector<int>& inputs, int& out) const {
  out = (int)(k & 0xF) - 1;
  k >>= 4;
  inputs.assign(arity_, 0);
  for (int t = arity_ - 1; t >= 0; --t) {
    inputs[t] = (int)(k & 0xF) - 1;
    k >>= 4;
  }
}

MultiMap MultiMap::identity(const GradedSpace* sp, int shift) {
  MultiMap id(sp, sp, 1, shift, shift, 0);
  for (int b = 0; b < sp->dim(); ++b) {
    int in[1] = {b};
    id.add(in, b, Rational(1));
  }
  return id;
}

void MultiMap::add(std::span<const int> inputs, int out, const Rational& c) {
  if ((int)inputs.size() != arity_) throw std::invalid_argument("MultiMap::add arity");
  if (c == 0) return;
  auto k = key(inputs, out);
  auto it = coef_.find(k);
  if (it == coef_.end()) {
    coef_.emplace(k, c);
  } else {
    it->second += c;
    if (it->second == 0) coef_.erase(it);
  }
}

Rational MultiMap::coef(std::span<const int> inputs, int out) const {
  auto it = coef_.find(key(inputs, out));
  return it == coef_.end() ? Rational(0) : it->second;
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  if (!same_shape(o)) throw std::invalid_argument("MultiMap::+= shape mismatch");
  for (const auto& [k, c] : o.coef_) {
    auto it = coef_.find(k);
    if (it == coef_.end()) {
      coef_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second == 0) coef_.erase(it);
    }
  }
  return *this;
}

MultiMap& MultiMap::operator*=(const Rational& c) {
  if (c == 0) {
    coef_.clear();
    return *this;
  }
  for (auto& [k, v] : coef_) v *= c;
  return *this;
}

bool MultiMap::operator==(const MultiMap& o) const {
  return same_shape(o) && coef_ == o.coef_;
}

bool MultiMap::homogeneous() const {
  std::vector<int> in;
  int out;
  for (const auto& [k, c] : coef_) {
    unkey(k, in, out);
    int d = 0;
    for (int b : in) d += in_degree(b);
    if (out_degree(out) != d + degree_) return false;
  }
  return true;
}

std::vector<MultiMap::Term> MultiMap::terms() const {
  std::vector<Term> ts;
  ts.reserve(coef_.size());
  std::vector<int> in;
  int out;
  for (const auto& [k, c] : coef_) {
    unkey(k, in, out);
    ts.push_back({in, out, c});
  }
  return ts;
}

std::map<int, std::vector<std::pair<std::vector<int>, Rational>>> MultiMap::by_output() const {
  std::map<int, std::vector<std::pair<std::vector<int>, Rational>>> m;
  std::vector<int> in;
  int out;
  for (const auto& [k, c] : coef_) {
    unkey(k, in, out);
    m[out].emplace_back(in, c);
  }
  return m;
}

MultiMap zero_like(const MultiMap& f) {
  return MultiMap(f.dom(), f.tgt(), f.arity(), f.dom_shift(), f.tgt_shift(), f.degree());
}

MultiMap tensor_compose(const MultiMap& F, const std::vector<const MultiMap*>& gs) {
  if ((int)gs.size() != F.arity()) throw std::invalid_argument("tensor_compose: block count");
  int u = 0, gdeg = 0;
  for (const auto* g : gs) {
    if (g->tgt() != F.dom() || g->tgt_shift() != F.dom_shift())
      throw std::invalid_argument("tensor_compose: target/domain mismatch");
    if (!gs.empty() && (g->dom() != gs[0]->dom() || g->dom_shift() != gs[0]->dom_shift()))
      throw std::invalid_argument("tensor_compose: inconsistent domains");
    u += g->arity();
    gdeg += g->degree();
  }
  const GradedSpace* dom = gs.empty() ? F.dom() : gs[0]->dom();
  int dom_shift = gs.empty() ? F.dom_shift() : gs[0]->dom_shift();
  MultiMap r(dom, F.tgt(), u, dom_shift, F.tgt_shift(), F.degree() + gdeg);
  if (F.zero()) return r;

  std::vector<std::map<int, std::vector<std::pair<std::vector<int>, Rational>>>> grouped;
  grouped.reserve(gs.size());
  for (const auto* g : gs) grouped.push_back(g->by_output());

  std::vector<int> concat;
  for (const auto& ft : F.terms()) {
    // Pick one term of each g_t with output matching F's t-th input.
    std::vector<const std::vector<std::pair<std::vector<int>, Rational>>*> lists;
    bool dead = false;
    for (int t = 0; t < (int)gs.size(); ++t) {
      auto it = grouped[t].find(ft.inputs[t]);
      if (it == grouped[t].end()) {
        dead = true;
        break;
      }
      lists.push_back(&it->second);
    }
    if (dead) continue;
    std::vector<std::size_t> idx(gs.size(), 0);
    while (true) {
      Rational c = ft.c;
      concat.clear();
      long sign_exp = 0;
      int deg_prefix = 0;  // total degree of blocks before t
      for (int t = 0; t < (int)gs.size(); ++t) {
        const auto& [ins, gc] = (*lists[t])[idx[t]];
        sign_exp += (long)gs[t]->degree() * deg_prefix;
        int block_deg = 0;
        for (int b : ins) {
          concat.push_back(b);
          block_deg += gs[t]->in_degree(b);
        }
        deg_prefix += block_deg;
        c *= gc;
      }
      if (sign_exp % 2 != 0) c = -c;
      r.add(concat, ft.out, c);
      int t = (int)gs.size() - 1;
      while (t >= 0 && ++idx[t] == lists[t]->size()) {
        idx[t] = 0;
        --t;
      }
      if (t < 0) break;
    }
  }
  return r;
}

MultiMap circ(const MultiMap& f, int i, const MultiMap& g) {
  if (i < 1 || i > f.arity()) throw std::out_of_range("circ: position");
  MultiMap id = MultiMap::identity(f.dom(), f.dom_shift());
  std::vector<const MultiMap*> gs(f.arity(), &id);
  gs[i - 1] = &g;
  return tensor_compose(f, gs);
}

MultiMap brace(const MultiMap& f, const std::vector<const MultiMap*>& gs) {
  const int m = f.arity(), n = (int)gs.size();
  if (n == 0) return f;
  for (const auto* g : gs)
    if (g->dom() != f.dom() || g->dom_shift() != 1 || g->tgt_shift() != 1 ||
        f.dom_shift() != 1 || f.tgt_shift() != 1)
      throw std::invalid_argument("brace: expects suspended-domain maps into sV");
  int u = m, gdeg = 0;
  for (const auto* g : gs) {
    u += g->arity() - 1;
    gdeg += g->degree();
  }
  MultiMap result(f.dom(), f.tgt(), u, 1, 1, f.degree() + gdeg);
  if (n > m) return result;  // no insertion positions

  MultiMap id = MultiMap::identity(f.dom(), 1);
  // Choose the f-slots receiving the g's: 1 <= s_1 < ... < s_n <= m.
  std::vector<int> slot(n);
  for (int k = 0; k < n; ++k) slot[k] = k;
  while (true) {
    std::vector<const MultiMap*> blocks(m, &id);
    for (int k = 0; k < n; ++k) blocks[slot[k]] = gs[k];
    result += tensor_compose(f, blocks);
    int k = n - 1;
    while (k >= 0 && slot[k] == m - n + k) --k;
    if (k < 0) break;
    ++slot[k];
    for (int t = k + 1; t < n; ++t) slot[t] = slot[t - 1] + 1;
  }
  return result;
}

MultiMap gerstenhaber(const MultiMap& f, const MultiMap& g) {
  MultiMap a = brace(f, {&g});
  MultiMap b = brace(g, {&f});
  long e = (long)f.degree() * g.degree();
  return (e % 2 == 0) ? a - b : a + b;
}

MultiMap suspend_target(const MultiMap& f) {
  if (f.tgt_shift() != 0) throw std::invalid_argument("suspend_target");
  MultiMap r(f.dom(), f.tgt(), f.arity(), f.dom_shift(), 1, f.degree() + 1);
  for (const auto& t : f.terms()) r.add(t.inputs, t.out, t.c);
  return r;
}

MultiMap desuspend_target(const MultiMap& f) {
  if (f.tgt_shift() != 1) throw std::invalid_argument("desuspend_target");
  MultiMap r(f.dom(), f.tgt(), f.arity(), f.dom_shift(), 0, f.degree() - 1);
  for (const auto& t : f.terms()) r.add(t.inputs, t.out, t.c);
  return r;
}

MultiMap change_domain_shift(const MultiMap& f, int new_shift) {
  if (f.dom_shift() == new_shift) return f;
  const int n = f.arity();
  // Degree shifts by +n when dropping the s on every input, -n when adding.
  int ddeg = (f.dom_shift() == 1 && new_shift == 0) ? n : -n;
  MultiMap r(f.dom(), f.tgt(), n, new_shift, f.tgt_shift(), f.degree() + ddeg);
  for (const auto& t : f.terms()) {
    long e = 0;
    for (int i = 0; i < n; ++i) e += (long)(n - 1 - i) * f.dom()->degrees[t.inputs[i]];
    r.add(t.inputs, t.out, (e % 2 == 0) ? t.c : -t.c);
  }
  return r;
}

}  // namespace rbh
