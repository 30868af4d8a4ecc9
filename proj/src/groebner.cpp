#include <algorithm>
#include <limits>

#include "timps/polynomials.hpp"

namespace timps {

namespace {

// Subtracts c * m * g from the descending term list `tail`, where the leading
// term of c*m*g has already been cancelled (so g's first term is skipped).
std::vector<Term> subtract_shifted(std::vector<Term>& tail, std::size_t from, const GaussianRational& c,
                                   const Monomial& m, const MultiPoly& g, MonomialOrder order) {
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(tail.size() - from + gt.size());
  std::size_t i = from;
  std::size_t j = 1;
  Monomial next_g;
  bool have_g = false;
  while (true) {
    if (!have_g && j < gt.size()) {
      next_g = gt[j].mono * m;
      have_g = true;
    }
    if (!have_g) break;
    if (i >= tail.size()) break;
    int cmp = compare(tail[i].mono, next_g, order);
    if (cmp > 0) {
      out.push_back(std::move(tail[i++]));
    } else if (cmp < 0) {
      out.push_back({next_g, -(gt[j].coeff * c)});
      ++j;
      have_g = false;
    } else {
      tail[i].coeff -= gt[j].coeff * c;
      if (!tail[i].coeff.is_zero()) out.push_back(std::move(tail[i]));
      ++i;
      ++j;
      have_g = false;
    }
  }
  for (; i < tail.size(); ++i) out.push_back(std::move(tail[i]));
  if (have_g) {
    out.push_back({next_g, -(gt[j].coeff * c)});
    ++j;
  }
  for (; j < gt.size(); ++j) out.push_back({gt[j].mono * m, -(gt[j].coeff * c)});
  return out;
}

const MultiPoly* find_reducer(const Monomial& mono, std::span<const MultiPoly* const> basis) {
  for (const MultiPoly* g : basis) {
    if (g->leading_monomial().divides(mono)) return g;
  }
  return nullptr;
}

MultiPoly normal_form(const MultiPoly& p, std::span<const MultiPoly* const> basis, MonomialOrder order,
                      WorkBudget& budget) {
  MultiPoly work = p.with_order(order);
  if (work.is_zero() || basis.empty()) return work;
  std::vector<Term> terms = work.terms();
  std::vector<Term> remainder;
  std::size_t head = 0;
  while (head < terms.size()) {
    const Term& lt = terms[head];
    const MultiPoly* g = find_reducer(lt.mono, basis);
    if (g == nullptr) {
      remainder.push_back(std::move(terms[head]));
      ++head;
      continue;
    }
    GaussianRational c = lt.coeff;
    if (!g->leading_coefficient().is_one()) c /= g->leading_coefficient();
    Monomial m = g->leading_monomial().quotient_of(lt.mono);
    budget.charge(g->size());
    terms = subtract_shifted(terms, head + 1, c, m, *g, order);
    head = 0;
  }
  return MultiPoly::from_terms(p.arity(), std::move(remainder), order);
}

void check_uniform_arity(std::span<const MultiPoly> polys, std::size_t arity) {
  for (const auto& g : polys) {
    if (g.arity() != arity) throw ArityMismatch();
  }
}

struct CriticalPair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
  unsigned sugar;
};

class Buchberger {
public:
  Buchberger(std::size_t arity, const GroebnerOptions& options)
      : arity_(arity), order_(options.order), budget_(options.budget) {}

  std::vector<MultiPoly> run(std::span<const MultiPoly> gens, GroebnerStats* stats) {
    std::vector<MultiPoly> inputs;
    for (const auto& g : gens) {
      if (!g.is_zero()) inputs.push_back(g.with_order(order_));
    }
    std::sort(inputs.begin(), inputs.end(), [this](const MultiPoly& a, const MultiPoly& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), order_) < 0;
    });
    bool inconsistent = false;
    for (const auto& f : inputs) {
      if (!insert(normal_form(f, active_basis(), order_, budget_), f.total_degree())) {
        inconsistent = true;
        break;
      }
    }
    while (!inconsistent && !pairs_.empty()) {
      CriticalPair pair = take_pair();
      ++stats_.pairs_considered;
      ++stats_.pairs_reduced;
      MultiPoly s = s_polynomial(polys_[pair.i], polys_[pair.j]);
      MultiPoly h = normal_form(s, active_basis(), order_, budget_);
      if (h.is_zero()) {
        ++stats_.zero_reductions;
        continue;
      }
      if (!insert(std::move(h), pair.sugar)) inconsistent = true;
    }
    std::vector<MultiPoly> result =
        inconsistent ? std::vector<MultiPoly>{MultiPoly::constant(arity_, GaussianRational(1), order_)}
                     : interreduce();
    stats_.monomial_ops = budget_.used();
    if (stats != nullptr) *stats = stats_;
    return result;
  }

private:
  std::span<const MultiPoly* const> active_basis() {
    active_ptrs_.clear();
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) active_ptrs_.push_back(&polys_[k]);
    }
    return active_ptrs_;
  }

  CriticalPair take_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const auto& a = pairs_[k];
      const auto& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && compare(a.lcm, b.lcm, order_) < 0)) best = k;
    }
    CriticalPair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  // Gebauer-Moeller update. Returns false when h is a nonzero constant.
  bool insert(MultiPoly h, unsigned sugar) {
    if (h.is_zero()) return true;
    if (h.is_constant()) return false;
    h = h.monic();
    const std::size_t hi = polys_.size();
    const Monomial& lh = h.leading_monomial();
    sugar = std::max(sugar, h.total_degree());

    std::vector<CriticalPair> fresh;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      const Monomial& lk = polys_[k].leading_monomial();
      Monomial l = lcm(lh, lk);
      unsigned s = std::max(sugar + (l.degree() - lh.degree()), sugars_[k] + (l.degree() - lk.degree()));
      fresh.push_back({k, hi, std::move(l), s});
    }

    // Chain criterion among the new pairs: drop (h,g1) if some other (h,g2)
    // has an lcm properly dividing lcm(h,g1); coprime pairs are kept here and
    // removed by the product criterion below.
    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Monomial& la = polys_[fresh[a].i].leading_monomial();
      if (lh.coprime(la)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (!(fresh[b].lcm == fresh[a].lcm) || b < a)) {
          keep[a] = false;
          break;
        }
      }
    }
    // Old pairs (g1,g2) are redundant if LM(h) divides their lcm and the
    // lcms with h differ from it.
    std::vector<CriticalPair> kept_old;
    for (auto& p : pairs_) {
      if (lh.divides(p.lcm)) {
        Monomial l1 = lcm(polys_[p.i].leading_monomial(), lh);
        Monomial l2 = lcm(polys_[p.j].leading_monomial(), lh);
        if (!(l1 == p.lcm) && !(l2 == p.lcm)) {
          ++stats_.pairs_considered;
          continue;
        }
      }
      kept_old.push_back(std::move(p));
    }
    pairs_ = std::move(kept_old);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Monomial& la = polys_[fresh[a].i].leading_monomial();
      if (!keep[a] || lh.coprime(la)) {
        ++stats_.pairs_considered;
        continue;
      }
      pairs_.push_back(std::move(fresh[a]));
    }
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
    polys_.push_back(std::move(h));
    active_.push_back(true);
    sugars_.push_back(sugar);
    return true;
  }

  std::vector<MultiPoly> interreduce() {
    std::vector<MultiPoly> basis;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) basis.push_back(polys_[k]);
    }
    std::sort(basis.begin(), basis.end(), [this](const MultiPoly& a, const MultiPoly& b) {
      return compare(a.leading_monomial(), b.leading_monomial(), order_) < 0;
    });
    std::vector<MultiPoly> reduced;
    reduced.reserve(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) {
      std::vector<const MultiPoly*> others;
      for (std::size_t o = 0; o < basis.size(); ++o) {
        if (o != k) others.push_back(&basis[o]);
      }
      reduced.push_back(normal_form(basis[k], others, order_, budget_).monic());
    }
    return reduced;
  }

  std::size_t arity_;
  MonomialOrder order_;
  WorkBudget budget_;
  GroebnerStats stats_;
  std::vector<MultiPoly> polys_;
  std::vector<bool> active_;
  std::vector<unsigned> sugars_;
  std::vector<CriticalPair> pairs_;
  std::vector<const MultiPoly*> active_ptrs_;
};

}  // namespace

MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> basis, MonomialOrder order,
                 WorkBudget& budget) {
  check_uniform_arity(basis, p.arity());
  std::vector<MultiPoly> ordered;
  ordered.reserve(basis.size());
  for (const auto& g : basis) {
    if (g.is_zero()) throw std::invalid_argument("reduce: zero polynomial in basis");
    ordered.push_back(g.with_order(order));
  }
  std::vector<const MultiPoly*> ptrs;
  for (const auto& g : ordered) ptrs.push_back(&g);
  return normal_form(p, ptrs, order, budget);
}

MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> basis, MonomialOrder order) {
  WorkBudget unlimited(std::numeric_limits<std::uint64_t>::max());
  return reduce(p, basis, order, unlimited);
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
  if (f.arity() != g.arity()) throw ArityMismatch();
  if (f.is_zero() || g.is_zero()) return MultiPoly(f.arity(), f.order());
  const MultiPoly gg = g.with_order(f.order());
  Monomial l = lcm(f.leading_monomial(), gg.leading_monomial());
  MultiPoly a = f.mul_term(f.leading_monomial().quotient_of(l), f.leading_coefficient().inv());
  MultiPoly b = gg.mul_term(gg.leading_monomial().quotient_of(l), gg.leading_coefficient().inv());
  return a - b;
}

std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, const GroebnerOptions& options,
                                  GroebnerStats* stats) {
  if (gens.empty()) throw std::invalid_argument("buchberger: empty generator list");
  check_uniform_arity(gens, gens.front().arity());
  Buchberger engine(gens.front().arity(), options);
  return engine.run(gens, stats);
}

std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, MonomialOrder order) {
  return buchberger(gens, GroebnerOptions{order, WorkBudget::kDefault});
}

bool is_groebner_basis(std::span<const MultiPoly> basis) {
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      MultiPoly s = s_polynomial(basis[a], basis[b]);
      if (!reduce(s, basis, basis[a].order()).is_zero()) return false;
    }
  }
  return true;
}

bool contains_one(std::span<const MultiPoly> basis) {
  for (const auto& g : basis) {
    if (!g.is_zero() && g.is_constant()) return true;
  }
  return false;
}

}  // namespace timps
