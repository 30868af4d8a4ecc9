#include "timps/polynomials.hpp"

#include <algorithm>
#include <sstream>

namespace timps {

MonomialOrder parse_order(std::string_view name) {
  if (name == "grevlex") return MonomialOrder::GrevLex;
  if (name == "lex") return MonomialOrder::Lex;
  throw std::invalid_argument("unknown monomial order '" + std::string(name) + "'");
}

std::string to_string(MonomialOrder order) { return order == MonomialOrder::Lex ? "lex" : "grevlex"; }

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::size_t arity) {
  if (arity > kMaxArity) throw std::length_error("monomial arity above " + std::to_string(kMaxArity));
  arity_ = static_cast<std::uint16_t>(arity);
}

Monomial::Monomial(std::initializer_list<unsigned> exponents)
    : Monomial(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

Monomial::Monomial(std::span<const unsigned> exponents) : Monomial(exponents.size()) {
  for (std::size_t i = 0; i < exponents.size(); ++i) set(i, exponents[i]);
}

Monomial Monomial::variable(std::size_t arity, std::size_t index, unsigned power) {
  if (index >= arity) throw std::out_of_range("variable index out of range");
  Monomial m(arity);
  m.set(index, power);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (e > 255) throw std::overflow_error("monomial exponent above 255");
  degree_ = degree_ - exps_[i] + e;
  exps_[i] = static_cast<std::uint8_t>(e);
  const std::uint64_t bit = std::uint64_t{1} << (i % 64);
  if (e > 0) mask_ |= bit;
  else mask_ &= ~bit;
}

bool Monomial::divides(const Monomial& other) const {
  if ((mask_ & ~other.mask_) != 0 || degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial q(arity_);
  for (std::size_t i = 0; i < arity_; ++i) {
    if (other.exps_[i] > 0 || exps_[i] > 0) q.set(i, other.exps_[i] - exps_[i]);
  }
  return q;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.arity_);
  for (std::size_t i = 0; i < a.arity_; ++i) {
    unsigned e = unsigned{a.exps_[i]} + unsigned{b.exps_[i]};
    if (e > 255) throw std::overflow_error("monomial exponent above 255");
    m.exps_[i] = static_cast<std::uint8_t>(e);
  }
  m.degree_ = a.degree_ + b.degree_;
  m.mask_ = a.mask_ | b.mask_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.arity_);
  unsigned degree = 0;
  for (std::size_t i = 0; i < a.arity_; ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    degree += m.exps_[i];
  }
  m.degree_ = degree;
  m.mask_ = a.mask_ | b.mask_;
  return m;
}

int compare(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const std::size_t n = a.arity();
  if (order == MonomialOrder::GrevLex) {
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
    }
    return 0;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// MultiPoly

MultiPoly::MultiPoly(std::size_t arity, MonomialOrder order) : arity_(arity), order_(order) {
  if (arity > Monomial::kMaxArity) throw std::length_error("polynomial arity too large");
}

MultiPoly MultiPoly::constant(std::size_t arity, const GaussianRational& c, MonomialOrder order) {
  MultiPoly p(arity, order);
  if (!c.is_zero()) p.terms_.push_back({Monomial(arity), c});
  return p;
}

MultiPoly MultiPoly::variable(std::size_t arity, std::size_t index, MonomialOrder order) {
  MultiPoly p(arity, order);
  p.terms_.push_back({Monomial::variable(arity, index), GaussianRational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(std::size_t arity, std::vector<Term> terms, MonomialOrder order) {
  MultiPoly p(arity, order);
  for (const auto& t : terms) {
    if (t.mono.arity() != arity) throw ArityMismatch();
  }
  std::sort(terms.begin(), terms.end(),
            [order](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
      if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
    } else if (!t.coeff.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

GaussianRational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return {};
}

GaussianRational MultiPoly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return {};
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

MultiPoly MultiPoly::with_order(MonomialOrder order) const {
  if (order == order_) return *this;
  MultiPoly p(arity_, order);
  p.terms_ = terms_;
  std::sort(p.terms_.begin(), p.terms_.end(),
            [order](const Term& a, const Term& b) { return compare(a.mono, b.mono, order) > 0; });
  return p;
}

MultiPoly MultiPoly::monic() const {
  if (is_zero() || leading_coefficient().is_one()) return *this;
  return scaled(leading_coefficient().inv());
}

MultiPoly MultiPoly::scaled(const GaussianRational& c) const {
  MultiPoly p(arity_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono, t.coeff * c});
  return p;
}

MultiPoly MultiPoly::mul_term(const Monomial& m, const GaussianRational& c) const {
  if (m.arity() != arity_) throw ArityMismatch();
  MultiPoly p(arity_, order_);
  if (c.is_zero()) return p;
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
  return p;
}

namespace {

// Merges two descending term lists, adding sign * b into a.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, int sign,
                              MonomialOrder order) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].mono, b[j].mono, order);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(sign > 0 ? b[j] : Term{b[j].mono, -b[j].coeff});
      ++j;
    } else {
      GaussianRational s = sign > 0 ? a[i].coeff + b[j].coeff : a[i].coeff - b[j].coeff;
      if (!s.is_zero()) out.push_back({a[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back(sign > 0 ? b[j] : Term{b[j].mono, -b[j].coeff});
  return out;
}

}  // namespace

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_arity(o);
  if (o.order_ != order_) return *this += o.with_order(order_);
  terms_ = merge_terms(terms_, o.terms_, +1, order_);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_arity(o);
  if (o.order_ != order_) return *this -= o.with_order(order_);
  terms_ = merge_terms(terms_, o.terms_, -1, order_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_arity(o);
  std::vector<Term> all;
  all.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) all.push_back({a.mono * b.mono, a.coeff * b.coeff});
  }
  *this = from_terms(arity_, std::move(all), order_);
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.arity_ != b.arity_ || a.terms_.size() != b.terms_.size()) return false;
  if (a.order_ != b.order_) return a == b.with_order(a.order_);
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].mono == b.terms_[i].mono) || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string MultiPoly::str(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    GaussianRational c = t.coeff;
    const bool negative = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    if (negative && (c.is_real() || sgn(c.re()) == 0)) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    const bool needs_parens = !c.is_real() && sgn(c.re()) != 0;
    std::string factors;
    for (std::size_t i = 0; i < arity_; ++i) {
      unsigned e = t.mono[i];
      if (e == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += i < names.size() ? names[i] : "x" + std::to_string(i + 1);
      if (e > 1) factors += '^' + std::to_string(e);
    }
    if (factors.empty() || !c.is_one()) {
      os << (needs_parens ? "(" + c.str() + ")" : c.str());
      if (!factors.empty()) os << '*';
    }
    os << factors;
  }
  return os.str();
}

void MultiPoly::sub_mul_term(const GaussianRational& c, const Monomial& m, const MultiPoly& g,
                             std::uint64_t* ops) {
  std::vector<Term> scaled_terms;
  scaled_terms.reserve(g.terms_.size());
  for (const auto& t : g.terms_) scaled_terms.push_back({t.mono * m, t.coeff * c});
  terms_ = merge_terms(terms_, scaled_terms, -1, order_);
  if (ops != nullptr) *ops += g.terms_.size() + terms_.size();
}

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q) { return p + q; }
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q) { return p * q; }

MultiPoly poly_pow(const MultiPoly& p, unsigned e) {
  MultiPoly result = MultiPoly::constant(p.arity(), GaussianRational(1), p.order());
  MultiPoly base = p;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

ComplexF eval_poly(const MultiPoly& p, std::span<const ComplexF> point) {
  if (point.size() != p.arity()) throw std::invalid_argument("evaluation point length does not match arity");
  // Powers of each coordinate are accumulated incrementally and cached.
  std::vector<std::vector<ComplexF>> powers(p.arity(), std::vector<ComplexF>{ComplexF(1.0, 0.0)});
  auto power = [&](std::size_t var, unsigned e) {
    auto& cache = powers[var];
    while (cache.size() <= e) cache.push_back(cache.back() * point[var]);
    return cache[e];
  };
  ComplexF sum(0.0, 0.0);
  for (const auto& t : p.terms()) {
    ComplexF v = to_complex(t.coeff);
    for (std::size_t i = 0; i < p.arity(); ++i) {
      if (t.mono[i] > 0) v *= power(i, t.mono[i]);
    }
    sum += v;
  }
  return sum;
}

}  // namespace timps
