#include "timps/states.hpp"

#include <algorithm>
#include <functional>

namespace timps {

namespace {

std::string min_rotation(std::string_view bits) {
  if (bits.empty()) throw std::invalid_argument("necklace: empty bit string");
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("necklace: expected only '0' and '1'");
  }
  std::string doubled = std::string(bits) + std::string(bits);
  const std::size_t n = bits.size();
  std::string_view view(doubled);
  std::size_t best = 0;
  for (std::size_t r = 1; r < n; ++r) {
    if (view.substr(r, n) < view.substr(best, n)) best = r;
  }
  return std::string(view.substr(best, n));
}

}  // namespace

Necklace::Necklace(std::string_view bits) : bits_(min_rotation(bits)) {}

Necklace Necklace::single_one(std::size_t n) {
  if (n == 0) throw std::invalid_argument("necklace: length must be positive");
  std::string s(n, '0');
  s.back() = '1';
  return Necklace(std::move(s), Canonical{});
}

std::size_t Necklace::weight() const { return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), '1')); }

std::size_t Necklace::period() const {
  const std::size_t n = bits_.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p == 0 && bits_.compare(p, n - p, bits_, 0, n - p) == 0) return p;
  }
  return n;
}

bool Necklace::has_adjacent_ones() const {
  const std::size_t n = bits_.size();
  if (n == 1) return bits_ == "1";  // i_1 + i_n = 2
  for (std::size_t i = 0; i < n; ++i) {
    if (bits_[i] == '1' && bits_[(i + 1) % n] == '1') return true;
  }
  return false;
}

std::vector<std::size_t> Necklace::gaps() const {
  std::vector<std::size_t> out;
  const std::size_t n = bits_.size();
  const std::size_t first = bits_.find('1');
  if (first == std::string::npos) return out;
  std::size_t run = 0;
  for (std::size_t step = 1; step <= n; ++step) {
    if (bits_[(first + step) % n] == '1') {
      out.push_back(run);
      run = 0;
    } else {
      ++run;
    }
  }
  return out;
}

Necklace canonical_rotation(std::string_view bits) { return Necklace(bits); }

std::vector<Necklace> enumerate_necklaces(std::size_t n, std::size_t cap) {
  if (n == 0) throw std::invalid_argument("necklace length must be positive");
  if (n > cap) throw CapExceeded("necklace length " + std::to_string(n) + " above cap " + std::to_string(cap));
  // Fredricksen-Kessler-Maiorana generation; emits necklaces in lex order.
  std::vector<Necklace> out;
  std::string a(n + 1, '0');
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t t, std::size_t p) {
    if (t > n) {
      if (n % p == 0) out.push_back(Necklace(a.substr(1), Necklace::Canonical{}));
      return;
    }
    a[t] = a[t - p];
    gen(t + 1, p);
    if (a[t - p] == '0') {
      a[t] = '1';
      gen(t + 1, t);
    }
  };
  gen(1, 1);
  return out;
}

std::uint64_t euler_totient(std::uint64_t m) {
  std::uint64_t result = m;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

std::uint64_t polya_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("polya_count: n must be positive");
  if (n > 63) throw std::overflow_error("polya_count: n above 63 overflows 64 bits");
  unsigned __int128 sum = 0;
  for (unsigned p = 1; p <= n; ++p) {
    if (n % p == 0) sum += static_cast<unsigned __int128>(euler_totient(p)) << (n / p);
  }
  return static_cast<std::uint64_t>(sum / n);
}

TIState::TIState(std::size_t n) : n_(n) {
  if (n == 0) throw std::invalid_argument("state order must be positive");
}

GaussianRational TIState::coefficient(const Necklace& key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

void TIState::set(const Necklace& key, const GaussianRational& value) {
  if (key.length() != n_) throw std::invalid_argument("necklace length does not match state order");
  if (value.is_zero()) coeffs_.erase(key);
  else coeffs_.insert_or_assign(key, value);
}

std::vector<GaussianRational> TIState::expand(std::size_t cap) const {
  if (n_ > cap) throw CapExceeded("state order above expansion cap");
  const std::size_t size = std::size_t{1} << n_;
  std::vector<GaussianRational> full(size);
  std::string bits(n_, '0');
  for (std::size_t idx = 0; idx < size; ++idx) {
    for (std::size_t k = 0; k < n_; ++k) bits[k] = ((idx >> (n_ - 1 - k)) & 1u) ? '1' : '0';
    full[idx] = coefficient(Necklace(bits));
  }
  return full;
}

TIState w_state(std::size_t n, bool normalized) {
  if (n < 2) throw std::invalid_argument("W-state requires n >= 2");
  TIState s(n);
  GaussianRational value(1);
  if (normalized) {
    mpz_class root;
    mpz_class nn(static_cast<unsigned long>(n));
    if (!mpz_perfect_square_p(nn.get_mpz_t())) {
      throw NotRepresentable("normalized W-state needs 1/sqrt(" + std::to_string(n) +
                             "), which is irrational; use the unnormalized state");
    }
    mpz_sqrt(root.get_mpz_t(), nn.get_mpz_t());
    value = GaussianRational(mpq_class(1, root));
  }
  s.set(Necklace::single_one(n), value);
  return s;
}

TIState scale_state(const TIState& s, const GaussianRational& lambda) {
  TIState out(s.n());
  for (const auto& [key, value] : s.coeffs()) out.set(key, value * lambda);
  return out;
}

bool is_unit_sparse(const TIState& s) {
  return std::none_of(s.coeffs().begin(), s.coeffs().end(),
                      [](const auto& kv) { return kv.first.has_adjacent_ones(); });
}

TIState flip_bits(const TIState& s) {
  TIState out(s.n());
  for (const auto& [key, value] : s.coeffs()) {
    std::string bits = key.bits();
    for (char& c : bits) c = (c == '0') ? '1' : '0';
    out.set(Necklace(bits), value);
  }
  return out;
}

}  // namespace timps
