#include "timps/mps.hpp"

#include <cmath>
#include <random>

#include <Eigen/Dense>

namespace timps {

namespace {

using EigenMat = Eigen::Matrix<ComplexF, Eigen::Dynamic, Eigen::Dynamic>;

EigenMat to_eigen(const Matrix<ComplexF>& m) {
  EigenMat out(m.dim(), m.dim());
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

Matrix<ComplexF> from_eigen(const EigenMat& m) {
  Matrix<ComplexF> out(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(r, c) = m(r, c);
  }
  return out;
}

double condition_number(const EigenMat& m) {
  Eigen::JacobiSVD<EigenMat> svd(m);
  const auto& sv = svd.singularValues();
  const double smallest = sv(sv.size() - 1);
  if (smallest == 0.0) return std::numeric_limits<double>::infinity();
  return sv(0) / smallest;
}

}  // namespace

FloatRep to_floating(const ExactRep& rep) {
  auto conv = [](const GaussianRational& a) { return to_complex(a); };
  return {rep.a0.map(conv), rep.a1.map(conv)};
}

MultiPoly trace_polynomial(const SymbolicRep& rep, const Necklace& key) {
  for (const auto* m : {&rep.a0, &rep.a1}) {
    for (const auto& e : m->data()) {
      if (e.arity() != 1) throw ArityMismatch();
    }
  }
  TraceEvaluator<MultiPoly> eval(rep);
  return eval.coefficient(key);
}

VerifyReport verify(const FloatRep& rep, std::size_t n, const std::function<ComplexF(const Necklace&)>& expected,
                    const VerifyOptions& options) {
  if (!(options.tol > 0.0)) throw std::invalid_argument("verify: tolerance must be positive");
  VerifyReport report;
  report.tolerance = options.tol;
  TraceEvaluator<ComplexF> eval(rep);
  for (const Necklace& key : enumerate_necklaces(n, options.necklace_cap)) {
    const ComplexF want = expected(key);
    double err = std::abs(eval.coefficient(key) - want);
    if (options.relative) err /= std::max(1.0, std::abs(want));
    if (!std::isfinite(err)) err = std::numeric_limits<double>::infinity();
    // Strict comparison keeps the first (smallest) necklace among ties.
    if (!report.worst_necklace || err > report.max_abs_error) {
      report.max_abs_error = err;
      report.worst_necklace = key;
    }
    ++report.checked_classes;
  }
  report.passed = report.max_abs_error <= options.tol;
  return report;
}

VerifyReport verify(const FloatRep& rep, const TIState& s, const VerifyOptions& options) {
  return verify(rep, s.n(), [&s](const Necklace& key) { return to_complex(s.coefficient(key)); }, options);
}

VerifyReport verify(const FloatRep& rep, const TIState& s, double tol) {
  VerifyOptions options;
  options.tol = tol;
  return verify(rep, s, options);
}

FloatRep conjugate_rep(const FloatRep& rep, const Matrix<ComplexF>& s, double condition_cap) {
  if (s.dim() != rep.bond_dim()) throw std::invalid_argument("gauge matrix dimension mismatch");
  const EigenMat se = to_eigen(s);
  const double cond = condition_number(se);
  if (!std::isfinite(cond) || cond > condition_cap) {
    throw IllConditioned("gauge matrix is singular or ill-conditioned (condition number " + std::to_string(cond) + ")");
  }
  const EigenMat inv = se.fullPivLu().inverse();
  return {from_eigen(se * to_eigen(rep.a0) * inv), from_eigen(se * to_eigen(rep.a1) * inv)};
}

Matrix<ComplexF> random_gauge(std::size_t dim, std::uint64_t seed, double max_condition) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  while (true) {
    EigenMat m(dim, dim);
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) m(r, c) = ComplexF(unif(rng), unif(rng));
    }
    m += EigenMat::Identity(dim, dim) * ComplexF(1.5, 0.0);
    if (condition_number(m) <= max_condition) return from_eigen(m);
  }
}

}  // namespace timps
