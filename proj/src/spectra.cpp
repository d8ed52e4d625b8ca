#include "scb/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "json.hpp"
#include "scb/error.hpp"

namespace scb {

namespace {

// Above this order the Jacobi sweeps are replaced by Householder
// tridiagonalisation with implicit QR (Eigen), which is O(n^3) with a far
// smaller constant.
constexpr std::size_t kJacobiLimit = 128;
constexpr int kEigenAttempts = 4;

}  // namespace

std::int64_t Spectrum::order() const noexcept {
  std::int64_t s = 0;
  for (auto m : mults) s += m;
  return s;
}

Rational Spectrum::rational(std::size_t i) const {
  if (exact) return exact_values.at(i);
  return rationalize(values.at(i));
}

Rational Spectrum::power_sum(int t) const {
  if (exact) {
    Rational s = 0;
    for (std::size_t i = 0; i < distinct(); ++i) {
      Rational p = 1;
      for (int j = 0; j < t; ++j) p *= exact_values[i];
      s += p * mults[i];
    }
    return s;
  }
  long double s = 0;
  for (std::size_t i = 0; i < distinct(); ++i) {
    s += static_cast<long double>(mults[i]) * std::pow(static_cast<long double>(values[i]), t);
  }
  return Rational(static_cast<long>(std::llroundl(s)));
}

std::string Spectrum::to_json() const {
  nlohmann::json j;
  j["distinct"] = nlohmann::json::array();
  for (std::size_t i = 0; i < distinct(); ++i) {
    if (exact && exact_values[i].get_den() == 1 && exact_values[i].get_num().fits_slong_p()) {
      j["distinct"].push_back(exact_values[i].get_num().get_si());
    } else {
      j["distinct"].push_back(values[i]);
    }
  }
  j["mults"] = mults;
  j["exact"] = exact;
  return j.dump();
}

Spectrum exact_spectrum(const std::vector<std::pair<Rational, std::int64_t>>& counts) {
  std::map<Rational, std::int64_t, std::greater<>> merged;
  for (const auto& [value, m] : counts) merged[value] += m;
  Spectrum s;
  s.exact = true;
  for (const auto& [value, m] : merged) {
    if (m == 0) continue;
    s.exact_values.push_back(value);
    s.values.push_back(value.get_d());
    s.mults.push_back(m);
  }
  return s;
}

std::vector<double> eigs_jacobi(std::vector<double> a, std::size_t n) {
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double target = 1e-12 * std::max(1.0, std::sqrt(frob));
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * at(p, q) * at(p, q);
    }
    if (std::sqrt(off) < target) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p);
          const double akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k);
          const double aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> eigs_symmetric(const std::vector<double>& a, std::size_t n) {
  if (a.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "matrix is not n x n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i * n + j] != a[j * n + i]) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
    }
  }
  if (n <= kJacobiLimit) return eigs_jacobi(a, n);
  // Eigen's tridiagonal QR occasionally stalls on highly degenerate adjacency
  // matrices. A symmetric permutation of the rows and columns leaves the
  // eigenvalues unchanged and is enough to get it moving again.
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::mt19937 rng(0x5eed);
  for (int attempt = 0; attempt < kEigenAttempts; ++attempt) {
    if (attempt > 0) std::shuffle(perm.begin(), perm.end(), rng);
    Eigen::MatrixXd m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = a[perm[i] * n + perm[j]];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) continue;
    std::vector<double> eig(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(eig.begin(), eig.end(), std::greater<>());
    return eig;
  }
  return eigs_jacobi(a, n);
}

namespace {
// Rounding residue of a zero eigenvalue.
constexpr double kZeroSnap = 1e-12;
}  // namespace

Spectrum group_multiplicities(const std::vector<double>& eigs, double tol) {
  Spectrum s;
  s.tolerance = tol;
  std::size_t i = 0;
  while (i < eigs.size()) {
    std::size_t j = i + 1;
    double sum = eigs[i];
    while (j < eigs.size() && eigs[j - 1] - eigs[j] <= tol * std::max(1.0, std::fabs(eigs[j - 1]))) {
      sum += eigs[j];
      ++j;
    }
    const double mean = sum / static_cast<double>(j - i);
    s.values.push_back(std::fabs(mean) < kZeroSnap ? 0.0 : mean);
    s.mults.push_back(static_cast<std::int64_t>(j - i));
    i = j;
  }
  return s;
}

Spectrum graph_spectrum(const Graph& g, double tol) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v : g.neighbors(u)) a[u * n + v] = 1.0;
  }
  return group_multiplicities(eigs_symmetric(a, n), tol);
}

Spectrum city_block_spectrum(int m, int n) {
  if (m < 3) throw Error(ErrorCode::InvalidParameter, "city block alphabet needs m >= 3");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(m);
    if (total > (std::size_t{1} << 20)) throw Error(ErrorCode::AmbientTooLarge, "m^n exceeds 2^20");
  }
  std::vector<double> path(m);
  for (int k = 1; k <= m; ++k) path[k - 1] = 2.0 * std::cos(k * std::numbers::pi / (m + 1));
  std::vector<double> eig(total);
  std::vector<int> digits(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    double s = 0.0;
    for (int d : digits) s += path[d];
    eig[idx] = s;
    for (int l = 0; l < n; ++l) {
      if (++digits[l] < m) break;
      digits[l] = 0;
    }
  }
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return group_multiplicities(eig, 1e-9);
}

Spectrum phase_rotation_spectrum(std::uint32_t q, int n) {
  if (q < 2 || n < 1) throw Error(ErrorCode::InvalidParameter, "need q >= 2 and n >= 1");
  if (n == 1) {
    return exact_spectrum({{Rational(q - 1), 1}, {Rational(-1), static_cast<std::int64_t>(q - 1)}});
  }
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > (std::size_t{1} << 20)) throw Error(ErrorCode::AmbientTooLarge, "q^n exceeds 2^20");
  }
  std::map<long, std::int64_t> counts;
  std::vector<std::uint32_t> r(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    long zeros = 0;
    std::uint64_t sum = 0;
    for (auto x : r) {
      zeros += x == 0 ? 1 : 0;
      sum += x;
    }
    const long lambda = static_cast<long>(q) * zeros + (sum % q == 0 ? static_cast<long>(q) : 0) - n - 1;
    ++counts[lambda];
    for (int l = 0; l < n; ++l) {
      if (++r[l] < q) break;
      r[l] = 0;
    }
  }
  std::vector<std::pair<Rational, std::int64_t>> pairs;
  for (const auto& [v, m] : counts) pairs.emplace_back(Rational(v), m);
  return exact_spectrum(pairs);
}

Spectrum cayley_spectrum_abelian(const FieldPtr& field, int n, const std::vector<FieldVector>& connecting_set) {
  const FiniteField& f = *field;
  const std::uint32_t q = f.order();
  const std::uint32_t p = f.characteristic();
  for (const auto& s : connecting_set) {
    if (s.field != field || static_cast<int>(s.size()) != n) {
      throw Error(ErrorCode::DimensionMismatch, "connecting set element has wrong field or length");
    }
    if (s.is_zero()) throw Error(ErrorCode::AsymmetricConnectingSet, "connecting set contains zero");
    const FieldVector neg = FieldVector::zero(field, n) - s;
    if (std::find(connecting_set.begin(), connecting_set.end(), neg) == connecting_set.end()) {
      throw Error(ErrorCode::AsymmetricConnectingSet, "connecting set is not closed under negation");
    }
  }
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= q;
    if (total > (std::size_t{1} << 20)) throw Error(ErrorCode::AmbientTooLarge, "q^n exceeds 2^20");
  }
  // pairing[a*q+b] = sum of digit products mod p.
  std::vector<std::uint32_t> pairing(static_cast<std::size_t>(q) * q);
  for (Element a = 0; a < q; ++a) {
    const auto da = f.digits(a);
    for (Element b = 0; b < q; ++b) {
      const auto db = f.digits(b);
      std::uint32_t s = 0;
      for (std::size_t j = 0; j < da.size(); ++j) s = (s + da[j] * db[j]) % p;
      pairing[a * q + b] = s;
    }
  }
  std::vector<double> re(p), im(p);
  for (std::uint32_t t = 0; t < p; ++t) {
    re[t] = std::cos(2.0 * std::numbers::pi * t / p);
    im[t] = std::sin(2.0 * std::numbers::pi * t / p);
  }

  std::vector<double> eig(total);
  bool integral = true;
  std::vector<Element> r(n, 0);
  for (std::size_t idx = 0; idx < total; ++idx) {
    double sr = 0.0, si = 0.0;
    for (const auto& s : connecting_set) {
      std::uint32_t t = 0;
      for (int l = 0; l < n; ++l) t += pairing[r[l] * q + s.coords[l]];
      sr += re[t % p];
      si += im[t % p];
    }
    if (std::fabs(si) > 1e-9) {
      throw Error(ErrorCode::NumericalInconsistency, "character sum has an imaginary part");
    }
    const double rounded = std::round(sr);
    if (std::fabs(sr - rounded) <= 1e-6) {
      sr = rounded;
    } else {
      integral = false;
    }
    eig[idx] = sr;
    for (int l = n; l-- > 0;) {
      if (++r[l] < q) break;
      r[l] = 0;
    }
  }
  if (integral) {
    std::map<long, std::int64_t> counts;
    for (double x : eig) ++counts[std::lround(x)];
    std::vector<std::pair<Rational, std::int64_t>> pairs;
    for (const auto& [v, m] : counts) pairs.emplace_back(Rational(v), m);
    return exact_spectrum(pairs);
  }
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return group_multiplicities(eig, 1e-9);
}

SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b, double tol) {
  std::ostringstream os;
  if (a.distinct() != b.distinct()) {
    os << "distinct counts differ: " << a.distinct() << " vs " << b.distinct();
    return {false, os.str()};
  }
  for (std::size_t i = 0; i < a.distinct(); ++i) {
    if (a.mults[i] != b.mults[i]) {
      os << "multiplicity of eigenvalue " << i << " differs: " << a.mults[i] << " vs " << b.mults[i];
      return {false, os.str()};
    }
    if (std::fabs(a.values[i] - b.values[i]) > tol) {
      os << "eigenvalue " << i << " differs: " << a.values[i] << " vs " << b.values[i];
      return {false, os.str()};
    }
  }
  return {true, "agree"};
}

}  // namespace scb
