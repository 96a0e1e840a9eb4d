#include "sivie/basis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sivie {
namespace {

__extension__ using int128 = __int128;

int128 checked_mul(int128 a, int128 b) {
  int128 out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in exact moment sum");
  return out;
}

int128 checked_add(int128 a, int128 b) {
  int128 out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow in exact moment sum");
  return out;
}

// lcm(1, 2, ..., n)
std::int64_t lcm_up_to(int n) {
  std::int64_t l = 1;
  for (int d = 2; d <= n; ++d) l = std::lcm(l, static_cast<std::int64_t>(d));
  return l;
}

}  // namespace

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // r * (n-k+i) / i is C(n-k+i, i), always an integer.
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (r > std::numeric_limits<std::uint64_t>::max()) throw std::overflow_error("binomial does not fit in 64 bits");
  }
  return static_cast<std::uint64_t>(r);
}

ChelyshkovBasis::ChelyshkovBasis(int degree_cap) : degree_cap_(degree_cap) {
  if (degree_cap < 0) throw std::invalid_argument("Chelyshkov degree cap must be non-negative");
  if (degree_cap > kMaxDegreeCap) {
    throw std::invalid_argument("Chelyshkov degree cap " + std::to_string(degree_cap) + " exceeds supported maximum " +
                                std::to_string(kMaxDegreeCap));
  }
  const int n = degree_cap_;
  integer_coeffs_.assign(n + 1, std::vector<std::int64_t>(n + 1, 0));
  scale_.resize(n + 1);
  coeffs_ = Eigen::MatrixXd::Zero(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    scale_(i) = std::sqrt(2.0 * i + 1.0);
    for (int k = 0; k <= n - i; ++k) {
      const auto magnitude = binomial(n - i, k) * binomial(n + k + i + 1, n - i);
      const auto c = static_cast<std::int64_t>(magnitude);
      integer_coeffs_[i][i + k] = (k % 2 == 0) ? c : -c;
      coeffs_(i, i + k) = scale_(i) * static_cast<double>(integer_coeffs_[i][i + k]);
    }
  }
}

double ChelyshkovBasis::eval(int i, double t) const {
  if (i < 0 || i > degree_cap_) throw std::out_of_range("basis index " + std::to_string(i) + " out of range");
  if (!(t >= 0.0 && t <= 1.0)) throw std::out_of_range("basis argument outside [0,1]");
  // sum_{a=i}^{N} c[i][a] t^a = t^i * sum_k c[i][i+k] t^k, highest power first.
  double acc = 0.0;
  for (int a = degree_cap_; a >= i; --a) acc = acc * t + coeffs_(i, a);
  double lead = 1.0;
  for (int a = 0; a < i; ++a) lead *= t;
  return acc * lead;
}

Eigen::VectorXd ChelyshkovBasis::eval_all(double t) const {
  Eigen::VectorXd out(size());
  for (int i = 0; i <= degree_cap_; ++i) out(i) = eval(i, t);
  return out;
}

double ChelyshkovBasis::linear_combination(const Eigen::VectorXd& h, double t) const {
  if (h.size() != size()) {
    throw std::invalid_argument("coefficient vector has " + std::to_string(h.size()) + " entries, basis has " +
                                std::to_string(size()));
  }
  double sum = 0.0;
  for (int j = 0; j <= degree_cap_; ++j) sum += h(j) * eval(j, t);
  return sum;
}

Eigen::MatrixXd ChelyshkovBasis::gram_matrix() const {
  const int n = degree_cap_;
  const std::int64_t denom = lcm_up_to(2 * n + 1);
  Eigen::MatrixXd g(n + 1, n + 1);
  for (int i = 0; i <= n; ++i) {
    for (int j = i; j <= n; ++j) {
      int128 s = 0;
      for (int a = i; a <= n; ++a) {
        for (int b = j; b <= n; ++b) {
          const int128 term = checked_mul(checked_mul(integer_coeffs_[i][a], integer_coeffs_[j][b]), denom / (a + b + 1));
          s = checked_add(s, term);
        }
      }
      const double v = scale_(i) * scale_(j) * (static_cast<double>(s) / static_cast<double>(denom));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

Eigen::VectorXd ChelyshkovBasis::integrals() const {
  const int n = degree_cap_;
  const std::int64_t denom = lcm_up_to(n + 1);
  Eigen::VectorXd out(n + 1);
  for (int i = 0; i <= n; ++i) {
    int128 s = 0;
    for (int a = i; a <= n; ++a) s = checked_add(s, checked_mul(integer_coeffs_[i][a], denom / (a + 1)));
    out(i) = scale_(i) * (static_cast<double>(s) / static_cast<double>(denom));
  }
  return out;
}

}  // namespace sivie
