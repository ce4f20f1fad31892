#include "convval/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace convval {

DVec to_double(const RVec& v) {
  DVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

RVec to_rational(const DVec& v) {
  RVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(v[i])) throw std::invalid_argument("non-finite coordinate");
    out[i] = Rat(v[i]);
  }
  return out;
}

Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    mpz_class num(s.substr(0, slash));
    mpz_class den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator: " + s);
    Rat q(num, den);
    q.canonicalize();
    return q;
  }
  auto dot_pos = s.find('.');
  if (dot_pos != std::string::npos) {
    std::string digits = s.substr(0, dot_pos) + s.substr(dot_pos + 1);
    size_t frac_len = s.size() - dot_pos - 1;
    bool neg = false;
    if (!digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      neg = digits[0] == '-';
      digits = digits.substr(1);
    }
    if (digits.empty()) throw std::invalid_argument("bad number: " + s);
    mpz_class num(digits);
    mpz_class den(1);
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    Rat q(neg ? -num : num, den);
    q.canonicalize();
    return q;
  }
  return Rat(mpz_class(s));
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rat dot(const RVec& a, const RVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RVec sub(const RVec& a, const RVec& b) {
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

RVec add(const RVec& a, const RVec& b) {
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

RVec scaled(const RVec& a, const Rat& s) {
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

RVec negated(const RVec& a) {
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

bool is_zero(const RVec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

RVec zero_vec(int n) { return RVec(static_cast<size_t>(n), Rat(0)); }

RVec unit_vec(int n, int i) {
  RVec v = zero_vec(n);
  v[static_cast<size_t>(i)] = 1;
  return v;
}

int compare(const RVec& a, const RVec& b) {
  for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c;
  }
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  return 0;
}

RVec canonical_direction(const RVec& a) {
  mpz_class lcm_den = 1;
  for (const auto& q : a) {
    mpz_class d = q.get_den();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
    lcm_den = lcm_den / g * d;
  }
  std::vector<mpz_class> ints;
  ints.reserve(a.size());
  mpz_class gcd_num = 0;
  for (const auto& q : a) {
    mpz_class v = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  if (gcd_num == 0) throw std::invalid_argument("canonical_direction of zero vector");
  RVec out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = Rat(ints[i] / gcd_num);
  return out;
}

Rat det(RMat m) {
  size_t n = m.size();
  Rat result = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return Rat(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      result = -result;
    }
    result *= m[col][col];
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return result;
}

int rank(RMat m) {
  if (m.empty()) return 0;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[r][col];
      for (size_t c = col; c < cols; ++c) m[i][c] -= f * m[r][c];
    }
    ++r;
  }
  return static_cast<int>(r);
}

std::optional<RVec> solve(RMat a, RVec b) {
  size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rat f = a[r][col] / a[col][col];
      for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  RVec x(n);
  for (size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

std::optional<RMat> inverse(const RMat& a) {
  size_t n = a.size();
  RMat aug = a;
  for (size_t i = 0; i < n; ++i) {
    aug[i].resize(2 * n, Rat(0));
    aug[i][n + i] = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(aug[piv], aug[col]);
    Rat d = aug[col][col];
    for (size_t c = 0; c < 2 * n; ++c) aug[col][c] /= d;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rat f = aug[r][col];
      for (size_t c = 0; c < 2 * n; ++c) aug[r][c] -= f * aug[col][c];
    }
  }
  RMat inv(n, RVec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RMat transpose(const RMat& a) {
  if (a.empty()) return {};
  RMat t(a[0].size(), RVec(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

RMat mat_mul(const RMat& a, const RMat& b) {
  size_t n = a.size(), k = b.size(), m = b[0].size();
  RMat out(n, RVec(m, Rat(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l] == 0) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

RVec mat_vec(const RMat& a, const RVec& x) {
  RVec out(a.size(), Rat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

RMat identity_mat(int n) {
  RMat m(static_cast<size_t>(n), zero_vec(n));
  for (int i = 0; i < n; ++i) m[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return m;
}

RVec solve_in_span(const RMat& basis_cols, const RVec& y) {
  size_t n = y.size(), d = basis_cols.size();
  // Row-reduce [B | y] and back-substitute on the pivot rows.
  RMat aug(n, RVec(d + 1));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < d; ++j) aug[i][j] = basis_cols[j][i];
    aug[i][d] = y[i];
  }
  size_t r = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < d && r < n; ++col) {
    size_t piv = r;
    while (piv < n && aug[piv][col] == 0) ++piv;
    if (piv == n) continue;
    std::swap(aug[piv], aug[r]);
    for (size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][col] == 0) continue;
      Rat f = aug[i][col] / aug[r][col];
      for (size_t c = col; c <= d; ++c) aug[i][c] -= f * aug[r][c];
    }
    pivot_col.push_back(col);
    ++r;
  }
  if (pivot_col.size() != d) throw std::invalid_argument("basis not full column rank");
  RVec t(d, Rat(0));
  for (size_t i = 0; i < d; ++i) t[pivot_col[i]] = aug[i][d] / aug[i][pivot_col[i]];
  // Consistency: y must lie in the span.
  for (size_t i = d; i < n; ++i)
    if (aug[i][d] != 0) throw std::invalid_argument("vector not in basis span");
  return t;
}

Rat gram_det(const RMat& basis_cols) {
  size_t d = basis_cols.size();
  RMat g(d, RVec(d));
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) g[i][j] = dot(basis_cols[i], basis_cols[j]);
  return det(g);
}

RVec null_direction(const RMat& basis_cols) {
  size_t n = basis_cols[0].size();
  RMat m(basis_cols.size(), RVec(n));
  for (size_t i = 0; i < basis_cols.size(); ++i)
    for (size_t j = 0; j < n; ++j) m[i][j] = basis_cols[i][j];
  // Reduce; free column gives the kernel vector.
  size_t rows = m.size();
  size_t r = 0;
  std::vector<int> pivot_of_col(n, -1);
  for (size_t col = 0; col < n && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[r][col];
      for (size_t c = col; c < n; ++c) m[i][c] -= f * m[r][c];
    }
    pivot_of_col[col] = static_cast<int>(r);
    ++r;
  }
  int free_col = -1;
  for (size_t col = 0; col < n; ++col)
    if (pivot_of_col[col] < 0) {
      free_col = static_cast<int>(col);
      break;
    }
  if (free_col < 0) throw std::invalid_argument("matrix has trivial kernel");
  RVec v = zero_vec(static_cast<int>(n));
  v[static_cast<size_t>(free_col)] = 1;
  for (size_t col = 0; col < n; ++col) {
    int pr = pivot_of_col[col];
    if (pr >= 0) v[col] = -m[static_cast<size_t>(pr)][static_cast<size_t>(free_col)] /
                          m[static_cast<size_t>(pr)][col];
  }
  return v;
}

double ddot(const DVec& a, const DVec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double dnorm(const DVec& a) { return std::sqrt(ddot(a, a)); }

}  // namespace convval
