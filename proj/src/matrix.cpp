#include "liewild/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace liewild {

Vec vec_add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_add: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vec_sub: size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec vec_scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

bool vec_is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}

std::string vec_str(const Vec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += rat_str(a[i]);
  }
  return s + ")";
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) m.set_row(i, rows[i]);
  return m;
}

Vec Matrix::row(std::size_t i) const {
  Vec v(cols_);
  for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

void Matrix::set_row(std::size_t i, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("set_row: size mismatch");
  for (std::size_t j = 0; j < cols_; ++j) at(i, j) = v[j];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product: inner dimensions differ");
  Matrix r(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& x = at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) r.at(i, j) += x * rhs.at(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix sum");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + rhs.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionMismatch("matrix difference");
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - rhs.a_[i];
  return r;
}

Matrix Matrix::scaled(const Rat& c) const {
  Matrix r(rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

Vec Matrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw DimensionMismatch("apply: vector length != cols");
  Vec r(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (at(i, j) != 0) r[i] += at(i, j) * x[j];
  return r;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x == 0; });
}

Rat Matrix::trace() const {
  Rat t(0);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

std::string Matrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) os << " ";
      os << rat_str(at(i, j));
    }
  }
  os << "]";
  return os.str();
}

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    const Rat inv = Rat(1) / a.at(r, c);
    for (std::size_t j = c; j < cols; ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      const Rat f = a.at(i, c);
      for (std::size_t j = c; j < cols; ++j) a.at(i, j) -= f * a.at(r, j);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::vector<Vec> kernel_basis(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: |b| != rows");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const RrefResult r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols(), Rat(0));
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced.at(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: not square");
  const std::size_t n = m.rows();
  Matrix aug = hstack(m, Matrix::identity(n));
  const RrefResult r = rref(aug);
  if (r.rank < n || r.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced.at(i, n + j);
  return inv;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionMismatch("vstack: cols differ");
  Matrix r(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i) r.set_row(i, top.row(i));
  for (std::size_t i = 0; i < bottom.rows(); ++i) r.set_row(top.rows() + i, bottom.row(i));
  return r;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw DimensionMismatch("hstack: rows differ");
  Matrix r(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) r.at(i, j) = left.at(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) r.at(i, left.cols() + j) = right.at(i, j);
  }
  return r;
}

std::vector<Rat> char_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("char_poly: not square");
  const std::size_t n = m.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Matrix work = Matrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    work = m * work;
    const Rat ck = -work.trace() / Rat(static_cast<long>(k));
    c[n - k] = ck;
    for (std::size_t i = 0; i < n; ++i) work.at(i, i) += ck;
  }
  return c;
}

namespace {

// Polynomials as coefficient vectors, ascending degree, no trailing zeros.
std::vector<Rat> poly_trim(std::vector<Rat> p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

std::vector<Rat> poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat>& b) {
  a = poly_trim(std::move(a));
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t off = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    a = poly_trim(std::move(a));
  }
  return a;
}

std::vector<Rat> poly_monic(std::vector<Rat> p) {
  if (p.empty()) return p;
  const Rat lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

std::vector<Rat> poly_gcd(std::vector<Rat> a, std::vector<Rat> b) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    auto r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(std::move(a));
}

std::vector<Rat> poly_div_exact(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  std::vector<Rat> rem = poly_trim(a), q(a.size(), Rat(0));
  while (rem.size() >= b.size() && !rem.empty()) {
    const Rat f = rem.back() / b.back();
    const std::size_t off = rem.size() - b.size();
    q[off] = f;
    for (std::size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
    rem = poly_trim(std::move(rem));
  }
  if (!rem.empty()) throw InternalError("poly_div_exact: nonzero remainder");
  return poly_trim(std::move(q));
}

std::vector<Rat> poly_lcm(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  const auto g = poly_gcd(a, b);
  return poly_monic(poly_div_exact(poly_mul(a, b), g));
}

}  // namespace

std::vector<Rat> min_poly(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("min_poly: not square");
  const std::size_t n = m.rows();
  if (n == 0) return {Rat(1)};
  std::vector<Rat> acc;  // lcm of local minimal polynomials so far
  for (std::size_t s = 0; s < n; ++s) {
    Vec v(n, Rat(0));
    v[s] = 1;
    // Krylov chain v, m v, m^2 v, ... until dependent.
    std::vector<Vec> chain{v};
    while (true) {
      Vec next = m.apply(chain.back());
      Matrix sys(n, chain.size());
      for (std::size_t j = 0; j < chain.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) sys.at(i, j) = chain[j][i];
      if (auto coeffs = solve(sys, next)) {
        std::vector<Rat> local(chain.size() + 1, Rat(0));
        local.back() = 1;
        for (std::size_t j = 0; j < chain.size(); ++j) local[j] = -(*coeffs)[j];
        acc = poly_lcm(acc, local);
        break;
      }
      chain.push_back(std::move(next));
    }
    if (acc.size() == n + 1) break;  // cannot grow past degree n
  }
  return acc;
}

namespace {

std::vector<Int> divisors_up_to_cap(const Int& value, unsigned long cap) {
  std::vector<Int> divs;
  Int v = abs(value);
  if (v == 0) return divs;
  for (Int d = 1; d * d <= v; ++d) {
    if (mpz_cmp_ui(d.get_mpz_t(), cap) > 0) break;
    if (v % d == 0) {
      divs.push_back(d);
      divs.push_back(v / d);
    }
  }
  return divs;
}

}  // namespace

std::vector<Rat> rational_roots(const std::vector<Rat>& coeffs) {
  std::vector<Rat> p = poly_trim(coeffs);
  std::vector<Rat> roots;
  if (p.size() <= 1) return roots;
  // Clear denominators to an integer polynomial.
  Int scale = 1;
  for (const Rat& c : p) scale = lcm(scale, c.get_den());
  std::vector<Int> ip(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    Rat c = p[i] * Rat(scale);
    c.canonicalize();
    ip[i] = c.get_num();
  }
  // Factor out x^k.
  std::size_t low = 0;
  while (low < ip.size() && ip[low] == 0) ++low;
  if (low > 0) roots.push_back(Rat(0));

  const Int a0 = ip[low];
  const Int an = ip.back();
  auto eval_zero = [&](const Rat& x) {
    Rat acc(0), pow(1);
    for (std::size_t i = low; i < ip.size(); ++i) {
      acc += Rat(ip[i]) * pow;
      pow *= x;
    }
    return acc == 0;
  };
  const auto ps = divisors_up_to_cap(a0, 1000000);
  const auto qs = divisors_up_to_cap(an, 1000000);
  for (const Int& num : ps)
    for (const Int& den : qs)
      for (int sign : {1, -1}) {
        Rat cand(sign * num, den);
        cand.canonicalize();
        if (eval_zero(cand) &&
            std::find(roots.begin(), roots.end(), cand) == roots.end())
          roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace liewild
