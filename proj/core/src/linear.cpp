#include "twistcoh/linear.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "twistcoh/errors.hpp"

namespace twistcoh {

void Diagnostics::warn(std::string message) {
  if (std::find(warnings.begin(), warnings.end(), message) == warnings.end())
    warnings.push_back(std::move(message));
}

Matrix::Matrix(std::size_t rows, std::size_t cols, const NumericMode& mode)
    : rows_(rows), cols_(cols), mode_(mode), entries_(rows * cols, Scalar::zero(mode)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, const NumericMode& mode) {
  Matrix m(rows.size(), cols, mode);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw InvalidArgument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_integers(const IntMatrix& n, const NumericMode& mode) {
  Matrix m(n.rows, n.cols, mode);
  for (std::size_t i = 0; i < n.rows; ++i)
    for (std::size_t j = 0; j < n.cols; ++j) m.set(i, j, Scalar::from_rational(n(i, j), mode));
  return m;
}

void Matrix::set(std::size_t i, std::size_t j, Scalar value) {
  if (!(value.mode() == mode_))
    throw ModeMismatch("matrix is " + mode_.describe() + ", entry is " + value.mode().describe());
  entries_[i * cols_ + j] = std::move(value);
}

Vector multiply(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols()) throw InvalidArgument("dimension mismatch in matrix-vector product");
  Vector out(m.rows(), Scalar::zero(m.mode()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Scalar tmp = m(a, j);
    m.set(a, j, m(b, j));
    m.set(b, j, std::move(tmp));
  }
}

Echelon bareiss(Matrix m) {
  std::vector<std::size_t> pivots;
  Scalar previous = Scalar::one(m.mode());
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, r, p);
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar lead = m(i, c);
      for (std::size_t j = c + 1; j < m.cols(); ++j)
        m.set(i, j, (pivot * m(i, j) - lead * m(r, j)) / previous);
      m.set(i, c, Scalar::zero(m.mode()));
    }
    previous = pivot;
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

Echelon partial_pivoting(Matrix m, Diagnostics* diag) {
  const double eps = m.mode().tolerance;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = r;
    double best_mag = 0.0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      double mag = std::abs(m(i, c).approx_value());
      if (mag > best_mag) {
        best_mag = mag;
        best = i;
      }
    }
    if (best_mag <= eps) {
      for (std::size_t i = r; i < m.rows(); ++i) m.set(i, c, Scalar::zero(m.mode()));
      continue;
    }
    if (best_mag <= 1000.0 * eps && diag != nullptr) {
      std::ostringstream os;
      os << "ill-conditioned elimination: pivot magnitude " << best_mag << " within 1000*eps of tolerance";
      diag->warn(os.str());
    }
    swap_rows(m, r, best);
    const Scalar pivot = m(r, c);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Scalar factor = m(i, c) / pivot;
      for (std::size_t j = c + 1; j < m.cols(); ++j) m.set(i, j, m(i, j) - factor * m(r, j));
      m.set(i, c, Scalar::zero(m.mode()));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

}  // namespace

Echelon row_echelon(const Matrix& m, Diagnostics* diag) {
  if (m.mode().exact()) return bareiss(m);
  return partial_pivoting(m, diag);
}

std::size_t rank(const Matrix& m, Diagnostics* diag) { return row_echelon(m, diag).rank(); }

std::vector<Vector> kernel_basis(const Matrix& m, Diagnostics* diag) {
  const Echelon e = row_echelon(m, diag);
  const NumericMode& mode = m.mode();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivot_columns) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols(), Scalar::zero(mode));
    x[free] = Scalar::one(mode);
    for (std::size_t r = e.rank(); r-- > 0;) {
      const std::size_t p = e.pivot_columns[r];
      Scalar sum = Scalar::zero(mode);
      for (std::size_t j = p + 1; j < m.cols(); ++j) sum += e.form(r, j) * x[j];
      x[p] = -sum / e.form(r, p);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t rational_rank(const IntMatrix& m) { return rank(Matrix::from_integers(m, NumericMode::rational())); }

// ---------------------------------------------------------------------------
// Characteristic polynomials and real roots

IntPolynomial characteristic_polynomial(const IntMatrix& n) {
  if (!n.square()) throw InvalidArgument("characteristic polynomial of a non-square matrix");
  const std::size_t k = n.rows;
  std::vector<mpz_class> a(n.entries.begin(), n.entries.end());
  std::vector<mpz_class> acc(k * k, 0);  // M_i
  IntPolynomial coeffs(k + 1, 0);
  coeffs[k] = 1;
  for (std::size_t step = 1; step <= k; ++step) {
    // M_step = A * M_{step-1} + c_{k-step+1} I
    std::vector<mpz_class> next(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        mpz_class s = 0;
        for (std::size_t l = 0; l < k; ++l) s += a[i * k + l] * acc[l * k + j];
        next[i * k + j] = s;
      }
    for (std::size_t i = 0; i < k; ++i) next[i * k + i] += coeffs[k - step + 1];
    // c_{k-step} = -tr(A M_step) / step, an exact division
    mpz_class trace = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t l = 0; l < k; ++l) trace += a[i * k + l] * next[l * k + i];
    coeffs[k - step] = -trace / static_cast<unsigned long>(step);
    acc = std::move(next);
  }
  return coeffs;
}

namespace {

using QPoly = std::vector<mpq_class>;  // low degree first, no trailing zeros

void trim(QPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

QPoly derivative(const QPoly& p) {
  QPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

// Quotient and remainder of p / q, q non-zero.
std::pair<QPoly, QPoly> divmod(QPoly p, const QPoly& q) {
  trim(p);
  QPoly quot(p.size() >= q.size() ? p.size() - q.size() + 1 : 0, 0);
  while (p.size() >= q.size() && !p.empty()) {
    const std::size_t shift = p.size() - q.size();
    const mpq_class f = p.back() / q.back();
    quot[shift] = f;
    for (std::size_t i = 0; i < q.size(); ++i) p[shift + i] -= f * q[i];
    trim(p);
  }
  return {quot, p};
}

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    QPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

mpq_class evaluate(const QPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

class SturmChain {
 public:
  explicit SturmChain(const QPoly& p) {
    chain_.push_back(p);
    chain_.push_back(derivative(p));
    while (!chain_.back().empty()) {
      QPoly r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
      for (auto& c : r) c = -c;
      if (r.empty()) break;
      chain_.push_back(std::move(r));
    }
    if (chain_.back().empty()) chain_.pop_back();
  }

  int sign_changes(const mpq_class& x) const {
    int changes = 0;
    int last = 0;
    for (const QPoly& p : chain_) {
      int s = sgn(evaluate(p, x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  // Number of distinct roots in (lo, hi].
  int count(const mpq_class& lo, const mpq_class& hi) const { return sign_changes(lo) - sign_changes(hi); }

  const QPoly& base() const { return chain_.front(); }

 private:
  std::vector<QPoly> chain_;
};

std::vector<Scalar> small_exact_eigenvalues(const IntMatrix& n) {
  std::vector<Scalar> out;
  if (n.rows == 1) {
    if (n(0, 0) > 0) out.push_back(Scalar::rational(n(0, 0)));
    return out;
  }
  const mpz_class tr = mpz_class(n(0, 0)) + n(1, 1);
  const mpz_class det = mpz_class(n(0, 0)) * n(1, 1) - mpz_class(n(0, 1)) * n(1, 0);
  const mpz_class disc = tr * tr - 4 * det;
  if (disc < 0) return out;
  if (mpz_perfect_square_p(disc.get_mpz_t())) {
    mpz_class root = sqrt(disc);
    out.push_back(Scalar::rational(mpq_class(tr - root, mpz_class(2))));
    if (root != 0) out.push_back(Scalar::rational(mpq_class(tr + root, mpz_class(2))));
  } else {
    // disc = f^2 d with d square-free
    mpz_class f = 1;
    mpz_class d = disc;
    for (mpz_class p = 2; p * p <= d; ++p) {
      while (d % (p * p) == 0) {
        d /= p * p;
        f *= p;
      }
    }
    if (!d.fits_slong_p()) throw SizeLimitExceeded("discriminant radicand too large");
    const long radicand = d.get_si();
    out.push_back(Scalar::quadratic(mpq_class(tr, mpz_class(2)), mpq_class(-f, mpz_class(2)), radicand));
    out.push_back(Scalar::quadratic(mpq_class(tr, mpz_class(2)), mpq_class(f, mpz_class(2)), radicand));
  }
  std::erase_if(out, [](const Scalar& s) { return !s.is_positive(); });
  return out;
}

}  // namespace

std::vector<Scalar> positive_real_eigenvalues(const IntMatrix& n, double eps) {
  if (!n.square()) throw InvalidArgument("eigenvalues of a non-square matrix");
  if (n.rows > kMaxEigenSize)
    throw SizeLimitExceeded("eigenvalue extraction is limited to " + std::to_string(kMaxEigenSize) + "x" +
                            std::to_string(kMaxEigenSize) + " matrices");
  if (n.rows == 0) return {};
  if (n.rows <= 2) return small_exact_eigenvalues(n);

  const IntPolynomial charpoly = characteristic_polynomial(n);
  QPoly p(charpoly.begin(), charpoly.end());
  QPoly g = gcd(p, derivative(p));
  QPoly square_free = divmod(p, g).first;
  trim(square_free);
  const SturmChain sturm(square_free);

  // Cauchy bound on root magnitude.
  mpq_class bound = 0;
  for (std::size_t i = 0; i + 1 < square_free.size(); ++i) {
    mpq_class r = ::abs(square_free[i] / square_free.back());
    if (r > bound) bound = r;
  }
  bound += 1;

  const mpq_class width(mpz_class(1), mpz_class(1) << 64);
  mpq_class eps_q(eps);
  if (eps_q < width) eps_q = width;

  std::vector<Scalar> roots;
  std::function<void(const mpq_class&, const mpq_class&)> isolate = [&](const mpq_class& lo, const mpq_class& hi) {
    const int c = sturm.count(lo, hi);
    if (c == 0) return;
    if (c > 1) {
      mpq_class mid = (lo + hi) / 2;
      isolate(lo, mid);
      isolate(mid, hi);
      return;
    }
    mpq_class a = lo;
    mpq_class b = hi;
    while (b - a >= eps_q) {
      mpq_class mid = (a + b) / 2;
      if (sgn(evaluate(square_free, mid)) == 0) {
        a = b = mid;
        break;
      }
      if (sturm.count(a, mid) == 1)
        b = mid;
      else
        a = mid;
    }
    mpq_class mid = (a + b) / 2;
    roots.push_back(Scalar::approx(mid.get_d(), eps));
  };
  isolate(0, bound);
  return roots;
}

}  // namespace twistcoh
