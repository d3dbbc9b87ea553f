#include "ptmnc/linalg.hpp"

#include "ptmnc/errors.hpp"

namespace ptmnc {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols())
      throw InputError("from_rows: ragged row lengths");
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RationalMatrix RationalMatrix::from_columns(
    const std::vector<RationalVector>& cols) {
  if (cols.empty()) return {};
  RationalMatrix m(cols.front().size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != m.rows())
      throw InputError("from_columns: ragged column lengths");
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = cols[c][r];
  }
  return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
  RationalVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

RationalVector matvec(const RationalMatrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw InputError("matvec: dimension mismatch");
  RationalVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational acc;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) != 0) acc += m.at(r, c) * v[c];
    }
    out[r] = acc;
  }
  return out;
}

RationalMatrix matmul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("matmul: dimension mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) != 0) out.at(i, j) += aik * b.at(k, j);
      }
    }
  }
  return out;
}

Rational dot(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational acc;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0 && b[i] != 0) acc += a[i] * b[i];
  }
  return acc;
}

RrefResult rref(const RationalMatrix& m) {
  RrefResult res{m, {}};
  RationalMatrix& a = res.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t piv = r;
    while (piv < a.rows() && a.at(piv, c) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < a.cols(); ++j)
        std::swap(a.at(piv, j), a.at(r, j));
    }
    Rational inv = 1 / a.at(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c) == 0) continue;
      Rational f = a.at(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        if (a.at(r, j) != 0) a.at(i, j) -= f * a.at(r, j);
      }
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivot_cols.size(); }

RationalVector integerize(const RationalVector& v) {
  mpz_class lcm_den(1);
  for (const Rational& x : v) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(),
            x.get_den().get_mpz_t());
  }
  std::vector<mpz_class> nums(v.size());
  mpz_class g(0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    nums[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  if (g == 0) return RationalVector(v.size());
  int lead = 0;
  for (const mpz_class& n : nums) {
    if (n != 0) {
      lead = sgn(n);
      break;
    }
  }
  if (lead < 0) g = -g;
  RationalVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rational(nums[i] / g);
  return out;
}

std::vector<RationalVector> kernel_basis(const RationalMatrix& m) {
  RrefResult res = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : res.pivot_cols) is_pivot[c] = true;
  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < res.pivot_cols.size(); ++i) {
      v[res.pivot_cols[i]] = -res.reduced.at(i, f);
    }
    basis.push_back(integerize(v));
  }
  return basis;
}

std::optional<RationalVector> solve_linear(const RationalMatrix& m,
                                           const RationalVector& b) {
  if (m.rows() != b.size()) throw InputError("solve_linear: m.rows != b.dim");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = b[r];
  }
  RrefResult res = rref(aug);
  for (std::size_t c : res.pivot_cols) {
    if (c == m.cols()) return std::nullopt;  // pivot in the rhs column
  }
  RationalVector x(m.cols());
  for (std::size_t i = 0; i < res.pivot_cols.size(); ++i) {
    x[res.pivot_cols[i]] = res.reduced.at(i, m.cols());
  }
  return x;
}

}  // namespace ptmnc
