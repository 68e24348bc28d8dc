// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#include "belllab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "belllab/error.hpp"

namespace belllab
{

namespace
{

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_same_shape(const CMatrix &a, const CMatrix &b, const char *what)
{
  if (a.rows() != b.rows() || a.cols() != b.cols())
  {
    throw InvalidInput(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) +
                       "x" + std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                       "x" + std::to_string(b.cols()));
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t rows, std::size_t cols)
  : rows_(rows), cols_(cols), data_(rows * cols, Complex{})
{
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
  : rows_(rows), cols_(cols), data_(std::move(entries))
{
  if (data_.size() != rows_ * cols_)
  {
    throw InvalidInput("CMatrix: expected " + std::to_string(rows_ * cols_) + " entries, got " +
                       std::to_string(data_.size()));
  }
  if (!std::all_of(data_.begin(), data_.end(), finite))
  {
    throw InvalidInput("CMatrix: non-finite entry");
  }
}

CMatrix CMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows)
{
  const std::size_t nr = rows.size();
  const std::size_t nc = nr ? rows.begin()->size() : 0;
  std::vector<Complex> entries;
  entries.reserve(nr * nc);
  for (const auto &row : rows)
  {
    if (row.size() != nc)
    {
      throw InvalidInput("CMatrix::from_rows: ragged rows");
    }
    entries.insert(entries.end(), row.begin(), row.end());
  }
  return CMatrix(nr, nc, std::move(entries));
}

CMatrix CMatrix::identity(std::size_t n)
{
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
  {
    m(i, i) = 1.0;
  }
  return m;
}

double CMatrix::max_abs() const
{
  double best = 0.0;
  for (const auto &z : data_)
  {
    best = std::max(best, std::abs(z));
  }
  return best;
}

CMatrix &CMatrix::operator+=(const CMatrix &rhs)
{
  require_same_shape(*this, rhs, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k)
  {
    data_[k] += rhs.data_[k];
  }
  return *this;
}

CMatrix &CMatrix::operator-=(const CMatrix &rhs)
{
  require_same_shape(*this, rhs, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k)
  {
    data_[k] -= rhs.data_[k];
  }
  return *this;
}

CMatrix &CMatrix::operator*=(Complex s)
{
  for (auto &z : data_)
  {
    z *= s;
  }
  return *this;
}

CMatrix operator+(CMatrix a, const CMatrix &b) { return a += b; }
CMatrix operator-(CMatrix a, const CMatrix &b) { return a -= b; }
CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
CMatrix operator*(CMatrix a, Complex s) { return a *= s; }

CMatrix operator*(const CMatrix &a, const CMatrix &b)
{
  if (a.cols() != b.rows())
  {
    throw InvalidInput("operator*: inner dimensions differ (" + std::to_string(a.cols()) +
                       " vs " + std::to_string(b.rows()) + ")");
  }
  CMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    for (std::size_t k = 0; k < a.cols(); ++k)
    {
      const Complex aik = a(i, k);
      if (aik == Complex{})
      {
        continue;
      }
      for (std::size_t j = 0; j < b.cols(); ++j)
      {
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Ket Ket::normalized(std::vector<Complex> amplitudes)
{
  if (amplitudes.empty())
  {
    throw InvalidInput("Ket: empty amplitude vector");
  }
  if (!std::all_of(amplitudes.begin(), amplitudes.end(), finite))
  {
    throw InvalidInput("Ket: non-finite amplitude");
  }
  double n2 = 0.0;
  for (const auto &z : amplitudes)
  {
    n2 += std::norm(z);
  }
  if (!(n2 > 0.0))
  {
    throw InvalidInput("Ket: zero vector cannot be normalized");
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto &z : amplitudes)
  {
    z *= inv;
  }
  return Ket(std::move(amplitudes));
}

Ket Ket::basis(std::size_t dim, std::size_t index)
{
  if (index >= dim)
  {
    throw InvalidInput("Ket::basis: index " + std::to_string(index) + " out of range for dim " +
                       std::to_string(dim));
  }
  std::vector<Complex> amps(dim, Complex{});
  amps[index] = 1.0;
  return Ket(std::move(amps));
}

double Ket::norm_squared() const
{
  double n2 = 0.0;
  for (const auto &z : amps_)
  {
    n2 += std::norm(z);
  }
  return n2;
}

CMatrix tensor(const CMatrix &a, const CMatrix &b)
{
  CMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ia = 0; ia < a.rows(); ++ia)
  {
    for (std::size_t ja = 0; ja < a.cols(); ++ja)
    {
      const Complex s = a(ia, ja);
      if (s == Complex{})
      {
        continue;
      }
      for (std::size_t ib = 0; ib < b.rows(); ++ib)
      {
        for (std::size_t jb = 0; jb < b.cols(); ++jb)
        {
          c(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
      }
    }
  }
  return c;
}

CMatrix tensor(std::span<const CMatrix> factors)
{
  if (factors.empty())
  {
    return CMatrix::identity(1);
  }
  CMatrix out = factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k)
  {
    out = tensor(out, factors[k]);
  }
  return out;
}

CMatrix commutator(const CMatrix &a, const CMatrix &b)
{
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows())
  {
    throw InvalidInput("commutator: operands must be square with equal dimension");
  }
  return a * b - b * a;
}

CMatrix dagger(const CMatrix &a)
{
  CMatrix d(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    for (std::size_t j = 0; j < a.cols(); ++j)
    {
      d(j, i) = std::conj(a(i, j));
    }
  }
  return d;
}

Complex trace(const CMatrix &a)
{
  if (!a.is_square())
  {
    throw InvalidInput("trace: matrix is not square");
  }
  Complex t{};
  for (std::size_t i = 0; i < a.rows(); ++i)
  {
    t += a(i, i);
  }
  return t;
}

std::vector<Complex> apply(const CMatrix &m, std::span<const Complex> v)
{
  if (m.cols() != v.size())
  {
    throw InvalidInput("apply: matrix has " + std::to_string(m.cols()) +
                       " columns, vector has dimension " + std::to_string(v.size()));
  }
  std::vector<Complex> out(m.rows(), Complex{});
  for (std::size_t i = 0; i < m.rows(); ++i)
  {
    Complex acc{};
    for (std::size_t j = 0; j < m.cols(); ++j)
    {
      acc += m(i, j) * v[j];
    }
    out[i] = acc;
  }
  return out;
}

Complex expectation(const Ket &psi, const CMatrix &m)
{
  if (!m.is_square() || m.rows() != psi.dim())
  {
    throw InvalidInput("expectation: operator is " + std::to_string(m.rows()) + "x" +
                       std::to_string(m.cols()) + ", state has dimension " +
                       std::to_string(psi.dim()));
  }
  const auto mv = apply(m, psi.amplitudes());
  Complex acc{};
  for (std::size_t i = 0; i < mv.size(); ++i)
  {
    acc += std::conj(psi[i]) * mv[i];
  }
  return acc;
}

double hermitian_residual(const CMatrix &m)
{
  if (!m.is_square())
  {
    throw InvalidInput("hermitian_residual: matrix is not square");
  }
  double r = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
  {
    for (std::size_t j = i; j < m.cols(); ++j)
    {
      r = std::max(r, std::abs(m(i, j) - std::conj(m(j, i))));
    }
  }
  return r;
}

std::vector<double> hermitian_eigenvalues(const CMatrix &m)
{
  if (!m.is_square())
  {
    throw InvalidInput("hermitian_eigenvalues: matrix is not square");
  }
  if (hermitian_residual(m) > 1e-10)
  {
    throw InvalidInput("hermitian_eigenvalues: matrix is not Hermitian (residual " +
                       std::to_string(hermitian_residual(m)) + ")");
  }
  const std::size_t n = m.rows();
  CMatrix a = m;

  double scale = 0.0;
  for (const auto &z : a.entries())
  {
    scale += std::norm(z);
  }
  scale = std::sqrt(scale);
  const double threshold = 1e-12 * std::max(1.0, scale);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
    {
      for (std::size_t j = i + 1; j < n; ++j)
      {
        s += std::norm(a(i, j));
      }
    }
    return std::sqrt(2.0 * s);
  };

  for (int sweep = 0; sweep < 100 && off_norm() > threshold; ++sweep)
  {
    for (std::size_t p = 0; p + 1 < n; ++p)
    {
      for (std::size_t q = p + 1; q < n; ++q)
      {
        const Complex g = a(p, q);
        const double mag = std::abs(g);
        if (mag < 1e-300)
        {
          continue;
        }
        // Phase q so that a(p, q) becomes the real number |g|.
        const Complex phase = g / mag;
        for (std::size_t k = 0; k < n; ++k)
        {
          a(k, q) *= std::conj(phase);
        }
        for (std::size_t k = 0; k < n; ++k)
        {
          a(q, k) *= phase;
        }
        a(p, q) = mag;
        a(q, p) = mag;

        // Real Jacobi rotation annihilating a(p, q).
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k)
        {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k)
        {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  if (off_norm() > threshold)
  {
    throw NumericalFailure("hermitian_eigenvalues: Jacobi sweeps did not converge");
  }

  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    eig[i] = a(i, i).real();
  }
  std::sort(eig.begin(), eig.end());
  return eig;
}

double hermitian_extremal_eigenvalue(const CMatrix &m)
{
  const auto eig = hermitian_eigenvalues(m);
  if (eig.empty())
  {
    return 0.0;
  }
  return std::max(std::abs(eig.front()), std::abs(eig.back()));
}

}  // namespace belllab
