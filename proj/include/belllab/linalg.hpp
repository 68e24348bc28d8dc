// Copyright 2026 The bell-lab Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef BELLLAB_LINALG_HPP
#define BELLLAB_LINALG_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace belllab
{

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

// Dense row-major complex matrix. Sized for the small Hilbert spaces used here
// (at most 1024 x 1024), no attempt at blocking or BLAS.
class CMatrix
{
public:
  CMatrix() = default;

  // Zero matrix.
  CMatrix(std::size_t rows, std::size_t cols);

  // Takes ownership of row-major entries; throws InvalidInput on a size mismatch
  // or a non-finite entry.
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  // CMatrix::from_rows({{1, 0}, {0, -1}})
  static CMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
  static CMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  Complex operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Complex> entries() const { return data_; }

  // Largest entry modulus; the norm used for every residual in this library.
  double max_abs() const;

  CMatrix &operator+=(const CMatrix &rhs);
  CMatrix &operator-=(const CMatrix &rhs);
  CMatrix &operator*=(Complex s);

  friend bool operator==(const CMatrix &, const CMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix &b);
CMatrix operator-(CMatrix a, const CMatrix &b);
CMatrix operator*(const CMatrix &a, const CMatrix &b);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(CMatrix a, Complex s);

// Normalized state vector.
class Ket
{
public:
  // Scales to unit norm. Throws InvalidInput for an empty, zero or non-finite vector.
  static Ket normalized(std::vector<Complex> amplitudes);
  static Ket basis(std::size_t dim, std::size_t index);

  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }
  double norm_squared() const;

private:
  explicit Ket(std::vector<Complex> amps) : amps_(std::move(amps)) {}
  std::vector<Complex> amps_;
};

// Kronecker product; row index of the result is i_a * b.rows() + i_b.
CMatrix tensor(const CMatrix &a, const CMatrix &b);
CMatrix tensor(std::span<const CMatrix> factors);

// ab - ba. Both operands square with equal dimension.
CMatrix commutator(const CMatrix &a, const CMatrix &b);

CMatrix dagger(const CMatrix &a);
Complex trace(const CMatrix &a);

// m |v>, no normalization.
std::vector<Complex> apply(const CMatrix &m, std::span<const Complex> v);

// <psi|m|psi>
Complex expectation(const Ket &psi, const CMatrix &m);

// max |m - m^dagger|
double hermitian_residual(const CMatrix &m);

// All eigenvalues of a Hermitian matrix (ascending) by cyclic complex Jacobi
// rotations. Throws InvalidInput if m is not Hermitian within 1e-10.
std::vector<double> hermitian_eigenvalues(const CMatrix &m);

// max |lambda| over the spectrum of a Hermitian matrix.
double hermitian_extremal_eigenvalue(const CMatrix &m);

}  // namespace belllab

#endif  // BELLLAB_LINALG_HPP
