#pragma once

// Exact integer matrices: Smith normal form with unimodular transforms, and
// ranks and kernels over the rationals and over prime fields.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace reltrace {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  mpz_class& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  bool is_zero() const;

  /// Throws DomainError on mismatched inner dimensions.
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

/// U·A·V = D with U, V unimodular and D diagonal with positive diagonal
/// entries d₁ | d₂ | … | d_r followed by zeros.
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;
  std::vector<mpz_class> invariants;  // d₁ … d_r
  std::size_t rank() const noexcept { return invariants.size(); }
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Fraction-free (Bareiss) determinant. Throws DomainError if not square.
mpz_class determinant(const IntMatrix& m);

/// Checks every property of a Smith form against `a`; returns an empty
/// string on success, otherwise the first failed property.
std::string verify_smith(const IntMatrix& a, const SmithForm& s);

std::size_t rational_rank(const IntMatrix& a);
/// `q` must be prime.
std::size_t modular_rank(const IntMatrix& a, std::uint64_t q);

/// A basis of {x | a·x = 0} over ℚ, each vector scaled to coprime integers.
std::vector<std::vector<mpz_class>> rational_kernel(const IntMatrix& a);
/// A basis of {x | a·x = 0} over 𝔽_q, entries in [0, q).
std::vector<std::vector<mpz_class>> modular_kernel(const IntMatrix& a, std::uint64_t q);

/// Vectors of ker(next) whose classes form a basis of ker(next)/im(prev),
/// over ℚ (q = 0) or 𝔽_q. `prev` may have zero columns; `next` may have zero
/// rows. Rational vectors are scaled to coprime integers.
std::vector<std::vector<mpz_class>> cohomology_representatives(const IntMatrix& prev, const IntMatrix& next,
                                                               std::uint64_t q = 0);

bool is_prime(std::uint64_t q);

}  // namespace reltrace
