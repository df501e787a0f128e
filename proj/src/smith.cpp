#include "reltrace/smith.hpp"

#include <algorithm>
#include <utility>

#include "reltrace/errors.hpp"

namespace reltrace {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const mpz_class& x) { return sgn(x) == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw DomainError("matrix product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                      std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const mpz_class& x = a.at(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c.at(i, j) += x * b.at(k, j);
    }
  return c;
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  SmithForm s{IntMatrix::identity(m), a, IntMatrix::identity(n), {}};
  IntMatrix& d = s.d;
  IntMatrix& u = s.u;
  IntMatrix& v = s.v;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(d.at(i, c), d.at(j, c));
    for (std::size_t c = 0; c < m; ++c) std::swap(u.at(i, c), u.at(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m; ++r) std::swap(d.at(r, i), d.at(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  // row dst += k * row src
  auto add_row = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t c = 0; c < n; ++c) d.at(dst, c) += k * d.at(src, c);
    for (std::size_t c = 0; c < m; ++c) u.at(dst, c) += k * u.at(src, c);
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const mpz_class& k) {
    for (std::size_t r = 0; r < m; ++r) d.at(r, dst) += k * d.at(r, src);
    for (std::size_t r = 0; r < n; ++r) v.at(r, dst) += k * v.at(r, src);
  };

  std::size_t t = 0;
  for (; t < std::min(m, n); ++t) {
    std::size_t bi = m, bj = n;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (sgn(d.at(i, j)) != 0 && (bi == m || abs(d.at(i, j)) < abs(d.at(bi, bj)))) bi = i, bj = j;
    if (bi == m) break;
    swap_rows(t, bi);
    swap_cols(t, bj);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (sgn(d.at(i, t)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d.at(i, t).get_mpz_t(), d.at(t, t).get_mpz_t());
        add_row(i, t, -q);
        dirty = dirty || sgn(d.at(i, t)) != 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (sgn(d.at(t, j)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), d.at(t, j).get_mpz_t(), d.at(t, t).get_mpz_t());
        add_col(j, t, -q);
        dirty = dirty || sgn(d.at(t, j)) != 0;
      }
      if (dirty) {
        // A remainder is smaller than the pivot: move the smallest one in.
        std::size_t ri = t, rj = t;
        for (std::size_t i = t + 1; i < m; ++i)
          if (sgn(d.at(i, t)) != 0 && abs(d.at(i, t)) < abs(d.at(ri, rj))) ri = i, rj = t;
        for (std::size_t j = t + 1; j < n; ++j)
          if (sgn(d.at(t, j)) != 0 && abs(d.at(t, j)) < abs(d.at(ri, rj))) ri = t, rj = j;
        swap_rows(t, ri);
        swap_cols(t, rj);
        continue;
      }
      std::size_t fi = m;
      for (std::size_t i = t + 1; i < m && fi == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (!mpz_divisible_p(d.at(i, j).get_mpz_t(), d.at(t, t).get_mpz_t())) {
            fi = i;
            break;
          }
      if (fi == m) break;
      add_row(t, fi, 1);
    }
    if (sgn(d.at(t, t)) < 0) {
      for (std::size_t c = 0; c < n; ++c) d.at(t, c) = -d.at(t, c);
      for (std::size_t c = 0; c < m; ++c) u.at(t, c) = -u.at(t, c);
    }
  }
  for (std::size_t i = 0; i < t; ++i) s.invariants.push_back(d.at(i, i));
  return s;
}

mpz_class determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a.at(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a.at(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class x = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
        a.at(i, j) = x;
      }
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

std::string verify_smith(const IntMatrix& a, const SmithForm& s) {
  if (s.u.rows() != a.rows() || s.u.cols() != a.rows()) return "U has the wrong shape";
  if (s.v.rows() != a.cols() || s.v.cols() != a.cols()) return "V has the wrong shape";
  if (!(s.u * a * s.v == s.d)) return "U*A*V differs from D";
  if (abs(determinant(s.u)) != 1) return "U is not unimodular";
  if (abs(determinant(s.v)) != 1) return "V is not unimodular";
  for (std::size_t i = 0; i < s.d.rows(); ++i)
    for (std::size_t j = 0; j < s.d.cols(); ++j) {
      const bool diagonal_slot = i == j && i < s.rank();
      if (!diagonal_slot && sgn(s.d.at(i, j)) != 0) return "D has an entry off the leading diagonal";
      if (diagonal_slot && s.d.at(i, j) != s.invariants[i]) return "D disagrees with the invariant factors";
    }
  for (std::size_t i = 0; i < s.rank(); ++i) {
    if (sgn(s.invariants[i]) <= 0) return "invariant factor is not positive";
    if (i > 0 && !mpz_divisible_p(s.invariants[i].get_mpz_t(), s.invariants[i - 1].get_mpz_t()))
      return "invariant factors do not form a divisibility chain";
  }
  return {};
}

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t p = 2; p * p <= q; ++p)
    if (q % p == 0) return false;
  return true;
}

namespace {

struct RationalField {
  using T = mpq_class;
  T from(const mpz_class& z) const { return T(z); }
  bool zero(const T& x) const { return sgn(x) == 0; }
  T add(const T& a, const T& b) const { return a + b; }
  T sub(const T& a, const T& b) const { return a - b; }
  T mul(const T& a, const T& b) const { return a * b; }
  T div(const T& a, const T& b) const { return a / b; }
};

struct PrimeField {
  using T = std::uint64_t;
  std::uint64_t q;
  T from(const mpz_class& z) const { return mpz_fdiv_ui(z.get_mpz_t(), q); }
  bool zero(T x) const { return x == 0; }
  T add(T a, T b) const { return (a + b) % q; }
  T sub(T a, T b) const { return (a + q - b) % q; }
  T mul(T a, T b) const { return static_cast<T>((static_cast<unsigned __int128>(a) * b) % q); }
  T inv(T a) const {
    T result = 1, base = a, e = q - 2;
    while (e) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
      e >>= 1;
    }
    return result;
  }
  T div(T a, T b) const { return mul(a, inv(b)); }
};

template <class F>
using Rows = std::vector<std::vector<typename F::T>>;

template <class F>
Rows<F> load(const F& f, const IntMatrix& a) {
  Rows<F> rows(a.rows(), std::vector<typename F::T>(a.cols(), f.from(0)));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = f.from(a.at(i, j));
  return rows;
}

// Reduced row echelon form in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, Rows<F>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && f.zero(m[p][c])) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    const auto pivot = m[r][c];
    for (auto& x : m[r]) x = f.div(x, pivot);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || f.zero(m[i][c])) continue;
      const auto factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
Rows<F> kernel(const F& f, const IntMatrix& a) {
  Rows<F> m = load(f, a);
  const std::size_t n = a.cols();
  const std::vector<std::size_t> pivots = rref(f, m, n);
  std::vector<char> is_pivot(n, 0);
  for (std::size_t c : pivots) is_pivot[c] = 1;
  Rows<F> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<typename F::T> x(n, f.from(0));
    x[free] = f.from(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = f.sub(f.from(0), m[r][free]);
    basis.push_back(std::move(x));
  }
  return basis;
}

// Incrementally grown echelon basis; `insert` reports whether the vector was
// independent of everything inserted before.
template <class F>
class Span {
 public:
  explicit Span(const F& f) : f_(f) {}
  bool insert(std::vector<typename F::T> x) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const auto factor = x[pivots_[k]];
      if (f_.zero(factor)) continue;
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = f_.sub(x[j], f_.mul(factor, rows_[k][j]));
    }
    std::size_t p = 0;
    while (p < x.size() && f_.zero(x[p])) ++p;
    if (p == x.size()) return false;
    const auto pivot = x[p];
    for (auto& e : x) e = f_.div(e, pivot);
    // Keep earlier rows reduced at the new pivot.
    for (auto& row : rows_) {
      const auto factor = row[p];
      if (f_.zero(factor)) continue;
      for (std::size_t j = 0; j < row.size(); ++j) row[j] = f_.sub(row[j], f_.mul(factor, x[j]));
    }
    rows_.push_back(std::move(x));
    pivots_.push_back(p);
    return true;
  }

 private:
  F f_;
  Rows<F> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<mpz_class> to_integers(const std::vector<mpq_class>& x) {
  mpz_class scale = 1;
  for (const auto& e : x) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), e.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& e : x) {
    mpz_class v = e.get_num() * (scale / e.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content > 1)
    for (auto& v : out) v /= content;
  return out;
}

std::vector<mpz_class> to_integers(const std::vector<std::uint64_t>& x) {
  std::vector<mpz_class> out;
  for (std::uint64_t e : x) out.emplace_back(static_cast<unsigned long>(e));
  return out;
}

template <class F>
std::vector<std::vector<mpz_class>> representatives(const F& f, const IntMatrix& prev, const IntMatrix& next) {
  Span<F> span(f);
  for (std::size_t j = 0; j < prev.cols(); ++j) {
    std::vector<typename F::T> column(prev.rows(), f.from(0));
    for (std::size_t i = 0; i < prev.rows(); ++i) column[i] = f.from(prev.at(i, j));
    span.insert(std::move(column));
  }
  std::vector<std::vector<mpz_class>> out;
  for (auto& z : kernel(f, next))
    if (span.insert(z)) out.push_back(to_integers(z));
  return out;
}

void require_prime(std::uint64_t q) {
  if (!is_prime(q)) throw DomainError("modulus " + std::to_string(q) + " is not prime");
}

}  // namespace

std::size_t rational_rank(const IntMatrix& a) {
  RationalField f;
  auto m = load(f, a);
  return rref(f, m, a.cols()).size();
}

std::size_t modular_rank(const IntMatrix& a, std::uint64_t q) {
  require_prime(q);
  PrimeField f{q};
  auto m = load(f, a);
  return rref(f, m, a.cols()).size();
}

std::vector<std::vector<mpz_class>> rational_kernel(const IntMatrix& a) {
  std::vector<std::vector<mpz_class>> out;
  for (const auto& x : kernel(RationalField{}, a)) out.push_back(to_integers(x));
  return out;
}

std::vector<std::vector<mpz_class>> modular_kernel(const IntMatrix& a, std::uint64_t q) {
  require_prime(q);
  std::vector<std::vector<mpz_class>> out;
  for (const auto& x : kernel(PrimeField{q}, a)) out.push_back(to_integers(x));
  return out;
}

std::vector<std::vector<mpz_class>> cohomology_representatives(const IntMatrix& prev, const IntMatrix& next,
                                                               std::uint64_t q) {
  if (prev.rows() != next.cols()) throw DomainError("coboundaries do not compose");
  if (q == 0) return representatives(RationalField{}, prev, next);
  require_prime(q);
  return representatives(PrimeField{q}, prev, next);
}

}  // namespace reltrace
