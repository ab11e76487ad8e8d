#include "gabortile/lattice.hpp"

#include <utility>

#include "gabortile/error.hpp"

namespace gabortile {

namespace {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix to_int_matrix(const RatMatrix& m) {
  IntMatrix a(m.rows(), std::vector<Int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_integer(m(r, c)))
        throw Error(ErrorKind::NonInteger, "entry " + format_rat(m(r, c)) + " is not an integer");
      a[r][c] = m(r, c).get_num();
    }
  return a;
}

RatMatrix to_rat_matrix(const IntMatrix& a, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rat(a[r][c]);
  return m;
}

// col_i <- x col_i + y col_j ; col_j <- u col_i + v col_j  (x v - y u = 1)
void combine_columns(IntMatrix& a, std::size_t i, std::size_t j, const Int& x, const Int& y,
                     const Int& u, const Int& v) {
  for (auto& row : a) {
    Int ci = row[i], cj = row[j];
    row[i] = x * ci + y * cj;
    row[j] = u * ci + v * cj;
  }
}

void axpy_column(IntMatrix& a, std::size_t dst, std::size_t src, const Int& factor) {
  for (auto& row : a) row[dst] -= factor * row[src];
}

void negate_column(IntMatrix& a, std::size_t c) {
  for (auto& row : a) row[c] = -row[c];
}

Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

RatLattice::RatLattice(RatMatrix generator) : generator_(std::move(generator)) {
  if (!generator_.square()) throw Error(ErrorKind::NotSquare, "lattice generator must be square");
  if (generator_.determinant() == 0)
    throw Error(ErrorKind::SingularMatrix, "lattice generator is singular");
}

bool RatLattice::contains(const RatVec& x) const {
  RatVec k = generator_.inverse() * x;
  for (const auto& c : k)
    if (!is_integer(c)) return false;
  return true;
}

HermiteResult hnf_columns(const RatMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  if (rows > cols) throw Error(ErrorKind::SingularMatrix, "more rows than columns");
  IntMatrix a = to_int_matrix(m);
  IntMatrix u(cols, std::vector<Int>(cols, Int(0)));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;

  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = i + 1; j < cols; ++j) {
      if (a[i][j] == 0) continue;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a[i][i].get_mpz_t(),
                 a[i][j].get_mpz_t());
      Int p = a[i][i] / g, q = a[i][j] / g;
      // [[x, -q], [y, p]] has determinant x p + y q = 1.
      combine_columns(a, i, j, x, y, -q, p);
      combine_columns(u, i, j, x, y, -q, p);
    }
    if (a[i][i] == 0) throw Error(ErrorKind::SingularMatrix, "matrix does not have full row rank");
    if (a[i][i] < 0) {
      negate_column(a, i);
      negate_column(u, i);
    }
  }
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Int q = floor_div(a[i][j], a[i][i]);
      if (q == 0) continue;
      axpy_column(a, j, i, q);
      axpy_column(u, j, i, q);
    }

  HermiteResult res;
  res.H = RatMatrix(rows, rows);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < rows; ++c) res.H(r, c) = Rat(a[r][c]);
  res.P = to_rat_matrix(u, cols, cols);
  return res;
}

HermiteResult hnf_lower(const RatMatrix& m) {
  if (!m.square()) throw Error(ErrorKind::NotSquare, "hnf_lower needs a square matrix");
  if (!m.is_integer()) throw Error(ErrorKind::NonInteger, "hnf_lower needs integer entries");
  if (m.determinant() == 0) throw Error(ErrorKind::SingularMatrix, "hnf_lower of singular matrix");
  return hnf_columns(m);
}

HermiteResult canonical_generator(const RatMatrix& generator) {
  const Int q = generator.common_denominator();
  HermiteResult h = hnf_lower(generator.scaled(Rat(q)));
  h.H = h.H.scaled(Rat(1) / Rat(q));
  return h;
}

RatLattice canonicalize(const RatLattice& lattice) {
  return RatLattice(canonical_generator(lattice.generator()).H);
}

bool lattice_equal(const RatLattice& a, const RatLattice& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimMismatch, "lattices of different dimension");
  RatMatrix t = a.generator().inverse() * b.generator();
  if (!t.is_integer()) return false;
  Rat det = t.determinant();
  return det == 1 || det == -1;
}

RatLattice dual(const RatLattice& lattice) {
  return RatLattice(lattice.generator().inverse_transpose());
}

RatLattice adjoint(const RatLattice& lattice) {
  const std::size_t n = lattice.dim();
  if (n % 2 != 0) throw Error(ErrorKind::OddDimension, "adjoint needs an even dimension");
  const std::size_t d = n / 2;
  RatMatrix zero(d, d), id = RatMatrix::identity(d);
  // J^{-1} = [[O, I], [-I, O]]
  RatMatrix j_inv = RatMatrix::blocks(zero, id, -id, zero);
  return RatLattice(j_inv * lattice.generator().inverse_transpose());
}

Rat density(const RatLattice& lattice) {
  return Rat(1) / abs(lattice.generator().determinant());
}

RatLattice kernel_lattice(const RatMatrix& d) {
  if (!d.square()) throw Error(ErrorKind::NotSquare, "kernel_lattice needs a square matrix");
  const std::size_t n = d.rows();
  const Int q = d.common_denominator();
  // k is admissible iff (qD) k + q y = 0 for some integer y.
  RatMatrix stacked(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) stacked(r, c) = d(r, c) * q;
    stacked(r, n + r) = Rat(q);
  }
  HermiteResult h = hnf_columns(stacked);
  RatMatrix kernel = h.P.block(0, n, n, n);
  return RatLattice(hnf_lower(kernel).H);
}

IntVec reduce_into_hermite_box(const IntVec& v, const RatMatrix& h) {
  IntVec out = v;
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i) {
    const long long hi = to_ll(h(i, i).get_num());
    long long q = out[i] / hi;
    if (out[i] % hi < 0) --q;
    if (q == 0) continue;
    for (std::size_t r = i; r < n; ++r) out[r] -= q * to_ll(h(r, i).get_num());
  }
  return out;
}

std::vector<IntVec> coset_reps(const RatMatrix& m) {
  RatMatrix h = hnf_lower(m).H;
  const std::size_t n = h.rows();
  IntVec bounds(n);
  for (std::size_t i = 0; i < n; ++i) bounds[i] = to_ll(h(i, i).get_num());
  std::vector<IntVec> reps;
  IntVec cur(n, 0);
  // Odometer with the last coordinate fastest gives lexicographic order.
  while (true) {
    reps.push_back(cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < bounds[i]) break;
      cur[i] = 0;
      if (i == 0) return reps;
    }
    if (n == 0) return reps;
  }
}

UpperToLower ut_to_lt(const RatMatrix& d) {
  if (!d.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "ut_to_lt needs a symmetric matrix");
  const std::size_t n = d.rows();
  UpperToLower out;
  out.E = kernel_lattice(d).generator();
  const RatMatrix e_inv_t = out.E.inverse_transpose();
  const std::vector<IntVec> reps = coset_reps(out.E);

  out.X = RatMatrix(n, n);
  out.Z = RatMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const RatVec target = e_inv_t.column(i);
    bool found = false;
    for (const auto& gamma : reps) {
      RatVec z = sub(target, mul_int(d, gamma));
      bool integral = true;
      for (const auto& c : z)
        if (!is_integer(c)) {
          integral = false;
          break;
        }
      if (!integral) continue;
      for (std::size_t r = 0; r < n; ++r) {
        out.X(r, i) = static_cast<long>(gamma[r]);
        out.Z(r, i) = z[r];
      }
      found = true;
      break;
    }
    if (!found)
      throw Error(ErrorKind::InvariantViolation,
                  "residue map E^t D is not onto Z^d / E^t Z^d (complete_residue_system)");
  }
  out.P = RatMatrix::blocks(out.Z, -(d * out.E), out.X, out.E);
  return out;
}

std::optional<DiophantineSolution> solve_integer_system(const RatMatrix& a, const RatVec& b) {
  const std::size_t k = a.rows(), n = a.cols();
  if (b.size() != k) throw Error(ErrorKind::DimMismatch, "rhs length");
  DiophantineSolution sol;
  if (k == 0) {
    sol.particular = IntVec(n, 0);
    sol.kernel = RatMatrix::identity(n);
    return sol;
  }
  Int q = a.common_denominator();
  q = lcm(q, common_denominator(b));
  HermiteResult h = hnf_columns(a.scaled(Rat(q)));
  std::vector<Int> y(k);
  for (std::size_t i = 0; i < k; ++i) {
    Rat rhs = b[i] * q;
    for (std::size_t j = 0; j < i; ++j) rhs -= h.H(i, j) * Rat(y[j]);
    rhs /= h.H(i, i);
    if (!is_integer(rhs)) return std::nullopt;
    y[i] = rhs.get_num();
  }
  sol.particular = IntVec(n, 0);
  for (std::size_t r = 0; r < n; ++r) {
    Rat s = 0;
    for (std::size_t j = 0; j < k; ++j) s += h.P(r, j) * Rat(y[j]);
    sol.particular[r] = to_ll(s.get_num());
  }
  sol.kernel = h.P.block(0, k, n, n - k);
  return sol;
}

std::optional<RatVec> solve_rational_system(const RatMatrix& a, const RatVec& b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  RatMatrix m(rows, cols + 1);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = a(r, c);
    m(r, cols) = b[r];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t pr = 0;
  for (std::size_t c = 0; c < cols && pr < rows; ++c) {
    std::size_t piv = pr;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    for (std::size_t cc = 0; cc <= cols; ++cc) std::swap(m(piv, cc), m(pr, cc));
    Rat p = m(pr, c);
    for (std::size_t cc = 0; cc <= cols; ++cc) m(pr, cc) /= p;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || m(r, c) == 0) continue;
      Rat f = m(r, c);
      for (std::size_t cc = 0; cc <= cols; ++cc) m(r, cc) -= f * m(pr, cc);
    }
    pivot_cols.push_back(c);
    ++pr;
  }
  for (std::size_t r = pr; r < rows; ++r)
    if (m(r, cols) != 0) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = m(i, cols);
  return x;
}

}  // namespace gabortile
