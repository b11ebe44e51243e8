#pragma once

// Exact integer/rational arithmetic and integer matrix normal forms.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace ipgap {

using Int = mpz_class;
/// mpq_class keeps itself canonical (lowest terms, positive denominator) as
/// long as it is built through canonicalizing constructors; make_rat and
/// parse_rat always canonicalize.
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

Rat make_rat(const Int& num, const Int& den);
Rat parse_rat(std::string_view text);
/// "p/q" in lowest terms, integers without "/1".
std::string to_string(const Rat& r);
std::string to_string(const Int& i);
/// Decimal rendering with `digits` digits after the point (truncated toward zero).
std::string to_decimal(const Rat& r, int digits = 10);

Int floor(const Rat& r);
Int ceil(const Rat& r);
Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

Rat dot(const RatVec& a, const RatVec& b);
RatVec to_rat(const IntVec& v);
bool is_integral(const RatVec& v);

/// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVec row(std::size_t r) const;
  IntVec col(std::size_t c) const;
  IntMatrix transpose() const;
  IntVec apply(const IntVec& v) const;  // this * v

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  // row-style HNF
  IntMatrix u;  // unimodular, u * m == h
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row of h
};

/// Row-style Hermite normal form: nonzero rows first, pivots strictly
/// increasing and positive, entries above a pivot reduced into [0, pivot).
HermiteForm hermite_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
/// Bareiss fraction-free determinant of a square matrix.
Int determinant(const IntMatrix& m);
/// Largest |minor| of size rank(m), taken over a fixed row basis of m.
Int max_maximal_minor(const IntMatrix& m);

/// A lattice in Z^n, given by the columns of an n x m integer matrix.
struct LatticeBasis {
  IntMatrix basis;

  std::size_t ambient_dim() const { return basis.rows(); }
  std::size_t rank() const { return basis.cols(); }
  IntVec generator(std::size_t j) const { return basis.col(j); }
  /// Row i of the basis matrix (the vector b_i of coefficients for x_i).
  IntVec coordinate_row(std::size_t i) const { return basis.row(i); }
};

/// Saturated Z-basis of ker(a) ∩ Z^n, canonicalized by the HNF of its
/// transpose so that fixtures are deterministic.
LatticeBasis kernel_lattice(const IntMatrix& a);

/// Integer vectors spanning the orthogonal complement of the lattice's real
/// span, one per row.
IntMatrix orthogonal_complement(const LatticeBasis& l);

/// Integer coefficients t with basis * t == v, if v lies in the lattice.
bool lattice_contains(const LatticeBasis& l, const IntVec& v, IntVec* coeffs = nullptr);

/// Index [Z^n : L] for a full-rank lattice (|det|); 0 when rank < n.
Int lattice_index(const LatticeBasis& l);

}  // namespace ipgap
