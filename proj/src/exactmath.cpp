#include "ipgap/exactmath.hpp"

#include "ipgap/errors.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <utility>

namespace ipgap {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw BadParameter("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(std::string_view text) {
  auto trimmed = text;
  while (!trimmed.empty() && (trimmed.front() == ' ' || trimmed.front() == '\t')) trimmed.remove_prefix(1);
  while (!trimmed.empty() && (trimmed.back() == ' ' || trimmed.back() == '\t')) trimmed.remove_suffix(1);
  auto valid_int = [](std::string_view s, bool allow_sign) {
    if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
  };
  auto slash = trimmed.find('/');
  std::string_view num_text = trimmed.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : trimmed.substr(slash + 1);
  if (!valid_int(num_text, true) || !valid_int(den_text, false)) {
    throw BadParameter("not a rational number: '" + std::string(text) + "'");
  }
  std::string num_str(num_text);
  if (num_str.front() == '+') num_str.erase(0, 1);
  return make_rat(Int(num_str), Int(std::string(den_text)));
}

std::string to_string(const Rat& r) { return r.get_str(); }
std::string to_string(const Int& i) { return i.get_str(); }

std::string to_decimal(const Rat& r, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rat mag = abs(r);
  Int whole = floor(mag);
  Int frac = floor((mag - whole) * scale);
  std::string frac_str = frac.get_str();
  frac_str.insert(0, static_cast<std::size_t>(digits) - frac_str.size(), '0');
  std::string out = (r < 0 ? "-" : "") + whole.get_str();
  if (digits > 0) out += "." + frac_str;
  return out;
}

Int floor(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

Rat dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec to_rat(const IntVec& v) {
  RatVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

// ---------------------------------------------------------------- IntMatrix

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw BadParameter("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw BadParameter("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVec IntMatrix::row(std::size_t r) const {
  return IntVec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVec IntMatrix::col(std::size_t c) const {
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntVec IntMatrix::apply(const IntVec& v) const {
  if (v.size() != cols_) throw BadParameter("matrix-vector dimension mismatch");
  IntVec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Int s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw BadParameter("matrix product dimension mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  return p;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
    os << "]\n";
  }
  return os;
}

// ---------------------------------------------------------------- HNF

namespace {

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// row[dst] -= q * row[src]
void sub_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& q) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) -= q * m(src, c);
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = -m(r, c);
}

}  // namespace

HermiteForm hermite_normal_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& h = out.h;
  IntMatrix& u = out.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    while (true) {
      // Smallest nonzero magnitude at or below r becomes the pivot candidate.
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        if (best == h.rows() || abs(h(i, c)) < abs(h(best, c))) best = i;
      }
      if (best == h.rows()) break;
      swap_rows(h, r, best);
      swap_rows(u, r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
        sub_row(h, i, r, q);
        sub_row(u, i, r, q);
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      negate_row(h, r);
      negate_row(u, r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
      if (q != 0) {
        sub_row(h, i, r, q);
        sub_row(u, i, r, q);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).pivots.size(); }

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw BadParameter("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Int max_maximal_minor(const IntMatrix& m) {
  // Pick a row basis greedily; every row basis spans the same row space, and
  // the gap only depends on that space.
  std::vector<IntVec> basis_rows;
  std::size_t current_rank = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto trial = basis_rows;
    trial.push_back(m.row(r));
    std::size_t rk = rank(IntMatrix::from_rows(trial, m.cols()));
    if (rk > current_rank) {
      basis_rows = std::move(trial);
      current_rank = rk;
    }
  }
  const std::size_t k = current_rank;
  if (k == 0) return 0;
  const std::size_t n = m.cols();
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  Int best = 0;
  while (true) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = basis_rows[i][pick[j]];
    Int d = abs(determinant(sub));
    if (d > best) best = d;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

// ---------------------------------------------------------------- lattices

LatticeBasis kernel_lattice(const IntMatrix& a) {
  const std::size_t n = a.cols();
  HermiteForm hf = hermite_normal_form(a.transpose());
  const std::size_t r = hf.pivots.size();
  std::vector<IntVec> kernel_rows;
  for (std::size_t i = r; i < n; ++i) kernel_rows.push_back(hf.u.row(i));
  if (kernel_rows.empty()) return LatticeBasis{IntMatrix(n, 0)};
  IntMatrix k = IntMatrix::from_rows(kernel_rows, n);
  return LatticeBasis{hermite_normal_form(k).h.transpose()};
}

IntMatrix orthogonal_complement(const LatticeBasis& l) {
  return kernel_lattice(l.basis.transpose()).basis.transpose();
}

bool lattice_contains(const LatticeBasis& l, const IntVec& v, IntVec* coeffs) {
  if (v.size() != l.ambient_dim()) throw BadParameter("vector length does not match lattice");
  HermiteForm hf = hermite_normal_form(l.basis.transpose());
  IntVec residual = v;
  IntVec lambda(hf.pivots.size());
  for (std::size_t k = 0; k < hf.pivots.size(); ++k) {
    const std::size_t p = hf.pivots[k];
    const Int& piv = hf.h(k, p);
    if (residual[p] % piv != 0) return false;
    lambda[k] = residual[p] / piv;
    for (std::size_t c = 0; c < residual.size(); ++c) residual[c] -= lambda[k] * hf.h(k, c);
  }
  if (std::any_of(residual.begin(), residual.end(), [](const Int& x) { return x != 0; })) return false;
  if (coeffs) {
    IntVec t(l.rank());
    for (std::size_t k = 0; k < lambda.size(); ++k)
      for (std::size_t j = 0; j < t.size(); ++j) t[j] += lambda[k] * hf.u(k, j);
    *coeffs = std::move(t);
  }
  return true;
}

Int lattice_index(const LatticeBasis& l) {
  if (l.rank() != l.ambient_dim()) return 0;
  return abs(determinant(l.basis));
}

}  // namespace ipgap
