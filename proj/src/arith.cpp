#include "realendo/arith.hpp"

#include <algorithm>
#include <sstream>

namespace realendo {

void fail_validation(const std::string& msg) { throw Error(Error::Kind::validation, msg); }
void fail_internal(const std::string& msg) { throw Error(Error::Kind::internal, msg); }
void fail_parse(const std::string& msg) { throw Error(Error::Kind::parse, msg); }

Int num(const Rat& x) { return boost::multiprecision::numerator(x); }
Int den(const Rat& x) { return boost::multiprecision::denominator(x); }
bool is_int(const Rat& x) { return den(x) == 1; }

Int floor_q(const Rat& x) {
  Int n = num(x), d = den(x);
  Int q = n / d;  // truncates toward zero
  if (n < 0 && q * d != n) q -= 1;
  return q;
}

Rat frac(const Rat& x) { return x - Rat(floor_q(x)); }

Int mod_pos(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

std::string to_string(const Rat& x) {
  if (is_int(x)) return num(x).str();
  return num(x).str() + "/" + den(x).str();
}

Rat parse_rat(const std::string& s0) {
  std::string s;
  for (char ch : s0)
    if (ch != ' ') s += ch;
  if (s.empty()) fail_parse("empty rational");
  auto parse_int = [&](const std::string& t) {
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) fail_parse("bad rational '" + s0 + "'");
    for (std::size_t k = i; k < t.size(); ++k)
      if (t[k] < '0' || t[k] > '9') fail_parse("bad rational '" + s0 + "'");
    Int v(t.substr(i));
    return t[0] == '-' ? Int(-v) : v;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(parse_int(s));
  Int p = parse_int(s.substr(0, slash));
  Int q = parse_int(s.substr(slash + 1));
  if (q == 0) fail_parse("zero denominator in '" + s0 + "'");
  return Rat(p, q);
}

// ---------------------------------------------------------------- vectors

Vec zeros(std::size_t n) { return Vec(n, Rat(0)); }
Vec unit(std::size_t n, std::size_t i) {
  Vec v = zeros(n);
  v[i] = 1;
  return v;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail_internal("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail_internal("vector size mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
Vec operator-(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}
Vec operator*(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}
Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) fail_internal("dot size mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
bool is_zero(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return x == 0; });
}
bool is_integral(const Vec& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& x) { return is_int(x); });
}
Vec frac(const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = frac(a[i]);
  return r;
}
std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + ")";
}
Vec ints(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// ---------------------------------------------------------------- matrices

Vec Mat::row(std::size_t i) const {
  return Vec(a.begin() + static_cast<long>(i * cols), a.begin() + static_cast<long>((i + 1) * cols));
}
Vec Mat::col(std::size_t j) const {
  Vec v(rows);
  for (std::size_t i = 0; i < rows; ++i) v[i] = (*this)(i, j);
  return v;
}

Mat identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}
Mat from_cols(const std::vector<Vec>& cols, std::size_t n) {
  Mat m(n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) fail_internal("column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}
Mat from_rows(const std::vector<Vec>& rows, std::size_t n) {
  return transpose(from_cols(rows, n));
}
Mat transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
  return t;
}
Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols != b.rows) fail_internal("matrix product size mismatch");
  Mat c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}
Vec operator*(const Mat& a, const Vec& v) {
  if (a.cols != v.size()) fail_internal("matrix-vector size mismatch");
  Vec r = zeros(a.rows);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) r[i] += a(i, k) * v[k];
  return r;
}
Mat operator+(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] += b.a[i];
  return c;
}
Mat operator-(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < c.a.size(); ++i) c.a[i] -= b.a[i];
  return c;
}
Mat operator-(const Mat& a) { return Rat(-1) * a; }
Mat operator*(const Rat& c, const Mat& a) {
  Mat r = a;
  for (auto& x : r.a) x *= c;
  return r;
}
Mat hcat(const Mat& a, const Mat& b) {
  if (a.rows != b.rows) fail_internal("hcat row mismatch");
  Mat m(a.rows, a.cols + b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols; ++j) m(i, a.cols + j) = b(i, j);
  }
  return m;
}
bool is_integral(const Mat& m) {
  return std::all_of(m.a.begin(), m.a.end(), [](const Rat& x) { return is_int(x); });
}
std::string to_string(const Mat& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows; ++i) s += (i ? "; " : "") + to_string(m.row(i));
  return s + "]";
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Mat& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    Rat inv = 1 / m(r, c);
    for (std::size_t j = 0; j < m.cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (std::size_t j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

}  // namespace

std::size_t rank(const Mat& m) {
  Mat t = m;
  return rref(t).size();
}

std::optional<Mat> inverse(const Mat& m) {
  if (m.rows != m.cols) return std::nullopt;
  std::size_t n = m.rows;
  Mat aug = hcat(m, identity(n));
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  Mat aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j);
    aug(i, a.cols) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols) return std::nullopt;
  Vec x = zeros(a.cols);
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, a.cols);
  return x;
}

std::vector<Vec> nullspace(const Mat& m) {
  Mat t = m;
  auto piv = rref(t);
  std::vector<bool> is_piv(m.cols, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_piv[f]) continue;
    Vec v = zeros(m.cols);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -t(r, f);
    basis.push_back(v);
  }
  return basis;
}

// ---------------------------------------------------------------- integers

IMat to_imat(const Mat& m) {
  IMat r(m.rows, std::vector<Int>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (!is_int(m(i, j))) fail_internal("to_imat: non-integral entry");
      r[i][j] = num(m(i, j));
    }
  return r;
}
Mat to_mat(const IMat& m, std::size_t cols) {
  Mat r(m.size(), cols);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) r(i, j) = Rat(m[i][j]);
  return r;
}

namespace {

IMat iidentity(std::size_t n) {
  IMat m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Int abs_i(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division for Int
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Int lcm_den(const Mat& m) {
  Int l = 1;
  for (const auto& x : m.a) l = boost::multiprecision::lcm(l, den(x));
  return l;
}

}  // namespace

Smith smith(const IMat& a, std::size_t m, std::size_t n) {
  Smith s;
  s.D = a;
  if (s.D.size() != m) fail_internal("smith: row count mismatch");
  s.U = iidentity(m);
  s.V = iidentity(n);
  IMat& D = s.D;
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(D[i], D[j]);
    std::swap(s.U[i], s.U[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& r : D) std::swap(r[i], r[j]);
    for (auto& r : s.V) std::swap(r[i], r[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Int& f) {  // row_dst += f row_src
    for (std::size_t j = 0; j < n; ++j) D[dst][j] += f * D[src][j];
    for (std::size_t j = 0; j < m; ++j) s.U[dst][j] += f * s.U[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Int& f) {
    for (std::size_t i = 0; i < m; ++i) D[i][dst] += f * D[i][src];
    for (std::size_t i = 0; i < n; ++i) s.V[i][dst] += f * s.V[i][src];
  };

  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block becomes the pivot
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D[i][j] != 0 && (bi == m || abs_i(D[i][j]) < abs_i(D[bi][bj]))) bi = i, bj = j;
      if (bi == m) goto done;
      if (bi != t) swap_rows(bi, t);
      if (bj != t) swap_cols(bj, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i)
        if (D[i][t] != 0) {
          add_row(i, t, -(D[i][t] / D[t][t]));
          if (D[i][t] != 0) clean = false;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (D[t][j] != 0) {
          add_col(j, t, -(D[t][j] / D[t][t]));
          if (D[t][j] != 0) clean = false;
        }
      if (!clean) continue;
      bool divides = true;
      for (std::size_t i = t + 1; i < m && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D[i][j] % D[t][t] != 0) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (D[t][t] < 0) {
      for (auto& x : D[t]) x = -x;
      for (auto& x : s.U[t]) x = -x;
    }
    s.diag.push_back(D[t][t]);
  }
done:
  return s;
}

namespace {

// Row Hermite form of integer rows; returns the nonzero rows.
std::vector<std::vector<Int>> hermite_rows(std::vector<std::vector<Int>> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs_i(rows[i][c]) < abs_i(rows[best][c])))
          best = i;
      if (best == rows.size()) break;
      std::swap(rows[best], rows[r]);
      bool clean = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Int q = fdiv(rows[i][c], rows[r][c]);
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) clean = false;
      }
      if (clean) break;
    }
    if (r >= rows.size() || rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Int q = fdiv(rows[i][c], rows[r][c]);
      if (q != 0)
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

Mat lattice_basis(const Mat& gens) {
  std::size_t n = gens.rows;
  if (gens.cols == 0) return Mat(n, 0);
  Int scale = lcm_den(gens);
  Mat scaled = Rat(scale) * gens;
  IMat g = to_imat(transpose(scaled));
  auto h = hermite_rows(g, n);
  Mat b(n, h.size());
  for (std::size_t j = 0; j < h.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) b(i, j) = Rat(h[j][i], scale);
  return b;
}

Mat lattice_basis(const std::vector<Vec>& gens, std::size_t n) {
  return lattice_basis(from_cols(gens, n));
}

std::optional<Vec> lattice_coords(const Mat& basis, const Vec& v) {
  auto x = solve(basis, v);
  if (!x || !is_integral(*x)) return std::nullopt;
  return x;
}

bool in_lattice(const Mat& basis, const Vec& v) { return lattice_coords(basis, v).has_value(); }

Mat integer_kernel(const Mat& a) {
  std::size_t n = a.cols;
  if (a.rows == 0) return identity(n);
  Mat scaled = a;
  for (std::size_t i = 0; i < a.rows; ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < n; ++j) l = boost::multiprecision::lcm(l, den(a(i, j)));
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= l;
  }
  Smith s = smith(to_imat(scaled), a.rows, n);
  std::size_t r = s.diag.size();
  Mat k(n, n - r);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) k(i, j - r) = Rat(s.V[i][j]);
  return k;
}

Mat sublattice_where_integral(const Mat& lattice, const Mat& c) {
  std::size_t r = lattice.cols, n = lattice.rows;
  Mat m = c * lattice;
  Int d = lcm_den(m);
  if (d == 1 || r == 0) return lattice;
  // kernel of [d*m | -d I] over Z, projected to the first r coordinates
  Mat big(m.rows, r + m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < r; ++j) big(i, j) = Rat(d) * m(i, j);
    big(i, r + i) = Rat(-d);
  }
  Mat ker = integer_kernel(big);
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < ker.cols; ++j) {
    Vec col = ker.col(j);
    Vec k(col.begin(), col.begin() + static_cast<long>(r));
    gens.push_back(lattice * k);
  }
  return lattice_basis(gens, n);
}

Vec reduce_mod_lattice(const Mat& basis, const Vec& v) {
  if (basis.cols == 0) return v;
  auto x = solve(basis, v);
  if (!x) fail_internal("reduce_mod_lattice: vector outside lattice span");
  Vec in_span = basis * *x;
  Vec rest = v - in_span;  // zero when v lies in the span
  return basis * frac(*x) + rest;
}

Mat lattice_sum(const Mat& a, const Mat& b) { return lattice_basis(hcat(a, b)); }

// ---------------------------------------------------------------- quotients

FiniteQuotient::FiniteQuotient(const Mat& lattice, const Mat& sub) {
  lat_ = lattice_basis(lattice);
  dim_ = lat_.cols;
  std::size_t n = lat_.rows;
  // coordinates of the sublattice generators in the lattice basis
  Mat coords(dim_, sub.cols);
  for (std::size_t j = 0; j < sub.cols; ++j) {
    auto x = lattice_coords(lat_, sub.col(j));
    if (!x) fail_internal("FiniteQuotient: sublattice generator outside lattice");
    for (std::size_t i = 0; i < dim_; ++i) coords(i, j) = (*x)[i];
  }
  sub_ = lattice_basis(sub);
  if (sub_.cols != dim_) fail_internal("FiniteQuotient: sublattice is not of full rank");
  if (dim_ == 0) return;
  Smith s = smith(to_imat(coords), dim_, sub.cols);
  Mat U = to_mat(s.U, dim_);
  auto Uinv = inverse(U);
  if (!Uinv) fail_internal("FiniteQuotient: singular transform");
  to_smith_ = U;
  Mat gens_all = lat_ * *Uinv;
  std::vector<Vec> keep;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (s.diag[i] == 1) continue;
    keep.push_back(gens_all.col(i));
    inv_.push_back(s.diag[i]);
    slot_.push_back(i);
  }
  gens_ = from_cols(keep, n);
}

Int FiniteQuotient::order() const {
  Int o = 1;
  for (const auto& d : inv_) o *= d;
  return o;
}

bool FiniteQuotient::contains_lattice(const Vec& v) const {
  return dim_ == 0 ? realendo::is_zero(v) : in_lattice(lat_, v);
}

std::vector<Int> FiniteQuotient::coords(const Vec& v) const {
  if (dim_ == 0) {
    if (!realendo::is_zero(v)) fail_internal("FiniteQuotient: vector outside lattice");
    return {};
  }
  auto x = lattice_coords(lat_, v);
  if (!x) fail_internal("FiniteQuotient: vector outside lattice " + to_string(v));
  Vec y = to_smith_ * *x;
  std::vector<Int> c;
  for (std::size_t k = 0; k < inv_.size(); ++k) c.push_back(mod_pos(num(y[slot_[k]]), inv_[k]));
  return c;
}

Vec FiniteQuotient::rep(const std::vector<Int>& c) const {
  Vec v = zeros(lat_.rows);
  for (std::size_t k = 0; k < inv_.size(); ++k) v = v + Rat(c[k]) * gens_.col(k);
  return v;
}

bool FiniteQuotient::is_zero(const Vec& v) const {
  for (const auto& x : coords(v))
    if (x != 0) return false;
  return true;
}

Int FiniteQuotient::subgroup_order(const std::vector<Vec>& gens) const {
  std::size_t m = inv_.size();
  if (m == 0) return 1;
  // lattice in Z^m spanned by generator coordinates and the relations d_k e_k
  Mat g(m, gens.size() + m);
  for (std::size_t j = 0; j < gens.size(); ++j) {
    auto c = coords(gens[j]);
    for (std::size_t k = 0; k < m; ++k) g(k, j) = Rat(c[k]);
  }
  for (std::size_t k = 0; k < m; ++k) g(k, gens.size() + k) = Rat(inv_[k]);
  Smith s = smith(to_imat(g), m, g.cols);
  Int index = 1;
  for (const auto& d : s.diag) index *= d;
  return order() / index;
}

std::vector<std::vector<Int>> FiniteQuotient::elements() const {
  std::vector<std::vector<Int>> out{{}};
  for (const auto& d : inv_) {
    std::vector<std::vector<Int>> next;
    for (const auto& e : out)
      for (Int k = 0; k < d; ++k) {
        auto f = e;
        f.push_back(k);
        next.push_back(f);
      }
    out = std::move(next);
  }
  return out;
}

Mat annihilator_lattice(const std::vector<Vec>& span, std::size_t n) {
  if (span.empty()) return identity(n);
  return integer_kernel(from_rows(span, n));
}

bool in_integers_plus_span(const Mat& annihilator, const Vec& v) {
  for (std::size_t j = 0; j < annihilator.cols; ++j)
    if (!is_int(dot(annihilator.col(j), v))) return false;
  return true;
}

}  // namespace realendo
