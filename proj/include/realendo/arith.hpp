#pragma once
// Exact rational vectors/matrices and the integer lattice toolkit (Smith form,
// Hermite bases, kernels, finite quotients) used by every other module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace realendo {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rat>;

struct Error : std::runtime_error {
  enum class Kind { parse, validation, internal };
  Kind kind;
  Error(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

[[noreturn]] void fail_validation(const std::string& msg);
[[noreturn]] void fail_internal(const std::string& msg);
[[noreturn]] void fail_parse(const std::string& msg);

// ---- scalars
Int num(const Rat& x);
Int den(const Rat& x);
bool is_int(const Rat& x);
Int floor_q(const Rat& x);
Rat frac(const Rat& x);  // x - floor(x), in [0,1)
Int mod_pos(const Int& a, const Int& m);
std::string to_string(const Rat& x);  // "p/q" or "p"
Rat parse_rat(const std::string& s);

// ---- vectors
Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator-(const Vec& a);
Vec operator*(const Rat& c, const Vec& a);
Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& a);
bool is_integral(const Vec& a);
Vec frac(const Vec& a);
std::string to_string(const Vec& v);
Vec ints(std::initializer_list<long> xs);

// ---- matrices (column-vector convention: A * v)
struct Mat {
  std::size_t rows = 0, cols = 0;
  std::vector<Rat> a;
  Mat() = default;
  Mat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Rat& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator!=(const Mat& o) const { return !(*this == o); }
};

Mat identity(std::size_t n);
Mat from_cols(const std::vector<Vec>& cols, std::size_t n);
Mat from_rows(const std::vector<Vec>& rows, std::size_t n);
Mat transpose(const Mat& m);
Mat operator*(const Mat& a, const Mat& b);
Vec operator*(const Mat& a, const Vec& v);
Mat operator+(const Mat& a, const Mat& b);
Mat operator-(const Mat& a, const Mat& b);
Mat operator-(const Mat& a);
Mat operator*(const Rat& c, const Mat& a);
Mat hcat(const Mat& a, const Mat& b);
bool is_integral(const Mat& m);
std::string to_string(const Mat& m);

std::size_t rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
std::optional<Vec> solve(const Mat& a, const Vec& b);  // some solution of a x = b
std::vector<Vec> nullspace(const Mat& m);              // rational basis

// ---- integer matrices
using IMat = std::vector<std::vector<Int>>;
IMat to_imat(const Mat& m);  // requires integral entries
Mat to_mat(const IMat& m, std::size_t cols);

struct Smith {
  IMat U, D, V;  // U * A * V = D, U and V unimodular
  std::vector<Int> diag;  // nonzero invariant factors, d1 | d2 | ...
};
Smith smith(const IMat& a, std::size_t rows, std::size_t cols);

// ---- lattices in Q^n, given by generating columns
Mat lattice_basis(const Mat& gens);  // canonical column Hermite basis
Mat lattice_basis(const std::vector<Vec>& gens, std::size_t n);
bool in_lattice(const Mat& basis, const Vec& v);
std::optional<Vec> lattice_coords(const Mat& basis, const Vec& v);  // integral coords or none
Mat integer_kernel(const Mat& a);  // saturated basis of {x in Z^n : a x = 0}
// {k in Z^r : C * (L k) integral}, returned as vectors L k (a basis)
Mat sublattice_where_integral(const Mat& lattice, const Mat& c);
// v mod the lattice spanned by basis: canonical representative inside the span
Vec reduce_mod_lattice(const Mat& basis, const Vec& v);
Mat lattice_sum(const Mat& a, const Mat& b);

// Finite quotient L / N where N is a full-rank sublattice of L.
class FiniteQuotient {
 public:
  FiniteQuotient() = default;
  FiniteQuotient(const Mat& lattice, const Mat& sub);
  std::size_t dim() const { return dim_; }
  const std::vector<Int>& invariants() const { return inv_; }  // nontrivial factors
  Int order() const;
  bool contains_lattice(const Vec& v) const;  // v in L?
  std::vector<Int> coords(const Vec& v) const;  // v in L, coordinates mod invariants
  Vec rep(const std::vector<Int>& coords) const;
  bool is_zero(const Vec& v) const;
  bool equal(const Vec& a, const Vec& b) const { return is_zero(a - b); }
  Int subgroup_order(const std::vector<Vec>& gens) const;
  std::vector<std::vector<Int>> elements() const;
  Vec canonical(const Vec& v) const { return rep(coords(v)); }
  const Mat& lattice() const { return lat_; }
  const Mat& sublattice() const { return sub_; }

 private:
  Mat lat_, sub_;
  std::size_t dim_ = 0;
  Mat gens_;               // columns: generators of cyclic factors (in ambient coords)
  std::vector<Int> inv_;   // orders of those generators (all > 1)
  Mat to_smith_;           // maps lattice coords -> smith coords
  std::vector<std::size_t> slot_;  // smith index of each kept factor
};

// Membership in Z^n + span(V): integral pairing with the saturated annihilator.
Mat annihilator_lattice(const std::vector<Vec>& span, std::size_t n);
bool in_integers_plus_span(const Mat& annihilator, const Vec& v);

}  // namespace realendo
