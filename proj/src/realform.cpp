#include "realendo/realform.hpp"

#include <algorithm>

namespace realendo {

RealTorus make_torus(const RootDatum& rd, const Mat& sigma) {
  if (sigma.rows != rd.rank || sigma.cols != rd.rank) fail_validation("involution has wrong size");
  if (!is_integral(sigma)) fail_validation("involution is not integral");
  if (sigma * sigma != identity(rd.rank)) fail_validation("sigma^2 is not the identity");
  RealTorus t{rd, sigma};
  Mat sc = t.sigma_char();
  for (std::size_t i = 0; i < rd.nroots(); ++i) {
    int k = rd.find_root(sc * rd.roots[i]);
    if (k < 0 || rd.coroots[static_cast<std::size_t>(k)] != sigma * rd.coroots[i])
      fail_validation("involution does not permute the roots");
  }
  return t;
}

bool is_fundamental(const RealTorus& t) {
  Mat sc = t.sigma_char();
  for (std::size_t i = 0; i < t.rd.nroots(); ++i)
    if (sc * t.rd.roots[i] == t.rd.roots[i]) return false;
  for (std::size_t j = 0; j < t.rd.nsimple; ++j) {
    int k = t.rd.find_root(-(sc * t.rd.roots[j]));
    if (k < 0 || static_cast<std::size_t>(k) >= t.rd.nsimple) return false;
  }
  return true;
}

bool same_torus(const RealTorus& a, const RealTorus& b) {
  return same_datum(a.rd, b.rd) && a.sigma == b.sigma;
}

RealTorus dual_torus(const RealTorus& t) {
  return make_torus(dual_datum(t.rd), t.sigma_char());
}

Mat diagram_matrix(const RootDatum& rd, const std::vector<std::size_t>& perm) {
  std::size_t r = rd.nsimple;
  if (perm.size() != r) fail_validation("diagram permutation has wrong length");
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < r; ++i)
    if (sorted[i] != i) fail_validation("diagram automorphism is not a permutation");
  Mat c = rd.cartan();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (c(perm[i], perm[j]) != c(i, j)) fail_validation("permutation does not preserve the Cartan matrix");
  bool trivial = true;
  for (std::size_t i = 0; i < r; ++i) trivial = trivial && perm[i] == i;
  if (trivial) return identity(rd.rank);
  if (r != rd.rank) fail_validation("nontrivial diagram automorphism needs a semisimple datum");
  std::vector<Vec> src, dst;
  for (std::size_t i = 0; i < r; ++i) src.push_back(rd.coroots[i]), dst.push_back(rd.coroots[perm[i]]);
  Mat d = from_cols(dst, rd.rank) * *inverse(from_cols(src, rd.rank));
  if (!is_integral(d)) fail_validation("diagram automorphism does not preserve the cocharacter lattice");
  for (std::size_t i = 0; i < r; ++i)
    if (transpose(d) * rd.roots[perm[i]] != rd.roots[i])
      fail_validation("diagram automorphism does not preserve the character lattice");
  return d;
}

RealTorus fundamental_involution(const RootDatum& rd, const std::vector<std::size_t>& perm) {
  Mat delta = diagram_matrix(rd, perm);
  Mat w0 = longest_element(rd).on_cochar;
  if (w0 * delta != delta * w0) fail_internal("diagram automorphism does not commute with w0");
  RealTorus t = make_torus(rd, w0 * delta);
  if (!is_fundamental(t)) fail_internal("constructed involution is not fundamental");
  return t;
}

std::vector<std::size_t> imaginary_roots(const RealTorus& t) {
  Mat sc = t.sigma_char();
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < t.rd.nroots(); ++i)
    if (sc * t.rd.roots[i] == -t.rd.roots[i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> imaginary_simples(const RealTorus& t) {
  Mat sc = t.sigma_char();
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < t.rd.nsimple; ++j)
    if (sc * t.rd.roots[j] == -t.rd.roots[j]) out.push_back(j);
  return out;
}

Vec twist_to_cochar(const RootDatum& rd, const Vec& u, TwistLattice ctx) {
  if (!is_integral(Rat(2) * u)) fail_validation("twist " + to_string(u) + " is not 2-torsion");
  switch (ctx) {
    case TwistLattice::given:
      if (u.size() != rd.rank) fail_validation("twist has wrong length");
      return u;
    case TwistLattice::sc: {
      if (u.size() != rd.nsimple) fail_validation("twist has wrong length");
      Vec y = zeros(rd.rank);
      for (std::size_t i = 0; i < rd.nsimple; ++i) y = y + u[i] * rd.coroots[i];
      return y;
    }
    case TwistLattice::ad: {
      if (u.size() != rd.nsimple) fail_validation("twist has wrong length");
      if (rd.nsimple != rd.rank) fail_validation("adjoint twist coordinates need a semisimple datum");
      std::vector<Vec> rows(rd.roots.begin(), rd.roots.begin() + static_cast<long>(rd.nsimple));
      auto y = solve(from_rows(rows, rd.rank), u);
      if (!y) fail_internal("fundamental coweights not solvable");
      return *y;
    }
  }
  return u;
}

Grading whittaker_grading(const RealTorus& t) {
  if (!is_fundamental(t)) fail_validation("Whittaker grading needs a fundamental pair");
  Grading g{t, std::vector<int>(t.rd.nsimple, -1), zeros(t.rd.rank)};
  for (auto j : imaginary_simples(t)) g.base[j] = 1;
  return g;
}

Grading twist_grading_cochar(const Grading& g, const Vec& u) {
  if (u.size() != g.torus.rd.rank) fail_validation("twist has wrong length");
  if (!is_integral(Rat(2) * u)) {
    // 2u must pair integrally with roots; it need not lie in the cocharacter lattice itself
    for (std::size_t i = 0; i < g.torus.rd.nsimple; ++i)
      if (!is_int(dot(g.torus.rd.roots[i], Rat(2) * u))) fail_validation("twist is not 2-torsion");
  }
  Grading h = g;
  h.twist = g.twist + u;
  return h;
}

Grading twist_grading(const Grading& g, const Vec& u, TwistLattice ctx) {
  return twist_grading_cochar(g, twist_to_cochar(g.torus.rd, u, ctx));
}

bool is_graded_imaginary(const Grading& g, std::size_t root) {
  const auto& rd = g.torus.rd;
  if (g.torus.sigma_char() * rd.roots[root] != -rd.roots[root]) return false;
  for (std::size_t j = 0; j < rd.nsimple; ++j)
    if (rd.simple_coords[root][j] != 0 && g.base[j] < 0) return false;
  return true;
}

int grade(const Grading& g, std::size_t root) {
  if (!is_graded_imaginary(g, root)) fail_validation("root is not imaginary");
  const auto& rd = g.torus.rd;
  Int s = 0;
  for (std::size_t j = 0; j < rd.nsimple; ++j) s += rd.simple_coords[root][j] * g.base[j];
  Rat shift = dot(rd.roots[root], Rat(2) * g.twist);
  if (!is_int(shift)) fail_internal("twist pairs non-integrally with a root");
  s += num(shift);
  return static_cast<int>(mod_pos(s, 2));
}

std::size_t q_invariant(const Grading& g) {
  std::size_t q = 0;
  for (std::size_t i = 0; i < g.torus.rd.npos; ++i)
    if (is_graded_imaginary(g, i) && grade(g, i) == 1) ++q;
  return q;
}

int epsilon_sign(const Grading& g, const Grading& ref) {
  if (!same_torus(g.torus, ref.torus)) fail_validation("gradings live on different pairs");
  long d = static_cast<long>(q_invariant(g)) - static_cast<long>(q_invariant(ref));
  return d % 2 == 0 ? 1 : -1;
}

bool same_grading(const Grading& a, const Grading& b) {
  if (!same_torus(a.torus, b.torus)) return false;
  for (std::size_t i = 0; i < a.torus.rd.nroots(); ++i) {
    bool ia = is_graded_imaginary(a, i), ib = is_graded_imaginary(b, i);
    if (ia != ib) return false;
    if (ia && grade(a, i) != grade(b, i)) return false;
  }
  return true;
}

RealTorus cayley_transform(const Grading& g, std::size_t root) {
  if (root >= g.torus.rd.nroots()) fail_validation("root index out of range");
  if (!is_graded_imaginary(g, root)) fail_validation("Cayley transform needs an imaginary root");
  if (grade(g, root) != 1) fail_validation("Cayley transform needs a noncompact root");
  return make_torus(g.torus.rd, reflection_cochar(g.torus.rd, root) * g.torus.sigma);
}

bool check_twist_admissible(const RealTorus& t, const Mat& theta) {
  const auto& rd = t.rd;
  if (theta.rows != rd.rank || theta.cols != rd.rank || !is_integral(theta))
    fail_validation("theta has wrong shape");
  auto inv = inverse(theta);
  if (!inv || !is_integral(*inv)) fail_validation("theta is not a lattice automorphism");
  Mat on_char = transpose(*inv);
  for (std::size_t i = 0; i < rd.nroots(); ++i) {
    int k = rd.find_root(on_char * rd.roots[i]);
    if (k < 0 || rd.coroots[static_cast<std::size_t>(k)] != theta * rd.coroots[i])
      fail_validation("theta is not a root datum automorphism");
  }
  for (std::size_t j = 0; j < rd.nsimple; ++j) {
    int k = rd.find_coroot(theta * rd.coroots[j]);
    if (k < 0 || static_cast<std::size_t>(k) >= rd.nsimple) return false;
  }
  return theta * t.sigma == t.sigma * theta;
}

}  // namespace realendo
