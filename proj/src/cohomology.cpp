#include "realendo/cohomology.hpp"

namespace realendo {

bool CohomologyGroup::is_cocycle(const Vec& v) const {
  return q.contains_lattice(v) && is_zero((identity(sigma.rows) + sigma) * v);
}

std::vector<Vec> CohomologyGroup::generators() const {
  std::vector<Vec> out;
  std::size_t m = q.invariants().size();
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Int> c(m, 0);
    c[k] = 1;
    out.push_back(q.rep(c));
  }
  return out;
}

std::vector<Vec> CohomologyGroup::elements() const {
  std::vector<Vec> out;
  for (const auto& c : q.elements()) out.push_back(q.rep(c));
  return out;
}

CohomologyGroup tate_h1(const Mat& sigma, const Mat& lattice) {
  std::size_t n = sigma.rows;
  Mat one = identity(n);
  Mat l = lattice_basis(lattice);
  for (std::size_t j = 0; j < l.cols; ++j)
    if (!in_lattice(l, sigma * l.col(j))) fail_validation("lattice is not stable under the involution");
  Mat kernel = l * integer_kernel((one + sigma) * l);
  Mat image = (one - sigma) * l;
  return CohomologyGroup{sigma, l, FiniteQuotient(kernel, image)};
}

CohomologyGroup tate_h1(const Mat& sigma) { return tate_h1(sigma, identity(sigma.rows)); }

void check_equivariant(const Mat& f, const Mat& sigma_src, const Mat& sigma_tgt) {
  if (f * sigma_src != sigma_tgt * f) fail_validation("lattice map does not commute with the involutions");
}

std::vector<Vec> push_classes(const Mat& f, const std::vector<Vec>& classes) {
  std::vector<Vec> out;
  for (const auto& c : classes) out.push_back(f * c);
  return out;
}

Int image_order(const CohomologyGroup& target, const Mat& f, const CohomologyGroup& source) {
  return target.q.subgroup_order(push_classes(f, source.generators()));
}

Mat coroot_lattice(const RootDatum& rd, const std::vector<std::size_t>& roots) {
  std::vector<Vec> gens;
  for (auto i : roots) gens.push_back(rd.coroots[i]);
  return lattice_basis(gens, rd.rank);
}

Mat coroot_lattice(const RootDatum& rd) {
  std::vector<std::size_t> simples(rd.nsimple);
  for (std::size_t j = 0; j < rd.nsimple; ++j) simples[j] = j;
  return coroot_lattice(rd, simples);
}

std::vector<Vec> sc_image_generators(const RealTorus& t) {
  return tate_h1(t.sigma, coroot_lattice(t.rd)).generators();
}

std::vector<Vec> levi_sc_image_generators(const RealTorus& t, const std::vector<std::size_t>& levi_roots) {
  Mat l = coroot_lattice(t.rd, levi_roots);
  for (std::size_t j = 0; j < l.cols; ++j)
    if (!in_lattice(l, t.sigma * l.col(j))) fail_validation("Levi is not stable under the involution");
  return tate_h1(t.sigma, l).generators();
}

Mat center_image_lattice(const Mat& sigma, const std::vector<Vec>& chars) {
  std::size_t n = sigma.rows;
  Mat one = identity(n);
  Mat k = integer_kernel(one + sigma);
  if (chars.empty()) return k;
  Mat b = from_rows(chars, n);
  // c in K lifts to a = c/2 + e with e in the +1 eigenspace; need B a integral
  std::vector<Vec> wspan;
  for (const auto& e : nullspace(sigma - one)) wspan.push_back(b * e);
  Mat ann = annihilator_lattice(wspan, chars.size());
  Mat cond = Rat(1, 2) * (transpose(ann) * b);
  return sublattice_where_integral(k, cond);
}

CenterH1 center_h1(const Mat& sigma, const Mat& lambda) {
  std::size_t n = sigma.rows;
  Mat one = identity(n);
  Mat cocycles = sublattice_where_integral(lambda, one - sigma);
  Mat coboundaries = lattice_sum((one + sigma) * lambda, one);
  return CenterH1{sigma, lambda, FiniteQuotient(cocycles, coboundaries)};
}

namespace {
Mat coweight_lattice(const RootDatum& rd) {
  if (rd.nsimple != rd.rank) fail_validation("center computations need a semisimple datum");
  std::vector<Vec> rows(rd.roots.begin(), rd.roots.begin() + static_cast<long>(rd.nsimple));
  return lattice_basis(*inverse(from_rows(rows, rd.rank)));
}
}  // namespace

CenterH1 center_h1(const RealTorus& t) { return center_h1(t.sigma, coweight_lattice(t.rd)); }

Vec center_to_torus(const CenterH1& z, const Vec& y) {
  return (identity(z.sigma.rows) - z.sigma) * y;
}

Int sc_center_image_order(const RealTorus& t) {
  CenterH1 z = center_h1(t);
  Mat sc = coroot_lattice(t.rd);
  Mat to_sc = *inverse(sc);
  Mat one = identity(t.rd.rank);
  Mat cocycles_sc = sublattice_where_integral(z.coweights, to_sc * (one - t.sigma));
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < cocycles_sc.cols; ++j) gens.push_back(cocycles_sc.col(j));
  return z.q.subgroup_order(gens);
}

bool center_map_injective(const RealTorus& t) {
  CenterH1 z = center_h1(t);
  CohomologyGroup h = tate_h1(t.sigma);
  std::vector<Vec> imgs;
  for (const auto& c : z.q.elements()) {
    Vec img = center_to_torus(z, z.q.rep(c));
    if (!h.is_cocycle(img)) fail_internal("center class does not map to a cocycle");
    imgs.push_back(img);
  }
  // a homomorphism is injective iff only the identity maps to zero
  Int zeros_count = 0;
  for (const auto& v : imgs)
    if (h.is_trivial(v)) ++zeros_count;
  return zeros_count == 1;
}

DualInvariant make_dual_invariant(const Mat& sigma, const Vec& y) {
  if (y.size() != sigma.rows) fail_validation("dual vector has wrong length");
  if (!is_integral(transpose(sigma) * y - y)) fail_validation("s = exp(2 pi i y) is not Galois-invariant");
  return DualInvariant{sigma, frac(y)};
}

bool same_dual_invariant(const DualInvariant& a, const DualInvariant& b) {
  if (a.sigma != b.sigma) return false;
  Mat st = transpose(a.sigma);
  auto plus = nullspace(st - identity(st.rows));
  return in_integers_plus_span(annihilator_lattice(plus, st.rows), a.y - b.y);
}

Rat tn_pairing(const Vec& cls, const Vec& y) { return frac(dot(y, cls)); }

Rat tn_pairing(const CohomologyGroup& g, const Vec& cls, const DualInvariant& s) {
  if (g.sigma != s.sigma) fail_validation("class and dual invariant live on different tori");
  if (!g.is_cocycle(cls)) fail_validation("class representative is not a cocycle");
  return tn_pairing(cls, s.y);
}

UTorus u_torus(const Mat& sigma, const Mat& x_lattice, const Mat& lambda) {
  std::size_t n = sigma.rows;
  for (std::size_t j = 0; j < lambda.cols; ++j)
    if (!in_lattice(lambda, sigma * lambda.col(j))) fail_validation("center lattice is not sigma-stable");
  UTorus u;
  u.n = n;
  u.sigma = Mat(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u.sigma(i, j) = u.sigma(n + i, n + j) = sigma(i, j);
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < x_lattice.cols; ++j) {
    gens.push_back(u_pair_vector(x_lattice.col(j), zeros(n)));
    gens.push_back(u_pair_vector(zeros(n), x_lattice.col(j)));
  }
  for (std::size_t j = 0; j < lambda.cols; ++j) gens.push_back(u_pair_vector(-lambda.col(j), lambda.col(j)));
  u.lattice = lattice_basis(gens, 2 * n);
  u.h1 = tate_h1(u.sigma, u.lattice);
  return u;
}

Vec u_pair_vector(const Vec& a, const Vec& b) {
  Vec v = a;
  v.insert(v.end(), b.begin(), b.end());
  return v;
}

Vec u_dual_vector(const Vec& y) { return u_pair_vector(y, y); }

}  // namespace realendo
