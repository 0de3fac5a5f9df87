#include "realendo/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace realendo {

int RootDatum::find_root(const Vec& v) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i] == v) return static_cast<int>(i);
  return -1;
}

int RootDatum::find_coroot(const Vec& v) const {
  for (std::size_t i = 0; i < coroots.size(); ++i)
    if (coroots[i] == v) return static_cast<int>(i);
  return -1;
}

Mat RootDatum::cartan() const {
  Mat c(nsimple, nsimple);
  for (std::size_t i = 0; i < nsimple; ++i)
    for (std::size_t j = 0; j < nsimple; ++j) c(i, j) = dot(roots[i], coroots[j]);
  return c;
}

std::string RootDatum::label() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? "x" : "") + factors[i];
  if (s.empty()) s = "T" + std::to_string(rank);
  return s + " " + isogeny;
}

Vec RootDatum::rho_coroots() const {
  Vec s = zeros(rank);
  for (std::size_t i = 0; i < npos; ++i) s = s + coroots[i];
  return Rat(1, 2) * s;
}

Vec RootDatum::rho_roots() const {
  Vec s = zeros(rank);
  for (std::size_t i = 0; i < npos; ++i) s = s + roots[i];
  return Rat(1, 2) * s;
}

RootDatum make_datum(std::size_t rank, const std::vector<Vec>& sr, const std::vector<Vec>& sc) {
  if (sr.size() != sc.size()) fail_validation("simple roots and coroots differ in number");
  std::size_t r = sr.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (sr[i].size() != rank || sc[i].size() != rank) fail_validation("simple vector of wrong length");
    if (dot(sr[i], sc[i]) != 2) fail_validation("simple root does not pair to 2 with its coroot");
  }
  Mat simples = from_cols(sr, rank);
  if (r > 0 && realendo::rank(simples) != r) fail_validation("simple roots are linearly dependent");

  std::vector<Vec> roots = sr, coroots = sc;
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < r; ++i) seen[to_string(sr[i])] = i;
  std::deque<std::size_t> queue;
  for (std::size_t i = 0; i < r; ++i) queue.push_back(i);
  while (!queue.empty()) {
    std::size_t k = queue.front();
    queue.pop_front();
    for (std::size_t j = 0; j < r; ++j) {
      Vec b = roots[k] - dot(roots[k], sc[j]) * sr[j];
      Vec bc = coroots[k] - dot(sr[j], coroots[k]) * sc[j];
      auto key = to_string(b);
      auto it = seen.find(key);
      if (it != seen.end()) {
        if (coroots[it->second] != bc) fail_validation("inconsistent coroot for root " + key);
        continue;
      }
      if (roots.size() > 2000) fail_validation("root system is not finite");
      seen[key] = roots.size();
      roots.push_back(b);
      coroots.push_back(bc);
      queue.push_back(roots.size() - 1);
    }
  }

  struct Entry {
    Vec root, coroot;
    std::vector<Int> coords;
    Int height;
  };
  std::vector<Entry> pos, neg;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    auto x = solve(simples, roots[i]);
    if (!x || !is_integral(*x)) fail_validation("root outside the span of the simple roots");
    Entry e{roots[i], coroots[i], {}, 0};
    bool nonneg = true, nonpos = true;
    for (const auto& c : *x) {
      e.coords.push_back(num(c));
      e.height += num(c);
      if (c < 0) nonneg = false;
      if (c > 0) nonpos = false;
    }
    if (!nonneg && !nonpos) fail_validation("root with mixed-sign simple coordinates");
    (nonneg ? pos : neg).push_back(e);
  }
  std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coords > b.coords;
  });
  RootDatum rd;
  rd.rank = rank;
  rd.nsimple = r;
  rd.npos = pos.size();
  for (const auto& e : pos) {
    rd.roots.push_back(e.root);
    rd.coroots.push_back(e.coroot);
    rd.simple_coords.push_back(e.coords);
  }
  for (const auto& e : pos) {
    rd.roots.push_back(-e.root);
    rd.coroots.push_back(-e.coroot);
    std::vector<Int> c;
    for (const auto& x : e.coords) c.push_back(-x);
    rd.simple_coords.push_back(c);
  }
  if (neg.size() != pos.size()) fail_validation("root set is not symmetric");
  for (std::size_t i = 0; i < r; ++i)
    if (rd.roots[i] != sr[i]) fail_internal("simple roots not at the front after sorting");
  return rd;
}

// ---------------------------------------------------------------- Cartan types

namespace {

Mat cartan_simple(char letter, std::size_t n) {
  Mat c = identity(n);
  for (std::size_t i = 0; i < n; ++i) c(i, i) = 2;
  auto link = [&](std::size_t i, std::size_t j) { c(i, j) = -1, c(j, i) = -1; };
  switch (letter) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 2, n - 1) = -2;
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      c(n - 1, n - 2) = -2;
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1), link(1, 2), link(2, 3);
      c(1, 2) = -2;
      break;
    case 'G':
      link(0, 1);
      c(1, 0) = -3;
      break;
  }
  return c;
}

bool rank_allowed(char letter, std::size_t n) {
  switch (letter) {
    case 'A': return n >= 1;
    case 'B':
    case 'C': return n >= 2;
    case 'D': return n >= 3;
    case 'E': return n >= 6 && n <= 8;
    case 'F': return n == 4;
    case 'G': return n == 2;
    default: return false;
  }
}

std::vector<std::pair<char, std::size_t>> parse_type(const std::string& type) {
  std::vector<std::pair<char, std::size_t>> out;
  std::size_t start = 0, total = 0;
  while (start <= type.size()) {
    auto end = type.find('x', start);
    if (end == std::string::npos) end = type.size();
    std::string tok = type.substr(start, end - start);
    if (tok.size() < 2) fail_validation("unknown Cartan type '" + type + "'");
    char letter = tok[0];
    std::size_t n = 0;
    for (std::size_t k = 1; k < tok.size(); ++k) {
      if (tok[k] < '0' || tok[k] > '9') fail_validation("unknown Cartan type '" + type + "'");
      n = n * 10 + static_cast<std::size_t>(tok[k] - '0');
    }
    if (!rank_allowed(letter, n)) fail_validation("unknown Cartan type '" + tok + "'");
    out.emplace_back(letter, n);
    total += n;
    start = end + 1;
  }
  if (total > 8) fail_validation("Cartan type of rank > 8 not supported");
  return out;
}

}  // namespace


Mat cartan_matrix(const std::string& type) {
  auto parts = parse_type(type);
  std::size_t total = 0;
  for (auto& p : parts) total += p.second;
  Mat c(total, total);
  std::size_t off = 0;
  for (auto& [letter, n] : parts) {
    Mat b = cartan_simple(letter, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c(off + i, off + j) = b(i, j);
    off += n;
  }
  return c;
}

RootDatum build_root_datum(const std::string& type, const Isogeny& iso) {
  Mat c = cartan_matrix(type);
  std::size_t n = c.rows;
  std::vector<Vec> sr, sc;
  std::string tag;
  switch (iso.kind) {
    case Isogeny::Kind::simply_connected:
      for (std::size_t i = 0; i < n; ++i) sr.push_back(c.row(i)), sc.push_back(unit(n, i));
      tag = "sc";
      break;
    case Isogeny::Kind::adjoint:
      for (std::size_t i = 0; i < n; ++i) sr.push_back(unit(n, i)), sc.push_back(c.col(i));
      tag = "ad";
      break;
    case Isogeny::Kind::explicit_basis: {
      const Mat& b = iso.basis;
      if (b.rows != n || b.cols != n || !is_integral(b))
        fail_validation("isogeny basis must be an integral " + std::to_string(n) + "x" +
                        std::to_string(n) + " matrix");
      auto binv = inverse(b);
      if (!binv) fail_validation("isogeny basis is singular");
      Mat roots = c * *binv;  // row i: coordinates of alpha_i in the basis
      if (!is_integral(roots)) fail_validation("isogeny basis does not contain the root lattice");
      for (std::size_t i = 0; i < n; ++i) sr.push_back(roots.row(i)), sc.push_back(b.col(i));
      tag = "explicit";
      break;
    }
  }
  RootDatum rd = make_datum(n, sr, sc);
  for (auto& [letter, k] : parse_type(type)) rd.factors.push_back(std::string(1, letter) + std::to_string(k));
  rd.isogeny = tag;
  return rd;
}

RootDatum dual_datum(const RootDatum& rd) {
  std::vector<Vec> sr(rd.coroots.begin(), rd.coroots.begin() + static_cast<long>(rd.nsimple));
  std::vector<Vec> sc(rd.roots.begin(), rd.roots.begin() + static_cast<long>(rd.nsimple));
  RootDatum d = make_datum(rd.rank, sr, sc);
  for (auto f : rd.factors) {
    if (f[0] == 'B') f[0] = 'C';
    else if (f[0] == 'C') f[0] = 'B';
    d.factors.push_back(f);
  }
  d.isogeny = rd.isogeny == "sc" ? "ad" : rd.isogeny == "ad" ? "sc" : rd.isogeny;
  return d;
}

bool same_datum(const RootDatum& a, const RootDatum& b) {
  if (a.rank != b.rank || a.nsimple != b.nsimple || a.nroots() != b.nroots()) return false;
  for (std::size_t i = 0; i < a.nsimple; ++i)
    if (a.roots[i] != b.roots[i] || a.coroots[i] != b.coroots[i]) return false;
  for (std::size_t i = 0; i < a.nroots(); ++i) {
    int k = b.find_root(a.roots[i]);
    if (k < 0 || b.coroots[static_cast<std::size_t>(k)] != a.coroots[i]) return false;
  }
  return true;
}

std::vector<std::string> identify_factors(const RootDatum& rd) {
  Mat c = rd.cartan();
  std::size_t n = rd.nsimple;
  // squared lengths relative to the first simple root of each component:
  // |alpha_j|^2 / |alpha_i|^2 = C(j, i) / C(i, j)
  std::vector<int> comp(n, -1);
  Vec len(n, Rat(1));
  int ncomp = 0;
  for (std::size_t s0 = 0; s0 < n; ++s0) {
    if (comp[s0] >= 0) continue;
    std::deque<std::size_t> q{s0};
    comp[s0] = ncomp;
    while (!q.empty()) {
      std::size_t i = q.front();
      q.pop_front();
      for (std::size_t j = 0; j < n; ++j)
        if (comp[j] < 0 && c(i, j) != 0) {
          comp[j] = ncomp;
          len[j] = len[i] * c(j, i) / c(i, j);
          q.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> out;
  for (int k = 0; k < ncomp; ++k) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (comp[i] == k) idx.push_back(i);
    std::size_t r = idx.size(), npos = 0, nshort = 0;
    for (std::size_t a = 0; a < rd.npos; ++a) {
      bool inside = true;
      for (std::size_t i = 0; i < n; ++i)
        if (comp[i] != k && rd.simple_coords[a][i] != 0) inside = false;
      npos += inside;
    }
    Rat lo = len[idx[0]], hi = len[idx[0]];
    for (auto i : idx) lo = std::min(lo, len[i]), hi = std::max(hi, len[i]);
    for (auto i : idx) nshort += len[i] == lo;
    std::string letter;
    if (hi == 3 * lo) letter = "G";
    else if (hi == 2 * lo) letter = r == 4 && npos == 24 ? "F" : nshort == 1 ? "B" : "C";
    else if (npos == r * (r + 1) / 2) letter = "A";
    else if (npos == r * (r - 1)) letter = "D";
    else letter = "E";
    out.push_back(letter + std::to_string(r));
  }
  return out;
}

RootDatum subsystem(const RootDatum& rd, const std::vector<std::size_t>& idx) {
  std::vector<std::size_t> pos;
  for (auto i : idx)
    if (rd.positive(i)) pos.push_back(i);
  std::sort(pos.begin(), pos.end());
  std::set<std::size_t> posset(pos.begin(), pos.end());
  std::vector<Vec> sr, sc;
  for (auto b : pos) {
    bool simple = true;
    for (auto g : pos) {
      if (g == b) continue;
      Vec img = rd.roots[g] - dot(rd.roots[g], rd.coroots[b]) * rd.roots[b];
      int k = rd.find_root(img);
      if (k < 0) fail_internal("subsystem: reflection image is not a root");
      if (!posset.count(static_cast<std::size_t>(k))) {
        simple = false;
        break;
      }
    }
    if (simple) sr.push_back(rd.roots[b]), sc.push_back(rd.coroots[b]);
  }
  RootDatum s = make_datum(rd.rank, sr, sc);
  if (s.npos != pos.size()) fail_validation("root subset is not a closed subsystem");
  s.factors = identify_factors(s);
  s.isogeny = "sub";
  return s;
}

// ---------------------------------------------------------------- Weyl group

Mat reflection_char(const RootDatum& rd, std::size_t i) {
  Mat m = identity(rd.rank);
  for (std::size_t a = 0; a < rd.rank; ++a)
    for (std::size_t b = 0; b < rd.rank; ++b) m(a, b) -= rd.roots[i][a] * rd.coroots[i][b];
  return m;
}

Mat reflection_cochar(const RootDatum& rd, std::size_t i) {
  Mat m = identity(rd.rank);
  for (std::size_t a = 0; a < rd.rank; ++a)
    for (std::size_t b = 0; b < rd.rank; ++b) m(a, b) -= rd.coroots[i][a] * rd.roots[i][b];
  return m;
}

WeylElement weyl_identity(const RootDatum& rd) {
  return WeylElement{{}, identity(rd.rank), identity(rd.rank)};
}

WeylElement simple_reflection(const RootDatum& rd, std::size_t j) {
  return WeylElement{{j}, reflection_char(rd, j), reflection_cochar(rd, j)};
}

WeylElement weyl_from_word(const RootDatum& rd, const std::vector<std::size_t>& word) {
  WeylElement w = weyl_identity(rd);
  for (auto j : word) {
    if (j >= rd.nsimple) fail_validation("simple index out of range in Weyl word");
    w.on_char = w.on_char * reflection_char(rd, j);
    w.on_cochar = w.on_cochar * reflection_cochar(rd, j);
  }
  w.word = word;
  return w;
}

std::size_t act_on_root(const RootDatum& rd, const WeylElement& w, std::size_t i) {
  int k = rd.find_root(w.on_char * rd.roots[i]);
  if (k < 0) fail_internal("Weyl element does not permute roots");
  return static_cast<std::size_t>(k);
}

std::size_t weyl_length(const RootDatum& rd, const WeylElement& w) {
  std::size_t l = 0;
  for (std::size_t i = 0; i < rd.npos; ++i)
    if (!rd.positive(act_on_root(rd, w, i))) ++l;
  return l;
}

namespace {

// Reduced word for the element with the given character matrix.
WeylElement reduce(const RootDatum& rd, Mat m) {
  Mat start = m;
  std::vector<std::size_t> rev;
  for (;;) {
    bool found = false;
    for (std::size_t j = 0; j < rd.nsimple; ++j) {
      int k = rd.find_root(m * rd.roots[j]);
      if (k < 0) fail_internal("matrix does not permute roots");
      if (!rd.positive(static_cast<std::size_t>(k))) {
        m = m * reflection_char(rd, j);
        rev.push_back(j);
        found = true;
        break;
      }
    }
    if (!found) break;
  }
  if (m != identity(rd.rank)) fail_internal("matrix is not in the Weyl group");
  std::reverse(rev.begin(), rev.end());
  WeylElement w = weyl_from_word(rd, rev);
  if (w.on_char != start) fail_internal("Weyl reduction mismatch");
  return w;
}

}  // namespace

WeylElement weyl_mul(const RootDatum& rd, const WeylElement& a, const WeylElement& b) {
  return reduce(rd, a.on_char * b.on_char);
}

WeylElement weyl_inverse(const RootDatum& rd, const WeylElement& w) {
  std::vector<std::size_t> word(w.word.rbegin(), w.word.rend());
  return weyl_from_word(rd, word);
}

std::vector<WeylElement> weyl_elements(const RootDatum& rd) {
  std::vector<WeylElement> out{weyl_identity(rd)};
  std::set<std::string> seen{to_string(out[0].on_char)};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (std::size_t j = 0; j < rd.nsimple; ++j) {
      Mat m = out[k].on_char * reflection_char(rd, j);
      auto key = to_string(m);
      if (seen.count(key)) continue;
      seen.insert(key);
      auto word = out[k].word;
      word.push_back(j);
      out.push_back(weyl_from_word(rd, word));
    }
    if (out.size() > 100000) fail_validation("Weyl group too large to enumerate");
  }
  return out;
}

WeylElement longest_element(const RootDatum& rd) {
  return make_dominant(rd, -rd.rho_roots(), Side::character).w;
}

namespace {
Rat pair_simple(const RootDatum& rd, const Vec& v, std::size_t j, Side side) {
  return side == Side::character ? dot(v, rd.coroots[j]) : dot(v, rd.roots[j]);
}
}  // namespace

bool is_dominant(const RootDatum& rd, const Vec& v, Side side) {
  for (std::size_t j = 0; j < rd.nsimple; ++j)
    if (pair_simple(rd, v, j, side) < 0) return false;
  return true;
}

Dominant make_dominant(const RootDatum& rd, const Vec& v0, Side side) {
  Vec v = v0;
  std::vector<std::size_t> applied;
  for (;;) {
    bool moved = false;
    for (std::size_t j = 0; j < rd.nsimple; ++j) {
      if (pair_simple(rd, v, j, side) < 0) {
        v = (side == Side::character ? reflection_char(rd, j) : reflection_cochar(rd, j)) * v;
        applied.push_back(j);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  std::vector<std::size_t> word(applied.rbegin(), applied.rend());
  WeylElement w = weyl_from_word(rd, word);
  if (weyl_length(rd, w) != word.size()) fail_internal("make_dominant produced a non-reduced word");
  return Dominant{v, w};
}

// ---------------------------------------------------------------- Levi subsets

LeviSubset levi_from_simples(const RootDatum& rd, std::vector<std::size_t> simples) {
  std::sort(simples.begin(), simples.end());
  simples.erase(std::unique(simples.begin(), simples.end()), simples.end());
  for (auto s : simples)
    if (s >= rd.nsimple) fail_validation("Levi simple index out of range");
  LeviSubset l{simples, {}};
  for (std::size_t i = 0; i < rd.nroots(); ++i) {
    bool inside = true;
    for (std::size_t j = 0; j < rd.nsimple; ++j)
      if (rd.simple_coords[i][j] != 0 && !std::binary_search(simples.begin(), simples.end(), j))
        inside = false;
    if (inside) l.roots.push_back(i);
  }
  return l;
}

LeviSubset full_levi(const RootDatum& rd) {
  std::vector<std::size_t> all(rd.nsimple);
  for (std::size_t j = 0; j < rd.nsimple; ++j) all[j] = j;
  return levi_from_simples(rd, all);
}

std::vector<std::size_t> positive_roots_of(const RootDatum& rd, const LeviSubset& l) {
  std::vector<std::size_t> out;
  for (auto i : l.roots) {
    if (i >= rd.nroots()) fail_validation("Levi root index out of range");
    if (rd.positive(i)) out.push_back(i);
  }
  return out;
}

Vec half_sum_coroots(const RootDatum& rd, const LeviSubset& l) {
  Vec s = zeros(rd.rank);
  for (auto i : positive_roots_of(rd, l)) s = s + rd.coroots[i];
  return Rat(1, 2) * s;
}

Vec half_sum_roots(const RootDatum& rd, const LeviSubset& l) {
  Vec s = zeros(rd.rank);
  for (auto i : positive_roots_of(rd, l)) s = s + rd.roots[i];
  return Rat(1, 2) * s;
}

bool is_closed_levi(const RootDatum& rd, const LeviSubset& l) {
  std::set<std::size_t> in(l.roots.begin(), l.roots.end());
  for (auto i : l.roots) {
    if (!in.count(rd.neg(i))) return false;
    for (auto k : l.roots) {
      Vec img = rd.roots[k] - dot(rd.roots[k], rd.coroots[i]) * rd.roots[i];
      int m = rd.find_root(img);
      if (m < 0 || !in.count(static_cast<std::size_t>(m))) return false;
    }
  }
  if (!is_standard(rd, l)) return true;
  auto ref = levi_from_simples(rd, l.simples);
  return ref.roots == l.roots;
}

bool is_standard(const RootDatum& rd, const LeviSubset& l) {
  return std::all_of(l.simples.begin(), l.simples.end(), [&](std::size_t j) { return j < rd.nsimple; });
}

LeviSubset levi_image(const RootDatum& rd, const LeviSubset& l, const WeylElement& w) {
  LeviSubset out;
  for (auto i : l.roots) {
    std::size_t k = act_on_root(rd, w, i);
    if (rd.positive(i) != rd.positive(k)) fail_validation("Weyl element does not keep the Levi positive system");
    out.roots.push_back(k);
  }
  for (auto j : l.simples) out.simples.push_back(act_on_root(rd, w, j));
  std::sort(out.roots.begin(), out.roots.end());
  std::sort(out.simples.begin(), out.simples.end());
  return out;
}

Vec levi_generic_point(const RootDatum& rd, const LeviSubset& l) {
  std::vector<Vec> rows;
  for (auto i : l.roots) rows.push_back(rd.roots[i]);
  std::vector<Vec> basis;
  if (rows.empty())
    for (std::size_t i = 0; i < rd.rank; ++i) basis.push_back(unit(rd.rank, i));
  else
    basis = nullspace(from_rows(rows, rd.rank));
  std::set<std::size_t> in(l.roots.begin(), l.roots.end());
  for (long base = 97;; base += 2) {
    Vec z = zeros(rd.rank);
    Rat c = 1;
    for (const auto& b : basis) {
      z = z + c * b;
      c *= base;
    }
    bool generic = true;
    for (std::size_t i = 0; i < rd.nroots() && generic; ++i)
      if (!in.count(i) && dot(rd.roots[i], z) == 0) generic = false;
    if (generic) return z;
  }
}

std::vector<LeviSubset> standard_levis(const RootDatum& rd) {
  std::vector<LeviSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << rd.nsimple); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t j = 0; j < rd.nsimple; ++j)
      if (mask >> j & 1) s.push_back(j);
    out.push_back(levi_from_simples(rd, s));
  }
  return out;
}

}  // namespace realendo
