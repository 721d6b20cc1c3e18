#include "chebimg/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace chebimg {

bool Root::positive() const {
  for (long long c : root_coords)
    if (c < 0) return false;
  return true;
}

long long Root::height() const {
  long long h = 0;
  for (long long c : root_coords) h += c;
  return h;
}

std::vector<std::size_t> RootSystem::positive_root_indices() const {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].positive()) idx.push_back(i);
  return idx;
}

const Root& RootSystem::highest_root(std::size_t component) const {
  const Component& comp = components.at(component);
  const Root* best = nullptr;
  for (const Root& r : roots) {
    if (!r.positive()) continue;
    bool inside = true;
    for (int i = 0; i < rank; ++i) {
      const bool in_range = static_cast<std::size_t>(i) >= comp.offset &&
                            static_cast<std::size_t>(i) < comp.offset + comp.rank;
      if (!in_range && r.root_coords[i] != 0) inside = false;
    }
    if (inside && (!best || r.height() > best->height())) best = &r;
  }
  return *best;
}

std::optional<std::size_t> RootSystem::find_root(const IntVector& weight_coords) const {
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (roots[i].weight_coords == weight_coords) return i;
  return std::nullopt;
}

RationalMatrix RootSystem::root_form() const {
  RationalMatrix b(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j)
      b(i, j) = Rational(cartan(i, j) * simple_length_sq[i], 2);
  return b;
}

namespace {

struct Irreducible {
  char family;
  int rank;
};

std::vector<Irreducible> parse_type_spec(std::string_view spec) {
  std::vector<Irreducible> out;
  std::size_t pos = 0;
  if (spec.empty()) throw ParseError("empty type spec");
  while (true) {
    if (pos >= spec.size()) throw ParseError("type spec '" + std::string(spec) + "' ends unexpectedly");
    const char fam = spec[pos++];
    if (std::string_view("ABCDEFG").find(fam) == std::string_view::npos)
      throw ParseError("unknown root system family '" + std::string(1, fam) + "' in '" +
                       std::string(spec) + "'");
    const std::size_t start = pos;
    while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) ++pos;
    if (pos == start) throw ParseError("missing rank after '" + std::string(1, fam) + "'");
    if (pos - start > 3) throw UnsupportedRank("rank too large in '" + std::string(spec) + "'");
    const int r = std::stoi(std::string(spec.substr(start, pos - start)));
    bool ok = false;
    switch (fam) {
      case 'A': ok = r >= 1; break;
      case 'B':
      case 'C': ok = r >= 2; break;
      case 'D': ok = r >= 3; break;
      case 'E': ok = r >= 6 && r <= 8; break;
      case 'F': ok = r == 4; break;
      case 'G': ok = r == 2; break;
    }
    if (!ok)
      throw UnsupportedRank("unsupported rank " + std::to_string(r) + " for type " +
                            std::string(1, fam));
    out.push_back({fam, r});
    if (pos == spec.size()) break;
    if (spec[pos] != 'x') throw ParseError("expected 'x' between factors in '" + std::string(spec) + "'");
    ++pos;
  }
  return out;
}

// Squared lengths of simple roots (short = 2) and Dynkin edges, Bourbaki order.
void dynkin_data(const Irreducible& t, std::vector<long long>& len,
                 std::vector<std::pair<int, int>>& edges) {
  const int n = t.rank;
  len.assign(n, 2);
  edges.clear();
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) edges.emplace_back(i, i + 1);
  };
  switch (t.family) {
    case 'A': chain(n); break;
    case 'B':
      chain(n);
      for (int i = 0; i < n - 1; ++i) len[i] = 4;
      break;
    case 'C':
      chain(n);
      len[n - 1] = 4;
      break;
    case 'D':
      chain(n - 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case 'E': {
      const std::pair<int, int> e8[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
      for (auto [a, b] : e8)
        if (a < n && b < n) edges.emplace_back(a, b);
      break;
    }
    case 'F':
      chain(4);
      len = {4, 4, 2, 2};
      break;
    case 'G':
      chain(2);
      len = {2, 6};
      break;
  }
}

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt irreducible_weyl_order(char family, int n) {
  switch (family) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (BigInt(1) << n) * factorial(n);
    case 'D': return (BigInt(1) << (n - 1)) * factorial(n);
    case 'E': return n == 6 ? BigInt(51840) : n == 7 ? BigInt(2903040) : BigInt(696729600);
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

IntVector weight_of(const IntMatrix& cartan, const IntVector& c) {
  const std::size_t n = c.size();
  IntVector w(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w[i] += cartan(i, j) * c[j];
  return w;
}

Rational form(const RationalMatrix& b, const IntVector& x, const IntVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += Rational(x[i] * y[j]) * b(i, j);
  }
  return s;
}

}  // namespace

RootSystem build_root_system(std::string_view type_spec) {
  const auto factors = parse_type_spec(type_spec);
  RootSystem rs;
  rs.type_spec = std::string(type_spec);
  for (const auto& f : factors) rs.rank += f.rank;
  const int n = rs.rank;

  rs.cartan = IntMatrix(n, n);
  rs.simple_length_sq.assign(n, 2);
  std::size_t offset = 0;
  for (const auto& f : factors) {
    std::vector<long long> len;
    std::vector<std::pair<int, int>> edges;
    dynkin_data(f, len, edges);
    rs.components.push_back({f.family, f.rank, offset});
    for (int i = 0; i < f.rank; ++i) {
      rs.simple_length_sq[offset + i] = len[i];
      rs.cartan(offset + i, offset + i) = 2;
    }
    for (auto [a, b] : edges) {
      // (alpha_a, alpha_b) = -max(len)/2; a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)
      const long long bond = -std::max(len[a], len[b]) / 2;
      rs.cartan(offset + a, offset + b) = 2 * bond / len[a];
      rs.cartan(offset + b, offset + a) = 2 * bond / len[b];
    }
    offset += f.rank;
  }

  rs.gram = RationalMatrix(n, n);
  const RationalMatrix bform = rs.root_form();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      rs.gram(j, k) = Rational(4) * bform(j, k) /
                      Rational(rs.simple_length_sq[j] * rs.simple_length_sq[k]);

  // Closure of the simple roots under simple reflections, in root coordinates.
  std::vector<IntVector> found;
  std::unordered_set<IntVector, IntVectorHash> seen;
  std::deque<IntVector> queue;
  for (int i = 0; i < n; ++i) {
    IntVector e(n, 0);
    e[i] = 1;
    found.push_back(e);
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    const IntVector c = queue.front();
    queue.pop_front();
    const IntVector w = weight_of(rs.cartan, c);
    for (int i = 0; i < n; ++i) {
      if (w[i] == 0) continue;
      IntVector r = c;
      r[i] -= w[i];
      if (seen.insert(r).second) {
        found.push_back(r);
        queue.push_back(r);
      }
    }
  }

  for (const IntVector& c : found) {
    Root root;
    root.root_coords = c;
    root.weight_coords = weight_of(rs.cartan, c);
    root.length_sq = form(bform, c, c);
    root.coroot_coords.resize(n);
    for (int k = 0; k < n; ++k) {
      const Rational v = Rational(c[k] * rs.simple_length_sq[k]) / root.length_sq;
      root.coroot_coords[k] = v.numerator();  // integral for crystallographic systems
    }
    rs.roots.push_back(std::move(root));
  }
  for (int i = 0; i < n; ++i) rs.simple_root_indices.push_back(i);
  return rs;
}

BigInt weyl_group_order_estimate(const RootSystem& rs) {
  BigInt order = 1;
  for (const auto& c : rs.components) order *= irreducible_weyl_order(c.family, c.rank);
  return order;
}

bool AxiomReport::all_passed() const {
  return std::all_of(results.begin(), results.end(), [](const AxiomResult& r) { return r.passed; });
}

AxiomReport verify_axioms(const RootSystem& rs) {
  AxiomReport report;
  const int n = rs.rank;
  const RationalMatrix bform = rs.root_form();
  std::set<IntVector> members;
  for (const Root& r : rs.roots) members.insert(r.root_coords);

  AxiomResult span{"span", true, ""};
  if (rs.roots.empty()) {
    span.passed = false;
    span.witness = "no roots";
  } else {
    RationalMatrix m(rs.roots.size(), n);
    for (std::size_t i = 0; i < rs.roots.size(); ++i)
      for (int j = 0; j < n; ++j) m(i, j) = Rational(rs.roots[i].weight_coords[j]);
    const std::size_t rk = matrix_rank(m);
    if (rk != static_cast<std::size_t>(n)) {
      span.passed = false;
      span.witness = "rank " + std::to_string(rk) + " < " + std::to_string(n);
    }
  }

  AxiomResult multiples{"multiples", true, ""};
  AxiomResult closure{"reflection_closure", true, ""};
  AxiomResult integrality{"integrality", true, ""};

  for (const Root& v : rs.roots) {
    if (!members.count(scale(-1, v.root_coords)) && multiples.passed) {
      multiples.passed = false;
      multiples.witness = "-" + to_string(v.root_coords) + " missing";
    }
    const Rational vv = form(bform, v.root_coords, v.root_coords);
    for (const Root& w : rs.roots) {
      const Rational vw = form(bform, v.root_coords, w.root_coords);
      const Rational ww = form(bform, w.root_coords, w.root_coords);
      // w = lambda v exactly when (v,w)^2 = (v,v)(w,w); then lambda = (v,w)/(v,v).
      if (vw * vw == vv * ww) {
        const Rational lambda = vw / vv;
        if (lambda != Rational(1) && lambda != Rational(-1) && multiples.passed) {
          multiples.passed = false;
          multiples.witness = to_string(w.root_coords) + " = " + to_string(lambda) + " * " +
                              to_string(v.root_coords);
        }
      }
      const Rational cartan_int = Rational(2) * vw / vv;
      if (cartan_int.denominator() != 1) {
        if (integrality.passed) {
          integrality.passed = false;
          integrality.witness = "2<v,w>/<v,v> = " + to_string(cartan_int) + " for v=" +
                                to_string(v.root_coords) + ", w=" + to_string(w.root_coords);
        }
        continue;
      }
      const IntVector image = sub(w.root_coords, scale(cartan_int.numerator(), v.root_coords));
      if (!members.count(image) && closure.passed) {
        closure.passed = false;
        closure.witness = "rho_v(w) = " + to_string(image) + " not a root, v=" +
                          to_string(v.root_coords) + ", w=" + to_string(w.root_coords);
      }
    }
  }
  report.results = {span, multiples, closure, integrality};
  return report;
}

WeylElement WeylElement::identity(int n) {
  return {IntMatrix::identity(n), IntMatrix::identity(n)};
}

WeylElement WeylElement::inverse() const {
  return {coroot_matrix.transpose(), weight_matrix.transpose()};
}

bool WeylElement::is_identity() const {
  return weight_matrix == IntMatrix::identity(weight_matrix.rows());
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  return {a.weight_matrix * b.weight_matrix, a.coroot_matrix * b.coroot_matrix};
}

WeylElement simple_reflection(const RootSystem& rs, int i) {
  return root_reflection(rs.simple_root(i));
}

WeylElement root_reflection(const Root& v) {
  const std::size_t n = v.weight_coords.size();
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) -= v.weight_coords[r] * v.coroot_coords[c];
  return {m, m.transpose()};
}

namespace {

template <typename V>
std::vector<V> reflect_impl(const Root& v, long long ell, const std::vector<V>& x) {
  if (x.size() != v.weight_coords.size()) throw DimensionMismatch("reflect: dimension mismatch");
  V p = V(-ell);
  for (std::size_t i = 0; i < x.size(); ++i) p += V(v.weight_coords[i]) * x[i];
  std::vector<V> y = x;
  for (std::size_t i = 0; i < x.size(); ++i) y[i] -= p * V(v.coroot_coords[i]);
  return y;
}

}  // namespace

RationalVector reflect(const Root& v, long long ell, const RationalVector& x) {
  return reflect_impl(v, ell, x);
}

ComplexVector reflect(const Root& v, long long ell, const ComplexVector& x) {
  return reflect_impl(v, ell, x);
}

std::vector<WeylElement> weyl_group_elements(const RootSystem& rs, std::size_t cap) {
  const BigInt estimate = weyl_group_order_estimate(rs);
  if (estimate > cap)
    throw CapExceeded("Weyl group of " + rs.type_spec + " has " + estimate.str() +
                      " elements, exceeding the cap of " + std::to_string(cap));
  std::vector<WeylElement> gens;
  for (int i = 0; i < rs.rank; ++i) gens.push_back(simple_reflection(rs, i));

  std::vector<WeylElement> elements{WeylElement::identity(rs.rank)};
  std::unordered_set<IntVector, IntVectorHash> seen;
  auto key = [](const WeylElement& w) {
    const auto& d = w.weight_matrix.data();
    return IntVector(d.begin(), d.end());
  };
  seen.insert(key(elements.front()));
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const WeylElement& s : gens) {
      WeylElement next = s * elements[head];
      if (seen.insert(key(next)).second) elements.push_back(std::move(next));
    }
  }
  return elements;
}

std::vector<IntVector> orbit(const RootSystem& rs, const IntVector& lambda) {
  if (lambda.size() != static_cast<std::size_t>(rs.rank))
    throw DimensionMismatch("orbit: weight has wrong dimension");
  std::vector<IntVector> out{lambda};
  std::unordered_set<IntVector, IntVectorHash> seen{lambda};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 0; i < rs.rank; ++i) {
      const long long li = out[head][i];
      if (li == 0) continue;
      IntVector next = out[head];
      const IntVector& alpha = rs.simple_root(i).weight_coords;
      for (int j = 0; j < rs.rank; ++j) next[j] -= li * alpha[j];
      if (seen.insert(next).second) out.push_back(std::move(next));
    }
  }
  return out;
}

bool is_dominant(const IntVector& lambda) {
  return std::all_of(lambda.begin(), lambda.end(), [](long long x) { return x >= 0; });
}

DominantRep dominant_rep(const RootSystem& rs, const IntVector& lambda) {
  DominantRep rep{lambda, WeylElement::identity(rs.rank)};
  while (true) {
    int i = 0;
    while (i < rs.rank && rep.dominant[i] >= 0) ++i;
    if (i == rs.rank) break;
    const WeylElement s = simple_reflection(rs, i);
    rep.dominant = s.weight_matrix.apply(rep.dominant);
    rep.element = s * rep.element;
  }
  return rep;
}

AffineElement AffineElement::identity(int n) {
  return {WeylElement::identity(n), IntVector(n, 0)};
}

AffineElement AffineElement::translation(const IntVector& t) {
  return {WeylElement::identity(static_cast<int>(t.size())), t};
}

AffineElement AffineElement::linear(const WeylElement& w) {
  return {w, IntVector(w.weight_matrix.rows(), 0)};
}

bool AffineElement::is_identity() const { return is_zero(t) && w.is_identity(); }

AffineElement affine_reflection(const Root& v, long long ell) {
  return {root_reflection(v), scale(ell, v.coroot_coords)};
}

RationalVector affine_apply(const AffineElement& g, const RationalVector& x) {
  if (x.size() != g.t.size()) throw DimensionMismatch("affine_apply: dimension mismatch");
  RationalVector y(x.size(), Rational(0));
  const IntMatrix& m = g.w.coroot_matrix;
  for (std::size_t r = 0; r < x.size(); ++r) {
    y[r] = Rational(g.t[r]);
    for (std::size_t c = 0; c < x.size(); ++c) y[r] += Rational(m(r, c)) * x[c];
  }
  return y;
}

ComplexVector affine_apply(const AffineElement& g, const ComplexVector& x) {
  if (x.size() != g.t.size()) throw DimensionMismatch("affine_apply: dimension mismatch");
  ComplexVector y = g.w.coroot_matrix.apply(x);
  for (std::size_t r = 0; r < x.size(); ++r) y[r] += static_cast<double>(g.t[r]);
  return y;
}

AffineElement affine_compose(const AffineElement& g1, const AffineElement& g2) {
  if (g1.t.size() != g2.t.size()) throw DimensionMismatch("affine_compose: dimension mismatch");
  return {g1.w * g2.w, add(g1.t, g1.w.coroot_matrix.apply(g2.t))};
}

AffineElement affine_inverse(const AffineElement& g) {
  const WeylElement winv = g.w.inverse();
  return {winv, scale(-1, winv.coroot_matrix.apply(g.t))};
}

std::string describe(const AffineElement& g) {
  std::ostringstream os;
  os << "t=" << to_string(g.t) << " w=[";
  const IntMatrix& m = g.w.coroot_matrix;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ";" : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  os << ']';
  return os.str();
}

}  // namespace chebimg
