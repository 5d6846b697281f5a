#include "critfix/ratmap.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "critfix/io.hpp"

namespace critfix {

namespace {

double max_abs(const std::vector<cplx>& c) {
  double m = 0;
  for (auto& a : c) m = std::max(m, std::abs(a));
  return m;
}

}  // namespace

Poly Poly::from_roots(const std::vector<cplx>& roots) {
  Poly p({cplx{1}});
  for (auto r : roots) p = p * Poly({-r, cplx{1}});
  return p;
}

int Poly::degree(double rel_tol) const {
  double m = max_abs(c_);
  if (m == 0) return -1;
  for (int k = static_cast<int>(c_.size()) - 1; k >= 0; --k)
    if (std::abs(c_[k]) > rel_tol * m) return k;
  return -1;
}

Poly Poly::trimmed(double rel_tol) const {
  int d = degree(rel_tol);
  return Poly(std::vector<cplx>(c_.begin(), c_.begin() + (d + 1)));
}

cplx Poly::operator()(cplx z) const {
  cplx v{};
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * z + *it;
  return v;
}

Poly Poly::derivative(int times) const {
  std::vector<cplx> c = c_;
  for (int t = 0; t < times; ++t) {
    if (c.empty()) break;
    std::vector<cplx> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
    c = std::move(d);
  }
  return Poly(c);
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<cplx> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coeff(static_cast<int>(k)) + b.coeff(static_cast<int>(k));
  return Poly(c);
}

Poly operator-(const Poly& a, const Poly& b) { return a + cplx{-1} * b; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly();
  std::vector<cplx> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Poly(c);
}

Poly operator*(cplx s, const Poly& a) {
  std::vector<cplx> c = a.c_;
  for (auto& x : c) x *= s;
  return Poly(c);
}

RootResult polynomial_roots(const Poly& p_in, const RootOptions& opt) {
  RootResult res;
  Poly p = p_in.trimmed();
  const int n = p.degree();
  if (n < 0) throw DomainError("polynomial_roots: zero polynomial");
  if (n == 0) {
    res.converged = true;
    return res;
  }
  const Poly dp = p.derivative();
  const cplx lead = p.coeff(n);
  double bound = 0;
  for (int k = 0; k < n; ++k) bound = std::max(bound, std::abs(p.coeff(k) / lead));
  const double R = 1 + bound;
  std::vector<cplx> z(n);
  for (int k = 0; k < n; ++k) z[k] = std::polar(R, 2 * M_PI * k / n + 0.4);

  for (res.iterations = 0; res.iterations < opt.max_iterations; ++res.iterations) {
    double worst = 0;
    for (int k = 0; k < n; ++k) {
      cplx pv = p(z[k]);
      if (pv == cplx{}) continue;
      cplx ratio = pv / dp(z[k]);
      cplx s{};
      for (int j = 0; j < n; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      cplx w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) w = ratio;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1 + std::abs(z[k])));
    }
    if (worst < opt.step_tol) {
      res.converged = true;
      break;
    }
  }
  // a stalled iterate is acceptable if every residual is at rounding level
  if (!res.converged) {
    double scale = max_abs(p.coeffs());
    bool small = true;
    for (auto r : z) {
      double mag = std::max(1.0, std::pow(std::abs(r), n));
      if (std::abs(p(r)) > 1e-6 * scale * mag) small = false;
    }
    res.converged = small;
  }
  for (auto& r : z) {
    for (int it = 0; it < 3; ++it) {
      cplx d = dp(r);
      if (std::abs(d) == 0) break;
      cplx step = p(r) / d;
      if (!(std::abs(step) < 1e-6 * (1 + std::abs(r)))) break;
      r -= step;
    }
  }
  std::sort(z.begin(), z.end(), [](cplx a, cplx b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  res.roots = z;
  return res;
}

std::vector<RootCluster> cluster_roots(const Poly& p, const std::vector<cplx>& roots, double radius) {
  const int n = static_cast<int>(roots.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) < radius) parent[find(i)] = find(j);
  std::vector<RootCluster> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back({cplx{}, 0});
    }
    out[slot[r]].center += roots[i];
    out[slot[r]].multiplicity += 1;
  }
  for (auto& c : out) {
    c.center /= static_cast<double>(c.multiplicity);
    Poly q = p.derivative(c.multiplicity - 1);
    Poly dq = q.derivative();
    cplx z = c.center;
    for (int it = 0; it < 50; ++it) {
      cplx d = dq(z);
      if (std::abs(d) == 0) break;
      cplx step = q(z) / d;
      z -= step;
      if (std::abs(step) < 1e-16 * (1 + std::abs(z))) break;
    }
    if (std::abs(z - c.center) < radius) c.center = z;
  }
  return out;
}

int RationalMap::degree() const { return std::max(num.degree(), den.degree()); }

std::pair<cplx, cplx> RationalMap::eval_homogeneous(cplx z) const { return {num(z), den(z)}; }

std::pair<cplx, cplx> RationalMap::value_at_infinity() const {
  const int d = degree();
  return {num.coeff(d), den.coeff(d)};
}

double chordal(std::pair<cplx, cplx> a, std::pair<cplx, cplx> b) {
  double na = std::hypot(std::abs(a.first), std::abs(a.second));
  double nb = std::hypot(std::abs(b.first), std::abs(b.second));
  if (na == 0 || nb == 0) return 1;
  return std::abs(a.first * b.second - a.second * b.first) / (na * nb);
}

double chordal(cplx a, cplx b) { return chordal({a, cplx{1}}, {b, cplx{1}}); }

Partition CriticalReport::partition() const {
  Partition p;
  for (const auto& c : points) p.push_back(c.multiplicity);
  std::sort(p.rbegin(), p.rend());
  return p;
}

int CriticalReport::total_multiplicity() const {
  int s = 0;
  for (const auto& c : points) s += c.multiplicity;
  return s;
}

double CriticalReport::max_residual() const {
  double m = 0;
  for (const auto& c : points) m = std::max(m, c.residual);
  return m;
}

CriticalReport critical_points(const RationalMap& f, const CritOptions& opt) {
  const int d = f.degree();
  if (d < 1) throw DomainError("critical_points: map is constant");
  CriticalReport rep;
  rep.degree = d;
  Poly W = (f.num.derivative() * f.den - f.num * f.den.derivative()).trimmed();
  const int dw = W.degree();
  if (dw > 0) {
    RootResult rr = polynomial_roots(W, opt.roots);
    rep.converged = rr.converged;
    for (const auto& c : cluster_roots(W, rr.roots, opt.cluster_radius)) {
      CriticalPoint cp;
      cp.z = c.center;
      cp.multiplicity = c.multiplicity;
      cp.residual = chordal(f.eval_homogeneous(c.center), {c.center, cplx{1}});
      rep.points.push_back(cp);
    }
  }
  const int at_inf = 2 * d - 2 - std::max(dw, 0);
  if (at_inf > 0) {
    CriticalPoint cp;
    cp.at_infinity = true;
    cp.multiplicity = at_inf;
    cp.residual = chordal(f.value_at_infinity(), {cplx{1}, cplx{0}});
    rep.points.push_back(cp);
  }
  std::stable_sort(rep.points.begin(), rep.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.at_infinity != b.at_infinity) return !a.at_infinity;
    if (a.multiplicity != b.multiplicity) return a.multiplicity > b.multiplicity;
    return a.z.real() < b.z.real();
  });
  return rep;
}

FixedCheck is_critically_fixed(const RationalMap& f, double tol, const CritOptions& opt) {
  FixedCheck fc;
  fc.report = critical_points(f, opt);
  fc.ok = fc.report.converged && fc.report.total_multiplicity() == 2 * fc.report.degree - 2 &&
          fc.report.max_residual() < tol;
  return fc;
}

namespace {

// f == z - p/p' as rational functions, by the cross-multiplied identity
bool newton_identity(const RationalMap& f, const std::vector<cplx>& roots, double tol) {
  Poly p = Poly::from_roots(roots);
  Poly dp = p.derivative();
  Poly z({cplx{0}, cplx{1}});
  Poly nn = z * dp - p;
  Poly lhs = f.num * dp;
  Poly rhs = f.den * nn;
  double scale = std::max(max_abs(lhs.coeffs()), max_abs(rhs.coeffs()));
  if (scale == 0) return false;
  return max_abs((lhs - rhs).coeffs()) < tol * scale;
}

}  // namespace

bool newton_compare(const RationalMap& f, double tol, const CritOptions& opt) {
  const int d = f.degree();
  CriticalReport rep = critical_points(f, opt);
  std::vector<cplx> roots;
  for (const auto& c : rep.points) {
    if (c.at_infinity) throw DomainError("newton_compare: infinity is a critical point");
    if (c.residual >= tol) throw DomainError("newton_compare: a critical point is not fixed");
    roots.push_back(c.z);
  }
  if (static_cast<int>(roots.size()) != d)
    throw DomainError("newton_compare: " + std::to_string(roots.size()) + " critical points, expected d=" +
                      std::to_string(d));
  if (f.num.degree() != d || f.den.degree() >= d)
    throw DomainError("newton_compare: infinity is not a fixed point of f");
  return newton_identity(f, roots, tol);
}

RationalMap conjugate_to_infinity(const RationalMap& f, cplx z0) {
  const int d = f.degree();
  // w^d P(z0 + 1/w) = sum_k a_k (z0 w + 1)^k w^(d-k)
  auto lift = [&](const Poly& P) {
    Poly out(std::vector<cplx>(d + 1));
    Poly base({cplx{1}, z0});
    Poly power({cplx{1}});
    for (int k = 0; k <= d; ++k) {
      std::vector<cplx> shift(d - k, cplx{});
      shift.push_back(cplx{1});
      out = out + P.coeff(k) * (power * Poly(shift));
      power = power * base;
    }
    return out;
  };
  Poly A = lift(f.num), B = lift(f.den);
  return RationalMap{B, A - z0 * B};
}

NewtonReport newton_compare_normalized(const RationalMap& f, double tol, const CritOptions& opt) {
  NewtonReport nr;
  const int d = f.degree();
  CriticalReport rep = critical_points(f, opt);
  if (static_cast<int>(rep.points.size()) != d || rep.max_residual() >= tol) {
    nr.note = "critical points are not d distinct fixed points";
    return nr;
  }
  // fixed points: roots of num - z den, plus infinity when deg num > deg den
  Poly z({cplx{0}, cplx{1}});
  Poly fix = (f.num - z * f.den).trimmed(1e-12);
  std::vector<std::pair<cplx, bool>> fixed;
  for (const auto& c : cluster_roots(fix, polynomial_roots(fix, opt.roots).roots, opt.cluster_radius))
    fixed.push_back({c.center, false});
  if (fix.degree() < d + 1) fixed.push_back({cplx{}, true});
  std::vector<std::pair<cplx, bool>> extra;
  for (const auto& fp : fixed) {
    bool critical = false;
    for (const auto& c : rep.points) {
      if (c.at_infinity != fp.second) continue;
      if (c.at_infinity || chordal(c.z, fp.first) < 1e-4) critical = true;
    }
    if (!critical) extra.push_back(fp);
  }
  if (extra.size() != 1) {
    nr.note = std::to_string(extra.size()) + " non-critical fixed points, expected 1";
    return nr;
  }
  nr.hypotheses = true;
  RationalMap g = f;
  if (!extra[0].second) {
    nr.moved = true;
    nr.extra_fixed_point = extra[0].first;
    g = conjugate_to_infinity(f, extra[0].first);
  }
  std::vector<cplx> roots;
  for (const auto& c : rep.points) {
    if (!nr.moved) {
      roots.push_back(c.z);
    } else if (c.at_infinity) {
      roots.push_back(cplx{0});
    } else {
      roots.push_back(1.0 / (c.z - extra[0].first));
    }
  }
  nr.matches = newton_identity(g, roots, tol);
  nr.note = nr.matches ? "matches Newton's method" : "Newton identity fails";
  return nr;
}

namespace {

Poly P(std::initializer_list<cplx> c) { return Poly(std::vector<cplx>(c)); }

// -z^3((2+3c)z - (3+4c)) / (z + c)
RationalMap family_2211(double c) {
  return {P({0, 0, 0, 3 + 4 * c, -(2 + 3 * c)}), P({c, 1})};
}

// -z^4((3+4c)z - (4+5c)) / (z + c)
RationalMap family_3311(double c) {
  return {P({0, 0, 0, 0, 4 + 5 * c, -(3 + 4 * c)}), P({c, 1})};
}

std::vector<CatalogEntry> build_catalog() {
  using namespace std::complex_literals;
  std::vector<CatalogEntry> c;
  const double s5 = std::sqrt(5.0), s21 = std::sqrt(21.0);
  auto add = [&c](std::string name, std::string note, RationalMap f, Partition part, double tol) {
    CatalogEntry e;
    e.name = std::move(name);
    e.note = std::move(note);
    e.map = std::move(f);
    e.partition = std::move(part);
    e.tol = tol;
    c.push_back(std::move(e));
  };
  add("deg4-triangle", "triangle; exact coefficients", {P({0, 0, 0, -2, 1}), P({1, -2})}, {2, 2, 2}, 1e-9);
  add("deg4-path+", "path of length 3, c = -3/8 + sqrt(5)/8", family_2211(-3.0 / 8 + s5 / 8), {2, 2, 1, 1}, 1e-9);
  add("deg4-path-", "path of length 3, c = -3/8 - sqrt(5)/8", family_2211(-3.0 / 8 - s5 / 8), {2, 2, 1, 1}, 1e-9);
  add("deg5-332", "triangle with one doubled edge; exact coefficients",
               {P({0, 0, 0, 0, 5, -3}), P({-3, 5})}, {3, 3, 2}, 1e-9);
  add("deg5-3311-path+", "path with doubled central edge, c = -1/2 + sqrt(5)/10",
               family_3311(-0.5 + s5 / 10), {3, 3, 1, 1}, 1e-9);
  add("deg5-3311-path-", "path with doubled central edge, c = -1/2 - sqrt(5)/10",
               family_3311(-0.5 - s5 / 10), {3, 3, 1, 1}, 1e-9);
  add("deg5-3311-bigon+", "bigon with a leaf on each side, c = -3/10 + sqrt(21)/10",
               family_3311(-0.3 + s21 / 10), {3, 3, 1, 1}, 1e-9);
  add("deg5-3311-bigon-", "bigon with a leaf on each side, c = -3/10 - sqrt(21)/10",
               family_3311(-0.3 - s21 / 10), {3, 3, 1, 1}, 1e-9);
  add("deg5-3221-path", "path of length 3 with an end edge doubled; printed decimals",
               {P({0, 0, 0, 33.32932462, -43.99398693, 16.39759477}), P({-.267067538, 6})}, {3, 2, 2, 1}, 1e-4);
  add("deg5-3221-triangle", "triangle with a leaf; printed decimals",
               {P({0, 0, 0, 6.0 + 1.70058356i, -(3.0 - 2.55087534i), 1.02035014i}), P({-3.0 + .17005836i, 6})},
               {3, 2, 2, 1},
               1e-4);
  add("deg5-3221-triangle-signfix",
               "triangle with a leaf; printed decimals with the linear coefficient read as -(3+2.55087534i)",
               {P({0, 0, 0, 6.0 + 1.70058356i, -(3.0 + 2.55087534i), 1.02035014i}), P({-3.0 + .17005836i, 6})},
               {3, 2, 2, 1},
               1e-4);
  add("deg5-2222", "square; exact coefficients",
               {P({0, 0, 0, 3, -3, 3.0 / 5}), P({-12.0 / 5, 6, -3})}, {2, 2, 2, 2}, 1e-9);
  add("deg5-32111", "Y-shaped tree; printed decimals",
               {P({0, 0, 0, .41144821, -0.06348335, 0.00391776}), P({-.64811739, 1})}, {3, 2, 1, 1, 1}, 1e-4);
  add("deg5-22211", "path of length 4; exact coefficients",
               {P({0, 0, 0, 1, -1.0 / 4, -1.0 / 20}), P({-1.0 / 20, -1.0 / 4, 1})}, {2, 2, 2, 1, 1}, 1e-9);
  CatalogEntry a;
  a.name = "deg6-33211a";
  a.note = "triangle with two outer leaves; printed decimals from Thurston iteration";
  a.map.num = P({-.2823382388 + .0873666659i, -.6106212003 - .2210949962i, -1.5258285009 + 1.6871931450i,
                 3.3728946411 - 2.2256057710i, -.5227487239 + 3.1529307220i, -8.5737682757 + .3796365169i,
                 -.3915110282 - 1.2571815540i});
  a.map.den = P({-1.0, -3.6399623589 + .5053341577i, 1.8652782469 - 2.2777114530i, -2.2515718241 + 7.7088079910i,
                 -9.2611252563 + .6459068671i, 0, 0});
  a.partition = {3, 3, 2, 1, 1};
  a.tol = 1e-3;
  a.expected_fixed = {0.26444 - 0.046607i, 0.52144 - 0.66036i, -0.59233 + 0.023373i, -0.47002 + 1.7073i};
  a.expected_tol = 1e-3;
  c.push_back(a);
  return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> c = build_catalog();
  return c;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return e;
  throw DomainError("unknown catalog map: " + name);
}

nlohmann::json map_to_json(const RationalMap& f) {
  auto enc = [](const Poly& p) {
    nlohmann::json a = nlohmann::json::array();
    for (auto c : p.coeffs()) a.push_back({c.real(), c.imag()});
    return a;
  };
  return {{"schema", kSchema}, {"num", enc(f.num)}, {"den", enc(f.den)}};
}

RationalMap map_from_json(const nlohmann::json& j) {
  auto dec = [](const nlohmann::json& a) {
    if (!a.is_array()) throw DomainError("map coefficients must be an array");
    std::vector<cplx> c;
    for (const auto& x : a) {
      if (x.is_number())
        c.emplace_back(x.get<double>(), 0.0);
      else if (x.is_array() && x.size() == 2)
        c.emplace_back(x[0].get<double>(), x[1].get<double>());
      else
        throw DomainError("coefficient must be a number or [re, im]");
    }
    return Poly(c);
  };
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw DomainError("map document needs num and den");
  RationalMap f{dec(j["num"]), dec(j["den"])};
  if (f.den.degree() < 0) throw DomainError("denominator is zero");
  if (f.degree() < 1) throw DomainError("map is constant");
  return f;
}

nlohmann::json report_to_json(const CriticalReport& r) {
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& c : r.points) {
    nlohmann::json p;
    if (c.at_infinity)
      p["z"] = "inf";
    else
      p["z"] = {c.z.real(), c.z.imag()};
    p["multiplicity"] = c.multiplicity;
    p["residual"] = c.residual;
    pts.push_back(p);
  }
  return {{"degree", r.degree}, {"converged", r.converged}, {"points", pts}};
}

}  // namespace critfix
