#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "critfix/algebra.hpp"
#include "json.hpp"

namespace critfix {

using cplx = std::complex<double>;

// coefficients in ascending degree
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<cplx> c) : c_(std::move(c)) {}
  static Poly from_roots(const std::vector<cplx>& roots);

  const std::vector<cplx>& coeffs() const { return c_; }
  cplx coeff(int k) const { return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : cplx{}; }
  // index of the last coefficient above rel_tol * max |coefficient|; -1 for the zero polynomial
  int degree(double rel_tol = 1e-13) const;
  cplx operator()(cplx z) const;
  Poly derivative(int times = 1) const;
  Poly trimmed(double rel_tol = 1e-13) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(cplx s, const Poly& a);

 private:
  std::vector<cplx> c_;
};

struct RootOptions {
  int max_iterations = 500;
  double step_tol = 1e-14;
};

struct RootResult {
  std::vector<cplx> roots;  // with multiplicity
  bool converged = false;
  int iterations = 0;
};

// simultaneous Aberth iteration from a circle outside the Cauchy bound, then Newton polishing
RootResult polynomial_roots(const Poly& p, const RootOptions& opt = {});

struct RootCluster {
  cplx center;
  int multiplicity = 1;
};

// merge roots closer than radius; centers refined by Newton on the (m-1)-th derivative
std::vector<RootCluster> cluster_roots(const Poly& p, const std::vector<cplx>& roots, double radius);

struct RationalMap {
  Poly num, den;
  int degree() const;
  // value as a point of the sphere: (p, q) homogeneous at a finite z
  std::pair<cplx, cplx> eval_homogeneous(cplx z) const;
  std::pair<cplx, cplx> value_at_infinity() const;
};

// chordal distance between [p1:q1] and [p2:q2]
double chordal(std::pair<cplx, cplx> a, std::pair<cplx, cplx> b);
double chordal(cplx a, cplx b);

struct CriticalPoint {
  cplx z;
  bool at_infinity = false;
  int multiplicity = 1;
  double residual = 0;  // chordal distance between f(c) and c
};

struct CriticalReport {
  int degree = 0;
  bool converged = true;
  std::vector<CriticalPoint> points;
  Partition partition() const;
  int total_multiplicity() const;
  double max_residual() const;
};

struct CritOptions {
  double cluster_radius = 1e-2;
  RootOptions roots;
};

CriticalReport critical_points(const RationalMap& f, const CritOptions& opt = {});

struct FixedCheck {
  bool ok = false;
  CriticalReport report;
};
FixedCheck is_critically_fixed(const RationalMap& f, double tol, const CritOptions& opt = {});

// f = z - p/p' with p the product over the d finite critical points; throws DomainError unless the
// critical points are d distinct finite fixed points and infinity is a non-critical fixed point
bool newton_compare(const RationalMap& f, double tol, const CritOptions& opt = {});

struct NewtonReport {
  bool hypotheses = false;  // d critical points, all fixed, one further fixed point
  bool moved = false;       // the extra fixed point was moved to infinity first
  cplx extra_fixed_point{};
  bool matches = false;
  std::string note;
};
// like newton_compare, but first conjugates the remaining fixed point to infinity when needed
NewtonReport newton_compare_normalized(const RationalMap& f, double tol, const CritOptions& opt = {});

// conjugate by w = 1/(z - z0)
RationalMap conjugate_to_infinity(const RationalMap& f, cplx z0);

struct CatalogEntry {
  std::string name;
  std::string note;
  RationalMap map;
  Partition partition;
  double tol = 1e-9;
  std::vector<cplx> expected_fixed;  // finite reference critical points, if tabulated
  double expected_tol = 0;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry& catalog_entry(const std::string& name);

nlohmann::json map_to_json(const RationalMap& f);
RationalMap map_from_json(const nlohmann::json& j);
nlohmann::json report_to_json(const CriticalReport& r);

}  // namespace critfix
