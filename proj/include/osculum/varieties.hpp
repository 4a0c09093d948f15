#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "osculum/linear_form.hpp"
#include "osculum/mpoly.hpp"

namespace osculum {

enum class SourceKind { Projective, Multiprojective };

// Source variables are partitioned into groups, one per projective factor.
// Every coordinate is homogeneous in each group with the group's degree.
struct SourceShape {
  SourceKind kind = SourceKind::Projective;
  std::vector<std::vector<std::size_t>> groups;
  std::vector<unsigned> degrees;

  std::size_t variable_count() const;
  // Affine parameters: sum over groups of (group size - 1).
  std::size_t parameter_count() const;
  static SourceShape projective(std::size_t m, unsigned degree);
  static SourceShape multiprojective(std::size_t factors, unsigned degree_per_factor);
};

class ParamVariety {
 public:
  ParamVariety(std::string name, SourceShape shape, std::vector<MPoly> coordinates);

  const std::string& name() const noexcept { return name_; }
  const SourceShape& shape() const noexcept { return shape_; }
  const std::vector<MPoly>& coordinates() const noexcept { return coords_; }
  std::size_t variable_count() const noexcept { return shape_.variable_count(); }
  std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
  unsigned degree() const;  // total degree of the coordinates

  // Image of a parameter point; every factor block must be nonzero.
  std::vector<Rational> evaluate(std::span<const Rational> point) const;
  void check_point(std::span<const Rational> point) const;

 private:
  std::string name_;
  SourceShape shape_;
  std::vector<MPoly> coords_;
};

// Point of projective space, stored as coprime integers with the first
// nonzero entry positive.
class ProjPoint {
 public:
  explicit ProjPoint(std::span<const Rational> coords);
  static ProjPoint from_integers(std::span<const long> coords);
  static ProjPoint unit(std::size_t length, std::size_t index);

  const std::vector<Rational>& coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) { return a.coords_ == b.coords_; }

 private:
  std::vector<Rational> coords_;
};

ParamVariety veronese(std::size_t m, unsigned d);
// Veronese with coordinates multinomial(a) * x^a: the point with parameter
// vector c is the coefficient vector of (c . X)^d, which is power_point.
ParamVariety apolar_veronese(std::size_t m, unsigned d);
ParamVariety rnc(unsigned d);
// Variables (x_{k,0}, x_{k,1}) sit at indices 2k, 2k+1.
ParamVariety segre(std::size_t n);

ProjPoint power_point(const LinearForm& l, unsigned d);

// Composes the coordinates with a reduced-echelon basis of the functionals
// vanishing on the center.
ParamVariety linear_projection(const ParamVariety& v, std::span<const ProjPoint> center);

struct HyperplaneSection {
  ParamVariety variety;                  // coordinates inside the hyperplane
  std::vector<MPoly> ambient_coordinates;  // same points in the Segre ambient space
  std::vector<Rational> hyperplane;
  MPoly first_factor_x0, first_factor_x1;  // solved first factor (-B, A)
  std::vector<std::vector<Rational>> basis;  // reduced-echelon basis of the hyperplane
  std::vector<std::size_t> pivots;

  std::vector<Rational> lift(std::span<const Rational> y) const;
  // Coordinates of an ambient point lying on the hyperplane.
  std::vector<Rational> restrict_point(std::span<const Rational> x) const;
  std::vector<Rational> restrict_functional(std::span<const Rational> phi) const;
  std::vector<MPoly> restrict_functional(std::span<const MPoly> phi) const;
};

// Chart of Seg(1,...,1) cut by the hyperplane `a` (binary-counter order):
// the first factor is solved as (-B, A) where a . Segre = A*X_{1,0} + B*X_{1,1}.
HyperplaneSection hyperplane_section_param(std::size_t n, std::span<const Rational> a);

}  // namespace osculum
