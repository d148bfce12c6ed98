#pragma once

#include <cstdint>
#include <vector>

#include "rigorkit/sparse_poly.hpp"

namespace rigorkit {

/// Dense tensor of Bernstein coefficients of a polynomial over [0,1]^n.
/// Coefficient values are stored as arbitrary-precision integer
/// mantissas over one positive global denominator, so conversion and
/// subdivision stay exact; subdivision divides only by powers of two.
class BernsteinTensor {
public:
  /// Guard against accidental huge allocations; the main surrogate
  /// tensor needs 13^6 ~ 4.8e6 entries.
  static constexpr std::size_t kMaxEntries = std::size_t{1} << 26;

  BernsteinTensor(std::vector<std::uint32_t> degrees,
                  std::vector<Integer> mantissas, Rational scale);

  std::size_t arity() const { return degrees_.size(); }
  const std::vector<std::uint32_t>& degrees() const { return degrees_; }
  std::size_t size() const { return mantissas_.size(); }
  const std::vector<Integer>& mantissas() const { return mantissas_; }
  const Rational& scale() const { return scale_; }

  /// Exact coefficient value at a multi-index (0 <= idx_i <= k_i).
  Rational coefficient(const std::vector<std::uint32_t>& index) const;

  /// Certified bounds: min/max coefficient; p on [0,1]^n lies within.
  Rational bound_max() const;
  Rational bound_min() const;

  /// Exact value of the represented polynomial at a rational point of
  /// the unit box (de Casteljau evaluation per axis).
  Rational eval(const std::vector<Rational>& point) const;

  /// De Casteljau split along `axis` into lower/upper halves, each
  /// reparametrized to [0,1]. Exact; denominators gain only powers of 2.
  std::pair<BernsteinTensor, BernsteinTensor> subdivide(
      std::size_t axis) const;

  /// Degree elevation by one along `axis`; represents the same
  /// polynomial with degree k+1 coefficients.
  BernsteinTensor degree_elevate(std::size_t axis) const;

  /// Per-axis spread (max - min over lines along the axis, hulled over
  /// all lines), used to pick subdivision axes. Returned as mantissa
  /// differences; comparable within one tensor.
  std::size_t widest_spread_axis() const;

private:
  friend BernsteinTensor to_bernstein(const SparsePoly&);
  friend BernsteinTensor to_bernstein_on_box(const SparsePoly&, const Box&);

  std::vector<std::uint32_t> degrees_;
  std::vector<std::size_t> strides_;
  std::vector<Integer> mantissas_;
  Rational scale_;  // value = mantissa * scale, scale > 0

  void init_strides();
};

/// Exact conversion of p (interpreted over the unit box) to Bernstein
/// form with per-variable degrees equal to p's actual degrees.
BernsteinTensor to_bernstein(const SparsePoly& p);

/// Fused exact pipeline: affine reparametrization of p from `box` onto
/// the unit box followed by Bernstein conversion, carried out densely
/// with integer arithmetic. Equivalent to
/// to_bernstein(p.affine_reparam(box)) but much faster for large p.
BernsteinTensor to_bernstein_on_box(const SparsePoly& p, const Box& box);

struct RangeResult {
  RationalInterval range;     // certified enclosure of p over the box
  bool budget_exhausted = false;
  std::size_t boxes_examined = 0;

  bool ok() const { return !budget_exhausted; }
};

/// Certified enclosure of p's range over `box` by Bernstein bounds with
/// recursive subdivision: refines until (coefficient-bound width minus
/// corner-sample width) <= tolerance or the box budget is exhausted
/// (the best enclosure so far is returned either way).
RangeResult range_enclosure(const SparsePoly& p, const Box& box,
                            const Rational& tolerance, std::size_t budget);

}  // namespace rigorkit
