#include "rigorkit/bernstein.hpp"

#include <algorithm>
#include <list>
#include <numeric>

namespace rigorkit {

namespace {

Integer binom(unsigned n, unsigned k) {
  Integer r;
  if (k > n) return Integer(0);
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::size_t checked_size(const std::vector<std::uint32_t>& degrees) {
  std::size_t total = 1;
  for (auto k : degrees) {
    const std::size_t dim = static_cast<std::size_t>(k) + 1;
    if (total > BernsteinTensor::kMaxEntries / dim) {
      throw std::length_error(
          "Bernstein tensor would exceed the entry limit (2^26); "
          "split the box or reduce degrees first");
    }
    total *= dim;
  }
  return total;
}

}  // namespace

BernsteinTensor::BernsteinTensor(std::vector<std::uint32_t> degrees,
                                 std::vector<Integer> mantissas,
                                 Rational scale)
    : degrees_(std::move(degrees)),
      mantissas_(std::move(mantissas)),
      scale_(std::move(scale)) {
  const std::size_t expect = checked_size(degrees_);
  if (mantissas_.size() != expect) {
    throw std::invalid_argument("Bernstein tensor extent mismatch");
  }
  if (scale_ <= 0) {
    throw std::invalid_argument("Bernstein tensor scale must be positive");
  }
  init_strides();
}

void BernsteinTensor::init_strides() {
  strides_.assign(degrees_.size(), 1);
  for (std::size_t i = degrees_.size(); i-- > 1;) {
    strides_[i - 1] = strides_[i] * (degrees_[i] + 1);
  }
}

Rational BernsteinTensor::coefficient(
    const std::vector<std::uint32_t>& index) const {
  if (index.size() != degrees_.size()) {
    throw ArityMismatch("coefficient index arity mismatch");
  }
  std::size_t off = 0;
  for (std::size_t i = 0; i < index.size(); ++i) {
    if (index[i] > degrees_[i]) {
      throw std::out_of_range("coefficient index out of range");
    }
    off += index[i] * strides_[i];
  }
  return Rational(mantissas_[off]) * scale_;
}

Rational BernsteinTensor::bound_max() const {
  const Integer* best = &mantissas_[0];
  for (const auto& m : mantissas_) {
    if (m > *best) best = &m;
  }
  return Rational(*best) * scale_;
}

Rational BernsteinTensor::bound_min() const {
  const Integer* best = &mantissas_[0];
  for (const auto& m : mantissas_) {
    if (m < *best) best = &m;
  }
  return Rational(*best) * scale_;
}

Rational BernsteinTensor::eval(const std::vector<Rational>& point) const {
  if (point.size() != degrees_.size()) {
    throw ArityMismatch("evaluation point arity mismatch");
  }
  // Collapse one axis at a time by direct basis evaluation.
  std::vector<Rational> values(mantissas_.size());
  for (std::size_t i = 0; i < mantissas_.size(); ++i) {
    values[i] = Rational(mantissas_[i]);
  }
  std::size_t count = values.size();
  for (std::size_t axis = degrees_.size(); axis-- > 0;) {
    const unsigned k = degrees_[axis];
    const Rational& x = point[axis];
    // Basis weights B^k_i(x).
    std::vector<Rational> w(k + 1);
    Rational xp(1);
    for (unsigned i = 0; i <= k; ++i) {
      w[i] = Rational(binom(k, i)) * xp;
      xp *= x;
    }
    // (1-x) powers, applied from the top index down.
    const Rational one_minus = Rational(1) - x;
    Rational omp(1);
    for (unsigned i = k + 1; i-- > 0;) {
      w[i] *= omp;
      omp *= one_minus;
    }
    const std::size_t inner = count / (k + 1);
    std::vector<Rational> next(inner, Rational(0));
    // axis is the innermost remaining dimension? Collapse respecting
    // current layout: the remaining tensor has shape degrees_[0..axis],
    // with axis innermost (stride 1) because outer axes were collapsed
    // from the back.
    for (std::size_t outer = 0; outer < inner; ++outer) {
      Rational acc(0);
      for (unsigned i = 0; i <= k; ++i) {
        acc += w[i] * values[outer * (k + 1) + i];
      }
      next[outer] = acc;
    }
    values = std::move(next);
    count = inner;
  }
  return values[0] * scale_;
}

std::pair<BernsteinTensor, BernsteinTensor> BernsteinTensor::subdivide(
    std::size_t axis) const {
  if (axis >= degrees_.size()) throw std::out_of_range("axis out of range");
  const unsigned k = degrees_[axis];
  const std::size_t stride = strides_[axis];
  const std::size_t n = mantissas_.size();
  std::vector<Integer> left(n), right(n);
  std::vector<Integer> tri(k + 1);

  // Iterate over all lines along `axis`.
  const std::size_t block = stride * (k + 1);
  for (std::size_t base = 0; base < n; base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t start = base + off;
      for (unsigned i = 0; i <= k; ++i) tri[i] = mantissas_[start + i * stride];
      // Scaled de Casteljau triangle: row r holds 2^r * b^(r), so the
      // only divisions (by 2^k overall) happen once via the scale.
      // left_i = tri_after_row_i[i] * 2^(k-i), right_j = row_(k-j)[k] * 2^j.
      left[start + 0 * stride] = tri[0];
      right[start + k * stride] = tri[k];
      for (unsigned r = 1; r <= k; ++r) {
        for (unsigned i = k; i >= r; --i) {
          tri[i] = tri[i - 1] + tri[i];
          if (i == r) break;
        }
        left[start + r * stride] = tri[r];
        right[start + (k - r) * stride] = tri[k];
      }
      // Uniform scaling to 2^k.
      for (unsigned i = 0; i <= k; ++i) {
        Integer& l = left[start + i * stride];
        Integer& rgt = right[start + i * stride];
        mpz_mul_2exp(l.get_mpz_t(), l.get_mpz_t(), k - i);
        mpz_mul_2exp(rgt.get_mpz_t(), rgt.get_mpz_t(), i);
      }
    }
  }
  Rational new_scale = scale_;
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, k);
  new_scale /= Rational(pow2);
  return {BernsteinTensor(degrees_, std::move(left), new_scale),
          BernsteinTensor(degrees_, std::move(right), new_scale)};
}

BernsteinTensor BernsteinTensor::degree_elevate(std::size_t axis) const {
  if (axis >= degrees_.size()) throw std::out_of_range("axis out of range");
  const unsigned k = degrees_[axis];
  auto new_degrees = degrees_;
  new_degrees[axis] = k + 1;
  const std::size_t new_size = checked_size(new_degrees);

  // (k+1) b'_i = i b_{i-1} + (k+1-i) b_i
  BernsteinTensor result(new_degrees, std::vector<Integer>(new_size),
                         scale_ / Rational(k + 1));
  const std::size_t stride = strides_[axis];
  const std::size_t block_in = stride * (k + 1);
  const std::size_t new_stride = result.strides_[axis];
  const std::size_t block_out = new_stride * (k + 2);
  const std::size_t lines = mantissas_.size() / block_in;
  for (std::size_t line = 0; line < lines; ++line) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t in_start = line * block_in + off;
      const std::size_t out_start = line * block_out + off;
      for (unsigned i = 0; i <= k + 1; ++i) {
        Integer v(0);
        if (i > 0) v += Integer(i) * mantissas_[in_start + (i - 1) * stride];
        if (i <= k) {
          v += Integer(k + 1 - i) * mantissas_[in_start + i * stride];
        }
        result.mantissas_[out_start + i * new_stride] = std::move(v);
      }
    }
  }
  return result;
}

std::size_t BernsteinTensor::widest_spread_axis() const {
  std::size_t best_axis = 0;
  Integer best_spread(-1);
  std::vector<Integer> line;
  for (std::size_t axis = 0; axis < degrees_.size(); ++axis) {
    const unsigned k = degrees_[axis];
    const std::size_t stride = strides_[axis];
    const std::size_t block = stride * (k + 1);
    Integer spread(0);
    for (std::size_t base = 0; base < mantissas_.size(); base += block) {
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t start = base + off;
        const Integer* lo = &mantissas_[start];
        const Integer* hi = lo;
        for (unsigned i = 1; i <= k; ++i) {
          const Integer& v = mantissas_[start + i * stride];
          if (v < *lo) lo = &v;
          if (v > *hi) hi = &v;
        }
        Integer s = *hi - *lo;
        if (s > spread) spread = std::move(s);
      }
    }
    if (spread > best_spread) {
      best_spread = spread;
      best_axis = axis;
    }
  }
  return best_axis;
}

// ---------------------------------------------------------------------
// Conversion pipeline (dense, exact, scaled-integer)

namespace {

struct DenseTensor {
  std::vector<std::uint32_t> degrees;
  std::vector<std::size_t> strides;
  std::vector<Integer> values;  // power-basis or Bernstein coefficients
  Integer denom;                // global denominator, > 0

  void init(const std::vector<std::uint32_t>& degs) {
    degrees = degs;
    const std::size_t n = checked_size(degrees);
    strides.assign(degrees.size(), 1);
    for (std::size_t i = degrees.size(); i-- > 1;) {
      strides[i - 1] = strides[i] * (degrees[i] + 1);
    }
    values.assign(n, Integer(0));
    denom = 1;
  }
};

// Fills the dense power-basis tensor from p; denom = lcm of coefficient
// denominators.
void dense_fill(const SparsePoly& p, DenseTensor* t) {
  t->init(p.per_variable_degrees());
  Integer lcm(1);
  for (const auto& [m, c] : p.terms()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  for (const auto& [m, c] : p.terms()) {
    std::size_t off = 0;
    for (std::size_t i = 0; i < m.size(); ++i) off += m[i] * t->strides[i];
    Integer scaled = c.get_num() * (lcm / c.get_den());
    t->values[off] = std::move(scaled);
  }
  t->denom = lcm;
}

// Applies a per-line linear transform along `axis`:
//   new[j] = sum_t F[t][j] old[t]   (F lower- or upper-triangular).
// `factor(t, j)` must be integer-valued.
template <typename FactorFn>
void axis_transform(DenseTensor* t, std::size_t axis, FactorFn factor) {
  const unsigned k = t->degrees[axis];
  const std::size_t stride = t->strides[axis];
  const std::size_t block = stride * (k + 1);
  // Precompute the factor matrix.
  std::vector<std::vector<Integer>> F(k + 1, std::vector<Integer>(k + 1));
  for (unsigned tt = 0; tt <= k; ++tt) {
    for (unsigned j = 0; j <= k; ++j) F[tt][j] = factor(tt, j);
  }
  std::vector<Integer> line(k + 1), out(k + 1);
  Integer tmp;
  for (std::size_t base = 0; base < t->values.size(); base += block) {
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t start = base + off;
      for (unsigned i = 0; i <= k; ++i) line[i] = t->values[start + i * stride];
      for (unsigned j = 0; j <= k; ++j) {
        Integer acc(0);
        for (unsigned tt = 0; tt <= k; ++tt) {
          if (F[tt][j] == 0) continue;
          mpz_mul(tmp.get_mpz_t(), F[tt][j].get_mpz_t(),
                  line[tt].get_mpz_t());
          acc += tmp;
        }
        out[j] = std::move(acc);
      }
      for (unsigned i = 0; i <= k; ++i) {
        t->values[start + i * stride] = std::move(out[i]);
      }
    }
  }
}

// Power-basis coefficient substitution x -> c + w x along one axis:
//   a'_j = sum_{t>=j} C(t,j) c^(t-j) w^j a_t,
// scaled by (cd wd)^k to stay integral.
void affine_axis(DenseTensor* t, std::size_t axis, const Rational& c,
                 const Rational& w) {
  const unsigned k = t->degrees[axis];
  const Integer cn = c.get_num(), cd = c.get_den();
  const Integer wn = w.get_num(), wd = w.get_den();
  std::vector<Integer> cn_pow(k + 1), cd_pow(k + 1), wn_pow(k + 1),
      wd_pow(k + 1);
  cn_pow[0] = cd_pow[0] = wn_pow[0] = wd_pow[0] = 1;
  for (unsigned i = 1; i <= k; ++i) {
    cn_pow[i] = cn_pow[i - 1] * cn;
    cd_pow[i] = cd_pow[i - 1] * cd;
    wn_pow[i] = wn_pow[i - 1] * wn;
    wd_pow[i] = wd_pow[i - 1] * wd;
  }
  axis_transform(t, axis, [&](unsigned tt, unsigned j) -> Integer {
    if (tt < j) return Integer(0);
    // C(t,j) cn^(t-j) wn^j cd^(k-(t-j)) wd^(k-j)
    return binom(tt, j) * cn_pow[tt - j] * wn_pow[j] * cd_pow[k - (tt - j)] *
           wd_pow[k - j];
  });
  Integer scale_up = cd_pow[k] * wd_pow[k];
  t->denom *= scale_up;
}

// Power basis -> Bernstein along one axis:
//   b_i = (1/C(k,i)) sum_{j<=i} C(k-j, i-j) a_j,
// scaled by L = lcm_i C(k,i) to stay integral.
void bernstein_axis(DenseTensor* t, std::size_t axis) {
  const unsigned k = t->degrees[axis];
  Integer L(1);
  for (unsigned i = 0; i <= k; ++i) {
    Integer b = binom(k, i);
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), b.get_mpz_t());
  }
  axis_transform(t, axis, [&](unsigned j, unsigned i) -> Integer {
    // note: axis_transform computes new[i] = sum_j F[j][i] old[j]
    if (j > i) return Integer(0);
    return binom(k - j, i - j) * (L / binom(k, i));
  });
  t->denom *= L;
}

BernsteinTensor finish(DenseTensor&& t) {
  return BernsteinTensor(t.degrees, std::move(t.values),
                         Rational(1, 1) / Rational(t.denom));
}

}  // namespace

BernsteinTensor to_bernstein(const SparsePoly& p) {
  if (p.is_zero()) {
    return BernsteinTensor(std::vector<std::uint32_t>(p.arity(), 0),
                           std::vector<Integer>{Integer(0)}, Rational(1));
  }
  DenseTensor t;
  dense_fill(p, &t);
  for (std::size_t axis = 0; axis < t.degrees.size(); ++axis) {
    bernstein_axis(&t, axis);
  }
  return finish(std::move(t));
}

BernsteinTensor to_bernstein_on_box(const SparsePoly& p, const Box& box) {
  if (box.arity() != p.arity()) throw ArityMismatch("box arity mismatch");
  for (std::size_t i = 0; i < box.arity(); ++i) {
    if (box[i].width() == 0) {
      throw DegenerateBox("Bernstein conversion over zero-width axis " +
                          std::to_string(i));
    }
  }
  if (p.is_zero()) return to_bernstein(p);
  DenseTensor t;
  dense_fill(p, &t);
  for (std::size_t axis = 0; axis < t.degrees.size(); ++axis) {
    affine_axis(&t, axis, box[axis].lo, box[axis].width());
    bernstein_axis(&t, axis);
  }
  return finish(std::move(t));
}

// ---------------------------------------------------------------------
// Range enclosure by subdivision

namespace {

struct Leaf {
  BernsteinTensor tensor;
  Rational min_v, max_v;        // coefficient bounds
  Rational corner_lo, corner_hi;  // exact values at box corners

  explicit Leaf(BernsteinTensor t)
      : tensor(std::move(t)),
        min_v(tensor.bound_min()),
        max_v(tensor.bound_max()) {
    corner_values();
  }

  void corner_values() {
    const auto& degs = tensor.degrees();
    const std::size_t n = degs.size();
    std::vector<std::uint32_t> idx(n, 0);
    bool first = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      for (std::size_t i = 0; i < n; ++i) {
        idx[i] = (mask >> i) & 1 ? degs[i] : 0;
      }
      const Rational v = tensor.coefficient(idx);
      if (first || v < corner_lo) corner_lo = v;
      if (first || v > corner_hi) corner_hi = v;
      first = false;
    }
  }

  Rational spread() const { return max_v - min_v; }
};

}  // namespace

RangeResult range_enclosure(const SparsePoly& p, const Box& box,
                            const Rational& tolerance, std::size_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  RangeResult result;
  if (p.is_zero()) {
    result.range = {Rational(0), Rational(0)};
    result.boxes_examined = 1;
    return result;
  }

  std::list<Leaf> leaves;
  leaves.emplace_back(to_bernstein_on_box(p, box));
  result.boxes_examined = 1;

  auto outer_inner = [&leaves]() {
    Rational olo = leaves.front().min_v, ohi = leaves.front().max_v;
    Rational ilo = leaves.front().corner_lo, ihi = leaves.front().corner_hi;
    for (const auto& l : leaves) {
      olo = std::min(olo, l.min_v);
      ohi = std::max(ohi, l.max_v);
      ilo = std::min(ilo, l.corner_lo);
      ihi = std::max(ihi, l.corner_hi);
    }
    return std::make_pair(RationalInterval{olo, ohi},
                          RationalInterval{ilo, ihi});
  };

  while (true) {
    auto [outer, inner] = outer_inner();
    if (outer.width() - inner.width() <= tolerance) {
      result.range = outer;
      return result;
    }
    if (result.boxes_examined + 2 > budget) {
      result.range = outer;
      result.budget_exhausted = true;
      return result;
    }
    // Subdivide the leaf holding an outer endpoint that the corner
    // samples have not yet certified; prefer the larger excess.
    const Rational excess_lo = inner.lo - outer.lo;
    const Rational excess_hi = outer.hi - inner.hi;
    auto target = leaves.begin();
    bool want_min = excess_lo >= excess_hi;
    for (auto it = leaves.begin(); it != leaves.end(); ++it) {
      if (want_min ? (it->min_v == outer.lo) : (it->max_v == outer.hi)) {
        target = it;
        break;
      }
    }
    const std::size_t axis = target->tensor.widest_spread_axis();
    auto halves = target->tensor.subdivide(axis);
    leaves.erase(target);
    leaves.emplace_back(std::move(halves.first));
    leaves.emplace_back(std::move(halves.second));
    result.boxes_examined += 2;
  }
}

}  // namespace rigorkit
