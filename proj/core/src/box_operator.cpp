#include "lattice_hardy/box_operator.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "lattice_hardy/errors.hpp"

namespace lattice_hardy {

std::size_t BoxSpec::slots() const {
  std::size_t n = 1;
  for (int j = 0; j < dim; ++j) n *= static_cast<std::size_t>(2 * radius + 1);
  return n;
}

BoxOperator::BoxOperator(BoxSpec box, int power, std::vector<int> axis_order)
    : box_(box), power_(power), axis_order_(std::move(axis_order)) {
  check_dimension(box.dim);
  if (box.radius < 1) throw ArgumentError("box radius must be at least 1");
  if (power < 0) throw ArgumentError("Laplacian power must be non-negative");
  const int d = box.dim;
  if (axis_order_.empty()) {
    axis_order_.resize(static_cast<std::size_t>(d));
    std::iota(axis_order_.begin(), axis_order_.end(), 0);
  }
  {
    std::vector<int> sorted = axis_order_;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> ident(static_cast<std::size_t>(d));
    std::iota(ident.begin(), ident.end(), 0);
    if (sorted != ident) throw ArgumentError("axis_order must be a permutation of 0..d-1");
  }
  const std::size_t side = static_cast<std::size_t>(2 * box.radius + 1);
  pad_side_ = 2 * (box.radius + power) + 1;
  box_stride_.assign(static_cast<std::size_t>(d), 0);
  pad_stride_.assign(static_cast<std::size_t>(d), 0);
  std::size_t s = 1;
  std::ptrdiff_t ps = 1;
  for (int pos = 0; pos < d; ++pos) {
    const auto axis = static_cast<std::size_t>(axis_order_[static_cast<std::size_t>(pos)]);
    box_stride_[axis] = s;
    pad_stride_[axis] = ps;
    s *= side;
    ps *= pad_side_;
  }
  slots_ = s;
  origin_ = 0;
  pad_center_ = 0;
  for (int j = 0; j < d; ++j) {
    origin_ += static_cast<std::size_t>(box.radius) * box_stride_[static_cast<std::size_t>(j)];
    pad_center_ += static_cast<std::ptrdiff_t>(box.radius + power) * pad_stride_[static_cast<std::size_t>(j)];
  }
  input_.assign(static_cast<std::size_t>(ps), 0.0);
  pad_offset_.resize(slots_);
  for (std::size_t slot = 0; slot < slots_; ++slot) {
    const MultiIndex n = site(slot);
    std::ptrdiff_t p = pad_center_;
    for (int j = 0; j < d; ++j) p += n[j] * pad_stride_[static_cast<std::size_t>(j)];
    pad_offset_[slot] = static_cast<std::size_t>(p);
  }
  if (power > 0) {
    work_a_.assign(static_cast<std::size_t>(ps), 0.0);
    work_b_.assign(static_cast<std::size_t>(ps), 0.0);
  }
}

MultiIndex BoxOperator::site(std::size_t slot) const {
  if (slot >= slots_) throw ArgumentError("slot out of range");
  const int d = box_.dim;
  const std::size_t side = static_cast<std::size_t>(2 * box_.radius + 1);
  MultiIndex n(d);
  for (int pos = 0; pos < d; ++pos) {
    const int axis = axis_order_[static_cast<std::size_t>(pos)];
    n[axis] = static_cast<int>(slot % side) - box_.radius;
    slot /= side;
  }
  return n;
}

std::size_t BoxOperator::slot(const MultiIndex& n) const {
  if (n.dim() != box_.dim || n.linf() > box_.radius) {
    throw ArgumentError("site " + n.to_string() + " lies outside the box of radius " + std::to_string(box_.radius));
  }
  std::size_t s = 0;
  for (int j = 0; j < box_.dim; ++j) {
    s += static_cast<std::size_t>(n[j] + box_.radius) * box_stride_[static_cast<std::size_t>(j)];
  }
  return s;
}

// out = Delta in, on the centred box of the given radius (padded layout).
void BoxOperator::stencil(const std::vector<double>& in, std::vector<double>& out, int radius) const {
  const int d = box_.dim;
  const double diag = 2.0 * d;
  // Odometer over all axes but the fastest padded one.
  const auto fast = static_cast<std::size_t>(axis_order_[0]);
  const std::ptrdiff_t fast_stride = pad_stride_[fast];
  std::vector<int> idx(static_cast<std::size_t>(d), -radius);
  const int line = 2 * radius + 1;
  while (true) {
    std::ptrdiff_t base = pad_center_;
    for (int j = 0; j < d; ++j) base += idx[static_cast<std::size_t>(j)] * pad_stride_[static_cast<std::size_t>(j)];
    for (int a = 0; a < line; ++a) {
      const std::ptrdiff_t i = base + a * fast_stride;
      double v = diag * in[static_cast<std::size_t>(i)];
      for (int j = 0; j < d; ++j) {
        const std::ptrdiff_t st = pad_stride_[static_cast<std::size_t>(j)];
        v -= in[static_cast<std::size_t>(i - st)] + in[static_cast<std::size_t>(i + st)];
      }
      out[static_cast<std::size_t>(i)] = v;
    }
    int pos = 1;
    for (; pos < d; ++pos) {
      auto& c = idx[static_cast<std::size_t>(axis_order_[static_cast<std::size_t>(pos)])];
      if (c < radius) {
        ++c;
        break;
      }
      c = -radius;
    }
    if (pos == d) break;
  }
}

void BoxOperator::apply(std::span<const double> u, std::span<double> out) const {
  if (u.size() != slots_ || out.size() != slots_) throw ArgumentError("vector size does not match the box");
  const int r = box_.radius;

  for (std::size_t s = 0; s < slots_; ++s) input_[pad_offset_[s]] = u[s];
  input_[pad_offset_[origin_]] = 0.0;
  const std::vector<double>* src = &input_;
  for (int step = 1; step <= power_; ++step) {
    std::vector<double>& dst = (step % 2 == 1) ? work_a_ : work_b_;
    stencil(*src, dst, r + power_ - step);
    src = &dst;
  }
  const double* res = src->data();
  for (std::size_t s = 0; s < slots_; ++s) out[s] = res[pad_offset_[s]];
  out[origin_] = 0.0;
}

LatticeFunction BoxOperator::extend(std::span<const double> u) const {
  if (u.size() != slots_) throw ArgumentError("vector size does not match the box");
  LatticeFunction f(box_.dim);
  for (std::size_t s = 0; s < slots_; ++s) {
    if (s != origin_ && u[s] != 0.0) f.set(site(s), u[s]);
  }
  return f;
}

std::vector<double> BoxOperator::restrict_to_box(const LatticeFunction& u) const {
  if (u.dim() != box_.dim) throw ArgumentError("lattice function dimension does not match the box");
  std::vector<double> out(slots_, 0.0);
  for (const auto& [n, v] : u.sorted_entries()) {
    if (n.is_zero()) throw PreconditionError("trial functions must vanish at the origin");
    out[slot(n)] = v;
  }
  return out;
}

LatticeFunction quadratic_form_apply(const LatticeFunction& u, const BoxSpec& box, int k, InequalityKind kind) {
  if (k < 0) throw DomainError("order k must be non-negative");
  const int p = kind == InequalityKind::hardy ? 2 * k + 1 : 2 * k;
  const BoxOperator op(box, p);
  const auto x = op.restrict_to_box(u);
  std::vector<double> y(op.slots());
  op.apply(x, y);
  return op.extend(y);
}

}  // namespace lattice_hardy
