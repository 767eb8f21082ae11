#include "tricomi/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace tricomi {

namespace {
// FFTW's planner is not thread-safe; executes on distinct plans are.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }
}  // namespace

struct SpectralGrid::Impl {
  double* real_buf = nullptr;
  fftw_complex* spec_buf = nullptr;
  fftw_plan fwd = nullptr;
  fftw_plan inv = nullptr;

  ~Impl() {
    std::lock_guard<std::mutex> lock(planner_mutex());
    if (fwd) fftw_destroy_plan(fwd);
    if (inv) fftw_destroy_plan(inv);
    if (real_buf) fftw_free(real_buf);
    if (spec_buf) fftw_free(spec_buf);
  }
};

SpectralGrid::SpectralGrid(int dim, int n_points, double box_half_width)
    : dim_(dim), n_(n_points), L_(box_half_width), impl_(new Impl) {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument("SpectralGrid: dim must be 1, 2 or 3");
  if (!power_of_two(n_points))
    throw std::invalid_argument("SpectralGrid: n_points must be a power of two");
  int max_n = dim == 1 ? 4096 : 512;
  if (n_points < 64 || n_points > max_n)
    throw std::invalid_argument("SpectralGrid: n_points outside the supported range");
  if (!(box_half_width > 2.0))
    throw std::invalid_argument("SpectralGrid: L must exceed 2");

  std::size_t half = static_cast<std::size_t>(n_) / 2 + 1;
  size_ = 1;
  for (int d = 0; d < dim_; ++d) size_ *= static_cast<std::size_t>(n_);
  spec_size_ = half;
  for (int d = 0; d < dim_ - 1; ++d) spec_size_ *= static_cast<std::size_t>(n_);

  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    impl_->real_buf = fftw_alloc_real(size_);
    impl_->spec_buf = fftw_alloc_complex(spec_size_);
    int dims[3] = {n_, n_, n_};
    impl_->fwd = fftw_plan_dft_r2c(dim_, dims, impl_->real_buf, impl_->spec_buf,
                                   FFTW_ESTIMATE);
    impl_->inv = fftw_plan_dft_c2r(dim_, dims, impl_->spec_buf, impl_->real_buf,
                                   FFTW_ESTIMATE);
  }
  if (!impl_->fwd || !impl_->inv)
    throw std::runtime_error("SpectralGrid: FFTW plan creation failed");

  // frequency bookkeeping: k = (pi/L) * integer index, folded to negative
  // frequencies past n/2; the last axis carries the r2c half-range
  double k0 = M_PI / L_;
  k2_.resize(spec_size_);
  kr_.resize(spec_size_);
  keep_.assign(spec_size_, true);
  int cut = n_ / 3;
  for (std::size_t idx = 0; idx < spec_size_; ++idx) {
    std::size_t rem = idx;
    int f[3] = {0, 0, 0};
    // axes are stored row-major with the half axis last
    f[dim_ - 1] = static_cast<int>(rem % half);
    rem /= half;
    for (int d = dim_ - 2; d >= 0; --d) {
      int j = static_cast<int>(rem % static_cast<std::size_t>(n_));
      rem /= static_cast<std::size_t>(n_);
      f[d] = j <= n_ / 2 ? j : j - n_;
    }
    double s = 0.0;
    bool keep = true;
    for (int d = 0; d < dim_; ++d) {
      double k = k0 * f[d];
      s += k * k;
      if (std::abs(f[d]) > cut) keep = false;
    }
    k2_[idx] = s;
    kr_[idx] = std::sqrt(s);
    keep_[idx] = keep;
  }
}

SpectralGrid::~SpectralGrid() = default;

double SpectralGrid::radius(std::size_t idx) const {
  double s = 0.0;
  std::size_t rem = idx;
  for (int d = dim_ - 1; d >= 0; --d) {
    int j = static_cast<int>(rem % static_cast<std::size_t>(n_));
    rem /= static_cast<std::size_t>(n_);
    double x = coord(j);
    s += x * x;
  }
  return std::sqrt(s);
}

void SpectralGrid::forward(const std::vector<double>& field,
                           std::vector<cplx>& spec) const {
  if (field.size() != size_) throw std::invalid_argument("forward: field size");
  spec.resize(spec_size_);
  for (std::size_t i = 0; i < size_; ++i) impl_->real_buf[i] = field[i];
  fftw_execute(impl_->fwd);
  for (std::size_t i = 0; i < spec_size_; ++i)
    spec[i] = {impl_->spec_buf[i][0], impl_->spec_buf[i][1]};
}

void SpectralGrid::inverse(const std::vector<cplx>& spec,
                           std::vector<double>& field) const {
  if (spec.size() != spec_size_) throw std::invalid_argument("inverse: spec size");
  field.resize(size_);
  for (std::size_t i = 0; i < spec_size_; ++i) {
    impl_->spec_buf[i][0] = spec[i].real();
    impl_->spec_buf[i][1] = spec[i].imag();
  }
  fftw_execute(impl_->inv);
  double norm = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_; ++i) field[i] = impl_->real_buf[i] * norm;
}

void SpectralGrid::laplacian(const std::vector<double>& in,
                             std::vector<double>& out) const {
  std::vector<cplx> spec;
  forward(in, spec);
  for (std::size_t i = 0; i < spec_size_; ++i) spec[i] *= -k2_[i];
  inverse(spec, out);
}

void SpectralGrid::gradient(const std::vector<double>& in, int axis,
                            std::vector<double>& out) const {
  if (axis < 0 || axis >= dim_) throw std::invalid_argument("gradient: axis");
  std::vector<cplx> spec;
  forward(in, spec);
  std::size_t half = static_cast<std::size_t>(n_) / 2 + 1;
  double k0 = M_PI / L_;
  for (std::size_t idx = 0; idx < spec_size_; ++idx) {
    std::size_t rem = idx;
    int f[3] = {0, 0, 0};
    f[dim_ - 1] = static_cast<int>(rem % half);
    rem /= half;
    for (int d = dim_ - 2; d >= 0; --d) {
      int j = static_cast<int>(rem % static_cast<std::size_t>(n_));
      rem /= static_cast<std::size_t>(n_);
      f[d] = j <= n_ / 2 ? j : j - n_;
    }
    // the n/2 mode has no conjugate partner: its derivative multiplier
    // must be zeroed to keep the result real
    double k = (std::abs(f[axis]) == n_ / 2) ? 0.0 : k0 * f[axis];
    spec[idx] *= cplx(0.0, k);
  }
  inverse(spec, out);
}

void SpectralGrid::dealias(std::vector<cplx>& spec) const {
  if (spec.size() != spec_size_) throw std::invalid_argument("dealias: spec size");
  for (std::size_t i = 0; i < spec_size_; ++i)
    if (!keep_[i]) spec[i] = 0.0;
}

void SpectralGrid::dealias_field(std::vector<double>& field) const {
  std::vector<cplx> spec;
  forward(field, spec);
  dealias(spec);
  inverse(spec, field);
}

double SpectralGrid::support_radius(const std::vector<double>& field,
                                    double threshold) const {
  double peak = 0.0;
  for (double v : field) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 0.0;
  double cut = threshold * peak;
  double rad = 0.0;
  for (std::size_t i = 0; i < field.size(); ++i)
    if (std::abs(field[i]) > cut) rad = std::max(rad, radius(i));
  return rad;
}

double SpectralGrid::cell_volume() const {
  double v = 1.0;
  for (int d = 0; d < dim_; ++d) v *= dx();
  return v;
}

}  // namespace tricomi
