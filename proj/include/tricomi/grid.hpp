// Periodic uniform grid on [-L, L)^dim with FFTW-backed real transforms,
// spectral derivative multipliers and 2/3-rule dealiasing.

#ifndef TRICOMI_GRID_HPP_
#define TRICOMI_GRID_HPP_

#include <array>
#include <cstddef>
#include <memory>
#include <vector>

#include "tricomi/specfun.hpp"

namespace tricomi {

class SpectralGrid {
 public:
  /// dim in {1,2,3}; n_points a power of two per axis (64..4096 in 1D,
  /// 64..512 in 2D/3D); L > 2 the box half-width.
  SpectralGrid(int dim, int n_points, double box_half_width);
  ~SpectralGrid();
  SpectralGrid(const SpectralGrid&) = delete;
  SpectralGrid& operator=(const SpectralGrid&) = delete;

  int dim() const { return dim_; }
  int n() const { return n_; }
  double half_width() const { return L_; }
  double dx() const { return 2.0 * L_ / n_; }
  std::size_t size() const { return size_; }            // real points
  std::size_t spec_size() const { return spec_size_; }  // half-spectrum

  /// Coordinate of index i along one axis: -L + i * dx.
  double coord(int i) const { return -L_ + i * dx(); }

  /// |x| of a flattened real-space index.
  double radius(std::size_t idx) const;

  /// |k|^2 and |k| of a flattened half-spectrum index.
  double k_squared(std::size_t idx) const { return k2_[idx]; }
  double k_radial(std::size_t idx) const { return kr_[idx]; }

  void forward(const std::vector<double>& field, std::vector<cplx>& spec) const;
  void inverse(const std::vector<cplx>& spec, std::vector<double>& field) const;

  /// out = Laplacian(in), spectral multiplier -|k|^2.
  void laplacian(const std::vector<double>& in, std::vector<double>& out) const;

  /// out = d(in)/dx_axis, spectral multiplier i k_axis.
  void gradient(const std::vector<double>& in, int axis,
                std::vector<double>& out) const;

  /// Zero every mode with an axis index above n/3 (2/3 rule).
  void dealias(std::vector<cplx>& spec) const;

  /// Round trip forward+inverse of the nonlinearity with dealiasing.
  void dealias_field(std::vector<double>& field) const;

  /// Largest |x| over points where |field| > threshold * max|field|;
  /// returns 0 for an identically zero field.
  double support_radius(const std::vector<double>& field,
                        double threshold = 1e-8) const;

  /// Volume element dx^dim.
  double cell_volume() const;

 private:
  struct Impl;
  int dim_;
  int n_;
  double L_;
  std::size_t size_;
  std::size_t spec_size_;
  std::vector<double> k2_;   // |k|^2 per half-spectrum entry
  std::vector<double> kr_;   // |k| per half-spectrum entry
  std::vector<bool> keep_;   // dealias mask
  std::unique_ptr<Impl> impl_;
};

}  // namespace tricomi

#endif  // TRICOMI_GRID_HPP_
