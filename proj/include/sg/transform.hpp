#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace sg {

enum class GridFamily { MidPoint, Regular };

/// Precomputed data for the orthonormal cosine transform along one axis.
///
/// MidPoint axes of N cells use the length-N pair (C^{-1}, C) where
/// C_{j,m} = sqrt(2/(N a_m)) cos(m (j+1/2) pi / N) (DCT-3, so C^{-1} = C^T is
/// the orthonormal DCT-2). Regular axes of N cells use the length-(N+1)
/// symmetric involution C_{j,m} = sqrt(2/(N a_j a_m)) cos(j m pi / N) (DCT-1).
///
/// Plans are immutable and may be shared across threads; execution keeps no
/// state between calls.
class TransformPlan {
 public:
  TransformPlan(GridFamily family, std::size_t cells, double extent);

  GridFamily family() const { return family_; }
  std::size_t cells() const { return cells_; }
  /// Number of samples the transform acts on (N or N+1).
  std::size_t axis_length() const { return length_; }
  /// mu * j with mu = pi / extent.
  const std::vector<double>& wavenumbers() const { return wavenumbers_; }
  /// -(mu j)^2, the eigenvalues of the second-derivative matrix.
  const std::vector<double>& eigenvalues() const { return eigenvalues_; }
  /// sqrt(a_j): 1 for MidPoint; sqrt(2) at the two end vertices for Regular.
  const std::vector<double>& t_scale() const { return t_scale_; }

  /// Physical samples to cosine coefficients, in place on a contiguous slice.
  void forward_inplace(std::span<double> slice) const;
  /// Coefficients back to samples. For Regular this equals forward.
  void inverse_inplace(std::span<double> slice) const;

 private:
  struct Fftw;

  GridFamily family_;
  std::size_t cells_;
  std::size_t length_;
  std::vector<double> wavenumbers_;
  std::vector<double> eigenvalues_;
  std::vector<double> t_scale_;
  // Normalisation applied around the unnormalised FFTW r2r kernels.
  std::vector<double> forward_post_;
  std::vector<double> inverse_pre_;
  std::vector<double> regular_pre_;
  std::shared_ptr<const Fftw> fftw_;
};

/// k = C^{-1} x on a MidPoint axis.
std::vector<double> dct_mid_forward(std::span<const double> values, const TransformPlan& plan);
/// x = C k on a MidPoint axis.
std::vector<double> dct_mid_inverse(std::span<const double> coeffs, const TransformPlan& plan);
/// C x on a Regular axis (self-inverse).
std::vector<double> dct_reg_forward(std::span<const double> values, const TransformPlan& plan);

}  // namespace sg
