#include "sg/transform.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include "sg/errors.hpp"

namespace sg {

namespace {

// The FFTW planner is not thread-safe; execution of a finished plan is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

void check_length(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": expected length " + std::to_string(want) +
                         ", got " + std::to_string(got));
  }
}

}  // namespace

struct TransformPlan::Fftw {
  fftw_plan forward = nullptr;
  fftw_plan inverse = nullptr;

  Fftw(GridFamily family, std::size_t n) {
    std::vector<double> scratch(n, 0.0);
    const int len = static_cast<int>(n);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    std::lock_guard lock(planner_mutex());
    if (family == GridFamily::MidPoint) {
      forward = fftw_plan_r2r_1d(len, scratch.data(), scratch.data(), FFTW_REDFT10, flags);
      inverse = fftw_plan_r2r_1d(len, scratch.data(), scratch.data(), FFTW_REDFT01, flags);
    } else {
      forward = fftw_plan_r2r_1d(len, scratch.data(), scratch.data(), FFTW_REDFT00, flags);
    }
    if (forward == nullptr || (family == GridFamily::MidPoint && inverse == nullptr)) {
      throw NumericError("FFTW failed to create a cosine transform plan of length " +
                         std::to_string(n));
    }
  }

  ~Fftw() {
    std::lock_guard lock(planner_mutex());
    if (forward != nullptr) fftw_destroy_plan(forward);
    if (inverse != nullptr) fftw_destroy_plan(inverse);
  }

  Fftw(const Fftw&) = delete;
  Fftw& operator=(const Fftw&) = delete;
};

TransformPlan::TransformPlan(GridFamily family, std::size_t cells, double extent)
    : family_(family), cells_(cells) {
  if (cells == 0) throw ArgumentError("transform plan needs at least one cell");
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw ArgumentError("transform plan needs a positive finite axis extent");
  }
  length_ = family == GridFamily::MidPoint ? cells : cells + 1;
  const double mu = std::numbers::pi / extent;
  const double n = static_cast<double>(cells);

  wavenumbers_.resize(length_);
  eigenvalues_.resize(length_);
  t_scale_.assign(length_, 1.0);
  for (std::size_t j = 0; j < length_; ++j) {
    wavenumbers_[j] = mu * static_cast<double>(j);
    eigenvalues_[j] = -wavenumbers_[j] * wavenumbers_[j];
  }

  if (family == GridFamily::MidPoint) {
    forward_post_.resize(length_);
    inverse_pre_.resize(length_);
    for (std::size_t m = 0; m < length_; ++m) {
      const double a_m = m == 0 ? 2.0 : 1.0;
      forward_post_[m] = std::sqrt(2.0 / (n * a_m)) / 2.0;
      inverse_pre_[m] = std::sqrt(2.0 / (n * a_m)) * (m == 0 ? 1.0 : 0.5);
    }
  } else {
    t_scale_.front() = std::numbers::sqrt2;
    t_scale_.back() = std::numbers::sqrt2;
    forward_post_.resize(length_);
    regular_pre_.resize(length_);
    for (std::size_t j = 0; j < length_; ++j) {
      const double a_j = (j == 0 || j == cells) ? 2.0 : 1.0;
      regular_pre_[j] = std::sqrt(a_j) / 2.0;
      forward_post_[j] = std::sqrt(2.0 / (n * a_j));
    }
  }

  if (length_ > 1) fftw_ = std::make_shared<const Fftw>(family, length_);
}

void TransformPlan::forward_inplace(std::span<double> slice) const {
  check_length(slice.size(), length_, "cosine transform");
  if (length_ == 1) return;  // C = [1]
  if (family_ == GridFamily::MidPoint) {
    fftw_execute_r2r(fftw_->forward, slice.data(), slice.data());
    for (std::size_t m = 0; m < length_; ++m) slice[m] *= forward_post_[m];
  } else {
    for (std::size_t j = 0; j < length_; ++j) slice[j] *= regular_pre_[j];
    fftw_execute_r2r(fftw_->forward, slice.data(), slice.data());
    for (std::size_t m = 0; m < length_; ++m) slice[m] *= forward_post_[m];
  }
}

void TransformPlan::inverse_inplace(std::span<double> slice) const {
  if (family_ == GridFamily::Regular) {
    forward_inplace(slice);
    return;
  }
  check_length(slice.size(), length_, "cosine transform");
  if (length_ == 1) return;
  for (std::size_t m = 0; m < length_; ++m) slice[m] *= inverse_pre_[m];
  fftw_execute_r2r(fftw_->inverse, slice.data(), slice.data());
}

namespace {

std::vector<double> apply(std::span<const double> in, const TransformPlan& plan,
                          GridFamily want, bool inverse, const char* name) {
  if (plan.family() != want) {
    throw ArgumentError(std::string(name) + ": plan belongs to the other grid family");
  }
  check_length(in.size(), plan.axis_length(), name);
  std::vector<double> out(in.begin(), in.end());
  inverse ? plan.inverse_inplace(out) : plan.forward_inplace(out);
  return out;
}

}  // namespace

std::vector<double> dct_mid_forward(std::span<const double> values, const TransformPlan& plan) {
  return apply(values, plan, GridFamily::MidPoint, false, "dct_mid_forward");
}

std::vector<double> dct_mid_inverse(std::span<const double> coeffs, const TransformPlan& plan) {
  return apply(coeffs, plan, GridFamily::MidPoint, true, "dct_mid_inverse");
}

std::vector<double> dct_reg_forward(std::span<const double> values, const TransformPlan& plan) {
  return apply(values, plan, GridFamily::Regular, false, "dct_reg_forward");
}

}  // namespace sg
