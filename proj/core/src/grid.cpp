#include "dafi/grid.hpp"

#include <algorithm>
#include <cmath>

namespace dafi {

namespace {

std::vector<float> filled(std::size_t n, float v) { return std::vector<float>(n, v); }

std::string position(int row, int col) {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

}  // namespace

Image::Image(int height, int width, int channels, std::vector<float> data)
    : DenseGrid(height, width, channels, std::move(data), "Image") {
  if (channels != 1 && channels != 3)
    throw ValidationError("Image: channel count must be 1 or 3");
}

Image::Image(int height, int width, int channels, float fill)
    : Image(height, width, channels,
            filled(static_cast<std::size_t>(height) * width * channels, fill)) {}

FlowField::FlowField(int height, int width, std::vector<float> data)
    : DenseGrid(height, width, 2, std::move(data), "FlowField") {}

FlowField::FlowField(int height, int width, Vec2 fill)
    : DenseGrid(height, width, 2, {}, "") {
  // delegate-free: DenseGrid({}) would reject, so construct directly
  height_ = height;
  width_ = width;
  channels_ = 2;
  data_.assign(static_cast<std::size_t>(height) * width * 2, 0.f);
  for (std::size_t i = 0; i + 1 < data_.size(); i += 2) {
    data_[i] = fill.u;
    data_[i + 1] = fill.v;
  }
}

DepthMap::DepthMap(int height, int width, std::vector<float> data)
    : DenseGrid(height, width, 1, std::move(data), "DepthMap") {}

DepthMap::DepthMap(int height, int width, float fill)
    : DepthMap(height, width, filled(static_cast<std::size_t>(height) * width, fill)) {}

KernelField::KernelField(int height, int width, std::vector<float> data, bool normalized)
    : DenseGrid(height, width, kTaps, std::move(data), "KernelField"),
      normalized_(normalized) {}

KernelField KernelField::delta(int height, int width) {
  std::vector<float> d(static_cast<std::size_t>(height) * width * kTaps, 0.f);
  for (std::size_t p = 0; p < d.size(); p += kTaps) d[p + kDeltaTap] = 1.f;
  return KernelField(height, width, std::move(d), /*normalized=*/true);
}

FeatureMap::FeatureMap(int height, int width, int channels, std::vector<float> data)
    : DenseGrid(height, width, channels, std::move(data), "FeatureMap") {}

FeatureMap::FeatureMap(int height, int width, int channels, float fill)
    : FeatureMap(height, width, channels,
                 filled(static_cast<std::size_t>(height) * width * channels, fill)) {}

HoleMask::HoleMask(int height, int width, std::vector<std::uint8_t> data)
    : DenseGrid(height, width, 1, std::move(data), "HoleMask") {}

HoleMask::HoleMask(int height, int width, bool fill)
    : DenseGrid(height, width, 1,
                std::vector<std::uint8_t>(static_cast<std::size_t>(height) * width,
                                          fill ? 1 : 0),
                "HoleMask") {}

std::size_t HoleMask::count() const {
  std::size_t n = 0;
  for (auto b : data_) n += (b != 0);
  return n;
}

DoubleGrid::DoubleGrid(int height, int width, int channels, std::vector<double> data)
    : DenseGrid(height, width, channels, std::move(data), "DoubleGrid") {}

DoubleGrid::DoubleGrid(int height, int width, int channels, double fill)
    : DenseGrid(height, width, channels,
                std::vector<double>(static_cast<std::size_t>(height) * width * channels,
                                    fill),
                "DoubleGrid") {}

namespace {

template <typename G>
std::optional<std::string> check_finite(const G& g, const char* name) {
  const auto d = g.data();
  for (int r = 0; r < g.height(); ++r)
    for (int c = 0; c < g.width(); ++c)
      for (int ch = 0; ch < g.channels(); ++ch)
        if (!std::isfinite(d[g.index(r, c, ch)]))
          return std::string(name) + ": non-finite value at " + position(r, c);
  return std::nullopt;
}

}  // namespace

std::optional<std::string> validate(const Image& image) {
  return check_finite(image, "Image");
}

std::optional<std::string> validate(const FlowField& flow) {
  return check_finite(flow, "FlowField");
}

std::optional<std::string> validate(const DepthMap& depth) {
  for (int r = 0; r < depth.height(); ++r)
    for (int c = 0; c < depth.width(); ++c) {
      const float v = depth.at(r, c);
      if (!std::isfinite(v))
        return "DepthMap: non-finite value at " + position(r, c);
      if (v <= 0.f)
        return "DepthMap: non-positive depth at " + position(r, c);
    }
  return std::nullopt;
}

std::optional<std::string> validate(const KernelField& kernels) {
  if (auto err = check_finite(kernels, "KernelField")) return err;
  if (!kernels.normalized()) return std::nullopt;
  for (int r = 0; r < kernels.height(); ++r)
    for (int c = 0; c < kernels.width(); ++c) {
      double sum = 0.0;
      for (int t = 0; t < KernelField::kTaps; ++t) sum += kernels.tap(r, c, t);
      if (std::abs(sum - 1.0) > 1e-5)
        return "KernelField: flagged normalized but taps sum to " +
               std::to_string(sum) + " at " + position(r, c);
    }
  return std::nullopt;
}

std::optional<std::string> validate(const FeatureMap& features) {
  return check_finite(features, "FeatureMap");
}

std::optional<std::string> validate(const InterpolationRequest& request) {
  if (!(request.t >= 0.0 && request.t <= 1.0))
    return "InterpolationRequest: t = " + std::to_string(request.t) +
           " outside [0,1]";
  return std::nullopt;
}

BilinearCoeffs bilinear_coeffs(int width, int height, double x, double y) {
  BilinearCoeffs c;
  c.x_clamped = (x < 0.0 || x > width - 1);
  c.y_clamped = (y < 0.0 || y > height - 1);
  const double px = std::clamp(x, 0.0, static_cast<double>(width - 1));
  const double py = std::clamp(y, 0.0, static_cast<double>(height - 1));
  if (width == 1) {
    c.x0 = c.x1 = 0;
    c.ax = 0.0;
    c.x_clamped = true;  // no x-sensitivity on a single column
  } else {
    c.x0 = std::min(static_cast<int>(std::floor(px)), width - 2);
    c.x1 = c.x0 + 1;
    c.ax = px - c.x0;
  }
  if (height == 1) {
    c.y0 = c.y1 = 0;
    c.ay = 0.0;
    c.y_clamped = true;
  } else {
    c.y0 = std::min(static_cast<int>(std::floor(py)), height - 2);
    c.y1 = c.y0 + 1;
    c.ay = py - c.y0;
  }
  return c;
}

namespace {

template <typename G>
double sample_impl(const G& g, double x, double y, int ch) {
  const BilinearCoeffs c = bilinear_coeffs(g.width(), g.height(), x, y);
  const auto d = g.data();
  const double v00 = d[g.index(c.y0, c.x0, ch)];
  const double v10 = d[g.index(c.y0, c.x1, ch)];
  const double v01 = d[g.index(c.y1, c.x0, ch)];
  const double v11 = d[g.index(c.y1, c.x1, ch)];
  const double top = v00 * (1.0 - c.ax) + v10 * c.ax;
  const double bot = v01 * (1.0 - c.ax) + v11 * c.ax;
  return top * (1.0 - c.ay) + bot * c.ay;
}

}  // namespace

double bilinear_sample(const Image& grid, double x, double y, int ch) {
  return sample_impl(grid, x, y, ch);
}

double bilinear_sample(const FeatureMap& grid, double x, double y, int ch) {
  return sample_impl(grid, x, y, ch);
}

double bilinear_sample(const DepthMap& grid, double x, double y) {
  return sample_impl(grid, x, y, 0);
}

}  // namespace dafi
