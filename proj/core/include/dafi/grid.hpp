#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Dense grid types shared by the whole pipeline. Grids store 32-bit floats;
// every accumulation (projection sums, losses, metric means) runs in doubles.
// All types are immutable after construction; build the payload vector first
// and hand it to the constructor, or use the generate() helpers.

namespace dafi {

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Integer pixel coordinate, x = column, y = row.
struct PixelCoord {
  int x = 0;
  int y = 0;
  bool operator==(const PixelCoord&) const = default;
};

struct Vec2 {
  float u = 0.f;  // horizontal (column) displacement
  float v = 0.f;  // vertical (row) displacement
  bool operator==(const Vec2&) const = default;
};

namespace detail {

template <typename T>
class DenseGrid {
 public:
  int height() const { return height_; }
  int width() const { return width_; }
  int channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }
  std::span<const T> data() const { return data_; }

  std::size_t index(int row, int col, int ch = 0) const {
    return (static_cast<std::size_t>(row) * width_ + col) * channels_ + ch;
  }

 protected:
  DenseGrid() = default;
  DenseGrid(int height, int width, int channels, std::vector<T> data,
            const char* type_name)
      : height_(height), width_(width), channels_(channels),
        data_(std::move(data)) {
    if (height <= 0 || width <= 0 || channels <= 0) {
      throw ValidationError(std::string(type_name) +
                            ": dimensions must be positive");
    }
    const std::size_t expected = static_cast<std::size_t>(height) * width * channels;
    if (data_.size() != expected) {
      throw ValidationError(std::string(type_name) + ": dimension mismatch, " +
                            std::to_string(data_.size()) + " values for " +
                            std::to_string(height) + "x" + std::to_string(width) +
                            "x" + std::to_string(channels));
    }
  }

  int height_ = 0;
  int width_ = 0;
  int channels_ = 1;
  std::vector<T> data_;
};

}  // namespace detail

// H x W x C grid of normalized intensities in [0, 1]; C = 1 or 3.
class Image : public detail::DenseGrid<float> {
 public:
  Image() = default;
  Image(int height, int width, int channels, std::vector<float> data);
  Image(int height, int width, int channels, float fill = 0.f);

  float at(int row, int col, int ch = 0) const { return data_[index(row, col, ch)]; }

  template <typename Fn>
  static Image generate(int height, int width, int channels, Fn&& fn) {
    std::vector<float> d(static_cast<std::size_t>(height) * width * channels);
    std::size_t i = 0;
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c)
        for (int ch = 0; ch < channels; ++ch) d[i++] = fn(r, c, ch);
    return Image(height, width, channels, std::move(d));
  }
};

// H x W grid of (u, v) pixel displacements, u horizontal, v vertical.
class FlowField : public detail::DenseGrid<float> {
 public:
  FlowField() = default;
  FlowField(int height, int width, std::vector<float> data);
  FlowField(int height, int width, Vec2 fill = {});

  Vec2 at(int row, int col) const {
    const std::size_t i = index(row, col);
    return {data_[i], data_[i + 1]};
  }
  float u(int row, int col) const { return data_[index(row, col, 0)]; }
  float v(int row, int col) const { return data_[index(row, col, 1)]; }

  template <typename Fn>
  static FlowField generate(int height, int width, Fn&& fn) {
    std::vector<float> d(static_cast<std::size_t>(height) * width * 2);
    std::size_t i = 0;
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c) {
        const Vec2 f = fn(r, c);
        d[i++] = f.u;
        d[i++] = f.v;
      }
    return FlowField(height, width, std::move(d));
  }
};

// H x W grid of strictly positive depths.
class DepthMap : public detail::DenseGrid<float> {
 public:
  DepthMap() = default;
  DepthMap(int height, int width, std::vector<float> data);
  DepthMap(int height, int width, float fill);

  float at(int row, int col) const { return data_[index(row, col)]; }

  template <typename Fn>
  static DepthMap generate(int height, int width, Fn&& fn) {
    std::vector<float> d(static_cast<std::size_t>(height) * width);
    std::size_t i = 0;
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c) d[i++] = fn(r, c);
    return DepthMap(height, width, std::move(d));
  }
};

// H x W grid of 16 kernel weights per pixel: one 4x4 window, taps ordered
// row-major over offsets {-1,0,1,2} x {-1,0,1,2}, i.e.
// tap = (dy + 1) * 4 + (dx + 1).
class KernelField : public detail::DenseGrid<float> {
 public:
  static constexpr int kTaps = 16;
  static constexpr int kDeltaTap = 5;  // offset (0, 0)

  KernelField() = default;
  KernelField(int height, int width, std::vector<float> data, bool normalized = false);

  float tap(int row, int col, int tap_index) const {
    return data_[index(row, col, tap_index)];
  }
  bool normalized() const { return normalized_; }

  static int tap_index(int dx, int dy) { return (dy + 1) * 4 + (dx + 1); }

  // Weight 1 at the (0, 0) offset everywhere; adaptive warping with this
  // field is plain bilinear backward warping.
  static KernelField delta(int height, int width);

 private:
  bool normalized_ = false;
};

// H x W x C grid of contextual features, C >= 1.
class FeatureMap : public detail::DenseGrid<float> {
 public:
  FeatureMap() = default;
  FeatureMap(int height, int width, int channels, std::vector<float> data);
  FeatureMap(int height, int width, int channels, float fill = 0.f);

  float at(int row, int col, int ch = 0) const { return data_[index(row, col, ch)]; }
};

// H x W booleans, true = position received no flow contributor.
class HoleMask : public detail::DenseGrid<std::uint8_t> {
 public:
  HoleMask() = default;
  HoleMask(int height, int width, std::vector<std::uint8_t> data);
  HoleMask(int height, int width, bool fill = false);

  bool at(int row, int col) const { return data_[index(row, col)] != 0; }
  std::size_t count() const;
};

// Time fraction for the interpolated frame.
struct InterpolationRequest {
  double t = 0.5;
};

// H x W x C grid of doubles: gradients, finite differences, and any other
// 64-bit carrier.
class DoubleGrid : public detail::DenseGrid<double> {
 public:
  DoubleGrid() = default;
  DoubleGrid(int height, int width, int channels, std::vector<double> data);
  DoubleGrid(int height, int width, int channels, double fill = 0.0);

  double at(int row, int col, int ch = 0) const { return data_[index(row, col, ch)]; }
  double& at(int row, int col, int ch = 0) { return data_[index(row, col, ch)]; }
  std::span<double> mutable_data() { return data_; }
};

// Value-level invariant checks. Structural invariants (payload length,
// positive dimensions) are enforced by the constructors; these functions
// re-check the value rules and return the first violation found.
std::optional<std::string> validate(const Image& image);
std::optional<std::string> validate(const FlowField& flow);
std::optional<std::string> validate(const DepthMap& depth);
std::optional<std::string> validate(const KernelField& kernels);
std::optional<std::string> validate(const FeatureMap& features);
std::optional<std::string> validate(const InterpolationRequest& request);

// Bilinear interpolation support with per-axis border clamp.
//
// value = (1-ay) * ((1-ax) v(y0,x0) + ax v(y0,x1))
//       +    ay  * ((1-ax) v(y1,x0) + ax v(y1,x1))
struct BilinearCoeffs {
  int x0 = 0, x1 = 0, y0 = 0, y1 = 0;
  double ax = 0.0, ay = 0.0;
  bool x_clamped = false;  // sample point fell outside [0, W-1]
  bool y_clamped = false;
};

BilinearCoeffs bilinear_coeffs(int width, int height, double x, double y);

// Sample one channel at continuous (x, y) in pixel coordinates.
// Out-of-bounds coordinates clamp to the border per axis.
double bilinear_sample(const Image& grid, double x, double y, int ch = 0);
double bilinear_sample(const FeatureMap& grid, double x, double y, int ch = 0);
double bilinear_sample(const DepthMap& grid, double x, double y);

}  // namespace dafi
