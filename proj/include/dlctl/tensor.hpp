#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "dlctl/errors.hpp"

namespace dlctl {

// Dense (channels, height, width) array of doubles, row-major.
struct RealTensor {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> data;

  RealTensor() = default;
  RealTensor(int c, int h, int w)
      : channels(c), height(h), width(w),
        data(static_cast<std::size_t>(c) * h * w, 0.0) {}

  double& at(int c, int y, int x) {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  double at(int c, int y, int x) const {
    return data[(static_cast<std::size_t>(c) * height + y) * width + x];
  }
  double* plane(int c) { return data.data() + static_cast<std::size_t>(c) * height * width; }
  const double* plane(int c) const {
    return data.data() + static_cast<std::size_t>(c) * height * width;
  }
  std::size_t size() const { return data.size(); }
  bool same_shape(const RealTensor& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }
};

// C-channel complex array stored as separate real/imag planes.  A 1-channel
// instance represents an image or k-space slice; a C-channel instance holds
// transform coefficients or per-coil data.
struct ComplexTensor {
  RealTensor re, im;

  ComplexTensor() = default;
  ComplexTensor(int c, int h, int w) : re(c, h, w), im(c, h, w) {}

  int channels() const { return re.channels; }
  int height() const { return re.height; }
  int width() const { return re.width; }
  std::size_t size() const { return re.size(); }
  bool same_shape(const ComplexTensor& o) const { return re.same_shape(o.re); }
};

using ComplexImage = ComplexTensor;  // 1 channel by convention

inline void check_same_shape(const RealTensor& a, const RealTensor& b, const char* where) {
  if (!a.same_shape(b))
    throw ShapeError(std::string(where) + ": shape mismatch (" +
                     std::to_string(a.channels) + "x" + std::to_string(a.height) + "x" +
                     std::to_string(a.width) + " vs " + std::to_string(b.channels) + "x" +
                     std::to_string(b.height) + "x" + std::to_string(b.width) + ")");
}

inline void check_same_shape(const ComplexTensor& a, const ComplexTensor& b, const char* where) {
  check_same_shape(a.re, b.re, where);
}

// ---- elementwise real helpers ----

inline RealTensor add(const RealTensor& a, const RealTensor& b) {
  check_same_shape(a, b, "add");
  RealTensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data[i] += b.data[i];
  return out;
}

inline RealTensor sub(const RealTensor& a, const RealTensor& b) {
  check_same_shape(a, b, "sub");
  RealTensor out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data[i] -= b.data[i];
  return out;
}

inline RealTensor scale(const RealTensor& a, double s) {
  RealTensor out = a;
  for (double& v : out.data) v *= s;
  return out;
}

inline void axpy(RealTensor& dst, double a, const RealTensor& x) {
  check_same_shape(dst, x, "axpy");
  for (std::size_t i = 0; i < dst.size(); ++i) dst.data[i] += a * x.data[i];
}

inline double dot(const RealTensor& a, const RealTensor& b) {
  check_same_shape(a, b, "dot");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data[i] * b.data[i];
  return s;
}

inline double norm2(const RealTensor& a) { return std::sqrt(dot(a, a)); }

inline bool all_finite(const RealTensor& a) {
  for (double v : a.data)
    if (!std::isfinite(v)) return false;
  return true;
}

// ---- elementwise complex helpers ----

inline ComplexTensor cadd(const ComplexTensor& a, const ComplexTensor& b) {
  return {add(a.re, b.re), add(a.im, b.im)};
}

inline ComplexTensor csub(const ComplexTensor& a, const ComplexTensor& b) {
  return {sub(a.re, b.re), sub(a.im, b.im)};
}

inline ComplexTensor cscale(const ComplexTensor& a, double s) {
  return {scale(a.re, s), scale(a.im, s)};
}

inline void caxpy(ComplexTensor& dst, double a, const ComplexTensor& x) {
  axpy(dst.re, a, x.re);
  axpy(dst.im, a, x.im);
}

// Real part of the Hermitian inner product <a, b>; equals the Euclidean dot
// product of the stacked (re, im) vectors.
inline double cdot_re(const ComplexTensor& a, const ComplexTensor& b) {
  return dot(a.re, b.re) + dot(a.im, b.im);
}

inline double cnorm2(const ComplexTensor& a) { return std::sqrt(cdot_re(a, a)); }

// Sum of complex magnitudes.
inline double cnorm1_mag(const ComplexTensor& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::hypot(a.re.data[i], a.im.data[i]);
  return s;
}

// l1 norm of the stacked (re, im) entries.
inline double cnorm1_reim(const ComplexTensor& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    s += std::abs(a.re.data[i]) + std::abs(a.im.data[i]);
  return s;
}

inline bool all_finite(const ComplexTensor& a) {
  return all_finite(a.re) && all_finite(a.im);
}

// Replicate a 1-channel tensor to C channels.
inline ComplexTensor broadcast(const ComplexTensor& x, int chans) {
  ComplexTensor out(chans, x.height(), x.width());
  const std::size_t n = static_cast<std::size_t>(x.height()) * x.width();
  for (int c = 0; c < chans; ++c)
    for (std::size_t i = 0; i < n; ++i) {
      out.re.plane(c)[i] = x.re.data[i];
      out.im.plane(c)[i] = x.im.data[i];
    }
  return out;
}

// Adjoint of broadcast: sum over channels into a 1-channel tensor.
inline ComplexTensor channel_sum(const ComplexTensor& z) {
  ComplexTensor out(1, z.height(), z.width());
  const std::size_t n = static_cast<std::size_t>(z.height()) * z.width();
  for (int c = 0; c < z.channels(); ++c)
    for (std::size_t i = 0; i < n; ++i) {
      out.re.data[i] += z.re.plane(c)[i];
      out.im.data[i] += z.im.plane(c)[i];
    }
  return out;
}

// ---- dilated 2-D convolution ----

// Bias-free convolution weights; parameter count is exactly k*k*in*out.
struct ConvKernel {
  int out_channels = 0;
  int in_channels = 0;
  int k = 1;         // odd side length
  int dilation = 1;  // >= 1
  std::vector<double> w;

  ConvKernel() = default;
  ConvKernel(int oc, int ic, int kk, int dil)
      : out_channels(oc), in_channels(ic), k(kk), dilation(dil),
        w(static_cast<std::size_t>(oc) * ic * kk * kk, 0.0) {
    if (kk < 1 || kk % 2 == 0) throw ArgumentError("ConvKernel: k must be odd and positive");
    if (dil < 1) throw ArgumentError("ConvKernel: dilation must be >= 1");
  }

  double& at(int o, int i, int ky, int kx) {
    return w[((static_cast<std::size_t>(o) * in_channels + i) * k + ky) * k + kx];
  }
  double at(int o, int i, int ky, int kx) const {
    return w[((static_cast<std::size_t>(o) * in_channels + i) * k + ky) * k + kx];
  }
  std::size_t param_count() const { return w.size(); }
};

namespace detail {

// Accumulate dst[y, x] += wv * src[y + sy, x + sx] over the index range where
// the shifted source stays inside the plane (zero padding elsewhere).
inline void shifted_axpy_plane(double* dst, const double* src, int h, int w, int sy, int sx,
                               double wv) {
  const int y0 = sy < 0 ? -sy : 0;
  const int y1 = sy > 0 ? h - sy : h;
  const int x0 = sx < 0 ? -sx : 0;
  const int x1 = sx > 0 ? w - sx : w;
  for (int y = y0; y < y1; ++y) {
    double* d = dst + static_cast<std::size_t>(y) * w + x0;
    const double* s = src + static_cast<std::size_t>(y + sy) * w + (x0 + sx);
    const int n = x1 - x0;
    for (int x = 0; x < n; ++x) d[x] += wv * s[x];
  }
}

// Dot of dst[y, x] with src[y + sy, x + sx] over the same valid range.
inline double shifted_dot_plane(const double* a, const double* b, int h, int w, int sy, int sx) {
  const int y0 = sy < 0 ? -sy : 0;
  const int y1 = sy > 0 ? h - sy : h;
  const int x0 = sx < 0 ? -sx : 0;
  const int x1 = sx > 0 ? w - sx : w;
  double acc = 0.0;
  for (int y = y0; y < y1; ++y) {
    const double* pa = a + static_cast<std::size_t>(y) * w + x0;
    const double* pb = b + static_cast<std::size_t>(y + sy) * w + (x0 + sx);
    const int n = x1 - x0;
    for (int x = 0; x < n; ++x) acc += pa[x] * pb[x];
  }
  return acc;
}

}  // namespace detail

// Same-size dilated convolution with zero padding of (k-1)*dilation/2 per side.
inline RealTensor conv2d(const RealTensor& input, const ConvKernel& kernel) {
  if (input.channels != kernel.in_channels)
    throw ShapeError("conv2d: input has " + std::to_string(input.channels) +
                     " channels, kernel expects " + std::to_string(kernel.in_channels));
  const int h = input.height, w = input.width, c = (kernel.k - 1) / 2, d = kernel.dilation;
  RealTensor out(kernel.out_channels, h, w);
  for (int o = 0; o < kernel.out_channels; ++o)
    for (int i = 0; i < kernel.in_channels; ++i)
      for (int ky = 0; ky < kernel.k; ++ky)
        for (int kx = 0; kx < kernel.k; ++kx)
          detail::shifted_axpy_plane(out.plane(o), input.plane(i), h, w, (ky - c) * d,
                                     (kx - c) * d, kernel.at(o, i, ky, kx));
  return out;
}

// Exact adjoint of conv2d with the same kernel.
inline RealTensor conv2d_transpose(const RealTensor& coeffs, const ConvKernel& kernel) {
  if (coeffs.channels != kernel.out_channels)
    throw ShapeError("conv2d_transpose: input has " + std::to_string(coeffs.channels) +
                     " channels, kernel produces " + std::to_string(kernel.out_channels));
  const int h = coeffs.height, w = coeffs.width, c = (kernel.k - 1) / 2, d = kernel.dilation;
  RealTensor out(kernel.in_channels, h, w);
  for (int o = 0; o < kernel.out_channels; ++o)
    for (int i = 0; i < kernel.in_channels; ++i)
      for (int ky = 0; ky < kernel.k; ++ky)
        for (int kx = 0; kx < kernel.k; ++kx)
          detail::shifted_axpy_plane(out.plane(i), coeffs.plane(o), h, w, -(ky - c) * d,
                                     -(kx - c) * d, kernel.at(o, i, ky, kx));
  return out;
}

// Gradient of <upstream, conv2d(input, K)> with respect to the kernel weights.
// Also serves conv2d_transpose: d<cot, conv2d_transpose(z, K)>/dK equals
// conv2d_weight_grad(cot, z, geometry).
inline ConvKernel conv2d_weight_grad(const RealTensor& input, const RealTensor& upstream,
                                     const ConvKernel& geometry) {
  const int h = input.height, w = input.width;
  const int c = (geometry.k - 1) / 2, d = geometry.dilation;
  ConvKernel g(geometry.out_channels, geometry.in_channels, geometry.k, geometry.dilation);
  for (int o = 0; o < geometry.out_channels; ++o)
    for (int i = 0; i < geometry.in_channels; ++i)
      for (int ky = 0; ky < geometry.k; ++ky)
        for (int kx = 0; kx < geometry.k; ++kx)
          g.at(o, i, ky, kx) = detail::shifted_dot_plane(upstream.plane(o), input.plane(i), h, w,
                                                         (ky - c) * d, (kx - c) * d);
  return g;
}

}  // namespace dlctl
