#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "dlctl/tensor.hpp"

namespace dlctl {
namespace detail {

// 1-D complex DFT of arbitrary length: recursive mixed-radix Cooley-Tukey
// with naive short-prime butterflies, Bluestein for large prime factors.
// Unnormalized; sign -1 forward, +1 inverse.
class Fft1d {
 public:
  explicit Fft1d(int n) : n_(n) {
    int m = n;
    for (int p = 2; p * p <= m;) {
      if (m % p == 0) {
        factors_.push_back(p);
        m /= p;
      } else {
        ++p;
      }
    }
    if (m > 1) factors_.push_back(m);
    use_bluestein_ = !factors_.empty() && factors_.back() > kMaxNaivePrime;
    if (use_bluestein_) {
      int mlen = 1;
      while (mlen < 2 * n - 1) mlen *= 2;
      pad_fft_ = std::make_unique<Fft1d>(mlen);
      build_chirp(mlen);
    } else {
      root_re_.resize(n);
      root_im_.resize(n);
      for (int j = 0; j < n; ++j) {
        const double a = -2.0 * kPi * j / n;
        root_re_[j] = std::cos(a);
        root_im_[j] = std::sin(a);
      }
    }
  }

  int size() const { return n_; }

  // In-place transform of one length-n signal.
  void run(double* re, double* im, bool inverse) const {
    if (n_ == 1) return;
    if (use_bluestein_) {
      run_bluestein(re, im, inverse);
      return;
    }
    std::vector<double> wr(re, re + n_), wi(im, im + n_);
    recurse(wr.data(), wi.data(), re, im, n_, 1, 1, 0, inverse);
  }

 private:
  static constexpr double kPi = 3.141592653589793238462643383279502884;
  static constexpr int kMaxNaivePrime = 61;

  // roots with conjugation folded in for the inverse transform
  double root_r(int idx, bool inverse) const { return root_re_[idx]; }
  double root_i(int idx, bool inverse) const {
    return inverse ? -root_im_[idx] : root_im_[idx];
  }

  // DIT: in holds the signal with stride `stride`; out receives n contiguous
  // transform values. root_mul converts local twiddle exponents to indices
  // into the length-n_ root table.
  void recurse(double* in_re, double* in_im, double* out_re, double* out_im, int n, int stride,
               int root_mul, int depth, bool inverse) const {
    if (n == 1) {
      out_re[0] = in_re[0];
      out_im[0] = in_im[0];
      return;
    }
    const int p = factors_[depth];
    const int m = n / p;
    for (int b = 0; b < p; ++b)
      recurse(in_re + static_cast<std::size_t>(b) * stride,
              in_im + static_cast<std::size_t>(b) * stride, out_re + static_cast<std::size_t>(b) * m,
              out_im + static_cast<std::size_t>(b) * m, m, stride * p, root_mul * p, depth + 1,
              inverse);
    std::vector<double> tr(p), ti(p);
    for (int d = 0; d < m; ++d) {
      for (int b = 0; b < p; ++b) {
        const std::size_t src = static_cast<std::size_t>(b) * m + d;
        const int tw = static_cast<int>((static_cast<long long>(b) * d * root_mul) % n_);
        const double cr = root_r(tw, inverse), ci = root_i(tw, inverse);
        tr[b] = out_re[src] * cr - out_im[src] * ci;
        ti[b] = out_re[src] * ci + out_im[src] * cr;
      }
      for (int c = 0; c < p; ++c) {
        double ar = tr[0], ai = ti[0];
        for (int b = 1; b < p; ++b) {
          const int tw = static_cast<int>((static_cast<long long>(b) * c * m * root_mul) % n_);
          const double cr = root_r(tw, inverse), ci = root_i(tw, inverse);
          ar += tr[b] * cr - ti[b] * ci;
          ai += tr[b] * ci + ti[b] * cr;
        }
        out_re[static_cast<std::size_t>(c) * m + d] = ar;
        out_im[static_cast<std::size_t>(c) * m + d] = ai;
      }
    }
  }

  void build_chirp(int mlen) {
    chirp_re_.resize(n_);
    chirp_im_.resize(n_);
    for (int j = 0; j < n_; ++j) {
      // exponent j^2/(2n) reduced mod 2n to keep the angle small
      const long long q = (static_cast<long long>(j) * j) % (2LL * n_);
      const double a = -kPi * static_cast<double>(q) / n_;
      chirp_re_[j] = std::cos(a);
      chirp_im_[j] = std::sin(a);
    }
    // Fourier transform of the conjugate chirp, wrapped periodically.
    std::vector<double> br(mlen, 0.0), bi(mlen, 0.0);
    br[0] = chirp_re_[0];
    bi[0] = -chirp_im_[0];
    for (int j = 1; j < n_; ++j) {
      br[j] = br[mlen - j] = chirp_re_[j];
      bi[j] = bi[mlen - j] = -chirp_im_[j];
    }
    pad_fft_->run(br.data(), bi.data(), false);
    chirp_ft_re_ = std::move(br);
    chirp_ft_im_ = std::move(bi);
  }

  void run_bluestein(double* re, double* im, bool inverse) const {
    const int mlen = pad_fft_->size();
    std::vector<double> ar(mlen, 0.0), ai(mlen, 0.0);
    for (int j = 0; j < n_; ++j) {
      const double cr = chirp_re_[j], ci = inverse ? -chirp_im_[j] : chirp_im_[j];
      ar[j] = re[j] * cr - im[j] * ci;
      ai[j] = re[j] * ci + im[j] * cr;
    }
    pad_fft_->run(ar.data(), ai.data(), false);
    for (int j = 0; j < mlen; ++j) {
      const double br = chirp_ft_re_[j];
      const double bi = inverse ? -chirp_ft_im_[j] : chirp_ft_im_[j];
      const double r = ar[j] * br - ai[j] * bi;
      const double i = ar[j] * bi + ai[j] * br;
      ar[j] = r;
      ai[j] = i;
    }
    pad_fft_->run(ar.data(), ai.data(), true);
    const double inv_m = 1.0 / mlen;
    for (int k = 0; k < n_; ++k) {
      const double cr = chirp_re_[k], ci = inverse ? -chirp_im_[k] : chirp_im_[k];
      const double vr = ar[k] * inv_m, vi = ai[k] * inv_m;
      re[k] = vr * cr - vi * ci;
      im[k] = vr * ci + vi * cr;
    }
  }

  int n_;
  std::vector<int> factors_;
  bool use_bluestein_ = false;
  std::vector<double> root_re_, root_im_;
  std::vector<double> chirp_re_, chirp_im_, chirp_ft_re_, chirp_ft_im_;
  std::unique_ptr<Fft1d> pad_fft_;
};

inline int shift_offset(int n) { return n / 2; }        // fftshift
inline int ishift_offset(int n) { return (n + 1) / 2; }  // ifftshift

// Circularly rotate rows and columns of one plane: out(y, x) = in((y + oy) % h, (x + ox) % w).
inline void roll_plane(const double* in, double* out, int h, int w, int oy, int ox) {
  for (int y = 0; y < h; ++y) {
    const double* src = in + static_cast<std::size_t>((y + oy) % h) * w;
    double* dst = out + static_cast<std::size_t>(y) * w;
    for (int x = 0; x < w; ++x) dst[x] = src[(x + ox) % w];
  }
}

inline void fft2c_plane(double* re, double* im, int h, int w, bool inverse) {
  const std::size_t n = static_cast<std::size_t>(h) * w;
  std::vector<double> tr(n), ti(n);
  // ifftshift
  roll_plane(re, tr.data(), h, w, ishift_offset(h), ishift_offset(w));
  roll_plane(im, ti.data(), h, w, ishift_offset(h), ishift_offset(w));
  const Fft1d row_fft(w);
  for (int y = 0; y < h; ++y) row_fft.run(tr.data() + static_cast<std::size_t>(y) * w,
                                          ti.data() + static_cast<std::size_t>(y) * w, inverse);
  const Fft1d col_fft(h);
  std::vector<double> cr(h), ci(h);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) {
      cr[y] = tr[static_cast<std::size_t>(y) * w + x];
      ci[y] = ti[static_cast<std::size_t>(y) * w + x];
    }
    col_fft.run(cr.data(), ci.data(), inverse);
    for (int y = 0; y < h; ++y) {
      tr[static_cast<std::size_t>(y) * w + x] = cr[y];
      ti[static_cast<std::size_t>(y) * w + x] = ci[y];
    }
  }
  // fftshift and orthonormal scaling
  roll_plane(tr.data(), re, h, w, shift_offset(h), shift_offset(w));
  roll_plane(ti.data(), im, h, w, shift_offset(h), shift_offset(w));
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    re[i] *= s;
    im[i] *= s;
  }
}

}  // namespace detail

// Centered orthonormal 2-D DFT (DC at the array center), applied per channel.
inline ComplexTensor fft2c(const ComplexTensor& img) {
  ComplexTensor out = img;
  for (int c = 0; c < out.channels(); ++c)
    detail::fft2c_plane(out.re.plane(c), out.im.plane(c), out.height(), out.width(), false);
  return out;
}

// Inverse (and exact adjoint) of fft2c.
inline ComplexTensor ifft2c(const ComplexTensor& k) {
  ComplexTensor out = k;
  for (int c = 0; c < out.channels(); ++c)
    detail::fft2c_plane(out.re.plane(c), out.im.plane(c), out.height(), out.width(), true);
  return out;
}

}  // namespace dlctl
