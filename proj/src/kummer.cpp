// Kummer's confluent hypergeometric function M(a, b, z).
//
// After the Kummer transformation the series argument w satisfies Re w >= 0,
// so the terms never alternate in sign because of the argument alone. The
// remaining cancellation (worst on the imaginary axis, where the largest term
// is ~e^{|w|} while the sum is O(|w|^p)) is measured while summing: the
// rounding error of term k is bounded by ~k ulps, so
//   err <= 4 eps sum_k (k + 1) |t_k|.
// When that bound misses the tolerance the series is re-summed in MPFR with
// the missing number of bits added.

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "landau/errors.hpp"
#include "landau/special_functions.hpp"

namespace landau {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr int kRescaleBits = 600;
constexpr int kMaxPrecisionBits = 1 << 16;
constexpr int kMaxPrecisionPasses = 10;

struct SeriesOutcome {
  Complex sum;           // sum * 2^exp2 is the series value
  long exp2 = 0;
  double err_log2 = 0;   // log2 of the rounding-error bound, same scale
  double sum_log2 = 0;   // log2 |sum * 2^exp2|
};

// Upper bound for |t_{m+1} / t_m| valid for every m >= n (needs n + Re b > 0).
double ratio_bound(double abs_w, double abs_a_minus_b, double re_b, int n) {
  const double denom = n + re_b;
  if (denom <= 0) return std::numeric_limits<double>::infinity();
  return abs_w * (1.0 + abs_a_minus_b / denom) / (n + 1.0);
}

double log2_add(double x, double y) {
  if (x == -std::numeric_limits<double>::infinity()) return y;
  if (y == -std::numeric_limits<double>::infinity()) return x;
  const double hi = std::max(x, y);
  const double lo = std::min(x, y);
  return hi + std::log2(1.0 + std::exp2(lo - hi));
}

// Double-precision pass with power-of-two rescaling against overflow.
SeriesOutcome sum_double(Complex a, Complex b, Complex w, const AccuracySpec& acc) {
  const double eps = std::numeric_limits<double>::epsilon();
  const double abs_w = std::abs(w);
  const double abs_amb = std::abs(a - b);
  Complex term{1.0, 0.0};
  Complex sum{1.0, 0.0};
  double weighted = 1.0;  // sum (k+1)|t_k|, same scale as sum
  long exp2 = 0;
  for (int k = 0;; ++k) {
    if (k >= acc.max_terms)
      throw NumericalError(ErrorKind::non_convergence,
                           "kummer_m: series did not converge within " + std::to_string(acc.max_terms) + " terms");
    term *= (a + static_cast<double>(k)) * w / ((b + static_cast<double>(k)) * (k + 1.0));
    sum += term;
    const double abs_t = std::abs(term);
    weighted += (k + 2.0) * abs_t;
    if (abs_t > std::ldexp(1.0, kRescaleBits) || std::abs(sum) > std::ldexp(1.0, kRescaleBits)) {
      term = std::ldexp(1.0, -kRescaleBits) * term;
      sum = std::ldexp(1.0, -kRescaleBits) * sum;
      weighted = std::ldexp(weighted, -kRescaleBits);
      exp2 += kRescaleBits;
    }
    const double rho = ratio_bound(abs_w, abs_amb, b.real(), k + 1);
    if (rho < 1.0) {
      const double tail = std::abs(term) * rho / (1.0 - rho);
      if (tail <= 0.1 * acc.rel_tol * std::abs(sum) || tail <= 0.01 * eps * weighted) break;
    }
  }
  SeriesOutcome out;
  out.sum = sum;
  out.exp2 = exp2;
  out.err_log2 = std::log2(4.0 * eps * weighted) + static_cast<double>(exp2);
  const double abs_sum = std::abs(sum);
  out.sum_log2 = abs_sum > 0 ? std::log2(abs_sum) + static_cast<double>(exp2)
                             : -std::numeric_limits<double>::infinity();
  return out;
}

class MpReal {
 public:
  explicit MpReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  MpReal(mpfr_prec_t prec, double x) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, x, MPFR_RNDN);
  }
  ~MpReal() { mpfr_clear(v_); }
  MpReal(const MpReal&) = delete;
  MpReal& operator=(const MpReal&) = delete;

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// log2 |re + i im| without overflow.
double log2_abs(const MpReal& re, const MpReal& im) {
  const bool re_zero = mpfr_zero_p(re.get());
  const bool im_zero = mpfr_zero_p(im.get());
  if (re_zero && im_zero) return -std::numeric_limits<double>::infinity();
  long er = 0;
  long ei = 0;
  const double dr = re_zero ? 0.0 : mpfr_get_d_2exp(&er, re.get(), MPFR_RNDN);
  const double di = im_zero ? 0.0 : mpfr_get_d_2exp(&ei, im.get(), MPFR_RNDN);
  const long e = re_zero ? ei : (im_zero ? er : std::max(er, ei));
  const double hr = re_zero ? 0.0 : std::ldexp(dr, static_cast<int>(er - e));
  const double hi = im_zero ? 0.0 : std::ldexp(di, static_cast<int>(ei - e));
  return std::log2(std::hypot(hr, hi)) + static_cast<double>(e);
}

SeriesOutcome sum_mpfr(Complex a, Complex b, Complex w, const AccuracySpec& acc, mpfr_prec_t prec) {
  const MpReal ar(prec, a.real()), ai(prec, a.imag());
  const MpReal br(prec, b.real()), bi(prec, b.imag());
  const MpReal wr(prec, w.real()), wi(prec, w.imag());
  MpReal tr(prec, 1.0), ti(prec, 0.0), sr(prec, 1.0), si(prec, 0.0);
  MpReal ak(prec), bk(prec), nr(prec), ni(prec), dr(prec), di(prec), qr(prec), qi(prec), tmp(prec), tmp2(prec),
      norm(prec);
  const bool real_b = b.imag() == 0.0;
  const double abs_w = std::abs(w);
  const double abs_amb = std::abs(a - b);
  double weighted_log2 = 0.0;  // log2 sum (k+1)|t_k|
  const double prec_eps_log2 = 1.0 - static_cast<double>(prec);

  for (int k = 0;; ++k) {
    if (k >= acc.max_terms)
      throw NumericalError(ErrorKind::non_convergence,
                           "kummer_m: series did not converge within " + std::to_string(acc.max_terms) + " terms");
    // n = (a + k) w
    mpfr_add_si(ak.get(), ar.get(), k, MPFR_RNDN);
    mpfr_mul(nr.get(), ak.get(), wr.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), ai.get(), wi.get(), MPFR_RNDN);
    mpfr_sub(nr.get(), nr.get(), tmp.get(), MPFR_RNDN);
    mpfr_mul(ni.get(), ak.get(), wi.get(), MPFR_RNDN);
    mpfr_mul(tmp.get(), ai.get(), wr.get(), MPFR_RNDN);
    mpfr_add(ni.get(), ni.get(), tmp.get(), MPFR_RNDN);
    // d = (b + k)(k + 1)
    mpfr_add_si(bk.get(), br.get(), k, MPFR_RNDN);
    mpfr_mul_si(dr.get(), bk.get(), k + 1, MPFR_RNDN);
    if (real_b) {
      mpfr_div(qr.get(), nr.get(), dr.get(), MPFR_RNDN);
      mpfr_div(qi.get(), ni.get(), dr.get(), MPFR_RNDN);
    } else {
      mpfr_mul_si(di.get(), bi.get(), k + 1, MPFR_RNDN);
      mpfr_sqr(norm.get(), dr.get(), MPFR_RNDN);
      mpfr_sqr(tmp.get(), di.get(), MPFR_RNDN);
      mpfr_add(norm.get(), norm.get(), tmp.get(), MPFR_RNDN);
      // q = n conj(d) / |d|^2
      mpfr_mul(qr.get(), nr.get(), dr.get(), MPFR_RNDN);
      mpfr_mul(tmp.get(), ni.get(), di.get(), MPFR_RNDN);
      mpfr_add(qr.get(), qr.get(), tmp.get(), MPFR_RNDN);
      mpfr_div(qr.get(), qr.get(), norm.get(), MPFR_RNDN);
      mpfr_mul(qi.get(), ni.get(), dr.get(), MPFR_RNDN);
      mpfr_mul(tmp.get(), nr.get(), di.get(), MPFR_RNDN);
      mpfr_sub(qi.get(), qi.get(), tmp.get(), MPFR_RNDN);
      mpfr_div(qi.get(), qi.get(), norm.get(), MPFR_RNDN);
    }
    // t *= q
    mpfr_mul(tmp.get(), tr.get(), qr.get(), MPFR_RNDN);
    mpfr_mul(tmp2.get(), ti.get(), qi.get(), MPFR_RNDN);
    mpfr_sub(tmp.get(), tmp.get(), tmp2.get(), MPFR_RNDN);
    mpfr_mul(tmp2.get(), tr.get(), qi.get(), MPFR_RNDN);
    mpfr_mul(ti.get(), ti.get(), qr.get(), MPFR_RNDN);
    mpfr_add(ti.get(), ti.get(), tmp2.get(), MPFR_RNDN);
    mpfr_swap(tr.get(), tmp.get());
    mpfr_add(sr.get(), sr.get(), tr.get(), MPFR_RNDN);
    mpfr_add(si.get(), si.get(), ti.get(), MPFR_RNDN);

    const double t_log2 = log2_abs(tr, ti);
    weighted_log2 = log2_add(weighted_log2, std::log2(k + 2.0) + t_log2);
    const double rho = ratio_bound(abs_w, abs_amb, b.real(), k + 1);
    if (rho < 1.0) {
      const double tail_log2 = t_log2 + std::log2(rho / (1.0 - rho));
      const double s_log2 = log2_abs(sr, si);
      if (tail_log2 <= std::log2(0.1 * acc.rel_tol) + s_log2 || tail_log2 <= prec_eps_log2 - 8 + weighted_log2) break;
    }
  }

  SeriesOutcome out;
  out.sum_log2 = log2_abs(sr, si);
  out.err_log2 = 2.0 + prec_eps_log2 + weighted_log2;
  if (out.sum_log2 == -std::numeric_limits<double>::infinity()) {
    out.sum = {0.0, 0.0};
    return out;
  }
  // Bring the sum to a double mantissa times 2^exp2.
  const long e = static_cast<long>(std::floor(out.sum_log2));
  mpfr_mul_2si(tmp.get(), sr.get(), -e, MPFR_RNDN);
  mpfr_mul_2si(tmp2.get(), si.get(), -e, MPFR_RNDN);
  out.sum = {mpfr_get_d(tmp.get(), MPFR_RNDN), mpfr_get_d(tmp2.get(), MPFR_RNDN)};
  out.exp2 = e;
  return out;
}

bool meets_tolerance(const SeriesOutcome& s, double rel_tol) {
  return s.err_log2 <= std::log2(0.5 * rel_tol) + s.sum_log2;
}

ScaledComplex series(Complex a, Complex b, Complex w, const AccuracySpec& acc) {
  SeriesOutcome s = sum_double(a, b, w, acc);
  if (!meets_tolerance(s, acc.rel_tol)) {
    double deficit = std::isfinite(s.sum_log2) ? s.err_log2 - (std::log2(0.25 * acc.rel_tol) + s.sum_log2) : 64.0;
    long prec = 53 + static_cast<long>(std::ceil(std::max(deficit, 0.0))) + 32;
    for (int pass = 0;; ++pass) {
      if (prec > kMaxPrecisionBits || pass >= kMaxPrecisionPasses)
        throw NumericalError(ErrorKind::non_convergence, "kummer_m: cancellation exceeds the precision budget");
      s = sum_mpfr(a, b, w, acc, static_cast<mpfr_prec_t>(prec));
      if (meets_tolerance(s, acc.rel_tol)) break;
      deficit = std::isfinite(s.sum_log2) ? s.err_log2 - (std::log2(0.25 * acc.rel_tol) + s.sum_log2) : 64.0;
      prec += static_cast<long>(std::ceil(std::max(deficit, 0.0))) + 32;
    }
  }
  return {s.sum, static_cast<double>(s.exp2) * kLn2};
}

}  // namespace

ScaledComplex kummer_m_scaled(Complex a, Complex b, Complex z, const AccuracySpec& acc) {
  acc.validate();
  auto finite = [](Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); };
  if (!finite(a) || !finite(b) || !finite(z)) throw DomainError("kummer_m: non-finite argument");
  if (b.imag() == 0.0 && b.real() <= 0.0 && b.real() == std::floor(b.real()))
    throw DomainError("kummer_m: b must not be a non-positive integer");
  if (z == Complex(0.0, 0.0)) return {{1.0, 0.0}, 0.0};

  if (z.real() < 0.0) {
    // M(a, b, z) = e^z M(b - a, b, -z)
    ScaledComplex inner = series(b - a, b, -z, acc);
    inner.mantissa *= std::polar(1.0, z.imag());
    inner.log_scale += z.real();
    return inner;
  }
  return series(a, b, z, acc);
}

Complex kummer_m(Complex a, Complex b, Complex z, const AccuracySpec& acc) {
  return kummer_m_scaled(a, b, z, acc).value();
}

}  // namespace landau
