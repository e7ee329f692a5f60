#include "cmcflat/periodicity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

#include <Eigen/Dense>

#include "cmcflat/errors.hpp"

namespace cmcflat {

namespace {

constexpr Scalar kCongruenceTolerance = 1e-9;
constexpr Scalar kPeriodResidual = 1e-9;
constexpr Scalar kParallel = 1e-9;
constexpr int kScanCells = 8192;

Scalar cross(const Vec2& a, const Vec2& b) { return a.x() * b.y() - a.y() * b.x(); }

Scalar cycles_defect(Scalar phase) {
  const Scalar c = phase / (2.0 * kPi);
  return std::abs(c - std::round(c));
}

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

// Inverse of a modulo n (gcd(a, n) = 1, n >= 1).
long long mod_inverse(long long a, long long n) {
  long long old_r = ((a % n) + n) % n, r = n, old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  return ((old_s % n) + n) % n;
}

Scalar sqrt_of(const Rational& q) { return std::sqrt(q.to_double()); }

}  // namespace

std::vector<Vec2> period_points(const Immersion& im, Scalar search_bound) {
  const MiyataData& d = im.data();
  if (d.m() != 1 || std::abs(d.mu[0] - Complex(1.0, 0.0)) > 1e-12)
    throw ValidationError("period_lattice requires canonical data (m = 1, mu_1 = 1); run canonicalize first");
  if (!(search_bound > 0.0)) throw DomainError("search_bound must be positive");

  const auto& planes = im.planes();
  const Vec2& w0 = planes[0].wave;
  std::size_t star = 0;
  Scalar best = 0.0;
  for (std::size_t i = 1; i < planes.size(); ++i) {
    const Scalar c = std::abs(cross(w0, planes[i].wave)) / (w0.norm() * planes[i].wave.norm());
    if (c > best) {
      best = c;
      star = i;
    }
  }
  if (best < kParallel) throw DegenerateError("all wave vectors are parallel; the period set is not discrete");

  Eigen::Matrix2d m;
  m.row(0) = w0.transpose();
  m.row(1) = planes[star].wave.transpose();
  const Eigen::Matrix2d basis = 2.0 * kPi * m.inverse();  // columns: z for unit K0 / K*

  const auto range = [&](const Vec2& w) {
    return static_cast<long long>(std::ceil(w.norm() * search_bound / (2.0 * kPi))) + 1;
  };
  const long long n0 = range(w0);
  const long long n1 = range(planes[star].wave);
  const AmbientVector origin = im.eval(EvalPoint{0.0, 0.0});

  std::vector<Vec2> out;
  for (long long k0 = -n0; k0 <= n0; ++k0) {
    for (long long k1 = -n1; k1 <= n1; ++k1) {
      if (k0 == 0 && k1 == 0) continue;
      const Vec2 z = basis * Eigen::Vector2d(static_cast<Scalar>(k0), static_cast<Scalar>(k1));
      if (z.norm() > search_bound) continue;
      bool ok = true;
      for (std::size_t i = 1; i < planes.size() && ok; ++i)
        if (i != star) ok = cycles_defect(planes[i].wave.dot(z)) <= kCongruenceTolerance;
      if (!ok) continue;
      if ((im.eval(EvalPoint{z.x(), z.y()}) - origin).norm() > kPeriodResidual) continue;
      out.push_back(z);
    }
  }
  return out;
}

Lattice2 period_lattice(const Immersion& im, Scalar search_bound) {
  std::vector<Vec2> pts = period_points(im, search_bound);
  if (pts.empty()) return Lattice2{};
  std::sort(pts.begin(), pts.end(), [](const Vec2& a, const Vec2& b) { return a.squaredNorm() < b.squaredNorm(); });
  const Vec2 v1 = pts.front();
  for (const Vec2& v : pts)
    if (std::abs(cross(v1, v)) > kParallel * v1.norm() * v.norm()) return Lattice2::from_basis(v1, v);
  return Lattice2::line(v1);
}

Scalar direction_function(Scalar h, long long k0, long long k1, Scalar rho) {
  const Scalar r = std::sqrt(lambda2_of(h) / lambda1_of(h));
  const Scalar rt = rho_tilde_of(h, rho);
  const auto K0 = static_cast<Scalar>(k0);
  const auto K1 = static_cast<Scalar>(k1);
  return std::sin(rt) / std::sin(rho) * (K1 - r * K0 * std::cos(rho)) + r * K0 * std::cos(rt);
}

std::vector<PeriodicDirection> periodic_direction_search(Scalar h, long long k0, long long k1, Scalar lo, Scalar hi) {
  if (!(h > 0.0 && h < 1.0)) throw DomainError("h violates 0 < h < 1");
  const Scalar r = std::sqrt(lambda2_of(h) / lambda1_of(h));
  if (!(std::abs(static_cast<Scalar>(k1) - r * static_cast<Scalar>(k0)) > 1e-12))
    throw DomainError("(K0, K1) violates |K1 - sqrt(lambda2/lambda1) K0| > 0");
  if (!(lo > 0.0 && hi < kPi / 2.0 && lo < hi)) throw DomainError("window violates 0 < lo < hi < pi/2");

  const auto F = [&](Scalar rho) { return direction_function(h, k0, k1, rho); };
  const Scalar l1 = lambda1_of(h);
  const Scalar l2 = lambda2_of(h);

  std::vector<PeriodicDirection> out;
  Scalar a = lo;
  Scalar fa = F(a);
  for (int cell = 1; cell <= kScanCells; ++cell) {
    const Scalar b = lo + (hi - lo) * cell / kScanCells;
    const Scalar fb = F(b);
    const auto first = static_cast<long long>(std::ceil(std::min(fa, fb)));
    const auto last = static_cast<long long>(std::floor(std::max(fa, fb)));
    for (long long k = first; k <= last; ++k) {
      const Scalar ga = fa - static_cast<Scalar>(k);
      const Scalar gb = fb - static_cast<Scalar>(k);
      if (!((ga < 0.0 && gb >= 0.0) || (ga > 0.0 && gb <= 0.0))) continue;
      Scalar x0 = a, x1 = b, g0 = ga;
      for (int it = 0; it < 200 && x1 - x0 > 0.0; ++it) {
        const Scalar mid = 0.5 * (x0 + x1);
        if (mid <= x0 || mid >= x1) break;
        const Scalar gm = F(mid) - static_cast<Scalar>(k);
        if ((gm < 0.0) == (g0 < 0.0)) {
          x0 = mid;
          g0 = gm;
        } else {
          x1 = mid;
        }
      }
      const Scalar rho = std::abs(F(x0) - k) <= std::abs(F(x1) - k) ? x0 : x1;
      PeriodicDirection pd;
      pd.rho = rho;
      pd.k2 = k;
      pd.v = Vec2(2.0 * kPi / std::sin(rho) *
                      (static_cast<Scalar>(k1) / std::sqrt(l2) - static_cast<Scalar>(k0) * std::cos(rho) / std::sqrt(l1)),
                  2.0 * kPi * static_cast<Scalar>(k0) / std::sqrt(l1));
      const Immersion im = from_family(h, rho);
      pd.residual = (im.eval(EvalPoint{pd.v.x(), pd.v.y()}) - im.eval(EvalPoint{0.0, 0.0})).norm();
      out.push_back(pd);
    }
    a = b;
    fa = fb;
  }
  return out;
}

TorusCaseI torus_case_i(const Rational& q) {
  if (!(q > Rational(1))) throw DomainError("q = " + q.str() + " violates q > 1");
  const Rational q2 = q * q;
  TorusCaseI out;
  out.q = q;
  out.h = (q2 - Rational(1)) / (q2 + Rational(1));
  const Rational l1 = Rational(2) * (Rational(1) - out.h);
  const Rational l2 = Rational(2) * (Rational(1) + out.h);
  // x-period 2 pi / sqrt(l2); y-period 2 pi den(q) / sqrt(l1), since
  // sqrt(l1) y and q sqrt(l1) y must both lie in 2 pi Z.
  const Rational den(q.denominator());
  const Vec2 gx(2.0 * kPi / sqrt_of(l2), 0.0);
  const Vec2 gy(0.0, 2.0 * kPi * den.to_double() / sqrt_of(l1));
  const ExactGram gram{Rational(4) / l2, Rational(0), Rational(4) * den * den / l1};
  out.lattice = Lattice2::from_basis(gx, gy, gram);
  return out;
}

TorusCaseII torus_case_ii(long long p, long long q, long long r, long long t) {
  if (p <= 0 || q <= 0 || r <= 0 || t <= 0) throw DomainError("p, q, r, t must be positive integers");
  TorusCaseII out;
  TorusParams& tp = out.params;
  tp.p = p;
  tp.q = q;
  tp.r = r;
  tp.t = t;
  tp.a = Rational(BigInt(p) * p, BigInt(q) * q);
  tp.b = Rational(BigInt(r) * r, BigInt(t) * t);
  const Rational& a = tp.a;
  const Rational& b = tp.b;
  const Rational d = a - b;
  if (!(d * d < Rational(1))) throw DomainError("(a - b)^2 = " + (d * d).str() + " violates (a - b)^2 < 1");
  const Rational one(1);
  const Rational e = d * d + a + b;
  tp.h = (one - d * d) / (one + d * d + Rational(2) * (a + b));
  tp.s = (one + d) / Rational(2);

  const Scalar h = tp.h.to_double();
  out.rho = 2.0 * std::atan(t_of_s(h, tp.s.to_double()));

  const Rational sqrt_b{BigInt(r), BigInt(t)};
  const Rational sqrt_a{BigInt(p), BigInt(q)};
  out.v1 = Vec2(kPi * sqrt_of(e) / sqrt_a.to_double(), 0.0);
  out.v2 = Vec2(-kPi * (sqrt_b / sqrt_a).to_double() * (one - d).to_double() / sqrt_of(e),
                kPi * std::sqrt((d * d + Rational(2) * (a + b) + one).to_double() / e.to_double()));
  const Rational v2x = -(sqrt_b / sqrt_a) * (one - d);  // times pi / sqrt(e)
  out.gram_v1_v2.g11 = e / a;
  out.gram_v1_v2.g12 = -(sqrt_b / a) * (one - d);
  out.gram_v1_v2.g22 = v2x * v2x / e + (d * d + Rational(2) * (a + b) + one) / e;

  // m v2 + n v1 is a period iff m q t - n q r = 0 (mod p t).
  const long long n_mod = p * t;
  const long long c1 = q * t;
  const long long c2 = -q * r;
  const long long g1 = std::gcd(c1, n_mod);
  const long long n0 = g1 / std::gcd(g1, c2);
  const long long step = n_mod / g1;
  long long m0 = 0;
  if (step > 1) {
    const long long rhs = ((-(c2 * n0) / g1) % step + step) % step;
    m0 = (rhs * mod_inverse((c1 / g1) % step, step)) % step;
  }
  // Basis in the (v2, v1) coordinates: (step, 0) and (m0, n0).
  const ExactGram g21{out.gram_v1_v2.g22, out.gram_v1_v2.g12, out.gram_v1_v2.g11};
  const IntMatrix2 u{{{step, 0}, {m0, n0}}};
  out.lattice = Lattice2::from_basis(static_cast<Scalar>(step) * out.v2,
                                     static_cast<Scalar>(m0) * out.v2 + static_cast<Scalar>(n0) * out.v1,
                                     transform(g21, u));
  out.sublattice = Lattice2::from_basis(static_cast<Scalar>(p) * out.v2, static_cast<Scalar>(p * t) * out.v1,
                                        transform(g21, IntMatrix2{{{p, 0}, {0, p * t}}}));
  std::ostringstream cond;
  cond << "m v2 + n v1 with m*" << q << "/" << p << " - n*" << q * r << "/" << p * t << " in Z";
  out.lattice_condition = cond.str();
  return out;
}

Immersion torus_immersion(const TorusCaseII& c) { return from_family(c.params.h.to_double(), c.rho); }

TorusVerdict torus_exists(const Rational& h, long long search_bound) {
  if (!(h > Rational(0) && h < Rational(1))) throw DomainError("h = " + h.str() + " violates 0 < h < 1");
  TorusVerdict out;
  out.h = h;
  const Rational one(1);
  if (const auto q = rational_sqrt_exact((one + h) / (one - h))) {
    out.kind = TorusVerdictKind::case_i;
    out.case_i = torus_case_i(*q);
    return out;
  }
  // For fixed a, h(a, b) = h is a quadratic in d = a - b:
  // (1 + h) d^2 - 2 h d + h (1 + 4a) - 1 = 0, discriminant 4 D with D = 1 - 4 a h (1 + h).
  for (long long p = 1; p <= search_bound; ++p) {
    for (long long q = 1; q <= search_bound; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const Rational a(BigInt(p) * p, BigInt(q) * q);
      const Rational disc = one - Rational(4) * a * h * (one + h);
      if (disc.sign() < 0) continue;
      const auto root = rational_sqrt_exact(disc);
      if (!root) continue;
      std::optional<std::pair<long long, long long>> best;
      for (const Rational& d : {(h - *root) / (h + one), (h + *root) / (h + one)}) {
        if (!(d * d < one)) continue;
        const Rational b = a - d;
        if (b.sign() <= 0) continue;
        const auto sb = rational_sqrt_exact(b);
        if (!sb) continue;
        const BigInt rn = sb->numerator();
        const BigInt td = sb->denominator();
        if (rn > search_bound || td > search_bound) continue;
        const std::pair<long long, long long> rt{to_ll(rn), to_ll(td)};
        if (!best || rt < *best) best = rt;
      }
      if (best) {
        out.kind = TorusVerdictKind::case_ii;
        out.case_ii = torus_case_ii(p, q, best->first, best->second);
        return out;
      }
    }
  }
  return out;
}

const char* to_string(TorusVerdictKind kind) {
  switch (kind) {
    case TorusVerdictKind::case_i: return "case_i";
    case TorusVerdictKind::case_ii: return "case_ii";
    default: return "not_found";
  }
}

}  // namespace cmcflat
