#include "rqit/relclassical.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "rqit/rng.hpp"

namespace rqit {

namespace {

void check_beta(double beta) {
  if (beta < 0.0 || beta >= 1.0) throw std::invalid_argument("|beta| must be in [0, 1)");
}

double digamma(double x) {
  double r = 0.0;
  while (x < 6.0) {
    r -= 1.0 / x;
    x += 1.0;
  }
  double ix = 1.0 / x, ix2 = ix * ix;
  return r + std::log(x) - 0.5 * ix -
         ix2 * (1.0 / 12.0 - ix2 * (1.0 / 120.0 - ix2 / 252.0));
}

struct HistMi {
  double value = 0.0;      // nats, Miller-Madow corrected
  std::vector<double> cells;  // joint probabilities (nonzero cells kept in grid order)
  std::vector<int> cell_ix, cell_iy;
  int bins = 0;
  std::size_t n = 0;
};

HistMi histogram_mi(const std::vector<Eigen::Vector2d>& v, int bins) {
  HistMi h;
  h.bins = bins;
  h.n = v.size();
  double xmin = v[0].x(), xmax = v[0].x(), ymin = v[0].y(), ymax = v[0].y();
  for (const auto& s : v) {
    xmin = std::min(xmin, s.x()); xmax = std::max(xmax, s.x());
    ymin = std::min(ymin, s.y()); ymax = std::max(ymax, s.y());
  }
  if (xmax - xmin < 1e-12 || ymax - ymin < 1e-12)
    throw std::invalid_argument("degenerate ensemble");
  std::vector<std::size_t> counts(static_cast<std::size_t>(bins) * bins, 0);
  auto bin_of = [bins](double t, double lo, double hi) {
    int b = static_cast<int>((t - lo) / (hi - lo) * bins);
    return std::clamp(b, 0, bins - 1);
  };
  for (const auto& s : v) {
    int bx = bin_of(s.x(), xmin, xmax), by = bin_of(s.y(), ymin, ymax);
    ++counts[static_cast<std::size_t>(bx) * bins + by];
  }
  std::vector<double> px(bins, 0.0), py(bins, 0.0);
  double hxy = 0.0;
  int k_joint = 0;
  for (int i = 0; i < bins; ++i)
    for (int j = 0; j < bins; ++j) {
      std::size_t c = counts[static_cast<std::size_t>(i) * bins + j];
      if (c == 0) continue;
      double p = static_cast<double>(c) / h.n;
      px[i] += p;
      py[j] += p;
      hxy -= p * std::log(p);
      ++k_joint;
      h.cells.push_back(p);
      h.cell_ix.push_back(i);
      h.cell_iy.push_back(j);
    }
  auto ent = [](const std::vector<double>& q) {
    double s = 0.0;
    for (double p : q)
      if (p > 0.0) s -= p * std::log(p);
    return s;
  };
  int kx = 0, ky = 0;
  for (double p : px) kx += p > 0.0;
  for (double p : py) ky += p > 0.0;
  double mm = static_cast<double>(k_joint - kx - ky + 1) / (2.0 * h.n);
  h.value = ent(px) + ent(py) - hxy + mm;
  return h;
}

// Poisson-bootstrap spread of the histogram estimate (nats).
double bootstrap_stderr(const HistMi& h, std::uint64_t seed, int reps) {
  std::vector<double> vals;
  for (int r = 0; r < reps; ++r) {
    std::mt19937_64 gen(seed ^ (0xabcdef1234567ull + 7919ull * r));
    std::vector<double> pb(h.cells.size());
    std::vector<double> px(h.bins, 0.0), py(h.bins, 0.0);
    double tot = 0.0;
    for (std::size_t c = 0; c < h.cells.size(); ++c) {
      std::poisson_distribution<long> pois(h.cells[c] * h.n);
      pb[c] = static_cast<double>(pois(gen));
      tot += pb[c];
    }
    if (tot <= 0.0) continue;
    double hxy = 0.0;
    int kj = 0;
    for (std::size_t c = 0; c < h.cells.size(); ++c) {
      double p = pb[c] / tot;
      if (p <= 0.0) continue;
      px[h.cell_ix[c]] += p;
      py[h.cell_iy[c]] += p;
      hxy -= p * std::log(p);
      ++kj;
    }
    double hx = 0.0, hy = 0.0;
    int kx = 0, ky = 0;
    for (double p : px)
      if (p > 0.0) { hx -= p * std::log(p); ++kx; }
    for (double p : py)
      if (p > 0.0) { hy -= p * std::log(p); ++ky; }
    vals.push_back(hx + hy - hxy + (kj - kx - ky + 1) / (2.0 * tot));
  }
  double mean = 0.0;
  for (double v : vals) mean += v;
  mean /= vals.size();
  double var = 0.0;
  for (double v : vals) var += (v - mean) * (v - mean);
  return std::sqrt(var / (vals.size() - 1));
}

// Kraskov-style kNN estimate with Chebyshev balls (nats).
double knn_mi(const std::vector<Eigen::Vector2d>& v, int k) {
  const std::size_t n = v.size();
  double xmin = v[0].x(), xmax = v[0].x(), ymin = v[0].y(), ymax = v[0].y();
  for (const auto& s : v) {
    xmin = std::min(xmin, s.x()); xmax = std::max(xmax, s.x());
    ymin = std::min(ymin, s.y()); ymax = std::max(ymax, s.y());
  }
  // bucket grid sized so cells hold a handful of points
  int g = std::max(1, static_cast<int>(std::sqrt(static_cast<double>(n) / 4.0)));
  double cw = (xmax - xmin) / g + 1e-300, ch = (ymax - ymin) / g + 1e-300;
  std::vector<std::vector<int>> cells(static_cast<std::size_t>(g) * g);
  auto cell_of = [&](const Eigen::Vector2d& s) {
    int cx = std::clamp(static_cast<int>((s.x() - xmin) / cw), 0, g - 1);
    int cy = std::clamp(static_cast<int>((s.y() - ymin) / ch), 0, g - 1);
    return std::pair<int, int>(cx, cy);
  };
  for (std::size_t i = 0; i < n; ++i) {
    auto [cx, cy] = cell_of(v[i]);
    cells[static_cast<std::size_t>(cx) * g + cy].push_back(static_cast<int>(i));
  }
  std::vector<double> xs(n), ys(n);
  for (std::size_t i = 0; i < n; ++i) { xs[i] = v[i].x(); ys[i] = v[i].y(); }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());

  double acc = 0.0;
  std::vector<double> dists;
  for (std::size_t i = 0; i < n; ++i) {
    auto [cx, cy] = cell_of(v[i]);
    dists.clear();
    for (int ring = 0;; ++ring) {
      for (int ax = cx - ring; ax <= cx + ring; ++ax) {
        if (ax < 0 || ax >= g) continue;
        for (int ay = cy - ring; ay <= cy + ring; ++ay) {
          if (ay < 0 || ay >= g) continue;
          if (std::max(std::abs(ax - cx), std::abs(ay - cy)) != ring) continue;
          for (int j : cells[static_cast<std::size_t>(ax) * g + ay]) {
            if (static_cast<std::size_t>(j) == i) continue;
            double d = std::max(std::abs(v[j].x() - v[i].x()),
                                std::abs(v[j].y() - v[i].y()));
            dists.push_back(d);
          }
        }
      }
      if (dists.size() >= static_cast<std::size_t>(k)) {
        std::nth_element(dists.begin(), dists.begin() + (k - 1), dists.end());
        double eps = dists[k - 1];
        // the ring search is complete once eps fits inside the searched square
        double covered = ring * std::min(cw, ch);
        if (eps <= covered || ring >= g) {
          auto strict_count = [](const std::vector<double>& sorted, double lo, double hi) {
            auto a = std::upper_bound(sorted.begin(), sorted.end(), lo);
            auto b = std::lower_bound(sorted.begin(), sorted.end(), hi);
            return static_cast<long>(b - a);
          };
          long nx = strict_count(xs, v[i].x() - eps, v[i].x() + eps) - 1;
          long ny = strict_count(ys, v[i].y() - eps, v[i].y() + eps) - 1;
          acc += digamma(nx + 1.0) + digamma(ny + 1.0);
          break;
        }
      }
      if (ring >= 2 * g) break;  // should not happen
    }
  }
  return digamma(static_cast<double>(k)) + digamma(static_cast<double>(n)) - acc / n;
}

}  // namespace

double awng_capacity(const ChannelParams& c) {
  if (c.bandwidth < 0.0 || c.snr < 0.0 || c.doppler < 0.0)
    throw std::invalid_argument("channel parameters must be nonnegative");
  return c.bandwidth * std::log2(1.0 + c.doppler * c.snr);
}

double infinite_bandwidth_capacity(double snr, double doppler) {
  if (snr < 0.0 || doppler < 0.0)
    throw std::invalid_argument("channel parameters must be nonnegative");
  return doppler * snr * std::log2(std::exp(1.0));
}

double doppler_factor(double beta, double theta) {
  check_beta(beta);
  return std::sqrt(1.0 - beta * beta) / (1.0 - beta * std::cos(theta));
}

double moving_temperature(double rest_temperature, const ObserverMotion& m) {
  check_beta(m.beta);
  return rest_temperature * std::sqrt(1.0 - m.beta * m.beta) /
         (1.0 - m.beta * std::cos(m.theta));
}

VelocityEnsemble sample_bounded_planar_ensemble(std::size_t n, std::uint64_t seed) {
  if (n < 1000) throw std::invalid_argument("ensemble needs at least 1000 samples");
  VelocityEnsemble e;
  e.seed = seed;
  e.samples.resize(n);
  CounterRng rng(seed);
  for (std::size_t i = 0; i < n; ++i) {
    double r = std::sqrt(rng.uniform(2 * i));
    double phi = 2.0 * M_PI * rng.uniform(2 * i + 1);
    e.samples[i] = {r * std::cos(phi), r * std::sin(phi)};
  }
  return e;
}

VelocityEnsemble boost_ensemble(const VelocityEnsemble& e, double beta) {
  check_beta(beta);
  VelocityEnsemble out;
  out.seed = e.seed;
  out.samples.resize(e.samples.size());
  double g = std::sqrt(1.0 - beta * beta);
  for (std::size_t i = 0; i < e.samples.size(); ++i) {
    double ux = e.samples[i].x(), uy = e.samples[i].y();
    double den = 1.0 - beta * ux;
    out.samples[i] = {(ux - beta) / den, uy * g / den};
  }
  return out;
}

MiEstimate planar_mutual_information(const VelocityEnsemble& e, const MiParams& params,
                                     EntropyUnit unit) {
  if (e.samples.size() < 10000)
    throw std::invalid_argument("mutual-information estimate needs >= 1e4 samples");
  int bins = params.bins;
  if (bins <= 0)
    bins = std::clamp(static_cast<int>(std::lround(
                          std::cbrt(static_cast<double>(e.samples.size())))),
                      8, 128);
  HistMi full = histogram_mi(e.samples, bins);
  HistMi half = histogram_mi(e.samples, std::max(4, bins / 2));
  double stat = bootstrap_stderr(full, e.seed, params.bootstrap);
  double sys = 0.5 * std::abs(full.value - half.value);
  MiEstimate out;
  out.value = from_nats(full.value, unit);
  out.stderr_ = from_nats(std::sqrt(stat * stat + sys * sys), unit);
  if (params.knn_subsample > 0) {
    std::size_t m = std::min(params.knn_subsample, e.samples.size());
    std::vector<Eigen::Vector2d> sub(e.samples.begin(), e.samples.begin() + m);
    out.value_knn = from_nats(knn_mi(sub, params.knn_k), unit);
  }
  return out;
}

}  // namespace rqit
