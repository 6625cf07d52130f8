#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rqit/entropy.hpp"
#include "rqit/geoment.hpp"
#include "rqit/protocols.hpp"
#include "rqit/relclassical.hpp"
#include "rqit/relquantum.hpp"
#include "rqit/sweep.hpp"
#include "rqit/thermal.hpp"

namespace {

using rqit::EntropyUnit;

std::vector<double> parse_range(const std::string& spec) {
  // "start:stop:count" or a single value
  double start, stop;
  long count;
  char c1, c2;
  std::istringstream in(spec);
  if (spec.find(':') == std::string::npos) {
    if (!(in >> start) || !in.eof()) throw CLI::ValidationError("range", "bad value: " + spec);
    return {start};
  }
  if (!(in >> start >> c1 >> stop >> c2 >> count) || c1 != ':' || c2 != ':' || !in.eof() ||
      count < 1)
    throw CLI::ValidationError("range", "expected start:stop:count, got: " + spec);
  std::vector<double> out(count);
  for (long i = 0; i < count; ++i)
    out[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
  return out;
}

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string format_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Table& t, const std::string& format, const std::string& path) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : t.rows) {
      nlohmann::json r;
      for (std::size_t c = 0; c < t.columns.size(); ++c) r[t.columns[c]] = row[c];
      j.push_back(r);
    }
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t c = 0; c < t.columns.size(); ++c)
      out << (c ? "," : "") << t.columns[c];
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c)
        out << (c ? "," : "") << format_value(row[c]);
      out << "\n";
    }
  }
  if (path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(path, std::ios::binary);
    f << out.str();
  }
}

void emit_text(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
  } else {
    std::ofstream f(path, std::ios::binary);
    f << text << "\n";
  }
}

int default_threads() {
  if (const char* env = std::getenv("RQIT_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rqit: entropy and information computations for classical, quantum, and "
               "relativistic systems"};
  app.require_subcommand(1);

  std::string format = "csv", output;
  int threads = default_threads();
  std::uint64_t seed = 1;
  app.add_option("--format", format, "output format (csv or json)")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--output", output, "output file (default stdout)");
  app.add_option("--threads", threads, "worker threads for sweeps");
  app.add_option("--seed", seed, "seed for stochastic subcommands");

  // dimer
  auto* dimer = app.add_subcommand(
      "dimer", "thermal two-spin system: partition function, energy, entropies vs beta");
  double dimer_j = 1.0;
  std::string dimer_beta = "0:10:101";
  dimer->add_option("--J", dimer_j, "exchange coupling");
  dimer->add_option("--beta", dimer_beta, "inverse-temperature range start:stop:count");

  // blackhole
  auto* bh = app.add_subcommand(
      "blackhole", "black hole entropy, temperature, and evaporation entropy balance");
  std::string bh_mass = "1";
  double bh_dm = 1e-8;
  bh->add_option("--M", bh_mass, "mass range start:stop:count");
  bh->add_option("--dM", bh_dm, "evaporated mass decrement");

  // capacity
  auto* cap = app.add_subcommand(
      "capacity", "noisy-channel capacity for a moving receiver vs Doppler factor");
  double cap_w = 1.0, cap_snr = 1.0;
  std::string cap_alpha = "1";
  cap->add_option("--W", cap_w, "bandwidth");
  cap->add_option("--snr", cap_snr, "signal-to-noise ratio");
  cap->add_option("--alpha", cap_alpha, "Doppler factor range start:stop:count");

  // temperature
  auto* temp = app.add_subcommand(
      "temperature", "direction-dependent apparent temperature for a moving detector");
  double temp_t = 1.0, temp_beta = 0.6;
  std::string temp_theta = "0:3.14159265358979324:61";
  temp->add_option("--T", temp_t, "rest temperature");
  temp->add_option("--beta", temp_beta, "detector velocity v/c");
  temp->add_option("--theta", temp_theta, "detector angle range start:stop:count");

  // maxwell-mi
  auto* mi = app.add_subcommand(
      "maxwell-mi", "mutual information between planar velocity components under boosts");
  std::size_t mi_n = 1000000;
  std::string mi_beta = "0:0.9:4";
  mi->add_option("--n", mi_n, "sample count");
  mi->add_option("--beta", mi_beta, "boost velocity range start:stop:count");

  // boost-single
  auto* bs = app.add_subcommand(
      "boost-single", "single-particle spin entropy after a boost vs rapidity");
  std::vector<double> bs_ratio{1.0};
  std::string bs_xi = "0:4:17";
  int bs_grid = 15;
  bs->add_option("--ratio", bs_ratio, "momentum spread over mass (repeatable)");
  bs->add_option("--xi", bs_xi, "rapidity range start:stop:count");
  bs->add_option("--grid", bs_grid, "momentum nodes per axis");

  // boost-pair
  auto* bp = app.add_subcommand(
      "boost-pair", "spin concurrence of a boosted Bell pair vs rapidity");
  std::vector<double> bp_ratio{1.0, 4.0};
  std::string bp_xi = "0:10:41";
  int bp_grid = 15;
  bp->add_option("--ratio", bp_ratio, "momentum spread over mass (repeatable)");
  bp->add_option("--xi", bp_xi, "rapidity range start:stop:count");
  bp->add_option("--grid", bp_grid, "momentum nodes per axis");

  // fig2-concurrence
  auto* f2 = app.add_subcommand(
      "fig2-concurrence",
      "boost-created concurrence for momentum-entangled pairs: simulation vs closed form");
  std::vector<double> f2_p{0.5, 1.0, 2.0};
  std::string f2_xi = "0:3:13";
  f2->add_option("--p", f2_p, "momentum magnitude (repeatable)");
  f2->add_option("--xi", f2_xi, "rapidity range start:stop:count");

  // teleport
  auto* tp = app.add_subcommand("teleport", "teleport a qubit and emit the JSON transcript");
  double tp_a = 1.0, tp_b = 0.0;
  tp->add_option("--a", tp_a, "amplitude of |0> (real)");
  tp->add_option("--b", tp_b, "amplitude of |1> (real)");

  // superdense
  auto* sd = app.add_subcommand(
      "superdense", "send two classical bits through one qubit; emit the JSON transcript");
  std::string sd_bits = "00";
  sd->add_option("--bits", sd_bits, "two classical bits, e.g. 01");

  // geoment
  auto* ge = app.add_subcommand(
      "geoment", "entanglement entropy of a region of a coupled oscillator chain");
  std::vector<int> ge_n{16, 32, 64};
  double ge_coupling = 1.0, ge_mu = 1e-3, ge_fraction = 0.5;
  ge->add_option("--N", ge_n, "chain sizes (repeatable)");
  ge->add_option("--coupling", ge_coupling, "nearest-neighbour coupling");
  ge->add_option("--mu", ge_mu, "on-site mass term");
  ge->add_option("--region-fraction", ge_fraction, "fraction of sites inside the region");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Table t;
    if (*dimer) {
      t.columns = {"beta", "Z", "E", "S_joint_bits", "S_mutual_bits"};
      auto betas = parse_range(dimer_beta);
      auto rows = rqit::parallel_map<std::vector<double>>(
          betas.size(), threads, [&](std::size_t i) -> std::vector<double> {
            rqit::DimerParams p{dimer_j, betas[i]};
            return {betas[i], rqit::dimer_partition(p), rqit::dimer_energy(p),
                    rqit::dimer_joint_entropy(p, EntropyUnit::Bits),
                    rqit::dimer_mutual_entropy(p, EntropyUnit::Bits)};
          });
      t.rows = rows;
      emit(t, format, output);
    } else if (*bh) {
      t.columns = {"M", "S_BH", "T_H", "dS_BH", "dS_rad", "ratio"};
      auto masses = parse_range(bh_mass);
      for (double m : masses) {
        rqit::BlackHoleState s{m};
        auto step = rqit::evaporation_step(s, bh_dm);
        t.rows.push_back({m, rqit::bh_entropy(s), rqit::hawking_temperature(s), step.ds_bh,
                          step.ds_rad, step.ratio});
      }
      emit(t, format, output);
    } else if (*cap) {
      t.columns = {"alpha", "capacity_bits_per_s", "capacity_infinite_bandwidth"};
      for (double a : parse_range(cap_alpha))
        t.rows.push_back({a, rqit::awng_capacity({cap_w, cap_snr, a}),
                          rqit::infinite_bandwidth_capacity(cap_snr, a)});
      emit(t, format, output);
    } else if (*temp) {
      t.columns = {"theta", "T_apparent"};
      for (double th : parse_range(temp_theta))
        t.rows.push_back({th, rqit::moving_temperature(temp_t, {temp_beta, th})});
      emit(t, format, output);
    } else if (*mi) {
      t.columns = {"beta", "mi_nats", "stderr_nats", "mi_knn_nats"};
      auto betas = parse_range(mi_beta);
      auto rows = rqit::parallel_map<std::vector<double>>(
          betas.size(), threads, [&](std::size_t i) -> std::vector<double> {
            auto e = rqit::sample_bounded_planar_ensemble(mi_n, seed);
            if (betas[i] > 0.0) e = rqit::boost_ensemble(e, betas[i]);
            auto est = rqit::planar_mutual_information(e, {}, EntropyUnit::Nats);
            return {betas[i], est.value, est.stderr_, est.value_knn};
          });
      t.rows = rows;
      emit(t, format, output);
    } else if (*bs) {
      t.columns = {"ratio", "xi", "spin_entropy_bits", "joint_purity"};
      std::vector<std::pair<double, double>> grid;
      auto xis = parse_range(bs_xi);
      for (double r : bs_ratio)
        for (double x : xis) grid.push_back({r, x});
      auto rows = rqit::parallel_map<std::vector<double>>(
          grid.size(), threads, [&](std::size_t i) -> std::vector<double> {
            auto [ratio, xi] = grid[i];
            rqit::GridSpec gs;
            gs.points = {bs_grid, bs_grid, bs_grid};
            auto pk = rqit::gaussian_packet(ratio, 1.0, {0, 0, 0}, gs, {1.0, 0.0});
            auto boosted = rqit::boost_packet(pk, {xi, {0, 0, 1}});
            double purity = boosted.squared_norm() * boosted.squared_norm();
            return {ratio, xi,
                    rqit::von_neumann_entropy(rqit::spin_marginal(boosted), EntropyUnit::Bits),
                    purity};
          });
      t.rows = rows;
      emit(t, format, output);
    } else if (*bp) {
      t.columns = {"ratio", "xi", "concurrence"};
      std::vector<std::pair<double, double>> grid;
      auto xis = parse_range(bp_xi);
      for (double r : bp_ratio)
        for (double x : xis) grid.push_back({r, x});
      auto rows = rqit::parallel_map<std::vector<double>>(
          grid.size(), threads, [&](std::size_t i) -> std::vector<double> {
            auto [ratio, xi] = grid[i];
            rqit::GridSpec gs;
            gs.points = {bp_grid, bp_grid, bp_grid};
            return {ratio, xi,
                    rqit::boosted_pair_concurrence(ratio, xi, rqit::BellKind::PsiMinus, gs)};
          });
      t.rows = rows;
      emit(t, format, output);
    } else if (*f2) {
      t.columns = {"p", "xi", "concurrence_simulated", "concurrence_closed_form"};
      std::vector<std::pair<double, double>> grid;
      auto xis = parse_range(f2_xi);
      for (double p : f2_p)
        for (double x : xis) grid.push_back({p, x});
      auto rows = rqit::parallel_map<std::vector<double>>(
          grid.size(), threads, [&](std::size_t i) -> std::vector<double> {
            auto [p, xi] = grid[i];
            return {p, xi, rqit::momentum_entangled_concurrence_simulated(p, xi),
                    rqit::momentum_entangled_concurrence_closed_form(p, xi)};
          });
      t.rows = rows;
      emit(t, format, output);
    } else if (*tp) {
      double norm = std::sqrt(tp_a * tp_a + tp_b * tp_b);
      Eigen::VectorXcd amps(2);
      amps << tp_a / norm, tp_b / norm;
      auto tr = rqit::teleport(rqit::PureState(amps, {2}), seed);
      emit_text(rqit::transcript_json(tr), output);
    } else if (*sd) {
      if (sd_bits.size() != 2 || sd_bits.find_first_not_of("01") != std::string::npos)
        throw CLI::ValidationError("--bits", "expected two binary digits");
      auto tr = rqit::superdense({sd_bits[0] - '0', sd_bits[1] - '0'});
      emit_text(rqit::transcript_json(tr), output);
    } else if (*ge) {
      t.columns = {"N", "region_size", "S_bits", "renyi2_trace", "renyi3_trace"};
      auto rows = rqit::parallel_map<std::vector<double>>(
          ge_n.size(), threads, [&](std::size_t i) -> std::vector<double> {
            int n = ge_n[i];
            rqit::HarmonicChain c{n, ge_coupling, ge_mu, false};
            int inside = std::max(
                1, std::min(n - 1, static_cast<int>(std::lround(n * ge_fraction))));
            rqit::RegionSplit r;
            for (int s = 0; s < inside; ++s) r.inside.push_back(s);
            return {static_cast<double>(n), static_cast<double>(inside),
                    rqit::geometric_entropy(c, r, EntropyUnit::Bits),
                    rqit::renyi_trace(c, r, 2), rqit::renyi_trace(c, r, 3)};
          });
      t.rows = rows;
      emit(t, format, output);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
