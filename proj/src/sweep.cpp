#include "icn/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "icn/birth_death.hpp"
#include "icn/closed_forms.hpp"
#include "icn/sim.hpp"
#include "icn/stationary.hpp"
#include "icn/topology.hpp"
#include "icn/transfer.hpp"

namespace icn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

ContentionGraph build_graph(const SweepSpec& spec, int n) {
  if (spec.topology == "iso") return ContentionGraph(1, {});
  if (spec.topology == "ring") return make_ring(n, spec.l);
  if (spec.topology == "linear") return make_linear(n, spec.l);
  if (spec.topology == "torus") return make_torus(n, n);
  if (spec.topology == "ladder")
    return make_strip(ladder_unit(), ladder_coupling(), n, true);
  throw std::invalid_argument("unknown topology: " + spec.topology);
}

std::string topology_label(const SweepSpec& spec) {
  if (spec.topology == "ring" || spec.topology == "linear")
    return spec.topology + "_l" + std::to_string(spec.l);
  return spec.topology;
}

std::optional<ThroughputFamily> throughput_family(const SweepSpec& spec,
                                                  ChannelConfig c) {
  if (c.k != 1 && !(spec.topology == "iso")) return std::nullopt;
  if (spec.topology == "iso" && c.q == 1 && c.k == 1)
    return ThroughputFamily::iso_link;
  if (spec.topology == "ring" && spec.l == 1) {
    if (c.q == 1) return ThroughputFamily::ring11_inf;
    if (c.q == 2) return ThroughputFamily::ring21_inf;
  }
  if (spec.topology == "ring" && spec.l == 2) {
    if (c.q == 1) return ThroughputFamily::lring11;
    if (c.q == 2) return ThroughputFamily::lring21;
    if (c.q == 3) return ThroughputFamily::lring31;
  }
  if (spec.topology == "torus") {
    if (c.q == 1) return ThroughputFamily::torus11;
    if (c.q == 2) return ThroughputFamily::torus21;
  }
  if (spec.topology == "ladder" && c.q == 2)
    return ThroughputFamily::strip21_inf;
  return std::nullopt;
}

std::optional<MratFamily> mrat_family(const SweepSpec& spec, ChannelConfig c) {
  if (c.k != 1) return std::nullopt;
  if (spec.topology == "iso") return MratFamily::isolated;
  if (spec.topology == "torus") {
    if (c.q == 1) return MratFamily::torus11;
    if (c.q == 2) return MratFamily::torus21;
  }
  // rings with q matching the chromatic number behave like isolated links
  if (spec.topology == "ring" && spec.l == 1 && c.q == 2)
    return MratFamily::isolated;
  if (spec.topology == "ring" && spec.l == 2 && c.q == 3)
    return MratFamily::isolated;
  return std::nullopt;
}

double tm_throughput(const SweepSpec& spec, ChannelConfig c, double rho,
                     int n) {
  const Real r = static_cast<Real>(rho);
  if (spec.topology == "iso") {
    UnitStateSpace unit(ContentionGraph(1, {}), c);
    auto tm = build_transfer_matrix<Real>(unit, {}, r);
    // single free unit: Z = sum of weights, throughput from the chain form
    const Real h = Real(1e-6) * r;
    auto lnz = [&](Real x) {
      return std::log(partition_linear(
                          build_transfer_matrix<Real>(unit, {}, x), 1)
                          .value);
    };
    return static_cast<double>(r * (lnz(r + h) - lnz(r - h)) / (2 * h));
  }
  if (spec.topology == "ring") {
    auto tm = lnearest_transfer_matrix<Real>(spec.l, c, r);
    if (n <= 2 * spec.l)
      throw std::runtime_error("l-nearest ring needs n > 2l");
    return static_cast<double>(throughput_tm(tm, n));
  }
  if (spec.topology == "ladder") {
    UnitStateSpace unit(ContentionGraph(2, {{0, 1}}), c);
    auto tm = build_transfer_matrix<Real>(unit, ladder_coupling(), r);
    return static_cast<double>(throughput_tm(tm, n));
  }
  if (spec.topology == "linear") {
    if (spec.l != 1)
      throw std::runtime_error("transfer chain supports l = 1 only");
    UnitStateSpace unit(ContentionGraph(1, {}), c);
    auto tm = build_transfer_matrix<Real>(unit, {{0, 0}}, r);
    const Real h = Real(1e-6) * r;
    auto lnz = [&](Real x) {
      return std::log(
          partition_linear(build_transfer_matrix<Real>(unit, {{0, 0}}, x), n)
              .value);
    };
    return static_cast<double>(r * (lnz(r + h) - lnz(r - h)) / (2 * h) / n);
  }
  throw std::runtime_error("transfer mode unsupported for " + spec.topology);
}

struct Point {
  ChannelConfig config;
  double rho;
  int n;
  std::uint64_t seed;
};

std::vector<ResultRow> run_point(const SweepSpec& spec, const Point& pt) {
  std::vector<ResultRow> rows;
  const std::string label = topology_label(spec);
  auto base = [&](const std::string& source) {
    ResultRow row;
    row.topology = label;
    row.q = pt.config.q;
    row.k = pt.config.k;
    row.rho = pt.rho;
    row.n = pt.n;
    row.metric = spec.metric;
    row.source = source;
    return row;
  };
  for (const std::string& mode : spec.modes) {
    if (mode == "sim" || mode == "simulate") {
      ResultRow row = base("sim");
      try {
        SimConfig cfg;
        cfg.graph = build_graph(spec, pt.n);
        cfg.channels = pt.config;
        cfg.rho = pt.rho;
        cfg.horizon = spec.horizon;
        cfg.seed = pt.seed;
        const SimResult res = simulate(cfg);
        if (spec.metric == "throughput") {
          row.value = res.mean_throughput;
          row.ci90 = res.mean_throughput_ci90;
          row.has_ci = true;
        } else {
          double sum = 0.0, sum2 = 0.0;
          int m = 0;
          for (const auto& st : res.links)
            if (std::isfinite(st.mrat)) {
              sum += st.mrat;
              sum2 += st.mrat * st.mrat;
              ++m;
            }
          if (m == 0) throw std::runtime_error("no link transmitted twice");
          row.value = sum / m;
          if (m > 1) {
            const double var = (sum2 - sum * sum / m) / (m - 1);
            row.ci90 = 1.645 * std::sqrt(std::max(var, 0.0) / m);
            row.has_ci = true;
          }
        }
      } catch (const std::exception& e) {
        row.value = std::nan("");
        row.note = e.what();
      }
      rows.push_back(std::move(row));
    } else if (mode == "exact") {
      ResultRow row = base("exact");
      try {
        if (spec.metric != "throughput")
          throw std::runtime_error("exact mode reports throughput only");
        const auto g = build_graph(spec, pt.n);
        const auto dist = stationary_distribution(g, pt.config, pt.rho);
        double mean = 0.0;
        for (int li = 0; li < g.n_vertices(); ++li)
          mean += link_throughput_exact(dist, li).airtime / g.n_vertices();
        row.value = mean;
      } catch (const std::exception& e) {
        row.value = std::nan("");
        row.note = e.what();
      }
      rows.push_back(std::move(row));
    } else if (mode == "tm") {
      ResultRow row = base("tm");
      try {
        if (spec.metric != "throughput")
          throw std::runtime_error("tm mode reports throughput only");
        row.value = tm_throughput(spec, pt.config, pt.rho, pt.n);
      } catch (const std::exception& e) {
        row.value = std::nan("");
        row.note = e.what();
      }
      rows.push_back(std::move(row));
    } else if (mode == "closed_form") {
      if (spec.metric == "throughput") {
        if (auto fam = throughput_family(spec, pt.config)) {
          ResultRow row = base("closed_form");
          row.value = closed_form_throughput(*fam, pt.rho, pt.n);
          rows.push_back(std::move(row));
        }
      } else {
        if (auto fam = mrat_family(spec, pt.config)) {
          ResultRow row = base("closed_form");
          row.value = closed_form_mrat(*fam, pt.rho);
          rows.push_back(std::move(row));
        }
      }
    } else {
      throw std::invalid_argument("unknown sweep mode: " + mode);
    }
  }
  return rows;
}

int worker_count(const SweepSpec& spec) {
  if (spec.workers > 0) return spec.workers;
  if (const char* env = std::getenv("ICN_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

std::vector<ResultRow> run_sweep(const SweepSpec& spec) {
  if (spec.configs.empty()) throw std::invalid_argument("no (q,k) configs");
  if (spec.rho_grid.empty()) throw std::invalid_argument("empty rho grid");
  if (spec.modes.empty()) throw std::invalid_argument("no analysis modes");
  for (double rho : spec.rho_grid)
    if (rho <= 0) throw std::invalid_argument("rho grid values must be > 0");
  std::vector<int> n_list = spec.n_list;
  if (n_list.empty()) n_list.push_back(1);

  std::vector<Point> points;
  std::uint64_t index = 0;
  for (const auto& config : spec.configs)
    for (int n : n_list)
      for (double rho : spec.rho_grid)
        points.push_back(
            {config, rho, n, splitmix64(spec.seed ^ (index++ + 1))});

  std::vector<std::vector<ResultRow>> per_point(points.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= points.size()) return;
      per_point[i] = run_point(spec, points[i]);
    }
  };
  const int workers =
      std::min<int>(worker_count(spec), static_cast<int>(points.size()));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }

  std::vector<ResultRow> rows;
  for (auto& chunk : per_point)
    for (auto& row : chunk) rows.push_back(std::move(row));
  std::stable_sort(rows.begin(), rows.end(),
                   [](const ResultRow& a, const ResultRow& b) {
                     return std::tie(a.topology, a.q, a.k, a.rho, a.n,
                                     a.link_id, a.source) <
                            std::tie(b.topology, b.q, b.k, b.rho, b.n,
                                     b.link_id, b.source);
                   });
  return rows;
}

SweepSpec sweep_preset(const std::string& name) {
  SweepSpec s;
  s.rho_grid = {5, 10, 15, 20};
  s.n_list = {16, 36, 64};
  s.modes = {"sim", "closed_form"};
  if (name == "fig4") {
    s.topology = "ring";
    s.l = 1;
    s.configs = {{1, 1}, {2, 1}};
  } else if (name == "fig5") {
    s.topology = "ring";
    s.l = 2;
    s.configs = {{1, 1}, {2, 1}, {3, 1}};
  } else if (name == "fig6") {
    s.topology = "torus";
    s.configs = {{1, 1}, {2, 1}};
    s.n_list = {4, 6, 8};
  } else if (name == "fig8") {
    s.topology = "ring";
    s.l = 1;
    s.configs = {{1, 1}, {2, 1}};
    s.metric = "mrat";
  } else if (name == "fig9") {
    s.topology = "ring";
    s.l = 2;
    s.configs = {{1, 1}, {2, 1}, {3, 1}};
    s.metric = "mrat";
  } else if (name == "fig10") {
    s.topology = "torus";
    s.configs = {{1, 1}};
    s.n_list = {6};
    s.metric = "mrat";
  } else if (name == "fig11") {
    s.topology = "torus";
    s.configs = {{2, 1}};
    s.n_list = {6};
    s.metric = "mrat";
  } else if (name == "trivial") {
    s.topology = "iso";
    s.configs = {{1, 1}};
    s.rho_grid = {1};
    s.n_list = {1};
    s.modes = {"exact", "tm", "closed_form", "sim"};
  } else {
    throw std::invalid_argument("unknown preset: " + name);
  }
  return s;
}

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n') c = ';';
  return s;
}

} // namespace

void write_result_csv(const std::vector<ResultRow>& rows, std::ostream& out) {
  out << "topology,q,k,rho,N,link_id,metric,value,ci90,source,note\n";
  for (const auto& r : rows) {
    out << r.topology << "," << r.q << "," << r.k << "," << format_double(r.rho)
        << "," << r.n << "," << r.link_id << "," << r.metric << ","
        << format_double(r.value) << ","
        << (r.has_ci ? format_double(r.ci90) : "") << "," << r.source << ","
        << sanitize(r.note) << "\n";
  }
}

} // namespace icn
