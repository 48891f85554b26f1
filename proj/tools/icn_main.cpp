// Command-line front end: topology generation, exact / transfer-matrix /
// closed-form analysis, simulation, and the paper-figure sweep presets.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>

#include "icn/birth_death.hpp"
#include "icn/closed_forms.hpp"
#include "icn/coloring.hpp"
#include "icn/graph_io.hpp"
#include "icn/sim.hpp"
#include "icn/stationary.hpp"
#include "icn/sweep.hpp"
#include "icn/topology.hpp"
#include "icn/transfer.hpp"

namespace {

struct OutStream {
  std::ofstream file;
  std::ostream& ref;

  explicit OutStream(const std::string& path)
      : file(), ref(open(path)) {}

private:
  std::ostream& open(const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    return file;
  }
};

icn::ContentionGraph graph_from_options(const std::string& file,
                                        const std::string& kind, int n, int l,
                                        int rows, int cols, int units,
                                        bool open_strip) {
  if (!file.empty()) return icn::read_graph_file(file);
  if (kind == "ring") return icn::make_ring(n, l);
  if (kind == "linear") return icn::make_linear(n, l);
  if (kind == "torus") return icn::make_torus(rows, cols);
  if (kind == "ladder")
    return icn::make_strip(icn::ladder_unit(), icn::ladder_coupling(), units,
                           !open_strip);
  if (kind == "iso") return icn::ContentionGraph(1, {});
  throw std::runtime_error("unknown topology kind: " + kind);
}

std::string require_csv(const std::string& format) {
  if (format != "csv")
    throw std::runtime_error("unsupported format: " + format);
  return format;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequency-agile CSMA network analysis toolkit"};
  app.require_subcommand(1);

  std::string out_path, format = "csv", graph_file;
  std::uint64_t seed = 1;
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--out", out_path, "output path (default stdout)");
  app.add_option("--format", format, "output format")->capture_default_str();

  // topology
  auto* topo = app.add_subcommand("topology", "write a contention graph file");
  std::string kind = "ring";
  int n = 16, l = 1, rows = 6, cols = 6, units = 4;
  bool open_strip = false;
  topo->add_option("kind", kind, "ring|linear|torus|ladder|iso")->required();
  topo->add_option("--n", n, "vertex count (ring/linear)");
  topo->add_option("--l", l, "neighbor radius");
  topo->add_option("--rows", rows, "torus rows");
  topo->add_option("--cols", cols, "torus columns");
  topo->add_option("--units", units, "ladder unit count");
  topo->add_flag("--open", open_strip, "open-ended strip");

  // exact
  auto* exact = app.add_subcommand("exact", "enumeration-based analysis");
  int q = 1, k = 1;
  double rho = 1.0;
  bool dump_dist = false, mcs = false;
  exact->add_option("--graph", graph_file, "graph file");
  exact->add_option("--topology", kind, "built-in topology kind");
  exact->add_option("--n", n);
  exact->add_option("--l", l);
  exact->add_option("--rows", rows);
  exact->add_option("--cols", cols);
  exact->add_option("--units", units);
  exact->add_option("--q", q);
  exact->add_option("--k", k);
  exact->add_option("--rho", rho);
  exact->add_flag("--dump-dist", dump_dist, "dump the full distribution");
  exact->add_flag("--mcs", mcs, "report maximum channel states");

  // tm
  auto* tm = app.add_subcommand("tm", "transfer-matrix analysis");
  tm->add_option("--topology", kind, "ring|ladder|linear|iso");
  tm->add_option("--n", n, "units around the ring / chain length");
  tm->add_option("--l", l);
  tm->add_option("--q", q);
  tm->add_option("--k", k);
  tm->add_option("--rho", rho);

  // formula
  auto* formula = app.add_subcommand("formula", "closed-form throughput");
  std::string family;
  int vertex = 1;
  formula->add_option("--family", family)->required();
  formula->add_option("--rho", rho)->required();
  formula->add_option("--n", n);
  formula->add_option("--i", vertex, "vertex index for linear11_vertex_i");

  // simulate
  auto* sim = app.add_subcommand("simulate", "event-driven simulation");
  std::string cd = "exponential", tr = "exponential", trace_path;
  double horizon = 1e6, warmup = -1.0;
  sim->add_option("--graph", graph_file, "graph file");
  sim->add_option("--topology", kind);
  sim->add_option("--n", n);
  sim->add_option("--l", l);
  sim->add_option("--rows", rows);
  sim->add_option("--cols", cols);
  sim->add_option("--units", units);
  sim->add_option("--q", q);
  sim->add_option("--k", k);
  sim->add_option("--rho", rho);
  sim->add_option("--horizon", horizon)->capture_default_str();
  sim->add_option("--warmup", warmup, "measurement start (default 5%)");
  sim->add_option("--cd", cd, "countdown distribution");
  sim->add_option("--tr", tr, "transmission distribution");
  sim->add_option("--trace", trace_path, "write the transmission trace here");

  // mrat
  auto* mrat = app.add_subcommand("mrat", "analytical mean residual access time");
  std::string mrat_family_name;
  bool via_chain = false;
  mrat->add_option("--family", mrat_family_name)->required();
  mrat->add_option("--rho", rho)->required();
  mrat->add_flag("--first-step", via_chain,
                 "solve the birth-death chain instead of the closed form");

  // coloring
  auto* color = app.add_subcommand("coloring", "greedy coloring and clique bound");
  color->add_option("--graph", graph_file, "graph file")->required();

  // sweep
  auto* sweep = app.add_subcommand("sweep", "paper-figure grids");
  std::string preset;
  double sweep_horizon = 1e6;
  int workers = 0;
  sweep->add_option("--preset", preset, "fig4|fig5|fig6|fig8|fig9|fig10|fig11|trivial")
      ->required();
  sweep->add_option("--horizon", sweep_horizon)->capture_default_str();
  sweep->add_option("--workers", workers, "0 = ICN_WORKERS or hardware");

  CLI11_PARSE(app, argc, argv);

  try {
    require_csv(format);
    OutStream out(out_path);
    if (topo->parsed()) {
      icn::write_graph(
          graph_from_options("", kind, n, l, rows, cols, units, open_strip),
          out.ref);
    } else if (exact->parsed()) {
      const auto g = graph_from_options(graph_file, kind, n, l, rows, cols,
                                        units, open_strip);
      const auto dist = icn::stationary_distribution(g, {q, k}, rho);
      if (dump_dist) {
        icn::write_distribution_csv(dist, out.ref);
      } else if (mcs) {
        const auto report = icn::mcs_analysis(g, {q, k});
        out.ref << "max_transmitting,num_mcs,all_links_in_every_mcs\n"
                << report.max_transmitting << "," << report.num_mcs << ","
                << (report.all_links_in_every_mcs ? 1 : 0) << "\n";
      } else {
        out.ref << "link,airtime,mean_channels\n";
        char buf[64];
        for (int li = 0; li < g.n_vertices(); ++li) {
          const auto th = icn::link_throughput_exact(dist, li);
          std::snprintf(buf, sizeof(buf), "%d,%.10g,%.10g\n", li, th.airtime,
                        th.mean_channels);
          out.ref << buf;
        }
      }
    } else if (tm->parsed()) {
      using icn::Real;
      icn::TransferMatrix<Real> mat;
      int vpu_units = n;
      if (kind == "ring") {
        mat = icn::lnearest_transfer_matrix<Real>(l, {q, k},
                                                  static_cast<Real>(rho));
        if (n <= 2 * l) throw std::runtime_error("need n > 2l");
      } else if (kind == "ladder") {
        icn::UnitStateSpace unit(icn::ContentionGraph(2, {{0, 1}}), {q, k});
        mat = icn::build_transfer_matrix<Real>(unit, icn::ladder_coupling(),
                                               static_cast<Real>(rho));
        vpu_units = units;
      } else {
        throw std::runtime_error("tm supports ring and ladder topologies");
      }
      const auto z = icn::partition_ring(mat, vpu_units);
      const auto perron = icn::dominant_eigenvalue(mat);
      const double th =
          static_cast<double>(icn::throughput_tm(mat, vpu_units));
      char buf[160];
      std::snprintf(buf, sizeof(buf),
                    "z,z1,throughput,exceeds_double_range\n%.10Lg,%.10Lg,%.10g,%d\n",
                    z.value, perron.z1, th, z.exceeds_double_range ? 1 : 0);
      out.ref << buf;
    } else if (formula->parsed()) {
      const auto fam = icn::throughput_family_from_string(family);
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.10g\n",
                    icn::closed_form_throughput(fam, rho, n, vertex));
      out.ref << buf;
    } else if (sim->parsed()) {
      icn::SimConfig cfg;
      cfg.graph = graph_from_options(graph_file, kind, n, l, rows, cols, units,
                                     open_strip);
      cfg.channels = {q, k};
      cfg.rho = rho;
      cfg.horizon = horizon;
      cfg.warmup = warmup;
      cfg.seed = seed;
      cfg.countdown = icn::dist_from_string(cd);
      cfg.transmission = icn::dist_from_string(tr);
      cfg.record_trace = !trace_path.empty();
      const auto res = icn::simulate(cfg);
      out.ref << "link,throughput,ci90,mrat,n_samples\n";
      char buf[160];
      for (std::size_t li = 0; li < res.links.size(); ++li) {
        const auto& st = res.links[li];
        std::snprintf(buf, sizeof(buf), "%zu,%.10g,%.10g,%.10g,%ld\n", li,
                      st.throughput, st.ci90, st.mrat, st.n_samples);
        out.ref << buf;
      }
      if (!trace_path.empty()) {
        std::ofstream tf(trace_path, std::ios::binary);
        if (!tf) throw std::runtime_error("cannot open " + trace_path);
        tf << "link,channel,start,end\n";
        for (const auto& iv : res.trace) {
          std::snprintf(buf, sizeof(buf), "%d,%d,%.10g,%.10g\n", iv.link,
                        iv.channel, iv.start, iv.end);
          tf << buf;
        }
      }
    } else if (mrat->parsed()) {
      const auto fam = icn::mrat_family_from_string(mrat_family_name);
      double value;
      if (via_chain && fam == icn::MratFamily::center_star) {
        const auto chain = icn::star_center_chain(rho);
        value = icn::mrat_from_passage(icn::passage_moments(chain, 1, 0));
      } else {
        value = icn::closed_form_mrat(fam, rho);
      }
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%.10g\n", value);
      out.ref << buf;
    } else if (color->parsed()) {
      const auto g = icn::read_graph_file(graph_file);
      const auto greedy = icn::greedy_coloring(g);
      out.ref << "greedy_colors,max_clique,chromatic_upper_bound\n"
              << icn::color_count(greedy) << "," << icn::max_clique_size(g)
              << "," << icn::chromatic_upper_bound(g) << "\n";
    } else if (sweep->parsed()) {
      auto spec = icn::sweep_preset(preset);
      spec.seed = seed;
      spec.horizon = sweep_horizon;
      spec.workers = workers;
      icn::write_result_csv(icn::run_sweep(spec), out.ref);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
