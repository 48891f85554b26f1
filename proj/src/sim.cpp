#include "icn/sim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace icn {

Dist dist_from_string(const std::string& name) {
  if (name == "exponential" || name == "exp") return Dist::exponential;
  if (name == "deterministic" || name == "det") return Dist::deterministic;
  if (name == "uniform") return Dist::uniform;
  throw std::invalid_argument("unknown distribution: " + name);
}

std::string to_string(Dist d) {
  switch (d) {
    case Dist::exponential: return "exponential";
    case Dist::deterministic: return "deterministic";
    case Dist::uniform: return "uniform";
  }
  return "?";
}

namespace {

// Hand-rolled sampling keeps traces reproducible across standard libraries.
struct Sampler {
  std::mt19937_64 rng;

  explicit Sampler(std::uint64_t seed) : rng(seed) {}

  double unit() { // in [0, 1)
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  }
  double draw(Dist d, double mean) {
    switch (d) {
      case Dist::exponential: return -mean * std::log1p(-unit());
      case Dist::deterministic: return mean;
      case Dist::uniform: return 2.0 * mean * unit();
    }
    return mean;
  }
  // Stationary residual age of a renewal process with this inter-event
  // distribution; used for the initial countdown values.
  double residual(Dist d, double mean) {
    switch (d) {
      case Dist::exponential: return -mean * std::log1p(-unit());
      case Dist::deterministic: return mean * unit();
      case Dist::uniform: return 2.0 * mean * (1.0 - std::sqrt(1.0 - unit()));
    }
    return mean;
  }
};

enum class Phase : std::uint8_t { running, frozen, transmitting };

struct Timer {
  Phase phase = Phase::frozen;
  double remaining = 0.0; // valid while frozen
  double expiry = 0.0;    // valid while running
  double tx_start = 0.0;  // valid while transmitting
  std::uint32_t gen = 0;  // invalidates queued events
};

enum : std::uint8_t { kCompletion = 0, kExpiry = 1 };

struct Event {
  double time;
  int link;
  int channel;
  std::uint8_t kind;
  std::uint32_t gen;
};

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    if (a.time != b.time) return a.time > b.time;
    if (a.link != b.link) return a.link > b.link;
    if (a.channel != b.channel) return a.channel > b.channel;
    return a.kind > b.kind;
  }
};

// accumulates [a,b) into equal batches spanning [w, w + n*len)
struct BatchWindow {
  double w = 0.0;
  double len = 1.0;
  int n = 1;

  void add(std::vector<double>& acc, double a, double b) const {
    a = std::max(a, w);
    b = std::min(b, w + n * len);
    if (a >= b) return;
    int ia = static_cast<int>((a - w) / len);
    int ib = static_cast<int>((b - w) / len);
    ia = std::clamp(ia, 0, n - 1);
    ib = std::clamp(ib, 0, n - 1);
    if (ia == ib) {
      acc[ia] += b - a;
      return;
    }
    acc[ia] += w + (ia + 1) * len - a;
    for (int i = ia + 1; i < ib; ++i) acc[i] += len;
    acc[ib] += b - (w + ib * len);
  }
};

// two-sided 90% Student-t quantiles, indexed by degrees of freedom
double student_t90(int df) {
  static const double table[] = {0.0,   6.314, 2.920, 2.353, 2.132, 2.015,
                                 1.943, 1.895, 1.860, 1.833, 1.812, 1.796,
                                 1.782, 1.771, 1.761, 1.753, 1.746, 1.740,
                                 1.734, 1.729, 1.725};
  if (df <= 0) return std::numeric_limits<double>::quiet_NaN();
  if (df <= 20) return table[df];
  return 1.645 + 2.0 / df; // adequate beyond the table
}

double batch_ci90(const std::vector<double>& batch_time, double batch_len) {
  const int b = static_cast<int>(batch_time.size());
  double mean = 0.0;
  for (double x : batch_time) mean += x / batch_len;
  mean /= b;
  double ss = 0.0;
  for (double x : batch_time) {
    const double d = x / batch_len - mean;
    ss += d * d;
  }
  const double s = std::sqrt(ss / (b - 1));
  return student_t90(b - 1) * s / std::sqrt(static_cast<double>(b));
}

class Engine {
public:
  explicit Engine(const SimConfig& cfg)
      : cfg_(cfg), table_(cfg.channels), q_(cfg.channels.q),
        n_(cfg.graph.n_vertices()) {
    if (cfg_.rho <= 0) throw std::invalid_argument("need rho > 0");
    if (cfg_.warmup < 0) cfg_.warmup = 0.05 * cfg_.horizon;
    if (!(cfg_.horizon > cfg_.warmup))
      throw std::invalid_argument("need horizon > warmup >= 0");
    if (cfg_.n_batches < 2) throw std::invalid_argument("need >= 2 batches");
    if (cfg_.track_states &&
        n_ * table_.bits_per_link() > kMaxStateBits)
      throw std::runtime_error(
          "state tracking requires the packed state to fit " +
          std::to_string(kMaxStateBits) + " bits");
    window_.w = cfg_.warmup;
    window_.n = cfg_.n_batches;
    window_.len = (cfg_.horizon - cfg_.warmup) / cfg_.n_batches;
  }

  SimResult run() {
    Sampler rnd(cfg_.seed);
    const double mean_cd = 1.0 / cfg_.rho;
    timers_.assign(n_ * q_, Timer{});
    busy_.assign(n_ * q_, 0);
    active_.assign(n_, 0);
    active_since_.assign(n_, 0.0);
    mask_.assign(n_, 0);
    prev_start_.assign(n_, -1.0);
    link_batches_.assign(n_, std::vector<double>(cfg_.n_batches, 0.0));
    stats_.assign(n_, LinkStats{});

    for (int li = 0; li < n_; ++li)
      for (int ch = 0; ch < q_; ++ch) {
        timer(li, ch).remaining = rnd.residual(cfg_.countdown, mean_cd);
        try_start(li, ch, 0.0);
      }

    while (!queue_.empty()) {
      const Event ev = queue_.top();
      if (ev.time > cfg_.horizon) break;
      queue_.pop();
      Timer& tm = timer(ev.link, ev.channel);
      if (tm.gen != ev.gen) continue;
      if (ev.kind == kExpiry) {
        on_expiry(ev.link, ev.channel, ev.time, rnd);
      } else {
        on_completion(ev.link, ev.channel, ev.time, rnd, mean_cd);
      }
    }
    finish();

    SimResult result;
    result.measured_time = cfg_.horizon - cfg_.warmup;
    result.links = std::move(stats_);
    for (int li = 0; li < n_; ++li) {
      auto& st = result.links[li];
      double total = 0.0;
      for (double x : link_batches_[li]) total += x;
      st.throughput = total / result.measured_time;
      st.ci90 = batch_ci90(link_batches_[li], window_.len);
      st.mrat = st.n_samples > 0
                    ? st.sum_y2 / (2.0 * st.sum_y)
                    : std::numeric_limits<double>::quiet_NaN();
    }
    if (n_ > 0) {
      std::vector<double> net(cfg_.n_batches, 0.0);
      for (int li = 0; li < n_; ++li)
        for (int b = 0; b < cfg_.n_batches; ++b)
          net[b] += link_batches_[li][b] / n_;
      double total = 0.0;
      for (double x : net) total += x;
      result.mean_throughput = total / result.measured_time;
      result.mean_throughput_ci90 = batch_ci90(net, window_.len);
    }
    result.trace = std::move(trace_);
    if (cfg_.track_states) {
      std::vector<StateCode> codes;
      codes.reserve(state_time_.size());
      for (const auto& [code, _] : state_time_) codes.push_back(code);
      std::sort(codes.begin(), codes.end());
      for (StateCode code : codes) {
        const auto& batches = state_time_.at(code);
        double total = 0.0;
        for (double x : batches) total += x;
        result.occupancy.codes.push_back(code);
        result.occupancy.freq.push_back(total / result.measured_time);
        result.occupancy.ci90.push_back(batch_ci90(batches, window_.len));
      }
    }
    return result;
  }

private:
  Timer& timer(int li, int ch) { return timers_[li * q_ + ch]; }
  int& busy(int li, int ch) { return busy_[li * q_ + ch]; }

  void push(double time, int li, int ch, std::uint8_t kind) {
    queue_.push(Event{time, li, ch, kind, timer(li, ch).gen});
  }

  void try_start(int li, int ch, double now) {
    Timer& tm = timer(li, ch);
    if (tm.phase != Phase::frozen) return;
    if (busy(li, ch) > 0 || active_[li] >= cfg_.channels.k) return;
    tm.phase = Phase::running;
    tm.expiry = now + tm.remaining;
    ++tm.gen;
    push(tm.expiry, li, ch, kExpiry);
  }

  void freeze(int li, int ch, double now) {
    Timer& tm = timer(li, ch);
    if (tm.phase != Phase::running) return;
    tm.remaining = tm.expiry - now;
    tm.phase = Phase::frozen;
    ++tm.gen;
  }

  void on_expiry(int li, int ch, double now, Sampler& rnd) {
    Timer& tm = timer(li, ch);
    if (tm.phase != Phase::running) return;
    flush_state(now);
    tm.phase = Phase::transmitting;
    tm.tx_start = now;
    ++tm.gen;
    push(now + rnd.draw(cfg_.transmission, 1.0), li, ch, kCompletion);

    if (++active_[li] == 1) active_since_[li] = now;
    if (active_[li] == cfg_.channels.k)
      for (int g = 0; g < q_; ++g)
        if (g != ch) freeze(li, g, now);
    for (int j : cfg_.graph.neighbors(li))
      if (++busy(j, ch) == 1) freeze(j, ch, now);

    set_mask(li, mask_[li] | (1u << ch));
    note_access(li, now);
  }

  void on_completion(int li, int ch, double now, Sampler& rnd,
                     double mean_cd) {
    Timer& tm = timer(li, ch);
    if (tm.phase != Phase::transmitting) return;
    flush_state(now);
    record_interval(li, ch, tm.tx_start, now);

    const bool was_full = active_[li] == cfg_.channels.k;
    if (--active_[li] == 0)
      window_.add(link_batches_[li], active_since_[li], now);
    tm.phase = Phase::frozen;
    tm.remaining = rnd.draw(cfg_.countdown, mean_cd);
    ++tm.gen;
    set_mask(li, mask_[li] & ~(1u << ch));

    try_start(li, ch, now);
    if (was_full)
      for (int g = 0; g < q_; ++g)
        if (g != ch) try_start(li, g, now);
    for (int j : cfg_.graph.neighbors(li))
      if (--busy(j, ch) == 0) try_start(j, ch, now);
  }

  void finish() {
    const double h = cfg_.horizon;
    flush_state(h);
    for (int li = 0; li < n_; ++li) {
      if (active_[li] > 0) window_.add(link_batches_[li], active_since_[li], h);
      for (int ch = 0; ch < q_; ++ch) {
        const Timer& tm = timers_[li * q_ + ch];
        if (tm.phase == Phase::transmitting)
          record_interval(li, ch, tm.tx_start, h);
      }
    }
  }

  void record_interval(int li, int ch, double start, double end) {
    if (cfg_.record_trace) trace_.push_back({li, ch, start, end});
  }

  void note_access(int li, double start) {
    if (start >= cfg_.warmup && prev_start_[li] >= cfg_.warmup) {
      const double y = start - prev_start_[li];
      auto& st = stats_[li];
      ++st.n_samples;
      st.sum_y += y;
      st.sum_y2 += y * y;
      if (cfg_.collect_samples) st.inter_access_samples.push_back(y);
    }
    prev_start_[li] = start;
  }

  void set_mask(int li, std::uint32_t mask) {
    if (!cfg_.track_states) {
      mask_[li] = mask;
      return;
    }
    const int bits = table_.bits_per_link();
    const StateCode oldc = static_cast<StateCode>(table_.index_of(mask_[li]))
                           << (li * bits);
    const StateCode newc = static_cast<StateCode>(table_.index_of(mask))
                           << (li * bits);
    code_ = code_ - oldc + newc;
    mask_[li] = mask;
  }

  void flush_state(double now) {
    if (!cfg_.track_states) return;
    if (now > state_last_) {
      auto [it, inserted] = state_time_.try_emplace(code_);
      if (inserted) it->second.assign(cfg_.n_batches, 0.0);
      window_.add(it->second, state_last_, now);
    }
    state_last_ = now;
  }

  SimConfig cfg_;
  LinkStateTable table_;
  int q_;
  int n_;
  BatchWindow window_;

  std::vector<Timer> timers_;
  std::vector<int> busy_;
  std::vector<int> active_;
  std::vector<double> active_since_;
  std::vector<std::uint32_t> mask_;
  std::vector<double> prev_start_;
  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;

  std::vector<std::vector<double>> link_batches_;
  std::vector<LinkStats> stats_;
  std::vector<TraceInterval> trace_;
  std::unordered_map<StateCode, std::vector<double>> state_time_;
  StateCode code_ = 0;
  double state_last_ = 0.0;
};

} // namespace

SimResult simulate(const SimConfig& config) { return Engine(config).run(); }

MratEstimate mrat_from_samples(const std::vector<double>& samples) {
  if (samples.empty())
    throw std::runtime_error("link never transmitted twice");
  double sy = 0.0, sy2 = 0.0;
  for (double y : samples) {
    sy += y;
    sy2 += y * y;
  }
  return {sy2 / (2.0 * sy), samples.size() < 100};
}

bool validate_trace(const ContentionGraph& g, ChannelConfig channels,
                    const std::vector<TraceInterval>& trace) {
  struct Point {
    double time;
    int delta; // +1 start, -1 end; ends sort first at equal times
    int link, channel;
  };
  std::vector<Point> points;
  points.reserve(trace.size() * 2);
  for (const auto& iv : trace) {
    if (!(iv.start < iv.end)) return false;
    if (iv.channel < 0 || iv.channel >= channels.q) return false;
    points.push_back({iv.start, +1, iv.link, iv.channel});
    points.push_back({iv.end, -1, iv.link, iv.channel});
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) {
    if (a.time != b.time) return a.time < b.time;
    return a.delta < b.delta;
  });
  const int n = g.n_vertices();
  std::vector<int> on(static_cast<std::size_t>(n) * channels.q, 0);
  std::vector<int> held(n, 0);
  for (const auto& p : points) {
    auto& cell = on[p.link * channels.q + p.channel];
    if (p.delta > 0) {
      if (cell != 0) return false; // same link+channel overlap
      if (held[p.link] >= channels.k) return false;
      for (int j : g.neighbors(p.link))
        if (on[j * channels.q + p.channel]) return false;
      cell = 1;
      ++held[p.link];
    } else {
      cell = 0;
      --held[p.link];
    }
  }
  return true;
}

InsensitivityReport insensitivity_experiment(const ContentionGraph& g,
                                             ChannelConfig channels,
                                             double rho, double horizon,
                                             std::uint64_t seed) {
  const std::array<std::pair<Dist, Dist>, 3> combos = {
      std::pair{Dist::exponential, Dist::exponential},
      std::pair{Dist::deterministic, Dist::deterministic},
      std::pair{Dist::uniform, Dist::exponential}};
  InsensitivityReport report;
  for (int c = 0; c < InsensitivityReport::n_combos; ++c) {
    SimConfig cfg;
    cfg.graph = g;
    cfg.channels = channels;
    cfg.rho = rho;
    cfg.countdown = combos[c].first;
    cfg.transmission = combos[c].second;
    cfg.horizon = horizon;
    cfg.seed = seed + c;
    const SimResult res = simulate(cfg);
    report.throughput[c].reserve(res.links.size());
    for (const auto& st : res.links)
      report.throughput[c].push_back(st.throughput);
  }
  return report;
}

} // namespace icn
