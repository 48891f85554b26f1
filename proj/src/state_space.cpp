#include "icn/state_space.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace icn {

StateSpace::StateSpace(const ContentionGraph& g, ChannelConfig config)
    : graph_(g), table_(config) {
  const int n = graph_.n_vertices();
  const int bits = table_.bits_per_link();
  if (n * bits > kMaxStateBits)
    throw std::runtime_error(
        "state space too large: " + std::to_string(n) + " links x " +
        std::to_string(bits) + " bits/link exceeds the " +
        std::to_string(kMaxStateBits) + "-bit state index bound");
  mask_ = (1u << bits) - 1u;

  std::vector<std::uint32_t> occupied(n, 0); // channel mask per assigned link
  std::vector<int> chosen(n, 0);
  // depth-first over links; neighbor channel sets must stay disjoint
  auto feasible = [&](int link, int state_idx) {
    const std::uint32_t m = table_.mask(state_idx);
    for (int w : graph_.neighbors(link))
      if (w < link && (occupied[w] & m)) return false;
    return true;
  };
  std::vector<int> stack{0};
  if (n == 0) {
    states_.push_back(0);
    return;
  }
  // iterative DFS to keep deep graphs off the call stack
  int link = 0;
  chosen[0] = -1;
  while (link >= 0) {
    int next = chosen[link] + 1;
    while (next < table_.size() && !feasible(link, next)) ++next;
    if (next == table_.size()) {
      --link;
      continue;
    }
    chosen[link] = next;
    occupied[link] = table_.mask(next);
    if (link == n - 1) {
      StateCode code = 0;
      for (int i = 0; i < n; ++i)
        code |= static_cast<StateCode>(chosen[i]) << (i * bits);
      states_.push_back(code);
    } else {
      ++link;
      chosen[link] = -1;
    }
  }
  std::sort(states_.begin(), states_.end());
}

int StateSpace::total_active(StateCode code) const {
  int total = 0;
  for (int i = 0; i < n_links(); ++i)
    total += table_.active_channels(link_state(code, i));
  return total;
}

StateSpace enumerate_feasible_states(const ContentionGraph& g,
                                     ChannelConfig config) {
  return StateSpace(g, config);
}

} // namespace icn
