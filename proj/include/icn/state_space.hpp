#ifndef ICN_STATE_SPACE_HPP
#define ICN_STATE_SPACE_HPP

#include <cstdint>
#include <vector>

#include "icn/channels.hpp"
#include "icn/contention_graph.hpp"

namespace icn {

/// A system state packed into one word: the per-link state index occupies
/// bits_per_link bits, link 0 in the least significant position.
using StateCode = std::uint32_t;

/// Maximum packed-state width; enumeration refuses anything wider.
inline constexpr int kMaxStateBits = 24;

/// All feasible joint states of a contention graph under (q,k): every link
/// holds at most k channels and neighboring links hold disjoint channel
/// sets. States are sorted by code; the all-idle state (code 0) comes first.
class StateSpace {
public:
  StateSpace(const ContentionGraph& g, ChannelConfig config);

  const ContentionGraph& graph() const { return graph_; }
  const LinkStateTable& table() const { return table_; }
  int n_links() const { return graph_.n_vertices(); }
  const std::vector<StateCode>& states() const { return states_; }
  int size() const { return static_cast<int>(states_.size()); }

  int link_state(StateCode code, int link) const {
    return static_cast<int>((code >> (link * table_.bits_per_link())) & mask_);
  }
  /// Total number of (link, channel) transmissions in the state.
  int total_active(StateCode code) const;

private:
  ContentionGraph graph_;
  LinkStateTable table_;
  std::vector<StateCode> states_;
  StateCode mask_ = 0;
};

/// Convenience wrapper matching the operation name used elsewhere.
StateSpace enumerate_feasible_states(const ContentionGraph& g,
                                     ChannelConfig config);

} // namespace icn

#endif
