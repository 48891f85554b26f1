#ifndef ICN_CHANNELS_HPP
#define ICN_CHANNELS_HPP

#include <cstdint>
#include <vector>

namespace icn {

/// q frequency channels, at most k of them usable by one link at a time.
struct ChannelConfig {
  int q = 1;
  int k = 1;
};

/// The per-link state alphabet under a channel configuration: every subset
/// of the q channels with at most k members, as a bitmask. Index 0 is always
/// the idle state (empty mask); masks are listed in ascending order, so for
/// k = 1 the indices coincide with the usual 0 = idle, f = channel f coding.
class LinkStateTable {
public:
  explicit LinkStateTable(ChannelConfig config);

  ChannelConfig config() const { return config_; }
  int size() const { return static_cast<int>(masks_.size()); }
  std::uint32_t mask(int index) const { return masks_[index]; }
  int index_of(std::uint32_t mask) const { return index_of_[mask]; }
  int active_channels(int index) const { return popcount_[index]; }
  /// Bits needed to pack one per-link state index.
  int bits_per_link() const { return bits_; }

private:
  ChannelConfig config_;
  std::vector<std::uint32_t> masks_;
  std::vector<int> index_of_;
  std::vector<int> popcount_;
  int bits_ = 1;
};

} // namespace icn

#endif
