#include "icn/channels.hpp"

#include <bit>
#include <stdexcept>

namespace icn {

LinkStateTable::LinkStateTable(ChannelConfig config) : config_(config) {
  if (config.q < 1) throw std::invalid_argument("need at least one channel");
  if (config.k < 1 || config.k > config.q)
    throw std::invalid_argument("require 1 <= k <= q");
  if (config.q > 16) throw std::invalid_argument("q > 16 unsupported");
  index_of_.assign(1u << config.q, -1);
  for (std::uint32_t m = 0; m < (1u << config.q); ++m) {
    if (std::popcount(m) > config.k) continue;
    index_of_[m] = static_cast<int>(masks_.size());
    masks_.push_back(m);
    popcount_.push_back(std::popcount(m));
  }
  bits_ = 1;
  while ((1u << bits_) < masks_.size()) ++bits_;
}

} // namespace icn
