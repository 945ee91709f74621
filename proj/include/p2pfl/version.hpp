#ifndef P2PFL_VERSION_HPP_
#define P2PFL_VERSION_HPP_

namespace p2pfl {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace p2pfl

#endif  // P2PFL_VERSION_HPP_
