#ifndef NFLAB_VERSION_HPP
#define NFLAB_VERSION_HPP

namespace nflab {

inline constexpr const char* kToolName = "nflab";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace nflab

#endif
