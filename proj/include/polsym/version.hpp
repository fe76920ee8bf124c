#ifndef POLSYM_VERSION_HPP
#define POLSYM_VERSION_HPP

namespace polsym {

inline constexpr const char* kToolName = "polsym";
inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace polsym

#endif
