#ifndef GSEMI_VERSION_HPP
#define GSEMI_VERSION_HPP

namespace gsemi {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchema = 1;

}  // namespace gsemi

#endif
