#pragma once

namespace nullag {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

}  // namespace nullag
