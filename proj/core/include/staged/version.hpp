#pragma once

namespace staged {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchemaTag = "stagedtrees/v1";

}  // namespace staged
