#pragma once

#define QCOSET_VERSION_STRING "0.1.0"

namespace qcoset {
inline constexpr const char* kVersion = QCOSET_VERSION_STRING;
}
