// sagin-qos — statistical multi-QoS toolkit for satellite/UAV/ground networks
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace saginqos {
inline constexpr const char* kVersion = "0.1.0";
}
