#pragma once

namespace rqed {

inline constexpr const char* version = "0.1.0";

}
