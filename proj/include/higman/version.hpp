#pragma once

namespace higman {
  inline constexpr char const* version = "0.1.0";
}
