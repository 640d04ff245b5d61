#pragma once

#include <stdexcept>

namespace udn {

class NoConnectedBs : public std::runtime_error {
 public:
  NoConnectedBs() : std::runtime_error("no connected BS") {}
};

}  // namespace udn
