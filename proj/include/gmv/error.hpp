#pragma once

#include <stdexcept>
#include <string>

namespace gmv {

/// Malformed external input (graph6, edge lists, vertex lists).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gmv
