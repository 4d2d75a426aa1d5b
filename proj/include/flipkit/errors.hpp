#pragma once

#include <stdexcept>
#include <string>

namespace flipkit {

// Bad arguments or malformed input data.
struct argument_error : std::invalid_argument {
  explicit argument_error(const std::string& what) : std::invalid_argument(what) {}
};

// A configured search/enumeration budget was exceeded.
struct resource_error : std::runtime_error {
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate geometry (a path through a marker, a non-simple polyline, ...).
struct geometry_error : std::runtime_error {
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

// Flip requested at an arc whose two sides bound the same triangle.
struct flip_undefined_error : std::runtime_error {
  explicit flip_undefined_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flipkit
