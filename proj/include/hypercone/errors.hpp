#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypercone {

/// Malformed or inconsistent user input (files, expressions, arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured size guard.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A candidate contraction map does not send occurrence vectors to occurrence vectors.
class MapInvalidError : public InputError {
 public:
  MapInvalidError(const std::string& what, std::string party)
      : InputError(what), party_(std::move(party)) {}
  const std::string& party() const noexcept { return party_; }

 private:
  std::string party_;
};

/// No building-block tensor is registered for a requested vertex degree.
class RegistryError : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace hypercone
