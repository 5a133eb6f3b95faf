#pragma once
// Error taxonomy shared by the whole library.

#include <cstdint>
#include <stdexcept>
#include <string>

namespace errorball {

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed sequence text; `position` is 1-based.
class parse_error : public error {
public:
  parse_error(const std::string& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

class empty_input_error : public error {
public:
  using error::error;
};

class dimension_error : public error {
public:
  using error::error;
};

class index_error : public error {
public:
  using error::error;
};

class range_error : public error {
public:
  using error::error;
};

class precondition_error : public error {
public:
  using error::error;
};

class pattern_error : public error {
public:
  using error::error;
};

class degenerate_pair_error : public error {
public:
  using error::error;
};

class overflow_error : public error {
public:
  using error::error;
};

class budget_exceeded_error : public error {
public:
  budget_exceeded_error(std::uint64_t used, std::uint64_t limit)
      : error("enumeration budget exceeded: " + std::to_string(used) + " > " +
              std::to_string(limit)),
        used_(used),
        limit_(limit) {}
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t used_;
  std::uint64_t limit_;
};

}  // namespace errorball
