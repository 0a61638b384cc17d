#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>

#include "json.hpp"

#include "hypercone/rational.hpp"

namespace hypercone::cli {

enum Exit : int {
  kOk = 0,
  kViolation = 1,
  kInputError = 2,
  kBudgetExceeded = 3,
  kResourceError = 4,
  kInternalError = 5,
};

struct Globals {
  bool json = false;
  bool as_float = false;
  bool no_timing = false;
  int threads = 0;
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
};

/// One invocation: collects text output, the JSON result and the manifest,
/// and prints them exactly once in finish().
class Run {
 public:
  Run(std::string command, const Globals& globals);

  const Globals& globals() const { return globals_; }
  int threads() const { return threads_; }

  void input_file(const std::string& path);
  void input_builtin(const std::string& kind, const std::string& name);
  void input_expression(const std::string& text);

  nlohmann::json& params() { return manifest_["parameters"]; }
  nlohmann::json& result() { return result_; }
  nlohmann::json& timing() { return timing_; }
  std::ostringstream& out() { return text_; }

  nlohmann::json number(const Rational& value) const;
  std::string str(const Rational& value) const;

  int finish(int code, const std::string& outcome);
  int fail(int code, const std::string& kind, const std::string& message, nlohmann::json detail = {});

 private:
  std::string command_;
  Globals globals_;
  int threads_ = 1;
  nlohmann::json manifest_;
  nlohmann::json result_ = nlohmann::json::object();
  nlohmann::json timing_ = nlohmann::json::object();
  std::ostringstream text_;
  std::chrono::steady_clock::time_point start_;
};

std::string sha256_file(const std::string& path);

}  // namespace hypercone::cli
