#include "run.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>

#include "hypercone/errors.hpp"
#include "hypercone/parallel.hpp"

namespace hypercone::cli {

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1)
    throw ResourceError("sha256 unavailable");
  std::array<char, 1 << 16> buffer;
  while (in) {
    in.read(buffer.data(), buffer.size());
    EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest;
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);
  std::ostringstream hex;
  for (unsigned i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{digest[i]};
  return hex.str();
}

Run::Run(std::string command, const Globals& globals)
    : command_(std::move(command)), globals_(globals), start_(std::chrono::steady_clock::now()) {
  threads_ = resolve_threads(globals.threads);
  manifest_["command"] = command_;
  manifest_["inputs"] = nlohmann::json::array();
  manifest_["parameters"] = nlohmann::json::object();
  manifest_["parameters"]["threads"] = threads_;
}

void Run::input_file(const std::string& path) {
  manifest_["inputs"].push_back({{"path", path}, {"sha256", sha256_file(path)}});
}

void Run::input_builtin(const std::string& kind, const std::string& name) {
  manifest_["inputs"].push_back({{"builtin", kind}, {"name", name}});
}

void Run::input_expression(const std::string& text) {
  manifest_["inputs"].push_back({{"expression", text}});
}

nlohmann::json Run::number(const Rational& value) const {
  if (globals_.as_float) return to_double(value);
  return to_string(value);
}

std::string Run::str(const Rational& value) const {
  if (!globals_.as_float) return to_string(value);
  std::ostringstream os;
  os << std::setprecision(12) << to_double(value);
  return os.str();
}

int Run::finish(int code, const std::string& outcome) {
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  manifest_["outcome"] = outcome;
  manifest_["exit_code"] = code;
  if (globals_.json) {
    nlohmann::json doc;
    doc["schema"] = "hypercone/1";
    doc["manifest"] = manifest_;
    doc["result"] = result_;
    if (!globals_.no_timing) {
      doc["timing"] = timing_;
      doc["timing"]["wall_seconds"] = wall;
    }
    std::cout << doc.dump(2) << '\n';
  } else {
    std::cout << text_.str();
    nlohmann::json line = manifest_;
    if (!globals_.no_timing) line["wall_seconds"] = wall;
    std::cerr << "manifest " << line.dump() << '\n';
  }
  return code;
}

int Run::fail(int code, const std::string& kind, const std::string& message, nlohmann::json detail) {
  nlohmann::json error = {{"kind", kind}, {"message", message}};
  if (!detail.is_null()) error["detail"] = std::move(detail);
  result_["error"] = error;
  if (!globals_.json) std::cerr << "error (" << kind << "): " << message << '\n';
  return finish(code, kind);
}

}  // namespace hypercone::cli
