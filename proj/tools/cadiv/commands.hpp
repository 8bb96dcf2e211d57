// Subcommand bodies, kept apart from argument parsing so tests can drive them.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>

namespace cadiv::io {

inline constexpr int kExitPass = 0;
inline constexpr int kExitConditionsFail = 1;
inline constexpr int kExitInputError = 2;

struct AnalyzeOptions {
  std::string path;
  std::string cls = "auto";  // auto | normal | nonnormal | semistable
  bool json = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> axial;  // (k, k') for semistable germs
};

struct EnumerateOptions {
  std::string kind;  // semistable | normal
  std::int64_t k = 0;
  std::int64_t bound = 0;  // 0: library default
  std::int64_t max_n = 5;
  std::int64_t max_d = 4;
  std::int64_t max_chain = 0;
  std::string out;  // empty: standard output
};

struct HjOptions {
  std::optional<std::pair<std::int64_t, std::int64_t>> fraction;  // (n, a)
  std::optional<std::string> chain;                               // "2,5"
};

int cmd_analyze(const AnalyzeOptions& opt, std::ostream& out, std::ostream& err);
int cmd_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err);
int cmd_hj(const HjOptions& opt, std::ostream& out, std::ostream& err);
int cmd_dot(const std::string& path, std::ostream& out, std::ostream& err);

}  // namespace cadiv::io
