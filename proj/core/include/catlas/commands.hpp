#ifndef CATLAS_COMMANDS_HPP
#define CATLAS_COMMANDS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "catlas/workspace.hpp"

namespace catlas {
namespace io {

struct CommandOptions {
  std::string command;
  std::vector<std::string> files;

  std::string category;
  std::string complex_name;
  std::string functor_name;
  std::string functor_back;
  std::vector<std::string> transformations;  // equiv evidence
  std::string basepoint;
  std::string at;   // the U object for lascar/main-theorem
  std::string sub;  // C0 selector: "none", comma list, or "<prefix><=N"
  std::string side = "slice";
  std::vector<std::string> spans;  // "apex,left,right"
  std::vector<std::string> props;

  int max_dim = 2;
  std::size_t identify = 0;  // pi1: enumerate with this coset cap when > 0
  std::size_t max_cosets = 10000;
  std::uint64_t max_steps = 50'000'000;
  int rounds = 0;  // amalgamate: 0 = one adjunction step, n > 0 = n full rounds
  bool normal_closure = false;
  std::string format = "text";
};

struct Report {
  Json data;
  int exit_code = 0;

  std::string render(const std::string& format) const;  // "text" | "json"
};

/// Dispatches one command against a loaded workspace. Input errors always
/// surface as CatError; the caller maps them to exit code 2.
Report run_command(const Workspace& ws, const CommandOptions& opt);

/// Resolves a C0 selector against a category: "none" (empty), an explicit
/// comma-separated id list, or "<prefix><=N" matching ids of the form
/// prefix + integer with the integer at most N.
std::vector<Index> parse_subcategory_selector(const FiniteCategory& c, const std::string& selector);

}  // namespace io
}  // namespace catlas

#endif  // CATLAS_COMMANDS_HPP
