#ifndef SKEWCAL_REGISTRY_HPP
#define SKEWCAL_REGISTRY_HPP

#include <string>
#include <vector>

namespace skewcal {

/// Built-in example definition file with its CI expectation.
struct RegistryEntry {
  std::string name;
  std::string description;
  std::string default_suite;
  bool expect_pass; ///< default suite passes / intentionally fails
  std::string text; ///< definition-file source
};

const std::vector<RegistryEntry>& builtin_examples();

/// nullptr when no example carries the name.
const RegistryEntry* find_example(const std::string& name);

} // namespace skewcal

#endif
