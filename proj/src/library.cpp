#include "setheory/library.hpp"

#include "setheory/procl/parser.hpp"

#include <fstream>
#include <sstream>

namespace setheory {

const ProcessRegistry& builtin_registry()
{
  static const ProcessRegistry registry = [] {
    ProcessRegistry r;
    for (const auto& asset : library_assets()) {
      try {
        r.add_source(asset.source);
      } catch (const std::exception& e) {
        throw ProcessError("library asset '" + asset.name + ".procl': " + e.what());
      }
    }
    for (const auto& name : r.names())
      resolve_process(name, r);
    return r;
  }();
  return registry;
}

Process load_process(std::string_view name_or_path)
{
  const ProcessRegistry& builtins = builtin_registry();
  if (builtins.contains(name_or_path))
    return resolve_process(name_or_path, builtins);

  std::ifstream in{std::string(name_or_path)};
  if (!in)
    throw ProcessError("unknown process '" + std::string(name_or_path) +
                       "': not a built-in name and not a readable file");
  std::stringstream buf;
  buf << in.rdbuf();

  ProcessRegistry registry = builtins;
  std::vector<std::string> added;
  try {
    added = registry.add_source(buf.str());
  } catch (const procl::ProclError& e) {
    throw ProcessError(std::string(name_or_path) + ":" + e.what());
  }
  if (added.empty())
    throw ProcessError(std::string(name_or_path) + ": defines no process");
  return resolve_process(added.back(), registry);
}

} // namespace setheory
