#pragma once

// The shipped process library: waterfall, scrum and an example scrum
// variant, embedded from assets/procl at build time.

#include "setheory/process.hpp"

#include <string>
#include <vector>

namespace setheory {

struct LibraryAsset
{
  std::string name; ///< file stem, e.g. "waterfall"
  std::string source;
};

const std::vector<LibraryAsset>& library_assets();

/// Parsed and typechecked definitions of every shipped process. Throws if
/// an asset fails to parse, typecheck or resolve.
const ProcessRegistry& builtin_registry();

/// Resolves `name_or_path`: a built-in process name, or a path to a PROCL
/// file whose definitions may extend the built-ins. For a file, the last
/// process it defines is returned.
Process load_process(std::string_view name_or_path);

} // namespace setheory
