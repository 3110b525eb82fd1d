#pragma once

// Project trace files: strict JSON schema validation into the ontology,
// the matching writer, and binding a process's declared roles onto a
// loaded project.

#include "setheory/environment.hpp"
#include "setheory/ontology.hpp"
#include "setheory/process.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace setheory {

struct SchemaError
{
  std::string path; ///< slash-separated, e.g. "milestones/0/due_time"; "" is the document root
  std::string message;
  friend bool operator==(const SchemaError&, const SchemaError&) = default;
};

/// The document is not well-formed JSON.
class TraceParseError : public std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// The document is JSON but does not match the trace schema.
class SchemaValidationError : public std::runtime_error
{
public:
  explicit SchemaValidationError(std::vector<SchemaError> errors);
  const std::vector<SchemaError>& errors() const { return errors_; }

private:
  std::vector<SchemaError> errors_;
};

struct LoadOptions
{
  /// Report unknown keys as warnings instead of errors.
  bool lenient = false;
};

/// Parses and validates a trace document. All schema errors are collected
/// before throwing. In lenient mode unknown keys are appended to
/// `warnings` (when given) instead.
Project load_project(std::string_view document, const LoadOptions& options = {},
                     std::vector<SchemaError>* warnings = nullptr);

Project load_project_file(const std::string& path, const LoadOptions& options = {},
                          std::vector<SchemaError>* warnings = nullptr);

/// Serializes a project in the trace format; load_project(emit_project(p)) == p.
std::string emit_project(const Project& project);

enum class BindingFailure { missing, ambiguous };

std::string_view to_string(BindingFailure f);

struct BindingError
{
  std::string binding_name;
  BindingFailure reason;
  friend bool operator==(const BindingError&, const BindingError&) = default;
};

class BindingErrors : public std::runtime_error
{
public:
  explicit BindingErrors(std::vector<BindingError> errors);
  const std::vector<BindingError>& errors() const { return errors_; }

private:
  std::vector<BindingError> errors_;
};

struct BindingOutcome
{
  Environment env;
  std::vector<BindingError> errors; ///< in binding declaration order
};

/// Binds every declared role. Phase bindings match Phase::role_label
/// exactly; failed bindings are recorded and left absent in the
/// environment so rules over them evaluate to undetermined.
BindingOutcome try_bind_entities(const Project& project, const Process& process);

/// As try_bind_entities, but throws BindingErrors if any binding failed.
Environment bind_entities(const Project& project, const Process& process);

} // namespace setheory
