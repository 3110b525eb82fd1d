#include "setheory/trace.hpp"

#include "json.hpp"

#include <fstream>
#include <initializer_list>
#include <limits>
#include <set>
#include <sstream>

namespace setheory {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace {

std::string summarize(const std::vector<SchemaError>& errors)
{
  std::string msg = "trace does not match the schema (" + std::to_string(errors.size()) + " error" +
                    (errors.size() == 1 ? "" : "s") + ")";
  for (const auto& e : errors)
    msg += "\n  " + (e.path.empty() ? std::string("<root>") : e.path) + ": " + e.message;
  return msg;
}

// JSON-pointer style escaping so every reported path resolves.
std::string escape_key(std::string_view key)
{
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

std::string join(const std::string& path, std::string_view key)
{
  return path.empty() ? escape_key(key) : path + "/" + escape_key(key);
}

std::string join(const std::string& path, std::size_t index) { return join(path, std::to_string(index)); }

std::string_view json_type(const json& j)
{
  switch (j.type()) {
    case json::value_t::null: return "null";
    case json::value_t::boolean: return "boolean";
    case json::value_t::number_integer:
    case json::value_t::number_unsigned: return "integer";
    case json::value_t::number_float: return "number";
    case json::value_t::string: return "string";
    case json::value_t::array: return "array";
    case json::value_t::object: return "object";
    default: return "value";
  }
}

class Reader
{
public:
  explicit Reader(bool lenient) : lenient_(lenient) {}

  std::vector<SchemaError> errors;
  std::vector<SchemaError> warnings;

  void error(std::string path, std::string message) { errors.push_back({std::move(path), std::move(message)}); }

  bool expect_object(const json& j, const std::string& path)
  {
    if (j.is_object())
      return true;
    error(path, "expected object, found " + std::string(json_type(j)));
    return false;
  }

  void reject_unknown(const json& obj, const std::string& path, std::initializer_list<std::string_view> known)
  {
    for (const auto& [key, value] : obj.items()) {
      bool ok = false;
      for (auto k : known)
        ok = ok || k == key;
      if (ok)
        continue;
      SchemaError e{join(path, key), "unknown field '" + key + "'"};
      (lenient_ ? warnings : errors).push_back(std::move(e));
    }
  }

  /// Null when the key is missing; reports the miss when required.
  const json* field(const json& obj, const std::string& path, std::string_view key, bool required)
  {
    auto it = obj.find(key);
    if (it == obj.end()) {
      if (required)
        error(path, "missing required field '" + std::string(key) + "'");
      return nullptr;
    }
    return &*it;
  }

  std::optional<std::string> text(const json& obj, const std::string& path, std::string_view key, bool required = true,
                                  bool nonempty = false)
  {
    const json* j = field(obj, path, key, required);
    if (!j || (!required && j->is_null()))
      return std::nullopt;
    if (!j->is_string()) {
      error(join(path, key), "expected string, found " + std::string(json_type(*j)));
      return std::nullopt;
    }
    std::string s = j->get<std::string>();
    if (nonempty && s.empty()) {
      error(join(path, key), "must not be empty");
      return std::nullopt;
    }
    return s;
  }

  std::optional<std::string> id(const json& obj, const std::string& path, std::string_view key)
  {
    return text(obj, path, key, true, true);
  }

  std::optional<Timestamp> time(const json& obj, const std::string& path, std::string_view key, bool required = true)
  {
    const json* j = field(obj, path, key, required);
    if (!j || (!required && j->is_null()))
      return std::nullopt;
    const std::string at = join(path, key);
    if (j->is_number_unsigned()) {
      auto v = j->get<std::uint64_t>();
      if (v > static_cast<std::uint64_t>(std::numeric_limits<Timestamp>::max())) {
        error(at, "timestamp out of range");
        return std::nullopt;
      }
      return static_cast<Timestamp>(v);
    }
    if (j->is_number_integer()) {
      auto v = j->get<std::int64_t>();
      if (v < 0) {
        error(at, "timestamp must be a non-negative integer, found " + std::to_string(v));
        return std::nullopt;
      }
      return v;
    }
    error(at, "expected non-negative integer timestamp, found " + std::string(json_type(*j)));
    return std::nullopt;
  }

  std::optional<bool> flag(const json& obj, const std::string& path, std::string_view key)
  {
    const json* j = field(obj, path, key, false);
    if (!j)
      return std::nullopt;
    if (!j->is_boolean()) {
      error(join(path, key), "expected boolean, found " + std::string(json_type(*j)));
      return std::nullopt;
    }
    return j->get<bool>();
  }

  /// An array of distinct non-empty ids.
  std::vector<std::string> id_set(const json& obj, const std::string& path, std::string_view key, bool required)
  {
    std::vector<std::string> out;
    const json* j = field(obj, path, key, required);
    if (!j)
      return out;
    const std::string at = join(path, key);
    if (!j->is_array()) {
      error(at, "expected array, found " + std::string(json_type(*j)));
      return out;
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < j->size(); ++i) {
      const json& item = (*j)[i];
      if (!item.is_string() || item.get_ref<const std::string&>().empty()) {
        error(join(at, i), "expected non-empty id string");
        continue;
      }
      const auto& s = item.get_ref<const std::string&>();
      if (!seen.insert(s).second) {
        error(join(at, i), "duplicate id '" + s + "' in set");
        continue;
      }
      out.push_back(s);
    }
    return out;
  }

  /// Calls `each(element, element_path)` for every element of a required
  /// array-of-objects section.
  template <typename F>
  void section(const json& obj, const std::string& path, std::string_view key, F&& each)
  {
    const json* j = field(obj, path, key, true);
    if (!j)
      return;
    const std::string at = join(path, key);
    if (!j->is_array()) {
      error(at, "expected array, found " + std::string(json_type(*j)));
      return;
    }
    for (std::size_t i = 0; i < j->size(); ++i) {
      const std::string elem_path = join(at, i);
      if (expect_object((*j)[i], elem_path))
        each((*j)[i], elem_path);
    }
  }

  /// Reports ids repeated within one section.
  void unique(std::set<std::string>& seen, const std::optional<std::string>& id, const std::string& path)
  {
    if (id && !seen.insert(*id).second)
      error(join(path, "id"), "duplicate id '" + *id + "'");
  }

private:
  bool lenient_;
};

Project read_project(Reader& r, const json& doc)
{
  Project p;
  if (!r.expect_object(doc, ""))
    return p;
  r.reject_unknown(doc, "", {"name", "time_unit", "targets", "products", "milestones", "people", "phases", "sprints",
                             "meetings", "work_assignments"});
  p.name = r.text(doc, "", "name").value_or("");
  p.id = p.name;
  p.time_unit = r.text(doc, "", "time_unit", false).value_or("tick");
  p.targets = r.id_set(doc, "", "targets", true);

  std::set<std::string> seen;
  r.section(doc, "", "products", [&](const json& o, const std::string& at) {
    r.reject_unknown(o, at, {"id", "name", "kind", "sub_products", "pre_existing"});
    Product prod;
    auto id = r.id(o, at, "id");
    r.unique(seen, id, at);
    prod.id = id.value_or("");
    prod.name = r.text(o, at, "name").value_or("");
    prod.kind = ProductKind::from_label(r.text(o, at, "kind", true, true).value_or("module"));
    prod.sub_products = r.id_set(o, at, "sub_products", false);
    prod.pre_existing = r.flag(o, at, "pre_existing").value_or(false);
    p.products.push_back(std::move(prod));
  });

  seen.clear();
  r.section(doc, "", "milestones", [&](const json& o, const std::string& at) {
    r.reject_unknown(o, at, {"id", "name", "due_time", "elements"});
    Milestone m;
    auto id = r.id(o, at, "id");
    r.unique(seen, id, at);
    m.id = id.value_or("");
    m.name = r.text(o, at, "name").value_or("");
    m.due_time = r.time(o, at, "due_time").value_or(0);
    r.section(o, at, "elements", [&](const json& e, const std::string& eat) {
      r.reject_unknown(e, eat, {"variant", "product_id"});
      ProductIncrement inc;
      inc.variant = IncrementVariant::from_label(r.text(e, eat, "variant", true, true).value_or("creation"));
      inc.product_id = r.id(e, eat, "product_id").value_or("");
      m.elements.push_back(std::move(inc));
    });
    p.milestones.push_back(std::move(m));
  });

  seen.clear();
  r.section(doc, "", "people", [&](const json& o, const std::string& at) {
    r.reject_unknown(o, at, {"id", "name", "role"});
    Person person;
    auto id = r.id(o, at, "id");
    r.unique(seen, id, at);
    person.id = id.value_or("");
    person.name = r.text(o, at, "name").value_or("");
    person.role = PersonRole::from_label(r.text(o, at, "role", true, true).value_or("team_member"));
    p.people.push_back(std::move(person));
  });

  seen.clear();
  r.section(doc, "", "phases", [&](const json& o, const std::string& at) {
    r.reject_unknown(o, at, {"id", "role_label", "start_time", "end_time"});
    Phase ph;
    auto id = r.id(o, at, "id");
    r.unique(seen, id, at);
    ph.id = id.value_or("");
    ph.role_label = r.id(o, at, "role_label").value_or("");
    ph.start_time = r.time(o, at, "start_time").value_or(0);
    ph.end_time = r.time(o, at, "end_time", false);
    p.phases.push_back(std::move(ph));
  });

  seen.clear();
  r.section(doc, "", "sprints", [&](const json& o, const std::string& at) {
    r.reject_unknown(o, at, {"id", "start_time", "end_time"});
    Sprint s;
    auto id = r.id(o, at, "id");
    r.unique(seen, id, at);
    s.id = id.value_or("");
    s.start_time = r.time(o, at, "start_time").value_or(0);
    s.end_time = r.time(o, at, "end_time").value_or(0);
    p.sprints.push_back(std::move(s));
  });

  seen.clear();
  r.section(doc, "", "meetings", [&](const json& o, const std::string& at) {
    r.reject_unknown(o, at, {"id", "kind", "time", "sprint_id"});
    Meeting m;
    auto id = r.id(o, at, "id");
    r.unique(seen, id, at);
    m.id = id.value_or("");
    m.kind = r.text(o, at, "kind").value_or("");
    m.time = r.time(o, at, "time").value_or(0);
    m.sprint_id = r.text(o, at, "sprint_id", false, true);
    p.meetings.push_back(std::move(m));
  });

  r.section(doc, "", "work_assignments", [&](const json& o, const std::string& at) {
    r.reject_unknown(o, at, {"person_id", "product_id", "start_time", "end_time"});
    WorkAssignment w;
    w.person_id = r.id(o, at, "person_id").value_or("");
    w.product_id = r.id(o, at, "product_id").value_or("");
    w.start_time = r.time(o, at, "start_time").value_or(0);
    w.end_time = r.time(o, at, "end_time", false);
    p.work_assignments.push_back(std::move(w));
  });
  return p;
}

} // namespace

SchemaValidationError::SchemaValidationError(std::vector<SchemaError> errors)
    : std::runtime_error(summarize(errors))
    , errors_(std::move(errors))
{
}

Project load_project(std::string_view document, const LoadOptions& options, std::vector<SchemaError>* warnings)
{
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw TraceParseError(std::string("malformed JSON: ") + e.what());
  }
  Reader reader(options.lenient);
  Project project = read_project(reader, doc);
  if (!reader.errors.empty())
    throw SchemaValidationError(std::move(reader.errors));
  if (warnings)
    warnings->insert(warnings->end(), reader.warnings.begin(), reader.warnings.end());
  return project;
}

Project load_project_file(const std::string& path, const LoadOptions& options, std::vector<SchemaError>* warnings)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return load_project(buf.str(), options, warnings);
}

std::string emit_project(const Project& p)
{
  ordered_json doc;
  doc["name"] = p.name;
  doc["time_unit"] = p.time_unit;
  doc["targets"] = p.targets;

  auto& products = doc["products"] = ordered_json::array();
  for (const auto& prod : p.products)
    products.push_back({{"id", prod.id},
                        {"name", prod.name},
                        {"kind", prod.kind.label()},
                        {"sub_products", prod.sub_products},
                        {"pre_existing", prod.pre_existing}});

  auto& milestones = doc["milestones"] = ordered_json::array();
  for (const auto& m : p.milestones) {
    ordered_json elements = ordered_json::array();
    for (const auto& inc : m.elements)
      elements.push_back({{"variant", inc.variant.label()}, {"product_id", inc.product_id}});
    milestones.push_back({{"id", m.id}, {"name", m.name}, {"due_time", m.due_time}, {"elements", elements}});
  }

  auto& people = doc["people"] = ordered_json::array();
  for (const auto& person : p.people)
    people.push_back({{"id", person.id}, {"name", person.name}, {"role", person.role.label()}});

  auto& phases = doc["phases"] = ordered_json::array();
  for (const auto& ph : p.phases) {
    ordered_json o = {{"id", ph.id}, {"role_label", ph.role_label}, {"start_time", ph.start_time}};
    if (ph.end_time)
      o["end_time"] = *ph.end_time;
    phases.push_back(std::move(o));
  }

  auto& sprints = doc["sprints"] = ordered_json::array();
  for (const auto& s : p.sprints)
    sprints.push_back({{"id", s.id}, {"start_time", s.start_time}, {"end_time", s.end_time}});

  auto& meetings = doc["meetings"] = ordered_json::array();
  for (const auto& m : p.meetings) {
    ordered_json o = {{"id", m.id}, {"kind", m.kind}, {"time", m.time}};
    if (m.sprint_id)
      o["sprint_id"] = *m.sprint_id;
    meetings.push_back(std::move(o));
  }

  auto& work = doc["work_assignments"] = ordered_json::array();
  for (const auto& w : p.work_assignments) {
    ordered_json o = {{"person_id", w.person_id}, {"product_id", w.product_id}, {"start_time", w.start_time}};
    if (w.end_time)
      o["end_time"] = *w.end_time;
    work.push_back(std::move(o));
  }
  return doc.dump(2) + "\n";
}

std::string_view to_string(BindingFailure f)
{
  return f == BindingFailure::missing ? "missing" : "ambiguous";
}

namespace {

std::string describe_errors(const std::vector<BindingError>& errors)
{
  std::string msg = "cannot bind process roles:";
  for (const auto& e : errors)
    msg += " " + e.binding_name + " (" + std::string(to_string(e.reason)) + ")";
  return msg;
}

} // namespace

BindingErrors::BindingErrors(std::vector<BindingError> errors)
    : std::runtime_error(describe_errors(errors))
    , errors_(std::move(errors))
{
}

BindingOutcome try_bind_entities(const Project& project, const Process& process)
{
  BindingOutcome out{Environment(project), {}};
  for (const auto& b : process.bindings) {
    if (procl::is_collection(b.kind)) {
      out.env.bind_collection(b.name, b.kind, collection_elements(project, b.kind));
      continue;
    }
    std::vector<const Phase*> matches;
    for (const auto& ph : project.phases)
      if (ph.role_label == b.name)
        matches.push_back(&ph);
    if (matches.size() == 1) {
      out.env.bind_phase(b.name, *matches.front());
    } else if (matches.empty() && b.optional) {
      out.env.mark_absent(b.name, "optional phase '" + b.name + "' absent");
    } else {
      const auto reason = matches.empty() ? BindingFailure::missing : BindingFailure::ambiguous;
      out.errors.push_back({b.name, reason});
      out.env.mark_absent(b.name, matches.empty()
                                      ? "required phase '" + b.name + "' missing"
                                      : "phase '" + b.name + "' is ambiguous (" + std::to_string(matches.size()) +
                                            " phases carry that label)");
    }
  }
  return out;
}

Environment bind_entities(const Project& project, const Process& process)
{
  BindingOutcome out = try_bind_entities(project, process);
  if (!out.errors.empty())
    throw BindingErrors(std::move(out.errors));
  return std::move(out.env);
}

} // namespace setheory
