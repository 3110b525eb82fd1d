#include "setheory/process.hpp"

#include "setheory/procl/parser.hpp"

#include <algorithm>
#include <set>

namespace setheory {

const ProcessRule* Process::find_rule(std::string_view rule_name) const
{
  auto it = std::find_if(rules.begin(), rules.end(), [&](const auto& r) { return r.name == rule_name; });
  return it == rules.end() ? nullptr : &*it;
}

const EntityBinding* Process::find_binding(std::string_view binding_name) const
{
  auto it = std::find_if(bindings.begin(), bindings.end(), [&](const auto& b) { return b.name == binding_name; });
  return it == bindings.end() ? nullptr : &*it;
}

procl::BindingTable Process::binding_table() const
{
  procl::BindingTable table;
  for (const auto& b : bindings)
    table.emplace(b.name, b);
  return table;
}

std::vector<VariantEdit> edits_of(const procl::ProcessDef& def)
{
  std::vector<VariantEdit> edits;
  for (const auto& item : def.items) {
    if (const auto* b = std::get_if<procl::BindingDecl>(&item))
      edits.push_back({EditAction::add_binding, *b});
    else if (const auto* r = std::get_if<procl::RuleDef>(&item))
      edits.push_back({EditAction::add_rule, ProcessRule{r->name, r->expr, !r->optional, def.name}});
    else if (const auto* o = std::get_if<procl::OverrideRule>(&item))
      edits.push_back({EditAction::override_rule, ProcessRule{o->name, o->expr, true, def.name}});
    else if (const auto* rm = std::get_if<procl::RemoveRule>(&item))
      edits.push_back({EditAction::remove_rule, rm->name});
  }
  return edits;
}

void ProcessRegistry::add(procl::ProcessDef def)
{
  if (defs_.count(def.name))
    throw ProcessError("duplicate process definition '" + def.name + "'");
  std::string name = def.name;
  defs_.emplace(std::move(name), std::move(def));
}

std::vector<std::string> ProcessRegistry::add_source(std::string_view source)
{
  procl::SpecAst ast = procl::parse_source(source);
  std::vector<std::string> names;
  for (auto& def : ast.processes) {
    names.push_back(def.name);
    add(std::move(def));
  }
  return names;
}

const procl::ProcessDef* ProcessRegistry::find(std::string_view name) const
{
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

std::vector<std::string> ProcessRegistry::names() const
{
  std::vector<std::string> out;
  for (const auto& [name, def] : defs_)
    out.push_back(name);
  return out;
}

namespace {

std::vector<const procl::ProcessDef*> extends_chain(std::string_view name, const ProcessRegistry& registry)
{
  std::vector<const procl::ProcessDef*> chain;
  std::vector<std::string> seen;
  const procl::ProcessDef* def = registry.find(name);
  if (!def)
    throw ProcessError("unknown process '" + std::string(name) + "'");
  while (def) {
    if (std::find(seen.begin(), seen.end(), def->name) != seen.end()) {
      std::string cycle;
      for (const auto& s : seen)
        cycle += s + " -> ";
      throw ProcessError("cyclic extends: " + cycle + def->name);
    }
    seen.push_back(def->name);
    chain.push_back(def);
    if (!def->extends)
      break;
    const procl::ProcessDef* parent = registry.find(*def->extends);
    if (!parent)
      throw ProcessError("process '" + def->name + "' extends unknown process '" + *def->extends + "'");
    def = parent;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

void apply(Process& p, const VariantEdit& edit, const std::string& contributor)
{
  auto rule_pos = [&](const std::string& n) {
    return std::find_if(p.rules.begin(), p.rules.end(), [&](const auto& r) { return r.name == n; });
  };
  switch (edit.action) {
    case EditAction::add_binding: {
      const auto& b = std::get<EntityBinding>(edit.payload);
      if (p.find_binding(b.name))
        throw ProcessError("process '" + contributor + "' redeclares binding '" + b.name + "'");
      p.bindings.push_back(b);
      break;
    }
    case EditAction::add_rule: {
      const auto& r = std::get<ProcessRule>(edit.payload);
      if (rule_pos(r.name) != p.rules.end())
        throw ProcessError("process '" + contributor + "' adds rule '" + r.name +
                           "', which already exists; use 'override rule'");
      p.rules.push_back(r);
      break;
    }
    case EditAction::override_rule: {
      const auto& r = std::get<ProcessRule>(edit.payload);
      auto it = rule_pos(r.name);
      if (it == p.rules.end())
        throw ProcessError("process '" + contributor + "' overrides nonexistent rule '" + r.name + "'");
      it->expr = r.expr;
      it->origin = r.origin;
      break;
    }
    case EditAction::remove_rule: {
      const auto& n = std::get<std::string>(edit.payload);
      auto it = rule_pos(n);
      if (it == p.rules.end())
        throw ProcessError("process '" + contributor + "' removes nonexistent rule '" + n + "'");
      p.rules.erase(it);
      break;
    }
  }
}

} // namespace

Process resolve_process(std::string_view name, const ProcessRegistry& registry, const procl::AttributeSchema& schema)
{
  Process p;
  for (const procl::ProcessDef* def : extends_chain(name, registry)) {
    for (const auto& edit : edits_of(*def))
      apply(p, edit, def->name);
    p.lineage.push_back(def->name);
  }
  p.name = std::string(name);

  const procl::BindingTable table = p.binding_table();
  for (auto& rule : p.rules) {
    try {
      rule.expr = procl::typecheck_rule(*rule.expr, table, schema);
    } catch (const procl::TypeError& e) {
      throw ProcessError("rule '" + rule.name + "' (from '" + rule.origin + "'): " + e.what());
    }
  }
  return p;
}

std::vector<RuleSummary> rule_set(const Process& process)
{
  std::vector<RuleSummary> out;
  out.reserve(process.rules.size());
  for (const auto& r : process.rules)
    out.push_back({r.name, r.origin, r.mandatory});
  return out;
}

} // namespace setheory
