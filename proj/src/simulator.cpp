#include "setheory/simulator.hpp"

#include "setheory/conformance.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace setheory {

std::uint64_t SplitMix64::next()
{
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::int64_t SplitMix64::uniform(std::int64_t lo, std::int64_t hi)
{
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(span == 0 ? next() : next() % span);
}

bool SplitMix64::chance(std::uint64_t num, std::uint64_t den) { return next() % den < num; }

std::uint64_t fnv1a64(std::string_view text)
{
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

void GenParams::validate() const
{
  auto check = [](int v, int lo, int hi, const char* name) {
    if (v < lo || v > hi)
      throw std::invalid_argument(std::string(name) + " must be in [" + std::to_string(lo) + ", " +
                                  std::to_string(hi) + "], got " + std::to_string(v));
  };
  check(n_products, 1, 50, "n_products");
  check(n_milestones, 1, 20, "n_milestones");
  check(phase_gap_max, 0, 1000, "phase_gap_max");
  check(sprint_count, 0, 100, "sprint_count");
}

namespace {

enum class Family { waterfall, scrum };

Family family_of(const Process& process)
{
  const std::string& root = process.lineage.empty() ? process.name : process.lineage.front();
  if (root == "waterfall")
    return Family::waterfall;
  if (root == "scrum")
    return Family::scrum;
  throw GenerationError("no generation template for process family '" + root + "' (process '" + process.name + "')");
}

void add_products(Project& p, SplitMix64& rng, const GenParams& params, Family family)
{
  static const char* kinds[] = {"module", "test_plan", "document"};
  std::vector<bool> has_parent(params.n_products, false);
  for (int i = 0; i < params.n_products; ++i) {
    Product prod;
    prod.id = "prod-" + std::to_string(i + 1);
    prod.name = "Product " + std::to_string(i + 1);
    prod.kind = ProductKind::from_label(kinds[rng.uniform(0, 2)]);
    if (family == Family::scrum && i == 0) {
      prod.kind = ProductKind::from_label("burndown_chart");
      prod.name = "Burndown chart";
    }
    prod.pre_existing = rng.chance(1, 5);
    if (i > 0 && rng.chance(1, 2)) {
      const auto parent = rng.uniform(0, i - 1);
      p.products[parent].sub_products.push_back(prod.id);
      has_parent[i] = true;
    }
    p.products.push_back(std::move(prod));
  }
  for (int i = 0; i < params.n_products; ++i)
    if (!has_parent[i])
      p.targets.push_back(p.products[i].id);
}

void add_milestones(Project& p, SplitMix64& rng, const GenParams& params)
{
  Timestamp due = 0;
  for (int k = 0; k < params.n_milestones; ++k) {
    due += rng.uniform(1, 10);
    p.milestones.push_back({"ms-" + std::to_string(k + 1), "Milestone " + std::to_string(k + 1), due, {}});
  }
  const auto last = static_cast<std::int64_t>(p.milestones.size()) - 1;
  for (const auto& prod : p.products) {
    std::int64_t first_update = 0;
    if (!prod.pre_existing) {
      const auto created = rng.uniform(0, last);
      p.milestones[created].elements.push_back({IncrementVariant::from_label("creation"), prod.id});
      first_update = created + 1;
    }
    for (auto k = first_update; k <= last; ++k)
      if (rng.chance(1, 3))
        p.milestones[k].elements.push_back({IncrementVariant::from_label("update"), prod.id});
  }
}

void add_people(Project& p, SplitMix64& rng)
{
  const auto members = rng.uniform(1, 3);
  for (std::int64_t i = 1; i <= members; ++i)
    p.people.push_back({"person-" + std::to_string(i), "Team member " + std::to_string(i),
                        PersonRole::from_label("team_member")});
  p.people.push_back({"stakeholder-1", "Stakeholder", PersonRole::from_label("stakeholder")});

  const auto delivered = delivered_products(p);
  if (delivered.empty())
    return;
  const std::vector<ProductId> pool(delivered.begin(), delivered.end());
  for (std::int64_t i = 1; i <= members; ++i) {
    const auto n = rng.uniform(1, 2);
    for (std::int64_t j = 0; j < n; ++j) {
      WorkAssignment w;
      w.person_id = "person-" + std::to_string(i);
      w.product_id = pool[rng.uniform(0, static_cast<std::int64_t>(pool.size()) - 1)];
      w.start_time = rng.uniform(0, 20);
      if (!rng.chance(1, 4))
        w.end_time = w.start_time + rng.uniform(0, 10);
      p.work_assignments.push_back(std::move(w));
    }
  }
}

// Phase bindings laid out back to back in declaration order. Optional
// phases are recorded half the time and may still be ongoing.
void add_phases(Project& p, SplitMix64& rng, const GenParams& params, const Process& process)
{
  Timestamp t = rng.uniform(0, params.phase_gap_max);
  for (const auto& b : process.bindings) {
    if (b.kind != procl::BindingKind::phase)
      continue;
    if (b.optional && !rng.chance(1, 2))
      continue;
    Phase ph;
    ph.id = "phase-" + b.name;
    ph.role_label = b.name;
    ph.start_time = t;
    const Timestamp end = t + rng.uniform(1, 10);
    if (!(b.optional && rng.chance(1, 2)))
      ph.end_time = end;
    t = end + rng.uniform(0, params.phase_gap_max);
    p.phases.push_back(std::move(ph));
  }
}

void add_sprints(Project& p, SplitMix64& rng, const GenParams& params)
{
  Timestamp t = rng.uniform(0, params.phase_gap_max);
  int meeting_no = 0;
  auto meeting = [&](std::string kind, Timestamp at, const std::string& sprint) {
    p.meetings.push_back({"meeting-" + std::to_string(++meeting_no), std::move(kind), at, sprint});
  };
  for (int i = 1; i <= params.sprint_count; ++i) {
    Sprint s{"sprint-" + std::to_string(i), t, t + rng.uniform(1, 14)};
    const auto dailies = rng.uniform(1, 3);
    for (std::int64_t d = 0; d < dailies; ++d)
      meeting("daily", rng.uniform(s.start_time, s.end_time), s.id);
    meeting("retrospective", s.end_time, s.id);
    t = s.end_time + rng.uniform(0, params.phase_gap_max);
    p.sprints.push_back(std::move(s));
  }
}

Project instantiate(const Process& process, const GenParams& params, Family family, int attempt)
{
  SplitMix64 rng(params.seed ^ fnv1a64(process.name) ^ (static_cast<std::uint64_t>(attempt) * 0xD1B54A32D192ED03ULL));
  Project p;
  p.name = "sim-" + process.name + "-" + std::to_string(params.seed);
  p.id = p.name;
  p.time_unit = "day";
  add_products(p, rng, params, family);
  add_milestones(p, rng, params);
  add_people(p, rng);
  if (family == Family::waterfall)
    add_phases(p, rng, params, process);
  else
    add_sprints(p, rng, params);
  return p;
}

} // namespace

Project generate_trace(const Process& process, const GenParams& params)
{
  params.validate();
  const Family family = family_of(process);
  std::string last_failure;
  for (int attempt = 0; attempt < kMaxGenerationAttempts; ++attempt) {
    Project p = instantiate(process, params, family, attempt);
    const ConformanceReport report = evaluate_process(process, p);
    if (report.satisfied)
      return p;
    if (!report.invariant_violations.empty()) {
      last_failure = report.invariant_violations.front().message;
    } else if (!report.binding_errors.empty()) {
      last_failure = "binding '" + report.binding_errors.front().binding_name + "' " +
                     std::string(to_string(report.binding_errors.front().reason));
    } else {
      for (const auto& r : report.rule_verdicts)
        if (r.mandatory && r.verdict != Verdict::satisfied) {
          last_failure = "rule '" + r.rule_name + "' " + std::string(to_string(r.verdict));
          break;
        }
    }
  }
  throw GenerationError("process '" + process.name + "' is unsatisfiable under template after " +
                        std::to_string(kMaxGenerationAttempts) + " attempts (last: " + last_failure + ")");
}

std::string_view to_string(MutationKind kind)
{
  switch (kind) {
    case MutationKind::shift_phase_start: return "shift_phase_start";
    case MutationKind::delete_retrospective: return "delete_retrospective";
    case MutationKind::retarget_increment: return "retarget_increment";
    case MutationKind::undelivered_work: return "undelivered_work";
    case MutationKind::swap_milestone_due: return "swap_milestone_due";
  }
  return "?";
}

std::optional<MutationKind> mutation_from_name(std::string_view name)
{
  for (auto k : kMutationCatalog)
    if (to_string(k) == name)
      return k;
  return std::nullopt;
}

std::string ExpectedTarget::describe() const
{
  if (kind == Kind::rule)
    return "rule " + rule_name;
  return "invariant " + std::string(code_name(code));
}

namespace {

struct Candidate
{
  MutationKind kind;
  std::function<MutatedTrace(const Project&, SplitMix64&)> apply;
};

std::string fresh_product_id(const Project& p, const std::string& stem)
{
  for (int n = 1;; ++n) {
    std::string id = stem + "-" + std::to_string(n);
    if (!p.find_product(id))
      return id;
  }
}

const Phase* unique_phase(const Project& p, const std::string& label)
{
  const Phase* found = nullptr;
  for (const auto& ph : p.phases)
    if (ph.role_label == label) {
      if (found)
        return nullptr;
      found = &ph;
    }
  return found;
}

bool is_attribute(const procl::ExprPtr& e, const std::string& binding, std::string_view attr,
                  const Process& process, std::string& bound_name)
{
  const auto* path = std::get_if<procl::Path>(&e->node);
  if (!path || path->segments.size() != 2 || path->segments[1] != attr)
    return false;
  const EntityBinding* b = process.find_binding(path->segments[0]);
  if (!b || b->kind != procl::BindingKind::phase)
    return false;
  bound_name = path->segments[0];
  return binding.empty() || bound_name == binding;
}

// Ordering rules of the form `A.start_time >= B.end_time` over phase bindings.
void shift_candidates(const Project& project, const Process& process, std::vector<Candidate>& out)
{
  for (const auto& rule : process.rules) {
    if (!rule.mandatory)
      continue;
    const auto* ge = std::get_if<procl::Binary>(&rule.expr->node);
    if (!ge || ge->op != procl::BinaryOp::ge)
      continue;
    std::string later, earlier;
    if (!is_attribute(ge->lhs, {}, "start_time", process, later) ||
        !is_attribute(ge->rhs, {}, "end_time", process, earlier) || later == earlier)
      continue;
    const Phase* succ = unique_phase(project, later);
    const Phase* pred = unique_phase(project, earlier);
    if (!succ || !pred || !pred->end_time || *pred->end_time < 1 || succ->start_time < *pred->end_time)
      continue;
    const std::string rule_name = rule.name;
    out.push_back({MutationKind::shift_phase_start, [=](const Project& src, SplitMix64&) {
                     Project p = src;
                     const Timestamp pred_end = *unique_phase(p, earlier)->end_time;
                     auto succ_it = std::find_if(p.phases.begin(), p.phases.end(),
                                                 [&](const Phase& ph) { return ph.role_label == later; });
                     const Timestamp old = succ_it->start_time;
                     succ_it->start_time = pred_end - 1;
                     std::string what = "moved start of phase '" + later + "' from " + std::to_string(old) + " to " +
                                        std::to_string(pred_end - 1) + ", before '" + earlier + "' ends at " +
                                        std::to_string(pred_end);
                     return MutatedTrace{std::move(p), MutationKind::shift_phase_start,
                                         {ExpectedTarget::Kind::rule, rule_name}, std::move(what)};
                   }});
  }
}

void retrospective_candidates(const Project& project, const Process& process, std::vector<Candidate>& out)
{
  const ProcessRule* rule = process.find_rule(kRetrospectiveRule);
  if (!rule || !rule->mandatory)
    return;
  for (const auto& s : project.sprints) {
    std::vector<std::size_t> retros;
    for (std::size_t i = 0; i < project.meetings.size(); ++i) {
      const auto& m = project.meetings[i];
      if (m.kind == "retrospective" && m.sprint_id == s.id && m.time >= s.start_time && m.time <= s.end_time)
        retros.push_back(i);
    }
    if (retros.size() != 1)
      continue;
    const std::size_t idx = retros.front();
    const std::string sprint_id = s.id;
    out.push_back({MutationKind::delete_retrospective, [=](const Project& src, SplitMix64&) {
                     Project p = src;
                     std::string what = "deleted retrospective meeting '" + p.meetings[idx].id + "' of sprint '" +
                                        sprint_id + "'";
                     p.meetings.erase(p.meetings.begin() + static_cast<std::ptrdiff_t>(idx));
                     return MutatedTrace{std::move(p), MutationKind::delete_retrospective,
                                         {ExpectedTarget::Kind::rule, std::string(kRetrospectiveRule)},
                                         std::move(what)};
                   }});
  }
}

void retarget_candidates(const Project& project, std::vector<Candidate>& out)
{
  bool any = false;
  for (const auto& m : project.milestones)
    any = any || !m.elements.empty();
  if (!any)
    return;
  out.push_back({MutationKind::retarget_increment, [](const Project& src, SplitMix64& rng) {
                   Project p = src;
                   std::vector<std::pair<std::size_t, std::size_t>> slots;
                   for (std::size_t m = 0; m < p.milestones.size(); ++m)
                     for (std::size_t e = 0; e < p.milestones[m].elements.size(); ++e)
                       slots.emplace_back(m, e);
                   const auto [m, e] = slots[rng.uniform(0, static_cast<std::int64_t>(slots.size()) - 1)];
                   const std::string stray = fresh_product_id(p, "stray");
                   p.products.push_back({stray, "Unplanned product", ProductKind::from_label("module"), {}, false});
                   auto& inc = p.milestones[m].elements[e];
                   std::string what = "retargeted increment of '" + inc.product_id + "' in milestone '" +
                                      p.milestones[m].id + "' to non-target product '" + stray + "'";
                   inc.product_id = stray;
                   return MutatedTrace{std::move(p), MutationKind::retarget_increment,
                                       {ExpectedTarget::Kind::invariant, {}, InvariantCode::increment_target},
                                       std::move(what)};
                 }});
}

void undelivered_candidates(const Project& project, std::vector<Candidate>& out)
{
  if (project.work_assignments.empty())
    return;
  out.push_back({MutationKind::undelivered_work, [](const Project& src, SplitMix64& rng) {
                   Project p = src;
                   auto& w = p.work_assignments[rng.uniform(0, static_cast<std::int64_t>(p.work_assignments.size()) - 1)];
                   const std::string orphan = fresh_product_id(p, "orphan");
                   const std::string old = w.product_id;
                   w.product_id = orphan;
                   std::string what =
                       "moved work of '" + w.person_id + "' from '" + old + "' to undelivered product '" + orphan + "'";
                   p.products.push_back({orphan, "Undelivered product", ProductKind::from_label("module"), {}, false});
                   return MutatedTrace{std::move(p), MutationKind::undelivered_work,
                                       {ExpectedTarget::Kind::invariant, {}, InvariantCode::work_delivery},
                                       std::move(what)};
                 }});
}

void swap_candidates(const Project& project, std::vector<Candidate>& out)
{
  if (project.milestones.size() < 2)
    return;
  out.push_back({MutationKind::swap_milestone_due, [](const Project& src, SplitMix64& rng) {
                   Project p = src;
                   const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(p.milestones.size()) - 2));
                   std::swap(p.milestones[i].due_time, p.milestones[i + 1].due_time);
                   std::string what =
                       "swapped due times of milestones '" + p.milestones[i].id + "' and '" + p.milestones[i + 1].id + "'";
                   return MutatedTrace{std::move(p), MutationKind::swap_milestone_due,
                                       {ExpectedTarget::Kind::invariant, {}, InvariantCode::milestone_order},
                                       std::move(what)};
                 }});
}

} // namespace

MutatedTrace mutate_trace(const Project& project, const Process& process, std::uint64_t seed,
                          std::optional<MutationKind> only)
{
  if (!evaluate_process(process, project).satisfied)
    throw MutationError("cannot mutate: project '" + project.name + "' does not conform to process '" + process.name +
                        "'");
  std::vector<Candidate> candidates;
  shift_candidates(project, process, candidates);
  retrospective_candidates(project, process, candidates);
  retarget_candidates(project, candidates);
  undelivered_candidates(project, candidates);
  swap_candidates(project, candidates);
  if (only)
    std::erase_if(candidates, [&](const Candidate& c) { return c.kind != *only; });
  if (candidates.empty())
    throw MutationError(only ? "no applicable mutation of kind '" + std::string(to_string(*only)) + "'"
                             : std::string("no applicable mutation"));

  SplitMix64 rng(seed ^ 0x6D75746174696F6EULL);
  const auto pick = rng.uniform(0, static_cast<std::int64_t>(candidates.size()) - 1);
  return candidates[pick].apply(project, rng);
}

} // namespace setheory
