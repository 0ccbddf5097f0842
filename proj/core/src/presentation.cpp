#include "compactum/presentation.hpp"

#include <algorithm>
#include <unordered_map>

#include "compactum/error.hpp"

namespace compactum {

std::string to_string(RelationKind kind) {
  switch (kind) {
    case RelationKind::Unit: return "unit";
    case RelationKind::Pair: return "pair";
    case RelationKind::Triple: return "triple";
  }
  return "?";
}

const Relation& TrianglePresentation::relation(std::uint64_t label) const {
  if (label == 0 || label > relations.size() || relations[label - 1].label != label) {
    const auto it = std::find_if(relations.begin(), relations.end(),
                                 [&](const Relation& r) { return r.label == label; });
    if (it == relations.end()) {
      throw Error(ErrorCode::UnknownRelation, "no relation r_" + std::to_string(label));
    }
    return *it;
  }
  return relations[label - 1];
}

std::uint64_t TrianglePresentation::max_generator() const {
  std::uint64_t n = 0;
  for (const auto& r : relations) {
    for (const auto i : r.indices()) n = std::max(n, i);
  }
  return n;
}

// ---------------------------------------------------------------------------

std::uint64_t RelationStream::Pool::take(const GeneratorSequence& seq, ElementId v,
                                         std::uint64_t bound) {
  auto [front, inserted] = frontier_.try_emplace(v, v + 1);
  std::uint64_t k = std::max(seq.first_block_after(v, bound), front->second);
  while (taken_.contains(seq.position(v, k))) ++k;
  const std::uint64_t pos = seq.position(v, k);
  taken_.insert(pos);
  while (taken_.contains(seq.position(v, front->second))) ++front->second;
  return pos;
}

RelationStream::RelationStream(GroupPtr group)
    : group_(std::move(group)), sequence_(*group_) {}

void RelationStream::emit(Relation r) {
  r.label = relations_.size() + 1;
  for (const auto i : r.indices()) {
    if (occurrences_.size() <= i) occurrences_.resize(i + 1);
    occurrences_[i].push_back(r.label);
  }
  relations_.push_back(r);
}

void RelationStream::run_round() {
  const std::uint64_t i = rounds_ + 1;
  const ElementId v = sequence_.value(i);
  if (v == group_->identity()) emit(Relation::unit(0, i));

  const std::uint64_t j = pair_targets_.take(sequence_, group_->invert(v), i);
  emit(Relation::pair(0, i, j));

  if (const auto id = identity_pair(*group_, i)) {
    const auto [a, b] = *id;
    const ElementId c_inv = group_->invert(group_->multiply(a, b));
    const std::uint64_t first = triple_members_.take(sequence_, a, 0);
    const std::uint64_t second = triple_members_.take(sequence_, b, first);
    const std::uint64_t third = triple_members_.take(sequence_, c_inv, second);
    emit(Relation::triple(0, first, second, third));
  }
  rounds_ = i;
}

void RelationStream::run_until(std::uint64_t rounds) {
  while (rounds_ < rounds) run_round();
}

std::span<const std::uint64_t> RelationStream::occurrences(std::uint64_t n) const {
  if (n >= occurrences_.size()) return {};
  return occurrences_[n];
}

bool RelationStream::in_triple(std::uint64_t n) const { return triple_members_.taken(n); }

bool RelationStream::settled(std::uint64_t n) const {
  if (rounds_ < n) return false;
  if (in_triple(n)) return true;
  const auto order = group_->order();
  // a finite group has exactly q^2 identities, so no triple follows round q^2
  return order && static_cast<unsigned __int128>(rounds_) >=
                      static_cast<unsigned __int128>(*order) * *order;
}

TrianglePresentation RelationStream::snapshot() const {
  TrianglePresentation p;
  p.relations = relations_;
  p.rounds_completed = rounds_;
  for (const auto& r : relations_) {
    for (const auto i : r.indices()) {
      p.generator_values.try_emplace(i, sequence_.value(i));
      if (r.kind == RelationKind::Triple) p.type3_used.insert(i);
    }
  }
  return p;
}

TrianglePresentation RelationStream::first_relations(std::uint64_t count) {
  while (relations_.size() < count) run_round();
  TrianglePresentation p;
  p.rounds_completed = rounds_;
  p.relations.assign(relations_.begin(), relations_.begin() + static_cast<std::ptrdiff_t>(count));
  for (const auto& r : p.relations) {
    for (const auto i : r.indices()) {
      p.generator_values.try_emplace(i, sequence_.value(i));
      if (r.kind == RelationKind::Triple) p.type3_used.insert(i);
    }
  }
  return p;
}

TrianglePresentation build_presentation(const GroupPtr& group, std::uint64_t rounds) {
  if (rounds == 0) throw Error(ErrorCode::InvalidRounds, "rounds must be >= 1");
  RelationStream stream(group);
  stream.run_until(rounds);
  return stream.snapshot();
}

// ---------------------------------------------------------------------------

std::uint64_t MFunction::operator()(std::uint64_t n) const {
  if (n == 0 || n > values.size()) {
    throw Error(ErrorCode::UncertifiedM, "m(" + std::to_string(n) + ") not certified");
  }
  return values[n - 1];
}

namespace {

std::uint64_t m_from(const RelationStream& stream, std::uint64_t n) {
  const auto occ = stream.occurrences(n);
  return occ.empty() ? 1 : occ.back();
}

void advance_or_throw(RelationStream& stream, std::uint64_t max_rounds, std::uint64_t n) {
  if (stream.rounds_completed() >= max_rounds) {
    throw Error(ErrorCode::HorizonExceeded,
                "m(" + std::to_string(n) + ") not certified within " +
                    std::to_string(max_rounds) + " rounds");
  }
  stream.run_round();
}

}  // namespace

std::uint64_t m_of(const GroupPtr& group, std::uint64_t n, std::uint64_t max_rounds) {
  if (n == 0) throw Error(ErrorCode::InvalidIndex, "generator indices start at 1");
  RelationStream stream(group);
  while (!stream.settled(n)) advance_or_throw(stream, max_rounds, n);
  return m_from(stream, n);
}

MFunction compute_m(const GroupPtr& group, std::uint64_t count, std::uint64_t max_rounds) {
  RelationStream stream(group);
  MFunction m;
  for (std::uint64_t n = 1; n <= count; ++n) {
    while (!stream.settled(n)) advance_or_throw(stream, max_rounds, n);
  }
  for (std::uint64_t n = 1; n <= count; ++n) m.values.push_back(m_from(stream, n));
  m.horizon = stream.rounds_completed();
  return m;
}

// ---------------------------------------------------------------------------

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const CheckResult& ValidationReport::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw Error(ErrorCode::InvalidIndex, "no check named " + name);
}

namespace {

std::string describe(const Relation& r) {
  std::string s = "r_" + std::to_string(r.label) + " = (";
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k) s += ",";
    s += "g" + std::to_string(r.idx[k]);
  }
  return s + ")";
}

void fail_once(CheckResult& c, const std::string& why) {
  if (!c.passed) return;
  c.passed = false;
  c.counterexample = why;
}

}  // namespace

ValidationReport validate_presentation(const TrianglePresentation& p, const GroupOracle& g,
                                       const MFunction* m) {
  CheckResult form{"form", true, ""};
  CheckResult labels{"labels", true, ""};
  CheckResult values{"values", true, ""};
  CheckResult occurrence{"occurrence<=4", true, ""};
  CheckResult triple{"triple<=1", true, ""};
  CheckResult relator{"relator", true, ""};
  CheckResult incidence{"incidence", true, ""};

  std::unordered_map<std::uint64_t, int> seen;
  std::unordered_map<std::uint64_t, int> seen_triple;
  std::set<std::uint64_t> triple_indices;

  for (std::size_t pos = 0; pos < p.relations.size(); ++pos) {
    const Relation& r = p.relations[pos];
    if (r.label != pos + 1) {
      fail_once(labels, describe(r) + " at position " + std::to_string(pos + 1));
    }
    const auto idx = r.indices();
    bool ok = idx.front() >= 1;
    for (std::size_t k = 1; k < idx.size(); ++k) ok = ok && idx[k - 1] < idx[k];
    for (std::size_t k = idx.size(); k < 3; ++k) ok = ok && r.idx[k] == 0;
    if (!ok) fail_once(form, describe(r) + " is not strictly increasing");

    bool known = true;
    ElementId product = g.identity();
    for (const auto i : idx) {
      if (++seen[i] == 5) fail_once(occurrence, "g" + std::to_string(i) + " in a fifth relation " + describe(r));
      if (r.kind == RelationKind::Triple) {
        triple_indices.insert(i);
        if (++seen_triple[i] == 2) fail_once(triple, "g" + std::to_string(i) + " in a second triple " + describe(r));
      }
      const auto it = p.generator_values.find(i);
      if (it == p.generator_values.end() || !g.contains(it->second)) {
        fail_once(values, "g" + std::to_string(i) + " has no valid value");
        known = false;
        continue;
      }
      product = g.multiply(product, it->second);
      if (m != nullptr) {
        if (i > m->count()) {
          fail_once(incidence, "m(" + std::to_string(i) + ") not certified");
        } else if ((*m)(i) < r.label) {
          fail_once(incidence, "m(" + std::to_string(i) + ") = " + std::to_string((*m)(i)) +
                                   " < " + std::to_string(r.label));
        }
      }
    }
    if (known && product != g.identity()) {
      fail_once(relator, describe(r) + " evaluates to " + g.label(product));
    }
  }
  if (triple_indices != p.type3_used) {
    fail_once(triple, "type3_used disagrees with the triple relations");
  }

  ValidationReport report;
  report.checks = {form, labels, values, occurrence, triple, relator};
  if (m != nullptr) report.checks.push_back(incidence);
  return report;
}

}  // namespace compactum
