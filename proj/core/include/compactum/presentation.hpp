#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "compactum/group.hpp"

namespace compactum {

enum class RelationKind { Unit, Pair, Triple };

/// A relator g_i, g_i g_j or g_i g_j g_k over 1-based generator indices.
struct Relation {
  std::uint64_t label = 0;  // n in r_n
  RelationKind kind = RelationKind::Unit;
  std::array<std::uint64_t, 3> idx{};

  static Relation unit(std::uint64_t label, std::uint64_t i) {
    return {label, RelationKind::Unit, {i, 0, 0}};
  }
  static Relation pair(std::uint64_t label, std::uint64_t i, std::uint64_t j) {
    return {label, RelationKind::Pair, {i, j, 0}};
  }
  static Relation triple(std::uint64_t label, std::uint64_t i, std::uint64_t j, std::uint64_t k) {
    return {label, RelationKind::Triple, {i, j, k}};
  }

  std::size_t size() const { return static_cast<std::size_t>(kind) + 1; }
  std::span<const std::uint64_t> indices() const { return {idx.data(), size()}; }

  friend bool operator==(const Relation&, const Relation&) = default;
};

struct TrianglePresentation {
  /// Value of every generator index referenced by a relation.
  std::map<std::uint64_t, ElementId> generator_values;
  /// r_1..r_R in label order.
  std::vector<Relation> relations;
  std::set<std::uint64_t> type3_used;
  std::uint64_t rounds_completed = 0;

  const Relation& relation(std::uint64_t label) const;
  std::uint64_t max_generator() const;

  friend bool operator==(const TrianglePresentation&, const TrianglePresentation&) = default;
};

/// Deterministic relation stream. Round i emits, in order:
///   1. (g_i) when g_i is the identity;
///   2. (g_i, g_j) for the least j > i with g_j = g_i^-1 not yet used as a pair target;
///   3. when the i-th identity ab = c exists, (g_i', g_j', g_k') with i' < j' < k'
///      the least indices not yet in a triple whose values are a, b, c^-1.
/// The stream is append-only: running more rounds never rewrites earlier labels.
class RelationStream {
 public:
  explicit RelationStream(GroupPtr group);

  void run_round();
  void run_until(std::uint64_t rounds);

  const GroupOracle& group() const { return *group_; }
  const GeneratorSequence& sequence() const { return sequence_; }
  std::uint64_t rounds_completed() const { return rounds_; }
  const std::vector<Relation>& relations() const { return relations_; }

  /// Labels of relations containing g_n, ascending.
  std::span<const std::uint64_t> occurrences(std::uint64_t n) const;
  bool in_triple(std::uint64_t n) const;

  /// True once no future round can add g_n to a relation.
  bool settled(std::uint64_t n) const;

  /// Presentation of everything emitted so far.
  TrianglePresentation snapshot() const;
  /// Presentation of r_1..r_count only; runs rounds as needed.
  TrianglePresentation first_relations(std::uint64_t count);

 private:
  // Occurrences of each element are consumed in block order; `take` returns
  // the least untaken position with value `v` strictly after `bound`.
  class Pool {
   public:
    std::uint64_t take(const GeneratorSequence& seq, ElementId v, std::uint64_t bound);
    bool taken(std::uint64_t pos) const { return taken_.contains(pos); }

   private:
    std::set<std::uint64_t> taken_;
    std::map<ElementId, std::uint64_t> frontier_;  // all earlier blocks fully taken
  };

  void emit(Relation r);

  GroupPtr group_;
  GeneratorSequence sequence_;
  std::uint64_t rounds_ = 0;
  std::vector<Relation> relations_;
  std::vector<std::vector<std::uint64_t>> occurrences_;  // by generator index
  Pool pair_targets_;
  Pool triple_members_;
};

/// Emits rounds 1..rounds. Throws InvalidRounds when rounds == 0.
TrianglePresentation build_presentation(const GroupPtr& group, std::uint64_t rounds);

inline constexpr std::uint64_t kDefaultMHorizon = 1'000'000;

/// m(n): the largest relation label containing g_n (1 when there is none),
/// certified by simulating the stream until g_n is settled.
struct MFunction {
  std::vector<std::uint64_t> values;  // values[n - 1] = m(n)
  std::uint64_t horizon = 0;          // rounds simulated to certify

  std::uint64_t count() const { return values.size(); }
  std::uint64_t operator()(std::uint64_t n) const;
};

/// Throws HorizonExceeded when certification needs more than `max_rounds`.
std::uint64_t m_of(const GroupPtr& group, std::uint64_t n,
                   std::uint64_t max_rounds = kDefaultMHorizon);

/// m(1)..m(count) from a single stream run.
MFunction compute_m(const GroupPtr& group, std::uint64_t count,
                    std::uint64_t max_rounds = kDefaultMHorizon);

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string counterexample;
};

struct ValidationReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  const CheckResult& check(const std::string& name) const;
};

/// Form, occurrence bounds and relator laws. The incidence law m(i) >= n is
/// checked only when `m` is supplied and covers the referenced indices.
ValidationReport validate_presentation(const TrianglePresentation& p, const GroupOracle& g,
                                       const MFunction* m = nullptr);

std::string to_string(RelationKind kind);

}  // namespace compactum
