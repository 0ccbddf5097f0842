#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compactum/group.hpp"
#include "compactum/presentation.hpp"

namespace compactum {

/// Generators g_1..g_N and the relations whose indices are all <= N.
struct PresentationSlice {
  std::uint64_t generator_count = 0;
  std::vector<Relation> relations;  // source labels retained
};

PresentationSlice make_slice(const TrianglePresentation& p, std::uint64_t generator_count);

/// Product of the generator values of r_label, in order.
ElementId relator_image(const GroupOracle& g, const TrianglePresentation& p, std::uint64_t label);

enum class CosetStatus { Closed, Overflowed };

/// Coset table over the trivial subgroup. Column 2(n-1) is the action of
/// g_n and column 2(n-1)+1 the action of its formal inverse. On a closed
/// table live cosets are renumbered 0..order-1 in definition order.
class CosetTable {
 public:
  static constexpr std::int32_t kUndefined = -1;

  CosetStatus status = CosetStatus::Overflowed;
  std::uint64_t generator_count = 0;
  std::uint64_t coset_count = 0;     // live cosets (the group order when closed)
  std::uint64_t cosets_defined = 0;  // total definitions, including dead cosets
  std::uint64_t deductions = 0;
  std::vector<std::int32_t> rows;    // coset_count x columns(), closed tables only

  std::uint64_t columns() const { return 2 * generator_count; }
  std::int32_t act(std::uint64_t coset, std::uint64_t column) const {
    return rows[coset * columns() + column];
  }
  bool closed() const { return status == CosetStatus::Closed; }
};

inline constexpr std::uint64_t kDefaultMaxCosets = 100'000;

/// HLT enumeration, lookahead off, relators scanned in label order.
/// Throws InvalidSlice for an empty generator set or out-of-range indices.
CosetTable coset_enumerate(const PresentationSlice& s, std::uint64_t max_cosets = kDefaultMaxCosets);

/// Total, mutually inverse actions on which every relator closes at every coset.
/// Empty string when the table is consistent.
std::string check_coset_table(const CosetTable& t, const PresentationSlice& s);

enum class Verdict { Pass, Fail, Inconclusive };

struct VerifyBudget {
  std::uint64_t max_cosets = kDefaultMaxCosets;
  std::uint64_t max_rounds = 1u << 14;
};

struct IsoCertificate {
  std::optional<std::uint64_t> order_presented;
  std::uint64_t order_target = 0;
  bool surjective = false;
  bool relators_trivial = false;
  Verdict verdict = Verdict::Inconclusive;
  std::uint64_t rounds = 0;
  std::uint64_t generators = 0;
  std::uint64_t relations = 0;
  std::uint64_t cosets_defined = 0;
  std::string note;
};

/// Grows the stream by doubling from q^2 rounds until the slice on N = R
/// generators covers every element and every triple, then enumerates cosets;
/// overflow doubles again. Pass requires closure at order q with all relator
/// images trivial. Throws InfiniteGroup for infinite oracles.
IsoCertificate verify_finite_iso(const GroupPtr& group, const VerifyBudget& budget = {});

std::string to_string(Verdict v);

/// Vertex/edge census of a graph.
struct OneComplex {
  std::size_t vertex_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// E - V + 1 for a connected graph; throws Disconnected otherwise.
std::int64_t graph_betti(const OneComplex& graph);

}  // namespace compactum
