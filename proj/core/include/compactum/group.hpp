#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace compactum {

/// Elements are identified by their enumeration index, so the identity is
/// always element 0 and `enumerate(i) == i` on the valid range.
using ElementId = std::uint64_t;

inline constexpr ElementId kIdentity = 0;

enum class GroupKind { Table, Cyclic, Symmetric, Dihedral, Quaternion8, Integers, Product };

/// Declarative description of a catalog group or an explicit Cayley table.
struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  std::uint64_t n = 1;                           // cyclic / symmetric / dihedral
  std::vector<std::vector<std::int64_t>> table;  // kind == Table, identity at 0
  std::vector<GroupSpec> factors;                // kind == Product

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// A countable group given by element enumeration and its operations.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  /// Number of elements, or nullopt for an infinite group.
  virtual std::optional<std::uint64_t> order() const = 0;
  virtual ElementId multiply(ElementId a, ElementId b) const = 0;
  virtual ElementId invert(ElementId a) const = 0;
  virtual std::string label(ElementId a) const = 0;

  bool is_finite() const { return order().has_value(); }
  ElementId identity() const { return kIdentity; }

  /// Element with enumeration index `index`; throws OutOfRange past the order.
  ElementId enumerate(std::uint64_t index) const;
  bool contains(ElementId a) const;
};

using GroupPtr = std::shared_ptr<const GroupOracle>;

/// Instantiates a validated oracle. Table specs are checked eagerly for
/// shape, two-sided identity at 0, inverses, and associativity.
GroupPtr make_group(const GroupSpec& spec);

/// Finite groups larger than this are rejected for table-backed kinds.
inline constexpr std::uint64_t kMaxTableOrder = 2048;

/// Sampled (exhaustive for order <= 12) check of the oracle axioms.
/// Returns an empty string on success, else a description of the first failure.
std::string check_group_axioms(const GroupOracle& g, std::uint64_t samples = 24);

/// The sequence (g_n) in which block k lists the first min(k, |G|) elements
/// in enumeration order; every element recurs once per block from block e+1 on.
class GeneratorSequence {
 public:
  explicit GeneratorSequence(std::optional<std::uint64_t> order) : order_(order) {}
  explicit GeneratorSequence(const GroupOracle& g) : order_(g.order()) {}

  /// Value of g_n, n >= 1.
  ElementId value(std::uint64_t n) const;

  /// Number of terms before block k (k >= 1).
  std::uint64_t block_start(std::uint64_t k) const;
  std::uint64_t block_length(std::uint64_t k) const;
  /// Block containing position n.
  std::uint64_t block_of(std::uint64_t n) const;

  /// Position of `e` inside block k; requires k >= e + 1.
  std::uint64_t position(ElementId e, std::uint64_t k) const {
    return block_start(k) + e + 1;
  }
  /// Smallest block k whose occurrence of `e` lies strictly after `bound`.
  std::uint64_t first_block_after(ElementId e, std::uint64_t bound) const;

  /// How many times `e` occurs among the first k blocks.
  static std::uint64_t count_in_blocks(ElementId e, std::uint64_t k) {
    return k > e ? k - e : 0;
  }

  std::optional<std::uint64_t> order() const { return order_; }

 private:
  std::optional<std::uint64_t> order_;
};

/// First `count` terms g_1..g_count. Throws InvalidCount when count == 0.
std::vector<ElementId> generator_sequence(const GroupOracle& g, std::uint64_t count);

/// The i-th (1-based) pair (a, b) of the identity stream: row-major over the
/// table for finite groups, Cantor diagonal (a ascending) for infinite ones.
/// Returns nullopt past the last identity of a finite group.
std::optional<std::pair<ElementId, ElementId>> identity_pair(const GroupOracle& g,
                                                              std::uint64_t i);

}  // namespace compactum
