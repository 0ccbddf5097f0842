#include "compactum/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "compactum/error.hpp"

namespace compactum {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw Error(ErrorCode::OutOfRange, "element index overflow");
  }
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw Error(ErrorCode::OutOfRange, "element index overflow");
  }
  return r;
}

std::uint64_t triangular(std::uint64_t s) {
  return s % 2 == 0 ? checked_mul(s / 2, s + 1) : checked_mul(s, (s + 1) / 2);
}

// Largest s with s(s+1)/2 <= x.
std::uint64_t diagonal_of(std::uint64_t x) {
  std::uint64_t lo = 0;
  std::uint64_t hi = 1;
  while (triangular(hi) <= x) hi *= 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (triangular(mid) <= x) lo = mid; else hi = mid;
  }
  return lo;
}

std::string power_label(const char* symbol, std::uint64_t k) {
  if (k == 0) return "";
  if (k == 1) return symbol;
  return std::string(symbol) + "^" + std::to_string(k);
}

// ---------------------------------------------------------------------------

class TableGroup final : public GroupOracle {
 public:
  TableGroup(std::vector<std::uint32_t> table, std::uint64_t order,
             std::vector<std::string> labels)
      : table_(std::move(table)), order_(order), labels_(std::move(labels)) {
    inverse_.assign(order_, 0);
    for (std::uint64_t a = 0; a < order_; ++a) {
      for (std::uint64_t b = 0; b < order_; ++b) {
        if (table_[a * order_ + b] == kIdentity) {
          inverse_[a] = b;
          break;
        }
      }
    }
  }

  std::optional<std::uint64_t> order() const override { return order_; }
  ElementId multiply(ElementId a, ElementId b) const override {
    check(a);
    check(b);
    return table_[a * order_ + b];
  }
  ElementId invert(ElementId a) const override {
    check(a);
    return inverse_[a];
  }
  std::string label(ElementId a) const override {
    check(a);
    return labels_[a];
  }

 private:
  void check(ElementId a) const {
    if (a >= order_) throw Error(ErrorCode::OutOfRange, "element out of range");
  }

  std::vector<std::uint32_t> table_;
  std::uint64_t order_;
  std::vector<std::string> labels_;
  std::vector<ElementId> inverse_;
};

class CyclicGroup final : public GroupOracle {
 public:
  explicit CyclicGroup(std::uint64_t n) : n_(n) {}
  std::optional<std::uint64_t> order() const override { return n_; }
  ElementId multiply(ElementId a, ElementId b) const override {
    check(a);
    check(b);
    return static_cast<ElementId>((static_cast<unsigned __int128>(a) + b) % n_);
  }
  ElementId invert(ElementId a) const override {
    check(a);
    return a == 0 ? 0 : n_ - a;
  }
  std::string label(ElementId a) const override {
    check(a);
    return a == 0 ? "e" : power_label("a", a);
  }

 private:
  void check(ElementId a) const {
    if (a >= n_) throw Error(ErrorCode::OutOfRange, "element out of range");
  }
  std::uint64_t n_;
};

// Z enumerated as 0, 1, -1, 2, -2, ...
class IntegerGroup final : public GroupOracle {
 public:
  static std::int64_t to_int(ElementId a) {
    if (a > static_cast<ElementId>(INT64_MAX)) {
      throw Error(ErrorCode::OutOfRange, "integer element out of range");
    }
    const auto k = static_cast<std::int64_t>((a + 1) / 2);
    return a % 2 == 1 ? k : -k;
  }
  static ElementId from_int(std::int64_t v) {
    if (v == INT64_MIN || v > INT64_MAX / 2 || v < -(INT64_MAX / 2)) {
      throw Error(ErrorCode::OutOfRange, "integer element out of range");
    }
    if (v > 0) return static_cast<ElementId>(2 * v - 1);
    return static_cast<ElementId>(-2 * v);
  }

  std::optional<std::uint64_t> order() const override { return std::nullopt; }
  ElementId multiply(ElementId a, ElementId b) const override {
    std::int64_t s = 0;
    if (__builtin_add_overflow(to_int(a), to_int(b), &s)) {
      throw Error(ErrorCode::OutOfRange, "integer element out of range");
    }
    return from_int(s);
  }
  ElementId invert(ElementId a) const override { return from_int(-to_int(a)); }
  std::string label(ElementId a) const override { return std::to_string(to_int(a)); }
};

// Direct product. Components are folded left; each fold step pairs the
// accumulated index with the next factor's index:
//   finite x finite   -> row-major (left outer)
//   finite x infinite -> right * |left| + left
//   infinite x finite -> left * |right| + right
//   infinite x infinite -> Cantor diagonal, left ascending within a diagonal
class ProductGroup final : public GroupOracle {
 public:
  explicit ProductGroup(std::vector<GroupPtr> factors) : factors_(std::move(factors)) {
    std::optional<std::uint64_t> acc = factors_.front()->order();
    prefix_orders_.push_back(acc);
    for (std::size_t i = 1; i < factors_.size(); ++i) {
      const auto o = factors_[i]->order();
      acc = (acc && o) ? std::optional<std::uint64_t>(checked_mul(*acc, *o)) : std::nullopt;
      prefix_orders_.push_back(acc);
    }
  }

  std::optional<std::uint64_t> order() const override { return prefix_orders_.back(); }

  ElementId multiply(ElementId a, ElementId b) const override {
    auto xa = split(a);
    const auto xb = split(b);
    for (std::size_t i = 0; i < xa.size(); ++i) xa[i] = factors_[i]->multiply(xa[i], xb[i]);
    return join(xa);
  }
  ElementId invert(ElementId a) const override {
    auto xa = split(a);
    for (std::size_t i = 0; i < xa.size(); ++i) xa[i] = factors_[i]->invert(xa[i]);
    return join(xa);
  }
  std::string label(ElementId a) const override {
    const auto xa = split(a);
    std::string out = "(";
    for (std::size_t i = 0; i < xa.size(); ++i) {
      if (i) out += ",";
      out += factors_[i]->label(xa[i]);
    }
    return out + ")";
  }

 private:
  static ElementId pair(ElementId left, std::optional<std::uint64_t> left_order,
                        ElementId right, std::optional<std::uint64_t> right_order) {
    if (right_order && left_order) return checked_add(checked_mul(left, *right_order), right);
    if (left_order) return checked_add(checked_mul(right, *left_order), left);
    if (right_order) return checked_add(checked_mul(left, *right_order), right);
    return checked_add(triangular(checked_add(left, right)), left);
  }

  static std::pair<ElementId, ElementId> unpair(ElementId x,
                                                std::optional<std::uint64_t> left_order,
                                                std::optional<std::uint64_t> right_order) {
    if (right_order && left_order) return {x / *right_order, x % *right_order};
    if (left_order) return {x % *left_order, x / *left_order};
    if (right_order) return {x / *right_order, x % *right_order};
    const std::uint64_t s = diagonal_of(x);
    const std::uint64_t left = x - triangular(s);
    return {left, s - left};
  }

  std::vector<ElementId> split(ElementId x) const {
    if (const auto o = order(); o && x >= *o) {
      throw Error(ErrorCode::OutOfRange, "element out of range");
    }
    std::vector<ElementId> parts(factors_.size());
    for (std::size_t i = factors_.size() - 1; i > 0; --i) {
      const auto [left, right] = unpair(x, prefix_orders_[i - 1], factors_[i]->order());
      parts[i] = right;
      x = left;
    }
    parts[0] = x;
    return parts;
  }

  ElementId join(const std::vector<ElementId>& parts) const {
    ElementId x = parts[0];
    for (std::size_t i = 1; i < parts.size(); ++i) {
      x = pair(x, prefix_orders_[i - 1], parts[i], factors_[i]->order());
    }
    return x;
  }

  std::vector<GroupPtr> factors_;
  std::vector<std::optional<std::uint64_t>> prefix_orders_;
};

// ---------------------------------------------------------------------------

std::string cycle_label(const std::vector<std::uint32_t>& perm) {
  std::string out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start) continue;
    out += "(";
    std::size_t p = start;
    bool first = true;
    while (!seen[p]) {
      seen[p] = true;
      if (!first) out += ",";
      out += std::to_string(p + 1);
      first = false;
      p = perm[p];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

// (a*b)(x) = b(a(x)): apply a first.
std::shared_ptr<TableGroup> symmetric_group(std::uint64_t n) {
  std::vector<std::vector<std::uint32_t>> perms;
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    perms.push_back(p);
    if (perms.size() > kMaxTableOrder) {
      throw Error(ErrorCode::OutOfRange, "symmetric group too large for a table");
    }
  } while (std::next_permutation(p.begin(), p.end()));

  const std::uint64_t order = perms.size();
  auto index_of = [&](const std::vector<std::uint32_t>& x) {
    return static_cast<std::uint32_t>(
        std::lower_bound(perms.begin(), perms.end(), x) - perms.begin());
  };
  std::vector<std::uint32_t> table(order * order);
  std::vector<std::uint32_t> prod(n);
  for (std::uint64_t a = 0; a < order; ++a) {
    for (std::uint64_t b = 0; b < order; ++b) {
      for (std::uint64_t x = 0; x < n; ++x) prod[x] = perms[b][perms[a][x]];
      table[a * order + b] = index_of(prod);
    }
  }
  std::vector<std::string> labels;
  for (const auto& perm : perms) labels.push_back(cycle_label(perm));
  return std::make_shared<TableGroup>(std::move(table), order, std::move(labels));
}

// Element f*n + k is r^k s^f, with s r s = r^-1.
std::shared_ptr<TableGroup> dihedral_group(std::uint64_t n) {
  const std::uint64_t order = 2 * n;
  if (order > kMaxTableOrder) {
    throw Error(ErrorCode::OutOfRange, "dihedral group too large for a table");
  }
  std::vector<std::uint32_t> table(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    for (std::uint64_t b = 0; b < order; ++b) {
      const std::uint64_t ka = a % n, fa = a / n, kb = b % n, fb = b / n;
      const std::uint64_t k = fa == 0 ? (ka + kb) % n : (ka + n - kb) % n;
      table[a * order + b] = static_cast<std::uint32_t>(((fa + fb) % 2) * n + k);
    }
  }
  std::vector<std::string> labels;
  for (std::uint64_t a = 0; a < order; ++a) {
    const std::uint64_t k = a % n, f = a / n;
    std::string s = power_label("r", k) + (f ? "s" : "");
    labels.push_back(s.empty() ? "e" : s);
  }
  return std::make_shared<TableGroup>(std::move(table), order, std::move(labels));
}

// 1, -1, i, -i, j, -j, k, -k
std::shared_ptr<TableGroup> quaternion_group() {
  // unit quaternion basis products: basis index 0=1, 1=i, 2=j, 3=k
  static constexpr int kBasis[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<std::uint32_t> table(64);
  for (std::uint32_t a = 0; a < 8; ++a) {
    for (std::uint32_t b = 0; b < 8; ++b) {
      const int ua = static_cast<int>(a / 2), ub = static_cast<int>(b / 2);
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * kSign[ua][ub];
      table[a * 8 + b] = static_cast<std::uint32_t>(2 * kBasis[ua][ub] + (sign < 0 ? 1 : 0));
    }
  }
  return std::make_shared<TableGroup>(
      std::move(table), 8,
      std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

std::shared_ptr<TableGroup> table_group(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::uint64_t order = rows.size();
  if (order == 0 || order > kMaxTableOrder) {
    throw Error(ErrorCode::MalformedTable, "table order must be in 1.." +
                                               std::to_string(kMaxTableOrder));
  }
  std::vector<std::uint32_t> table(order * order);
  for (std::uint64_t a = 0; a < order; ++a) {
    if (rows[a].size() != order) {
      throw Error(ErrorCode::MalformedTable,
                  "row " + std::to_string(a) + " has " + std::to_string(rows[a].size()) +
                      " entries, expected " + std::to_string(order));
    }
    for (std::uint64_t b = 0; b < order; ++b) {
      const auto v = rows[a][b];
      if (v < 0 || static_cast<std::uint64_t>(v) >= order) {
        throw Error(ErrorCode::MalformedTable, "entry (" + std::to_string(a) + "," +
                                                   std::to_string(b) + ") out of range");
      }
      table[a * order + b] = static_cast<std::uint32_t>(v);
    }
  }
  auto at = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t { return table[a * order + b]; };

  for (std::uint64_t a = 0; a < order; ++a) {
    if (at(0, a) != a || at(a, 0) != a) {
      throw Error(ErrorCode::NoIdentity, "element 0 is not a two-sided identity");
    }
  }
  for (std::uint64_t a = 0; a < order; ++a) {
    bool found = false;
    for (std::uint64_t b = 0; b < order && !found; ++b) found = at(a, b) == 0 && at(b, a) == 0;
    if (!found) {
      throw Error(ErrorCode::MissingInverse, "element " + std::to_string(a) + " has no inverse");
    }
  }

  // Light's test: (x s) y = x (s y) for all x, y and s in a magma generating
  // set implies associativity.
  std::vector<std::uint64_t> gens;
  std::vector<bool> reached(order, false);
  std::vector<std::uint64_t> closure;
  auto absorb = [&](std::uint64_t g) {
    gens.push_back(g);
    if (!reached[g]) {
      reached[g] = true;
      closure.push_back(g);
    }
    // close under multiplication
    for (std::size_t i = 0; i < closure.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        for (const auto p : {at(closure[i], closure[j]), at(closure[j], closure[i])}) {
          if (!reached[p]) {
            reached[p] = true;
            closure.push_back(p);
          }
        }
      }
    }
  };
  for (std::uint64_t g = 0; g < order; ++g) {
    if (!reached[g]) absorb(g);
  }
  for (const auto s : gens) {
    for (std::uint64_t x = 0; x < order; ++x) {
      for (std::uint64_t y = 0; y < order; ++y) {
        if (at(at(x, s), y) != at(x, at(s, y))) {
          throw Error(ErrorCode::NonAssociativeTable,
                      "(" + std::to_string(x) + "*" + std::to_string(s) + ")*" +
                          std::to_string(y) + " != " + std::to_string(x) + "*(" +
                          std::to_string(s) + "*" + std::to_string(y) + ")");
        }
      }
    }
  }

  std::vector<std::string> labels;
  for (std::uint64_t a = 0; a < order; ++a) labels.push_back(std::to_string(a));
  return std::make_shared<TableGroup>(std::move(table), order, std::move(labels));
}

}  // namespace

ElementId GroupOracle::enumerate(std::uint64_t index) const {
  if (!contains(index)) throw Error(ErrorCode::OutOfRange, "enumeration index out of range");
  return index;
}

bool GroupOracle::contains(ElementId a) const {
  const auto o = order();
  return !o || a < *o;
}

GroupPtr make_group(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::Table:
      return table_group(spec.table);
    case GroupKind::Cyclic:
      if (spec.n == 0) throw Error(ErrorCode::ValidationError, "cyclic group needs n >= 1");
      return std::make_shared<CyclicGroup>(spec.n);
    case GroupKind::Symmetric:
      if (spec.n == 0) throw Error(ErrorCode::ValidationError, "symmetric group needs n >= 1");
      return symmetric_group(spec.n);
    case GroupKind::Dihedral:
      if (spec.n == 0) throw Error(ErrorCode::ValidationError, "dihedral group needs n >= 1");
      return dihedral_group(spec.n);
    case GroupKind::Quaternion8:
      return quaternion_group();
    case GroupKind::Integers:
      return std::make_shared<IntegerGroup>();
    case GroupKind::Product: {
      if (spec.factors.empty()) {
        throw Error(ErrorCode::ValidationError, "product needs at least one factor");
      }
      std::vector<GroupPtr> factors;
      for (const auto& f : spec.factors) factors.push_back(make_group(f));
      if (factors.size() == 1) return factors.front();
      return std::make_shared<ProductGroup>(std::move(factors));
    }
  }
  throw Error(ErrorCode::UnknownGroupKind, "unknown group kind");
}

std::string check_group_axioms(const GroupOracle& g, std::uint64_t samples) {
  const auto order = g.order();
  std::vector<ElementId> pool;
  const bool exhaustive = order && *order <= 12;
  const std::uint64_t count = exhaustive ? *order : (order ? std::min(*order, samples) : samples);
  for (std::uint64_t i = 0; i < count; ++i) pool.push_back(g.enumerate(i));
  // sample a few far-out elements as well
  if (!exhaustive && order && *order > count) pool.push_back(g.enumerate(*order - 1));

  std::ostringstream err;
  for (const auto a : pool) {
    if (g.multiply(g.identity(), a) != a || g.multiply(a, g.identity()) != a) {
      err << "identity law fails at " << g.label(a);
      return err.str();
    }
    if (g.multiply(a, g.invert(a)) != g.identity() || g.multiply(g.invert(a), a) != g.identity()) {
      err << "inverse law fails at " << g.label(a);
      return err.str();
    }
  }
  for (const auto a : pool) {
    for (const auto b : pool) {
      for (const auto c : pool) {
        if (g.multiply(g.multiply(a, b), c) != g.multiply(a, g.multiply(b, c))) {
          err << "associativity fails at (" << g.label(a) << ", " << g.label(b) << ", "
              << g.label(c) << ")";
          return err.str();
        }
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

std::uint64_t GeneratorSequence::block_length(std::uint64_t k) const {
  return order_ ? std::min(k, *order_) : k;
}

std::uint64_t GeneratorSequence::block_start(std::uint64_t k) const {
  if (k == 0) throw Error(ErrorCode::InvalidIndex, "blocks are numbered from 1");
  const std::uint64_t before = k - 1;
  if (!order_ || before <= *order_) return triangular(before);
  return checked_add(triangular(*order_), checked_mul(before - *order_, *order_));
}

std::uint64_t GeneratorSequence::block_of(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::InvalidIndex, "generator indices start at 1");
  // largest k with block_start(k) < n
  std::uint64_t lo = 1;
  std::uint64_t hi = 2;
  while (block_start(hi) < n) hi *= 2;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (block_start(mid) < n) lo = mid; else hi = mid;
  }
  return lo;
}

ElementId GeneratorSequence::value(std::uint64_t n) const {
  const std::uint64_t k = block_of(n);
  return n - block_start(k) - 1;
}

std::uint64_t GeneratorSequence::first_block_after(ElementId e, std::uint64_t bound) const {
  if (order_ && e >= *order_) throw Error(ErrorCode::OutOfRange, "element out of range");
  std::uint64_t lo = e + 1;
  if (position(e, lo) > bound) return lo;
  std::uint64_t hi = lo + 1;
  while (position(e, hi) <= bound) hi = lo + 2 * (hi - lo);
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (position(e, mid) > bound) hi = mid; else lo = mid;
  }
  return hi;
}

std::vector<ElementId> generator_sequence(const GroupOracle& g, std::uint64_t count) {
  if (count == 0) throw Error(ErrorCode::InvalidCount, "sequence length must be >= 1");
  const GeneratorSequence seq(g);
  std::vector<ElementId> out;
  out.reserve(count);
  for (std::uint64_t k = 1; out.size() < count; ++k) {
    const std::uint64_t len = seq.block_length(k);
    for (std::uint64_t e = 0; e < len && out.size() < count; ++e) out.push_back(g.enumerate(e));
  }
  return out;
}

std::optional<std::pair<ElementId, ElementId>> identity_pair(const GroupOracle& g,
                                                              std::uint64_t i) {
  if (i == 0) throw Error(ErrorCode::InvalidIndex, "identities are numbered from 1");
  const std::uint64_t x = i - 1;
  if (const auto o = g.order()) {
    if (x / *o >= *o) return std::nullopt;
    return std::pair{x / *o, x % *o};
  }
  const std::uint64_t s = diagonal_of(x);
  const std::uint64_t a = x - triangular(s);
  return std::pair{a, s - a};
}

}  // namespace compactum
