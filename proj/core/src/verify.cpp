#include "compactum/verify.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "compactum/error.hpp"

namespace compactum {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

PresentationSlice make_slice(const TrianglePresentation& p, std::uint64_t generator_count) {
  PresentationSlice s;
  s.generator_count = generator_count;
  for (const auto& r : p.relations) {
    const auto idx = r.indices();
    if (std::all_of(idx.begin(), idx.end(), [&](auto i) { return i <= generator_count; })) {
      s.relations.push_back(r);
    }
  }
  return s;
}

ElementId relator_image(const GroupOracle& g, const TrianglePresentation& p, std::uint64_t label) {
  const Relation& r = p.relation(label);
  ElementId product = g.identity();
  for (const auto i : r.indices()) {
    const auto it = p.generator_values.find(i);
    if (it == p.generator_values.end()) {
      throw Error(ErrorCode::UnknownRelation,
                  "r_" + std::to_string(label) + " uses g" + std::to_string(i) + " with no value");
    }
    product = g.multiply(product, it->second);
  }
  return product;
}

// ---------------------------------------------------------------------------

namespace {

class Enumerator {
 public:
  Enumerator(const PresentationSlice& s, std::uint64_t max_cosets)
      : cols_(2 * s.generator_count), max_cosets_(max_cosets) {
    for (const auto& r : s.relations) {
      std::vector<std::uint32_t> word;
      for (const auto i : r.indices()) word.push_back(static_cast<std::uint32_t>(2 * (i - 1)));
      relators_.push_back(std::move(word));
    }
  }

  CosetTable run() {
    CosetTable out;
    out.generator_count = cols_ / 2;
    define_first();
    for (std::int32_t c = 0; c < count_ && !overflow_; ++c) {
      if (!live(c)) continue;
      for (const auto& w : relators_) {
        scan_and_fill(c, w);
        if (overflow_ || !live(c)) break;
      }
      if (overflow_ || !live(c)) continue;
      for (std::uint32_t x = 0; x < cols_ && !overflow_; ++x) {
        if (at(c, x) == CosetTable::kUndefined) define(c, x);
      }
    }
    out.cosets_defined = static_cast<std::uint64_t>(count_);
    out.deductions = deductions_;
    if (overflow_) {
      out.status = CosetStatus::Overflowed;
      out.coset_count = static_cast<std::uint64_t>(
          std::count_if(parent_.begin(), parent_.end(),
                        [i = 0](std::int32_t p) mutable { return p == i++; }));
      return out;
    }

    std::vector<std::int32_t> renumber(static_cast<std::size_t>(count_), -1);
    std::int32_t next = 0;
    for (std::int32_t c = 0; c < count_; ++c) {
      if (live(c)) renumber[static_cast<std::size_t>(c)] = next++;
    }
    out.status = CosetStatus::Closed;
    out.coset_count = static_cast<std::uint64_t>(next);
    out.rows.reserve(out.coset_count * cols_);
    for (std::int32_t c = 0; c < count_; ++c) {
      if (!live(c)) continue;
      for (std::uint32_t x = 0; x < cols_; ++x) {
        out.rows.push_back(renumber[static_cast<std::size_t>(rep(at(c, x)))]);
      }
    }
    return out;
  }

 private:
  static std::uint32_t inv(std::uint32_t x) { return x ^ 1u; }

  std::int32_t& at(std::int32_t c, std::uint32_t x) {
    return table_[static_cast<std::size_t>(c) * cols_ + x];
  }
  bool live(std::int32_t c) const { return parent_[static_cast<std::size_t>(c)] == c; }

  void define_first() {
    table_.assign(cols_, CosetTable::kUndefined);
    parent_.push_back(0);
    count_ = 1;
  }

  void define(std::int32_t c, std::uint32_t x) {
    if (static_cast<std::uint64_t>(count_) >= max_cosets_) {
      overflow_ = true;
      return;
    }
    const std::int32_t d = count_++;
    table_.resize(table_.size() + cols_, CosetTable::kUndefined);
    parent_.push_back(d);
    at(c, x) = d;
    at(d, inv(x)) = c;
  }

  void scan_and_fill(std::int32_t alpha, const std::vector<std::uint32_t>& w) {
    const std::size_t r = w.size();
    std::int32_t f = alpha;
    std::int32_t b = alpha;
    std::size_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(r) - 1;
    while (true) {
      while (i < r && at(f, w[i]) != CosetTable::kUndefined) f = at(f, w[i++]);
      if (i == r) {
        if (f != alpha) coincidence(f, alpha);
        return;
      }
      while (j >= static_cast<std::ptrdiff_t>(i) &&
             at(b, inv(w[static_cast<std::size_t>(j)])) != CosetTable::kUndefined) {
        b = at(b, inv(w[static_cast<std::size_t>(j)]));
        --j;
      }
      if (j < static_cast<std::ptrdiff_t>(i)) {
        coincidence(f, b);
        return;
      }
      if (j == static_cast<std::ptrdiff_t>(i)) {
        at(f, w[i]) = b;
        at(b, inv(w[i])) = f;
        ++deductions_;
        return;
      }
      define(f, w[i]);
      if (overflow_) return;
    }
  }

  std::int32_t rep(std::int32_t k) {
    std::int32_t root = k;
    while (parent_[static_cast<std::size_t>(root)] != root) root = parent_[static_cast<std::size_t>(root)];
    while (parent_[static_cast<std::size_t>(k)] != root) {
      const std::int32_t next = parent_[static_cast<std::size_t>(k)];
      parent_[static_cast<std::size_t>(k)] = root;
      k = next;
    }
    return root;
  }

  void merge(std::int32_t k, std::int32_t l) {
    const std::int32_t phi = rep(k);
    const std::int32_t psi = rep(l);
    if (phi == psi) return;
    const std::int32_t mu = std::min(phi, psi);
    const std::int32_t nu = std::max(phi, psi);
    parent_[static_cast<std::size_t>(nu)] = mu;
    queue_.push_back(nu);
  }

  void coincidence(std::int32_t alpha, std::int32_t beta) {
    merge(alpha, beta);
    while (!queue_.empty()) {
      const std::int32_t gamma = queue_.front();
      queue_.pop_front();
      for (std::uint32_t x = 0; x < cols_; ++x) {
        const std::int32_t delta = at(gamma, x);
        if (delta == CosetTable::kUndefined) continue;
        at(delta, inv(x)) = CosetTable::kUndefined;
        const std::int32_t mu = rep(gamma);
        const std::int32_t nu = rep(delta);
        if (at(mu, x) != CosetTable::kUndefined) {
          merge(nu, at(mu, x));
        } else if (at(nu, inv(x)) != CosetTable::kUndefined) {
          merge(mu, at(nu, inv(x)));
        } else {
          at(mu, x) = nu;
          at(nu, inv(x)) = mu;
        }
      }
    }
  }

  std::uint32_t cols_;
  std::uint64_t max_cosets_;
  std::vector<std::vector<std::uint32_t>> relators_;
  std::vector<std::int32_t> table_;
  std::vector<std::int32_t> parent_;
  std::deque<std::int32_t> queue_;
  std::int32_t count_ = 0;
  std::uint64_t deductions_ = 0;
  bool overflow_ = false;
};

}  // namespace

CosetTable coset_enumerate(const PresentationSlice& s, std::uint64_t max_cosets) {
  if (s.generator_count == 0) throw Error(ErrorCode::InvalidSlice, "slice has no generators");
  if (s.generator_count > (1u << 30)) throw Error(ErrorCode::InvalidSlice, "too many generators");
  if (max_cosets == 0) throw Error(ErrorCode::InvalidCount, "max_cosets must be >= 1");
  max_cosets = std::min<std::uint64_t>(max_cosets, INT32_MAX);
  for (const auto& r : s.relations) {
    for (const auto i : r.indices()) {
      if (i == 0 || i > s.generator_count) {
        throw Error(ErrorCode::InvalidSlice, "relation r_" + std::to_string(r.label) +
                                                 " uses g" + std::to_string(i) + " outside the slice");
      }
    }
  }
  return Enumerator(s, max_cosets).run();
}

std::string check_coset_table(const CosetTable& t, const PresentationSlice& s) {
  if (!t.closed()) return "table is not closed";
  const auto n = static_cast<std::int32_t>(t.coset_count);
  for (std::int32_t c = 0; c < n; ++c) {
    for (std::uint64_t x = 0; x < t.columns(); ++x) {
      const auto d = t.act(static_cast<std::uint64_t>(c), x);
      if (d < 0 || d >= n) return "action undefined at coset " + std::to_string(c);
      if (t.act(static_cast<std::uint64_t>(d), x ^ 1u) != c) {
        return "actions not mutually inverse at coset " + std::to_string(c);
      }
    }
    for (const auto& r : s.relations) {
      std::int32_t e = c;
      for (const auto i : r.indices()) e = t.act(static_cast<std::uint64_t>(e), 2 * (i - 1));
      if (e != c) {
        return "relator r_" + std::to_string(r.label) + " does not close at coset " + std::to_string(c);
      }
    }
  }
  return {};
}

// ---------------------------------------------------------------------------

IsoCertificate verify_finite_iso(const GroupPtr& group, const VerifyBudget& budget) {
  const auto order = group->order();
  if (!order) throw Error(ErrorCode::InfiniteGroup, "finite verification requires finite group");

  IsoCertificate cert;
  cert.order_target = *order;
  RelationStream stream(group);
  const std::uint64_t triples = *order * *order;
  std::uint64_t rounds = std::max<std::uint64_t>(triples, 1);

  if (rounds > budget.max_rounds) {
    cert.verdict = Verdict::Inconclusive;
    cert.note = "round budget below q^2";
    return cert;
  }
  while (true) {
    stream.run_until(rounds);
    const TrianglePresentation p = stream.snapshot();
    const PresentationSlice slice = make_slice(p, rounds);
    cert.rounds = rounds;
    cert.generators = rounds;
    cert.relations = slice.relations.size();

    std::set<ElementId> hit;
    for (std::uint64_t n = 1; n <= rounds && hit.size() < *order; ++n) {
      hit.insert(stream.sequence().value(n));
    }
    cert.surjective = hit.size() == *order;
    const auto triples_in_slice = static_cast<std::uint64_t>(
        std::count_if(slice.relations.begin(), slice.relations.end(),
                      [](const Relation& r) { return r.kind == RelationKind::Triple; }));
    if (!cert.surjective || triples_in_slice < triples) {
      if (rounds >= budget.max_rounds) {
        cert.verdict = Verdict::Inconclusive;
        cert.note = "round budget exceeded before the slice covered G";
        return cert;
      }
      rounds = std::min(rounds * 2, budget.max_rounds);
      continue;
    }

    cert.relators_trivial = std::all_of(slice.relations.begin(), slice.relations.end(),
                                        [&](const Relation& r) {
                                          return relator_image(*group, p, r.label) == group->identity();
                                        });
    const CosetTable table = coset_enumerate(slice, budget.max_cosets);
    cert.cosets_defined = table.cosets_defined;
    if (!table.closed()) {
      cert.note = "coset enumeration overflowed at " + std::to_string(budget.max_cosets) + " cosets";
      if (rounds >= budget.max_rounds) {
        cert.verdict = Verdict::Inconclusive;
        return cert;
      }
      rounds = std::min(rounds * 2, budget.max_rounds);
      continue;
    }
    cert.note.clear();
    cert.order_presented = table.coset_count;
    cert.verdict = (table.coset_count == *order && cert.relators_trivial && cert.surjective)
                       ? Verdict::Pass
                       : Verdict::Fail;
    return cert;
  }
}

// ---------------------------------------------------------------------------

std::int64_t graph_betti(const OneComplex& graph) {
  std::vector<std::size_t> parent(graph.vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t components = graph.vertex_count;
  for (const auto& [a, b] : graph.edges) {
    if (a >= graph.vertex_count || b >= graph.vertex_count) {
      throw Error(ErrorCode::InvalidIndex, "edge endpoint out of range");
    }
    const auto ra = find(a);
    const auto rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) {
    throw Error(ErrorCode::Disconnected,
                "graph has " + std::to_string(components) + " components");
  }
  return static_cast<std::int64_t>(graph.edges.size()) -
         static_cast<std::int64_t>(graph.vertex_count) + 1;
}

}  // namespace compactum
