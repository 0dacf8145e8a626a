#include "cgw/tsys.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <boost/pending/disjoint_sets.hpp>

#include "cgw/error.hpp"
#include "cgw/random.hpp"

namespace cgw {

namespace {

constexpr std::size_t kPairTableCap = 4096;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : rank_(n, 0), parent_(n), sets_(rank_.data(), parent_.data()) {
    for (std::size_t i = 0; i < n; ++i) sets_.make_set(i);
  }
  void unite(std::size_t a, std::size_t b) { sets_.union_set(a, b); }
  std::size_t find(std::size_t a) { return sets_.find_set(a); }

 private:
  std::vector<std::size_t> rank_, parent_;
  boost::disjoint_sets<std::size_t*, std::size_t*> sets_;
};

std::uint64_t checked_power(std::uint64_t base, std::uint32_t exponent, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (r > cap / base) throw CapExceededError("|G|^k exceeds " + std::to_string(cap));
    r *= base;
  }
  return r;
}

ComponentStructure collect(UnionFind& uf, std::size_t n) {
  ComponentStructure out;
  out.component_of.assign(n, 0);
  std::vector<std::int64_t> id_of_root(n, -1);
  for (std::size_t t = 0; t < n; ++t) {
    const std::size_t r = uf.find(t);
    if (id_of_root[r] < 0) {
      id_of_root[r] = static_cast<std::int64_t>(out.components.size());
      out.components.push_back({0, t});
    }
    const auto id = static_cast<std::uint32_t>(id_of_root[r]);
    out.component_of[t] = id;
    ++out.components[id].size;
  }
  return out;
}

void add_move_edges(const Group& group, const GeneratingTupleSet& tuples, const MoveSet& moves, UnionFind& uf) {
  std::vector<Elem> t(tuples.k()), u(tuples.k());
  for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
    tuples.tuple(idx, t);
    for (const Move& m : moves.moves()) {
      u = t;
      apply_move(group, m, u);
      const std::int64_t j = tuples.index_of(u);
      if (j < 0) throw VerificationError("move " + to_string(m) + " leaves the generating tuples");
      uf.unite(idx, static_cast<std::size_t>(j));
    }
  }
}

}  // namespace

GeneratingTupleSet::GeneratingTupleSet(std::uint32_t k, std::uint64_t group_order, std::vector<std::uint64_t> keys)
    : k_(k), n_(group_order), keys_(std::move(keys)) {
  if (!std::is_sorted(keys_.begin(), keys_.end())) std::sort(keys_.begin(), keys_.end());
}

std::uint64_t GeneratingTupleSet::key(std::span<const Elem> tuple) const {
  std::uint64_t key = 0;
  for (Elem g : tuple) key = key * n_ + g;
  return key;
}

std::vector<Elem> GeneratingTupleSet::tuple(std::size_t index) const {
  std::vector<Elem> t(k_);
  tuple(index, t);
  return t;
}

void GeneratingTupleSet::tuple(std::size_t index, std::span<Elem> out) const {
  std::uint64_t key = keys_.at(index);
  for (std::size_t i = k_; i-- > 0;) {
    out[i] = static_cast<Elem>(key % n_);
    key /= n_;
  }
}

std::int64_t GeneratingTupleSet::index_of(std::span<const Elem> tuple) const {
  if (tuple.size() != k_) return -1;
  const auto it = std::lower_bound(keys_.begin(), keys_.end(), key(tuple));
  if (it == keys_.end() || *it != key(tuple)) return -1;
  return it - keys_.begin();
}

std::vector<std::uint8_t> pair_generation_table(const Group& group, const ClassData& classes) {
  const std::size_t n = group.order();
  if (n > kPairTableCap) throw CapExceededError("pair generation table for " + group.name() + " exceeds the cap");
  ClosureTester tester(group);
  std::vector<std::vector<std::uint8_t>> per_rep(classes.count(), std::vector<std::uint8_t>(n));
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const Elem rep = classes.classes[c].representative;
    for (Elem b = 0; b < n; ++b) {
      const Elem pair[2] = {rep, b};
      per_rep[c][b] = tester.generates(pair);
    }
  }
  // <a, b> = G iff <rep, h b h^-1> = G where a = h^-1 rep h
  std::vector<std::uint8_t> gen(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    const Elem hinv = group.inv(classes.conjugator[a]);
    for (Elem b = 0; b < n; ++b) gen[a * n + b] = per_rep[classes.class_of[a]][group.conj(b, hinv)];
  }
  return gen;
}

GeneratingTupleSet generating_tuples(const Group& group, const ClassData& classes, std::uint32_t k) {
  if (k < 2 || k > 3) throw std::invalid_argument("generating tuples are enumerated for k = 2 or 3");
  const std::uint64_t n = group.order();
  checked_power(n, k, kTupleScanCap);
  const auto gen = pair_generation_table(group, classes);
  std::vector<std::uint64_t> keys;
  auto push = [&](std::uint64_t key) {
    if (keys.size() >= kTupleCap) throw CapExceededError("more than " + std::to_string(kTupleCap) + " generating tuples");
    keys.push_back(key);
  };
  if (k == 2) {
    for (std::uint64_t i = 0; i < n * n; ++i)
      if (gen[i]) push(i);
    return GeneratingTupleSet(k, n, std::move(keys));
  }
  // triples: first coordinate a class representative, then conjugate
  ClosureTester tester(group);
  std::vector<std::vector<std::uint8_t>> per_rep(classes.count());
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const Elem rep = classes.classes[c].representative;
    auto& row = per_rep[c];
    row.assign(n * n, 0);
    for (Elem b = 0; b < n; ++b)
      for (Elem d = 0; d < n; ++d) {
        if (gen[rep * n + b] || gen[rep * n + d] || gen[b * n + d]) {
          row[b * n + d] = 1;
        } else {
          const Elem t[3] = {rep, b, d};
          row[b * n + d] = tester.generates(t);
        }
      }
  }
  for (Elem a = 0; a < n; ++a) {
    const Elem hinv = group.inv(classes.conjugator[a]);
    const auto& row = per_rep[classes.class_of[a]];
    std::vector<Elem> moved(n);
    for (Elem b = 0; b < n; ++b) moved[b] = group.conj(b, hinv);
    for (Elem b = 0; b < n; ++b)
      for (Elem d = 0; d < n; ++d)
        if (row[moved[b] * n + moved[d]]) push((a * n + b) * n + d);
  }
  return GeneratingTupleSet(k, n, std::move(keys));
}

std::string to_string(const Move& m) {
  const std::string ij = std::to_string(m.i + 1) + "," + std::to_string(m.j + 1);
  switch (m.kind) {
    case MoveKind::right: return "R+(" + ij + ")";
    case MoveKind::right_inverse: return "R-(" + ij + ")";
    case MoveKind::left: return "L+(" + ij + ")";
    case MoveKind::left_inverse: return "L-(" + ij + ")";
    case MoveKind::swap: return "P(" + ij + ")";
    case MoveKind::invert: return "I(" + std::to_string(m.i + 1) + ")";
  }
  return "?";
}

MoveSet::MoveSet(std::uint32_t k, bool extended) : k_(k), extended_(extended) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j) {
      if (i == j) continue;
      for (MoveKind kind : {MoveKind::right, MoveKind::right_inverse, MoveKind::left, MoveKind::left_inverse})
        moves_.push_back({kind, i, j});
      if (extended && i < j) moves_.push_back({MoveKind::swap, i, j});
    }
  if (extended)
    for (std::uint32_t i = 0; i < k; ++i) moves_.push_back({MoveKind::invert, i, i});
}

void apply_move(const Group& g, const Move& m, std::span<Elem> t) {
  switch (m.kind) {
    case MoveKind::right: t[m.i] = g.mul(t[m.i], t[m.j]); break;
    case MoveKind::right_inverse: t[m.i] = g.mul(t[m.i], g.inv(t[m.j])); break;
    case MoveKind::left: t[m.i] = g.mul(t[m.j], t[m.i]); break;
    case MoveKind::left_inverse: t[m.i] = g.mul(g.inv(t[m.j]), t[m.i]); break;
    case MoveKind::swap: std::swap(t[m.i], t[m.j]); break;
    case MoveKind::invert: t[m.i] = g.inv(t[m.i]); break;
  }
}

std::vector<std::vector<Elem>> nielsen_neighbors(const Group& group, std::span<const Elem> tuple, const MoveSet& moves) {
  if (tuple.size() != moves.k()) throw std::invalid_argument("tuple length differs from k");
  std::vector<std::vector<Elem>> out;
  for (const Move& m : moves.moves()) {
    std::vector<Elem> u(tuple.begin(), tuple.end());
    apply_move(group, m, u);
    out.push_back(std::move(u));
  }
  return out;
}

ComponentStructure graph_components(const Group& group, const GeneratingTupleSet& tuples, const MoveSet& moves) {
  if (moves.k() != tuples.k()) throw std::invalid_argument("move set and tuples disagree on k");
  UnionFind uf(tuples.size());
  add_move_edges(group, tuples, moves, uf);
  return collect(uf, tuples.size());
}

ComponentStructure t_systems(const Group& group, const GeneratingTupleSet& tuples, const AutAction& action) {
  UnionFind uf(tuples.size());
  add_move_edges(group, tuples, MoveSet(tuples.k(), true), uf);
  std::vector<Elem> t(tuples.k());
  for (const auto& map : action.maps)
    for (std::size_t idx = 0; idx < tuples.size(); ++idx) {
      tuples.tuple(idx, t);
      for (Elem& x : t) x = map[x];
      const std::int64_t j = tuples.index_of(t);
      if (j < 0) throw VerificationError("automorphism " + std::to_string(&map - action.maps.data()) +
                                         " does not preserve the generating tuples");
      uf.unite(idx, static_cast<std::size_t>(j));
    }
  return collect(uf, tuples.size());
}

HigmanLabel higman_invariant(const Group& group, std::span<const Elem> pair, const ClassData& classes,
                             const AutClassOrbits& orbits) {
  if (pair.size() != 2) throw std::invalid_argument("the commutator label needs a pair");
  const std::uint32_t c = classes.class_of[group.commutator(pair[0], pair[1])];
  return orbits.unions[orbits.union_of_class[c]];
}

T2Census t2_invariant_census(const Group& group, const GeneratingTupleSet& pairs, const ClassData& classes,
                             const AutAction& action) {
  const AutClassOrbits orbits = aut_class_orbits(group, classes, action);
  std::set<HigmanLabel> labels;
  std::vector<Elem> t(2);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    pairs.tuple(idx, t);
    labels.insert(higman_invariant(group, t, classes, orbits));
  }
  T2Census c;
  c.labels.assign(labels.begin(), labels.end());
  c.min_centralizer = min_centralizer_order(classes);
  c.out_order = action.out_order;
  c.bound = static_cast<double>(c.min_centralizer) / (2.0 * static_cast<double>(c.out_order));
  return c;
}

bool higman_constant_on_components(const Group& group, const GeneratingTupleSet& pairs, const ClassData& classes,
                                   const AutClassOrbits& orbits, const ComponentStructure& components) {
  std::vector<HigmanLabel> first(components.count());
  std::vector<Elem> t(2);
  for (std::size_t c = 0; c < components.count(); ++c) {
    pairs.tuple(components.components[c].representative, t);
    first[c] = higman_invariant(group, t, classes, orbits);
  }
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    pairs.tuple(idx, t);
    if (higman_invariant(group, t, classes, orbits) != first[components.component_of[idx]]) return false;
  }
  return true;
}

ComponentInvariantCheck pra_component_invariant_check(const Group& group, const GeneratingTupleSet& pairs,
                                                      const ClassData& classes) {
  if (pairs.k() != 2) throw std::invalid_argument("the commutator class check needs pairs");
  const ComponentStructure cs = graph_components(group, pairs, MoveSet(2, false));
  std::vector<std::uint32_t> first(cs.count());
  std::vector<std::uint8_t> bad(cs.count(), 0);
  std::vector<Elem> t(2);
  for (std::size_t c = 0; c < cs.count(); ++c) {
    pairs.tuple(cs.components[c].representative, t);
    first[c] = classes.class_of[group.commutator(t[0], t[1])];
  }
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    pairs.tuple(idx, t);
    const auto c = cs.component_of[idx];
    if (classes.class_of[group.commutator(t[0], t[1])] != first[c]) bad[c] = 1;
  }
  ComponentInvariantCheck r;
  r.components = cs.count();
  r.violations = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
  return r;
}

ComponentChain component_chain(const Group& group, const GeneratingTupleSet& tuples, const AutAction& action) {
  ComponentChain c;
  c.t_systems = t_systems(group, tuples, action).count();
  c.extended = graph_components(group, tuples, MoveSet(tuples.k(), true)).count();
  c.plain = graph_components(group, tuples, MoveSet(tuples.k(), false)).count();
  return c;
}

std::vector<Elem> first_generating_tuple(const Group& group, std::uint32_t k) {
  const std::uint64_t n = group.order();
  ClosureTester tester(group);
  std::vector<Elem> t(k, 0);
  for (std::uint64_t scanned = 0; scanned < kTupleScanCap; ++scanned) {
    if (tester.generates(t)) return t;
    std::size_t i = k;
    while (i-- > 0) {
      if (++t[i] < n) break;
      t[i] = 0;
    }
    if (i == static_cast<std::size_t>(-1)) break;
  }
  throw UnsupportedError(group.name() + " has no generating " + std::to_string(k) + "-tuple");
}

WalkReport pra_walk(const Group& group, const WalkParams& params) {
  if (params.k < 2 || params.k > 5) throw std::invalid_argument("walk length k must be in 2..5");
  WalkReport r;
  r.params = params;
  r.start = first_generating_tuple(group, params.k);
  std::vector<Elem> t = r.start;
  std::mt19937_64 rng(params.seed);
  const std::uint32_t k = params.k;
  auto step = [&]() {
    Move m;
    m.i = static_cast<std::uint32_t>(bounded_draw(rng, k));
    m.j = static_cast<std::uint32_t>(bounded_draw(rng, k - 1));
    if (m.j >= m.i) ++m.j;
    m.kind = static_cast<MoveKind>(bounded_draw(rng, 4));
    apply_move(group, m, t);
  };
  for (std::uint64_t s = 0; s < params.burn_in; ++s) step();
  r.histogram.assign(group.order(), 0);
  r.samples.reserve(params.samples);
  for (std::uint64_t s = 0; s < params.samples; ++s) {
    for (std::uint64_t q = 0; q < params.steps; ++q) step();
    const Elem g = t[bounded_draw(rng, k)];
    r.samples.push_back(g);
    ++r.histogram[g];
  }
  if (params.samples > 0) {
    const double u = 1.0 / static_cast<double>(group.order());
    for (std::uint64_t c : r.histogram) r.l1_to_uniform += std::abs(static_cast<double>(c) / params.samples - u);
  }
  return r;
}

double walk_l1_between(const WalkReport& a, const WalkReport& b) {
  if (a.histogram.size() != b.histogram.size()) throw std::invalid_argument("walks on different groups");
  if (a.samples.empty() || b.samples.empty()) throw std::invalid_argument("empty walk");
  double d = 0;
  for (std::size_t g = 0; g < a.histogram.size(); ++g)
    d += std::abs(static_cast<double>(a.histogram[g]) / a.samples.size() -
                  static_cast<double>(b.histogram[g]) / b.samples.size());
  return d;
}

CommutatorCoverage commutator_generating_coverage(const Group& group, const GeneratingTupleSet& pairs, double epsilon) {
  if (pairs.k() != 2) throw std::invalid_argument("coverage needs generating pairs");
  CommutatorCoverage c;
  const std::uint64_t n = group.order();
  c.covered.assign(n, false);
  std::vector<Elem> t(2);
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    pairs.tuple(idx, t);
    c.covered[group.commutator(t[0], t[1])] = true;
  }
  c.count = static_cast<std::uint64_t>(std::count(c.covered.begin(), c.covered.end(), true));
  c.fraction = Rational(c.count, n);
  c.pair_fraction = Rational(BigInt(pairs.size()), BigInt(n) * n);
  c.epsilon = epsilon;
  c.bound = to_double(c.pair_fraction) - 3 * epsilon;
  c.vacuous = c.bound <= 0;
  c.holds = c.fraction >= c.pair_fraction - 3 * exact_rational(epsilon);
  return c;
}

}  // namespace cgw
