#include <cmath>
#include <algorithm>
#include <functional>
#include <random>
#include <string>

#include "cgw/error.hpp"
#include "cgw/random.hpp"
#include "cgw/tsys.hpp"
#include "cgw/words.hpp"

namespace cgw {

namespace {

class Evaluator {
 public:
  Evaluator(const Word& w, const Group& g) : group_(g), letters_(w.letters()) {}

  Elem operator()(const Elem* tuple) const {
    Elem r = group_.identity();
    for (const auto& l : letters_) {
      const Elem x = tuple[l.variable];
      r = group_.mul(r, l.exponent > 0 ? x : group_.inv(x));
    }
    return r;
  }

 private:
  const Group& group_;
  const std::vector<Letter>& letters_;
};

// |G|^arity, or 0 when it exceeds `cap`.
std::uint64_t bounded_power(std::uint64_t base, std::uint32_t exponent, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > cap / base) return 0;
    r *= base;
  }
  return r <= cap ? r : 0;
}

FiberTable empty_table(const Word& w, const Group& g, const ClassData& classes) {
  FiberTable f;
  f.word = w.to_string();
  f.arity = w.arity();
  f.group_order = g.order();
  for (const auto& c : classes.classes) f.class_sizes.push_back(c.size);
  f.class_totals.assign(classes.count(), 0);
  return f;
}

FiberTable sampled_fibers(const Word& w, const Group& g, const ClassData& classes, const BruteOptions& opt) {
  FiberTable f = empty_table(w, g, classes);
  f.sampled = true;
  f.total = opt.samples;
  const Evaluator eval(w, g);
  std::mt19937_64 rng(opt.seed);
  std::vector<Elem> tuple(std::max<std::uint32_t>(f.arity, 1));
  for (std::uint64_t s = 0; s < opt.samples; ++s) {
    for (std::uint32_t i = 0; i < f.arity; ++i) tuple[i] = static_cast<Elem>(bounded_draw(rng, g.order()));
    ++f.class_totals[classes.class_of[eval(tuple.data())]];
  }
  f.verify_conservation();
  return f;
}

}  // namespace

Elem evaluate(const Word& w, const Group& group, const std::vector<Elem>& tuple) {
  if (tuple.size() < w.arity()) throw std::invalid_argument("tuple shorter than the word's arity");
  for (Elem e : tuple)
    if (e >= group.order()) throw std::out_of_range("element index out of range");
  return Evaluator(w, group)(tuple.data());
}

FiberTable brute_force_fibers(const Word& w, const Group& group, const ClassData& classes, const BruteOptions& options) {
  const std::uint32_t m = w.arity();
  const std::uint64_t n = group.order();
  const std::uint64_t total = bounded_power(n, m, kBruteForceCap);
  const bool over_cap = (total == 0);
  if (options.mode == BruteMode::sampled || (options.mode == BruteMode::automatic && over_cap))
    return sampled_fibers(w, group, classes, options);
  if (over_cap)
    throw CapExceededError("exhaustive enumeration of " + w.to_string() + " on " + group.name() + " exceeds " +
                           std::to_string(kBruteForceCap) + " tuples");

  FiberTable f = empty_table(w, group, classes);
  f.total = total;
  const Evaluator eval(w, group);
  if (m == 0) {
    f.class_totals[classes.class_of[group.identity()]] = 1;
  } else {
    std::vector<Elem> tuple(m, 0);
    for (std::size_t c = 0; c < classes.count(); ++c) {
      tuple[0] = classes.classes[c].representative;
      const std::uint64_t weight = classes.classes[c].size;
      std::fill(tuple.begin() + 1, tuple.end(), 0);
      bool more = true;
      while (more) {
        f.class_totals[classes.class_of[eval(tuple.data())]] += weight;
        more = false;
        for (std::size_t i = m; i-- > 1;) {
          if (++tuple[i] < n) {
            more = true;
            break;
          }
          tuple[i] = 0;
        }
      }
    }
  }
  for (std::size_t t = 0; t < classes.count(); ++t) {
    if (f.class_totals[t] % f.class_sizes[t] != 0)
      throw VerificationError("fiber of " + f.word + " is not constant on class " + std::to_string(t));
    f.counts.push_back(f.class_totals[t] / f.class_sizes[t]);
  }
  f.verify_conservation();
  return f;
}

double gamma_bound(const CharacterTable& table, std::uint32_t m) {
  if (m < 2) throw std::invalid_argument("the gamma bound needs m >= 2");
  return std::sqrt(static_cast<double>(m - 1)) * delta_epsilon(table).epsilon;
}

L1SumCheck product_l1_check(const FiberTable& first, const FiberTable& second) {
  const Distribution p = Distribution::from_fibers(first);
  const Distribution q = Distribution::from_fibers(second);
  const Rational uniform(1, BigInt(first.group_order) * second.group_order);
  L1SumCheck r;
  for (std::size_t s = 0; s < p.mass.size(); ++s)
    for (std::size_t t = 0; t < q.mass.size(); ++t)
      r.combined += abs(p.mass[s] * q.mass[t] - uniform) * (BigInt(p.class_sizes[s]) * q.class_sizes[t]);
  r.first = l1_to_uniform_exact(first);
  r.second = l1_to_uniform_exact(second);
  return r;
}

L1SumCheck composition_l1_check(const Word& inner, const Word& outer, const Group& group, const ClassData& classes) {
  if (outer.arity() > 1) throw std::invalid_argument("the outer map must be a one-variable word");
  const FiberTable f1 = brute_force_fibers(inner, group, classes);
  const FiberTable f2 = brute_force_fibers(outer, group, classes);
  const std::size_t n = group.order();
  // push the inner distribution forward through the outer map, element by element
  std::vector<Rational> pushed(n, Rational(0));
  const Evaluator eval(outer, group);
  for (Elem y = 0; y < n; ++y) {
    const Elem z = eval(&y);
    pushed[z] += Rational(BigInt(f1.counts[classes.class_of[y]]), BigInt(f1.total));
  }
  // the composite word must give the same distribution
  const FiberTable composite = brute_force_fibers(outer.substitute({inner}), group, classes);
  for (Elem z = 0; z < n; ++z)
    if (pushed[z] != Rational(BigInt(composite.counts[classes.class_of[z]]), BigInt(composite.total)))
      throw VerificationError("composite word distribution differs from the push-forward");
  L1SumCheck r;
  const Rational u(1, n);
  for (Elem z = 0; z < n; ++z) r.combined += abs(pushed[z] - u);
  r.first = l1_to_uniform_exact(f1);
  r.second = l1_to_uniform_exact(f2);
  return r;
}

ShapeEquidistribution shape_equidistribution_check(const CommutatorShape& shape, const Group& group,
                                                  const ClassData& classes, const CharacterTable& table) {
  ShapeEquidistribution r;
  r.shape = shape.to_string();
  r.m = shape.leaves();
  const FiberTable f = brute_force_fibers(shape_to_word(shape), group, classes);
  if (r.m == 1) {
    r.gamma = 0;
    r.applicable = true;
    for (std::size_t t = 0; t < f.class_count(); ++t)
      if (f.normalized(t) != 1) r.verdict = false;
    return r;
  }
  r.gamma = gamma_bound(table, r.m);
  r.applicable = r.gamma < 1;
  if (r.applicable) r.verdict = equidistribution_witness(f, r.gamma).verdict();
  return r;
}

PairwiseGeneratedImage pairwise_generated_image(const CommutatorShape& shape, const Group& group,
                                                const ClassData& classes, const BruteOptions& options) {
  const std::size_t n = group.order();
  const std::uint32_t m = shape.leaves();
  const Word w = shape_to_word(shape);
  const Evaluator eval(w, group);

  const std::vector<std::uint8_t> gen = pair_generation_table(group, classes);

  PairwiseGeneratedImage out;
  out.shape = shape.to_string();
  out.covered.assign(n, false);
  std::vector<Elem> tuple(m, 0);
  const std::uint64_t total = bounded_power(n, m, kBruteForceCap);
  const bool sample = options.mode == BruteMode::sampled || (options.mode == BruteMode::automatic && total == 0);
  if (!sample && total == 0) throw CapExceededError("exhaustive enumeration exceeds the tuple cap");

  auto all_pairs = [&](std::uint32_t upto) {
    for (std::uint32_t i = 0; i < upto; ++i)
      if (!gen[tuple[i] * n + tuple[upto]]) return false;
    return true;
  };
  if (!sample) {
    out.exhaustive = true;
    out.tuples = total;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t pos) {
      if (pos == m) {
        ++out.qualifying;
        out.covered[eval(tuple.data())] = true;
        return;
      }
      for (Elem x = 0; x < n; ++x) {
        tuple[pos] = x;
        if (all_pairs(pos)) rec(pos + 1);
      }
    };
    rec(0);
  } else {
    out.exhaustive = false;
    out.tuples = options.samples;
    std::mt19937_64 rng(options.seed);
    for (std::uint64_t s = 0; s < options.samples; ++s) {
      for (std::uint32_t i = 0; i < m; ++i) tuple[i] = static_cast<Elem>(bounded_draw(rng, n));
      bool ok = true;
      for (std::uint32_t j = 1; j < m && ok; ++j) ok = all_pairs(j);
      if (!ok) continue;
      ++out.qualifying;
      out.covered[eval(tuple.data())] = true;
    }
  }
  out.conjugation_closed = true;
  for (Elem g = 0; g < n; ++g) {
    if (!out.covered[g]) continue;
    ++out.count;
    for (Elem s : group.generators())
      if (!out.covered[group.conj(g, s)]) out.conjugation_closed = false;
  }
  return out;
}

}  // namespace cgw
