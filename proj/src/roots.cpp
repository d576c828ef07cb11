#include "coxdatum/roots.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <thread>

#include "coxdatum/errors.hpp"

namespace coxdatum {

const Root* RootTable::find(const Vec& coeffs, const Field& field) const {
  auto it = by_key.find(vector_key(coeffs, field));
  return it == by_key.end() ? nullptr : &roots[it->second];
}

namespace {

// <v, beta_s> on Side1, <alpha_s, v> on Side2.
Scalar simple_pairing(const CoxeterDatum& d, const Vec& v, std::size_t s, Side side) {
  Scalar acc = d.field().zero();
  for (std::size_t u = 0; u < d.rank(); ++u) {
    if (d.field().is_zero(v[u])) continue;
    acc += v[u] * (side == Side::One ? d.pairing(u, s) : d.pairing(s, u));
  }
  return acc;
}

bool in_epsilon_band(const Field& field, const Scalar& x) {
  return field.mode() == Mode::Float && field.sign(x) == 0 && x.to_double() != 0.0;
}

struct Candidate {
  Vec coeffs;
  std::string key;
  long depth = 0;
  Witness witness;
  bool ambiguous = false;
};

std::vector<Candidate> children_of(const CoxeterDatum& d, const Root& parent, Side side) {
  std::vector<Candidate> out;
  const std::ptrdiff_t only = single_support(parent.coeffs, d.field());
  for (std::size_t s = 0; s < d.rank(); ++s) {
    if (only == static_cast<std::ptrdiff_t>(s)) continue;
    const Scalar c = simple_pairing(d, parent.coeffs, s, side);
    const int sign = d.field().sign(c);
    Candidate cand;
    cand.coeffs = apply_reflection(d, s, side, parent.coeffs);
    cand.key = vector_key(cand.coeffs, d.field());
    cand.depth = parent.depth + (sign < 0 ? 1 : sign == 0 ? 0 : -1);
    cand.witness.word.letters.reserve(parent.witness.word.size() + 1);
    cand.witness.word.letters.push_back(s);
    cand.witness.word.letters.insert(cand.witness.word.letters.end(), parent.witness.word.letters.begin(),
                                     parent.witness.word.letters.end());
    cand.witness.simple = parent.witness.simple;
    cand.ambiguous = parent.ambiguous || in_epsilon_band(d.field(), c);
    out.push_back(std::move(cand));
  }
  return out;
}

void add_alternate(Root& root, const Witness& w, std::size_t cap) {
  if (w == root.witness || root.alternates.size() >= cap) return;
  if (std::find(root.alternates.begin(), root.alternates.end(), w) != root.alternates.end()) return;
  root.alternates.push_back(w);
}

}  // namespace

RootTable enumerate_roots(const CoxeterDatum& d, Side side, long max_depth, const EnumerateOptions& opts) {
  if (max_depth < 1) throw Error(ErrorKind::Precondition, "max_depth must be at least 1");
  const Field& field = d.field();
  RootTable table;
  table.side = side;
  table.max_depth = max_depth;

  std::vector<std::size_t> frontier;
  for (std::size_t s = 0; s < d.rank(); ++s) {
    Root r;
    r.side = side;
    r.coeffs = simple_root(d, s);
    r.witness.simple = s;
    r.ray = RayId(r.coeffs, field);
    table.by_key.emplace(vector_key(r.coeffs, field), table.roots.size());
    frontier.push_back(table.roots.size());
    table.roots.push_back(std::move(r));
  }

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const unsigned threads = opts.parallel ? (opts.threads ? opts.threads : hw) : 1;

  for (long level = 1; level < max_depth && !frontier.empty(); ++level) {
    std::vector<std::vector<Candidate>> produced(frontier.size());
    if (threads > 1 && frontier.size() > 1) {
      std::vector<std::thread> pool;
      for (unsigned k = 0; k < threads; ++k) {
        pool.emplace_back([&, k] {
          for (std::size_t i = k; i < frontier.size(); i += threads) {
            produced[i] = children_of(d, table.roots[frontier[i]], side);
          }
        });
      }
      for (auto& th : pool) th.join();
    } else {
      for (std::size_t i = 0; i < frontier.size(); ++i) produced[i] = children_of(d, table.roots[frontier[i]], side);
    }

    // Sequential merge in frontier order keeps the result independent of scheduling.
    std::vector<std::size_t> next;
    for (auto& batch : produced) {
      for (auto& cand : batch) {
        auto it = table.by_key.find(cand.key);
        if (it != table.by_key.end()) {
          Root& existing = table.roots[it->second];
          if (existing.level != level + 1) continue;
          if (cand.witness < existing.witness) {
            Witness old = std::move(existing.witness);
            existing.witness = std::move(cand.witness);
            add_alternate(existing, old, opts.max_alternates);
          } else {
            add_alternate(existing, cand.witness, opts.max_alternates);
          }
          existing.ambiguous = existing.ambiguous || cand.ambiguous;
          continue;
        }
        Root r;
        r.side = side;
        r.coeffs = std::move(cand.coeffs);
        r.depth = cand.depth;
        r.level = level + 1;
        r.witness = std::move(cand.witness);
        r.ray = RayId(r.coeffs, field);
        r.sign = classify(r.coeffs, field);
        r.ambiguous = cand.ambiguous;
        table.by_key.emplace(std::move(cand.key), table.roots.size());
        next.push_back(table.roots.size());
        table.roots.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }

  for (std::size_t i = 0; i < table.roots.size(); ++i) table.by_ray[table.roots[i].ray.key()].push_back(i);
  return table;
}

DepthResult depth(const CoxeterDatum& d, const Vec& v, Side side, long depth_hint) {
  const Field& field = d.field();
  if (classify(v, field) != VectorSign::Positive) {
    throw Error(ErrorKind::NoDescentAvailable, "depth is defined for positive roots only");
  }
  const long cap = 4 * std::max(depth_hint, 1L) + 16;
  DepthResult out;
  Vec x = v;
  while (single_support(x, field) < 0) {
    if (static_cast<long>(out.descent.size()) >= cap) {
      throw Error(ErrorKind::StepCapExceeded, "depth descent exceeded its step cap");
    }
    std::size_t pick = d.rank();
    for (std::size_t s = 0; s < d.rank(); ++s) {
      if (field.sign(simple_pairing(d, x, s, side)) > 0) {
        pick = s;
        break;
      }
    }
    if (pick == d.rank()) throw Error(ErrorKind::NoDescentAvailable, "no descent available; not a root");
    x = apply_reflection(d, pick, side, std::move(x));
    if (classify(x, field) != VectorSign::Positive) {
      throw Error(ErrorKind::NoDescentAvailable, "descent left the positive cone; not a root");
    }
    out.descent.letters.push_back(pick);
  }
  out.depth = static_cast<long>(out.descent.size()) + 1;
  return out;
}

namespace {

Root transported(const CoxeterDatum& d, const Root& root, Side target) {
  if (root.side == target) throw Error(ErrorKind::Precondition, "root is already on the target side");
  Root out;
  out.side = target;
  out.coeffs = apply_word(d, root.witness.word, target, simple_root(d, root.witness.simple));
  if (classify(root.coeffs, d.field()) == VectorSign::Negative) out.coeffs = scaled(out.coeffs, d.field().from_int(-1));
  out.depth = root.depth;
  out.level = root.level;
  out.witness = root.witness;
  out.alternates = root.alternates;
  out.ray = RayId(out.coeffs, d.field());
  out.sign = classify(out.coeffs, d.field());
  out.ambiguous = root.ambiguous;
  return out;
}

}  // namespace

Root phi(const CoxeterDatum& d, const Root& root) { return transported(d, root, Side::Two); }

Root phi_inverse(const CoxeterDatum& d, const Root& root) { return transported(d, root, Side::One); }

Vec realize(const CoxeterDatum& d, const Vec& coeffs, Side side) {
  const auto& real = d.realization();
  if (!real) throw Error(ErrorKind::NoRealization, "datum has no concrete realization");
  return (side == Side::One ? real->p1 : real->p2) * coeffs;
}

std::vector<ScalarChain> scalar_chains(const CoxeterDatum& d, const RootTable& table) {
  const Field& field = d.field();
  std::vector<ScalarChain> out;
  for (const auto& [key, members] : table.by_ray) {
    if (members.size() < 2) continue;
    ScalarChain chain;
    chain.base_index = *std::min_element(members.begin(), members.end(), [&](std::size_t a, std::size_t b) {
      const Root& ra = table.roots[a];
      const Root& rb = table.roots[b];
      if (ra.level != rb.level) return ra.level < rb.level;
      return ra.witness < rb.witness;
    });
    const Root& base = table.roots[chain.base_index];
    chain.ray = base.ray;
    const Scalar base_scale = scale_on_ray(base.coeffs, base.ray, field);
    for (std::size_t idx : members) {
      const Root& r = table.roots[idx];
      ChainMember m;
      m.root_index = idx;
      m.scale = scale_on_ray(r.coeffs, r.ray, field) / base_scale;
      m.witness = r.witness;
      std::vector<Witness> options{r.witness};
      options.insert(options.end(), r.alternates.begin(), r.alternates.end());
      for (const Witness& w : options) {
        if (w.simple != base.witness.simple) continue;
        GroupWord u = concat(w.word, inverse(base.witness.word));
        if (equal(apply_word(d, u, table.side, base.coeffs), r.coeffs, field)) {
          m.self_map = std::move(u);
          break;
        }
      }
      chain.members.push_back(std::move(m));
    }
    std::sort(chain.members.begin(), chain.members.end(),
              [&](const ChainMember& a, const ChainMember& b) { return field.less(a.scale, b.scale); });
    out.push_back(std::move(chain));
  }
  return out;
}

FinitenessResult is_finite_group(const CoxeterDatum& d, long budget_depth) {
  const Field& field = d.field();
  FinitenessResult out;
  out.budget = budget_depth;
  std::set<std::string> seen;
  std::vector<Vec> frontier;
  for (std::size_t s = 0; s < d.rank(); ++s) {
    RayId ray(simple_root(d, s), field);
    if (seen.insert(ray.key()).second) frontier.push_back(ray.direction());
  }
  out.frontier.push_back(seen.size());
  for (long level = 1; level <= budget_depth; ++level) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (std::size_t s = 0; s < d.rank(); ++s) {
        RayId ray(apply_reflection(d, s, Side::One, v), field);
        if (seen.insert(ray.key()).second) next.push_back(ray.direction());
      }
    }
    if (next.empty()) {
      out.finite = true;
      out.ray_count = seen.size();
      return out;
    }
    out.frontier.push_back(seen.size());
    frontier = std::move(next);
  }
  out.ray_count = seen.size();
  return out;
}

}  // namespace coxdatum
