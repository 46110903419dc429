#include <stdexcept>

#include "arxdp/pattern.hpp"

namespace arxdp {

namespace {

using Joint = std::vector<std::uint64_t>;

// Distribution of joint automaton states after k symbols.
std::map<Joint, BigInt> run_joint(const std::vector<const Pattern*>& ps, unsigned k) {
  Joint init;
  for (const auto* p : ps) init.push_back(p->initial_state());
  std::map<Joint, BigInt> cur{{init, BigInt(1)}};
  for (unsigned step = 0; step < k; ++step) {
    std::map<Joint, BigInt> next;
    for (const auto& [state, count] : cur) {
      if (state.empty()) {
        next[state] += count * 8;
        continue;
      }
      for (unsigned sym = 0; sym < 8; ++sym) {
        Joint t(ps.size());
        bool alive = false;
        for (std::size_t i = 0; i < ps.size(); ++i) {
          t[i] = ps[i]->step(state[i], sym);
          alive |= t[i] != 0;
        }
        if (!alive) t.clear();  // dead for every pattern: one shared sink
        next[t] += count;
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<const Pattern*> pointers(const std::vector<Pattern>& patterns) {
  std::vector<const Pattern*> ps;
  for (const auto& p : patterns) ps.push_back(&p);
  return ps;
}

}  // namespace

BigInt count_pattern(const Pattern& p, unsigned k) { return count_intersection({&p}, k); }

std::map<std::uint64_t, BigInt> match_profile(const std::vector<Pattern>& patterns, unsigned k) {
  if (patterns.size() > 64) throw std::invalid_argument("match_profile: at most 64 patterns");
  const auto ps = pointers(patterns);
  std::map<std::uint64_t, BigInt> profile;
  for (const auto& [state, count] : run_joint(ps, k)) {
    std::uint64_t set = 0;
    for (std::size_t i = 0; i < state.size(); ++i) {
      if (ps[i]->accepting(state[i])) set |= std::uint64_t{1} << i;
    }
    profile[set] += count;
  }
  return profile;
}

BigInt count_union(const std::vector<Pattern>& patterns, unsigned k) {
  BigInt total = 0;
  for (const auto& [set, count] : match_profile(patterns, k)) {
    if (set != 0) total += count;
  }
  return total;
}

BigInt count_intersection(const std::vector<const Pattern*>& patterns, unsigned k) {
  BigInt total = 0;
  for (const auto& [state, count] : run_joint(patterns, k)) {
    bool all = !state.empty();
    for (std::size_t i = 0; all && i < state.size(); ++i) all = patterns[i]->accepting(state[i]);
    if (all) total += count;
  }
  return total;
}

BigInt count_union_inclusion_exclusion(const std::vector<Pattern>& patterns, unsigned k) {
  BigInt total = 0;
  std::vector<const Pattern*> chosen;
  // Depth-first over subsets in index order; an empty intersection stays empty
  // for every superset, so that branch is cut.
  auto visit = [&](auto&& self, std::size_t from) -> void {
    for (std::size_t i = from; i < patterns.size(); ++i) {
      chosen.push_back(&patterns[i]);
      const BigInt c = count_intersection(chosen, k);
      if (c != 0) {
        if (chosen.size() % 2 == 1) {
          total += c;
        } else {
          total -= c;
        }
        self(self, i + 1);
      }
      chosen.pop_back();
    }
  };
  visit(visit, 0);
  return total;
}

}  // namespace arxdp
