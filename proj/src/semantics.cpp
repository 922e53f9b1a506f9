#include "rect_atg/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_set>

#include "rect_atg/error.hpp"

namespace rect_atg {

namespace {

// Clause as two bitmasks over the universe: satisfied by assignment `a` iff
// (a & pos) != 0 or (~a & neg) != 0.
struct MaskClause {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;
};

class AtomIndex {
 public:
  explicit AtomIndex(std::span<const Atom> universe) {
    for (std::size_t i = 0; i < universe.size(); ++i) index_.emplace(universe[i], i);
  }

  std::size_t size() const { return index_.size(); }

  std::size_t at(const Literal& l) {
    // Rectangle cells share atom pointers, so most lookups hit this cache.
    if (l.shared_atom().get() == last_ptr_) return last_index_;
    auto it = index_.find(l.atom());
    if (it == index_.end()) {
      throw std::invalid_argument("atom " + to_string(l.atom()) + " is not in the universe");
    }
    last_ptr_ = l.shared_atom().get();
    last_index_ = it->second;
    return it->second;
  }

 private:
  std::map<Atom, std::size_t> index_;
  const Atom* last_ptr_ = nullptr;
  std::size_t last_index_ = 0;
};

std::vector<MaskClause> compile(const ClauseSet& s, AtomIndex& index) {
  std::vector<MaskClause> out;
  out.reserve(s.size());
  for (const Clause& c : s) {
    MaskClause mc;
    for (const Literal& l : c) {
      const std::uint64_t bit = std::uint64_t{1} << index.at(l);
      (l.is_positive() ? mc.pos : mc.neg) |= bit;
    }
    out.push_back(mc);
  }
  return out;
}

bool satisfies_all(const std::vector<MaskClause>& clauses, std::uint64_t a) {
  return std::all_of(clauses.begin(), clauses.end(), [a](const MaskClause& c) {
    return (a & c.pos) != 0 || (~a & c.neg) != 0;
  });
}

// Lowest satisfying assignment in [begin, end), or `end`.
std::uint64_t scan(const std::vector<MaskClause>& clauses, std::uint64_t begin, std::uint64_t end,
                   const std::atomic<std::uint64_t>* best) {
  for (std::uint64_t a = begin; a < end; ++a) {
    if (best != nullptr && (a & 0xFFF) == 0 && best->load(std::memory_order_relaxed) < a) break;
    if (satisfies_all(clauses, a)) return a;
  }
  return end;
}

std::uint64_t find_lowest_model(const std::vector<MaskClause>& clauses, std::uint64_t total,
                                unsigned threads) {
  if (threads <= 1 || total < 4096) return scan(clauses, 0, total, nullptr);

  std::atomic<std::uint64_t> best{total};
  const std::uint64_t chunk = (total + threads - 1) / threads;
  std::vector<std::thread> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t begin = std::min(total, chunk * t);
    const std::uint64_t end = std::min(total, begin + chunk);
    workers.emplace_back([&, begin, end] {
      const std::uint64_t found = scan(clauses, begin, end, &best);
      if (found == end) return;
      std::uint64_t current = best.load();
      while (found < current && !best.compare_exchange_weak(current, found)) {
      }
    });
  }
  for (auto& w : workers) w.join();
  return best.load();
}

void check_universe_size(std::size_t atoms, std::size_t max_atoms) {
  if (atoms > max_atoms || atoms > 63) {
    throw Error(ErrorCode::kTooManyAtoms, std::to_string(atoms) + " atoms exceed the oracle bound of " +
                                              std::to_string(std::min<std::size_t>(max_atoms, 63)));
  }
}

Assignment make_assignment(std::span<const Atom> universe, std::uint64_t mask) {
  std::vector<bool> values(universe.size());
  for (std::size_t i = 0; i < universe.size(); ++i) values[i] = ((mask >> i) & 1U) != 0;
  return Assignment(std::vector<Atom>(universe.begin(), universe.end()), std::move(values));
}

struct SearchState {
  std::size_t clause;
  std::uint64_t pos;
  std::uint64_t neg;
  friend bool operator==(const SearchState&, const SearchState&) = default;
};

struct SearchStateHash {
  std::size_t operator()(const SearchState& s) const noexcept {
    std::uint64_t h = s.clause * 0x9E3779B97F4A7C15ULL;
    h ^= s.pos + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    h ^= s.neg + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Assignment

Assignment::Assignment(std::vector<Atom> universe, std::vector<bool> values)
    : universe_(std::move(universe)), values_(std::move(values)) {
  if (universe_.size() != values_.size()) {
    throw std::invalid_argument("assignment needs one value per atom");
  }
  for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i], i);
}

std::optional<bool> Assignment::value(const Atom& atom) const {
  auto it = index_.find(atom);
  if (it == index_.end()) return std::nullopt;
  return values_[it->second];
}

bool Assignment::satisfies(const Literal& l) const {
  auto v = value(l.atom());
  if (!v) throw std::out_of_range("atom " + to_string(l.atom()) + " has no value");
  return *v == l.is_positive();
}

bool Assignment::satisfies(const Clause& c) const {
  return std::any_of(c.begin(), c.end(), [this](const Literal& l) { return satisfies(l); });
}

bool Assignment::satisfies(const ClauseSet& s) const {
  return std::all_of(s.begin(), s.end(), [this](const Clause& c) { return satisfies(c); });
}

// ---------------------------------------------------------------------------
// Oracles

std::vector<Atom> atom_universe(const ClauseSet& s) {
  std::vector<Atom> out;
  std::set<Atom> seen;
  for (const Clause& c : s) {
    for (const Literal& l : c) {
      if (seen.insert(l.atom()).second) out.push_back(l.atom());
    }
  }
  return out;
}

std::vector<Atom> atom_universe(const GenerationSet& g) {
  std::vector<Atom> out;
  out.reserve(g.size());
  for (const Literal& l : g) out.push_back(l.atom());
  return out;
}

SatResult is_satisfiable(const ClauseSet& s, const OracleLimits& limits) {
  const std::vector<Atom> universe = atom_universe(s);
  return is_satisfiable(s, universe, limits);
}

SatResult is_satisfiable(const ClauseSet& s, std::span<const Atom> universe,
                         const OracleLimits& limits) {
  check_universe_size(universe.size(), limits.max_atoms);
  AtomIndex index(universe);
  const std::vector<MaskClause> clauses = compile(s, index);
  const std::uint64_t total = std::uint64_t{1} << universe.size();
  const std::uint64_t model = find_lowest_model(clauses, total, limits.threads);
  if (model == total) return SatResult{Verdict::kUnsat, std::nullopt};
  return SatResult{Verdict::kSat, make_assignment(universe, model)};
}

bool is_standard_contradiction(const ClauseSet& s, const OracleLimits& limits) {
  const std::vector<Atom> universe = atom_universe(s);
  if (universe.size() > 64) {
    throw Error(ErrorCode::kTooManyAtoms,
                std::to_string(universe.size()) + " atoms exceed the 64-atom search bound");
  }
  AtomIndex index(universe);

  // Literals of each clause as (bit, positive) pairs, in clause order.
  struct Choice {
    std::uint64_t bit;
    bool positive;
  };
  std::vector<std::vector<Choice>> choices(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) {
    for (const Literal& l : s[k]) {
      choices[k].push_back({std::uint64_t{1} << index.at(l), l.is_positive()});
    }
  }

  // Depth-first over tuples. A frame is a consistent prefix (no complementary
  // pair yet) and the next literal of clause `state.clause` to try.
  struct Frame {
    SearchState state;
    std::size_t next = 0;
  };
  std::unordered_set<SearchState, SearchStateHash> dead;
  std::vector<Frame> stack{{SearchState{0, 0, 0}}};
  std::uint64_t expanded = 0;

  while (!stack.empty()) {
    Frame& top = stack.back();
    const SearchState state = top.state;
    if (state.clause == s.size()) return false;  // pair-free tuple found
    if (top.next == 0) {
      if (dead.contains(state)) {
        stack.pop_back();
        continue;
      }
      if (++expanded > limits.max_search_nodes) {
        throw Error(ErrorCode::kProductTooLarge,
                    "search exceeded " + std::to_string(limits.max_search_nodes) + " nodes");
      }
    }
    const auto& options = choices[state.clause];
    bool descended = false;
    while (top.next < options.size()) {
      const Choice c = options[top.next++];
      const std::uint64_t clash = c.positive ? state.neg : state.pos;
      if ((clash & c.bit) != 0) continue;  // every extension keeps this pair
      SearchState child{state.clause + 1, state.pos, state.neg};
      (c.positive ? child.pos : child.neg) |= c.bit;
      stack.push_back(Frame{child});
      descended = true;
      break;
    }
    if (!descended) {
      dead.insert(state);
      stack.pop_back();
    }
  }
  return true;
}

std::size_t MinimalityReport::sat_removals() const {
  return static_cast<std::size_t>(
      std::count_if(removals.begin(), removals.end(), [](const SatResult& r) { return r.sat(); }));
}

MinimalityReport check_minimality(const Rectangle& r, const OracleLimits& limits) {
  const std::vector<Atom> universe = atom_universe(r.generators());
  check_universe_size(universe.size(), limits.max_atoms);
  MinimalityReport report{is_satisfiable(r.clauses(), universe, limits), {}};
  report.removals.reserve(r.length());
  for (std::size_t j = 0; j < r.length(); ++j) {
    report.removals.push_back(is_satisfiable(remove_clauses(r, {j}), universe, limits));
  }
  return report;
}

bool entails(const ClauseSet& premises, const ClauseSet& hypothesis, const OracleLimits& limits) {
  ClauseSet combined = premises;
  combined.insert(combined.end(), hypothesis.begin(), hypothesis.end());
  return !is_satisfiable(combined, limits).sat();
}

bool implication_is_tautology(const ClauseSet& premises, const ClauseSet& hypothesis,
                              const OracleLimits& limits) {
  ClauseSet combined = premises;
  combined.insert(combined.end(), hypothesis.begin(), hypothesis.end());
  const std::vector<Atom> universe = atom_universe(combined);
  check_universe_size(universe.size(), limits.max_atoms);

  const std::uint64_t total = std::uint64_t{1} << universe.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    const Assignment a = make_assignment(universe, mask);
    const bool antecedent = a.satisfies(premises);
    const bool consequent = !a.satisfies(hypothesis);
    if (antecedent && !consequent) return false;
  }
  return true;
}

}  // namespace rect_atg
