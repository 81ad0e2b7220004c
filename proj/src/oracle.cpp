#include "puiseux/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace puiseux {

namespace {

std::string truncation_note(std::size_t gens, const Rat& T, std::size_t cap) {
  return " (generators " + std::to_string(gens) + ", T " + T.str() + ", cap " +
         std::to_string(cap) + ")";
}

// Reachability table over the grid (1/L) * Z.
std::vector<Rat> grid_closure(const std::vector<Rat>& gens, const Rat& T, const BigInt& L) {
  const std::int64_t top = (T * Rat(L)).floor().get_si();
  std::vector<char> reach(static_cast<std::size_t>(top) + 1, 0);
  reach[0] = 1;
  for (const Rat& g : gens) {
    const BigInt w = g.num() * (L / g.den());
    if (w > top) continue;
    const std::int64_t step = w.get_si();
    for (std::int64_t v = step; v <= top; ++v) {
      if (reach[v - step]) reach[v] = 1;
    }
  }
  std::vector<Rat> out;
  for (std::int64_t v = 0; v <= top; ++v) {
    if (reach[v]) out.emplace_back(BigInt(static_cast<long>(v)), L);
  }
  return out;
}

// Closure of {0} under adding generators, smallest element first.
std::vector<Rat> sparse_closure(const std::vector<Rat>& gens, const Rat& T, std::size_t cap) {
  std::set<Rat> seen{Rat(0)};
  std::priority_queue<Rat, std::vector<Rat>, std::greater<>> frontier;
  frontier.push(Rat(0));
  while (!frontier.empty()) {
    const Rat e = frontier.top();
    frontier.pop();
    for (const Rat& g : gens) {
      const Rat s = e + g;
      if (T < s) continue;
      if (seen.insert(s).second) {
        if (seen.size() > cap) {
          throw InputError("budget: enumeration exceeds the element cap" +
                           truncation_note(gens.size(), T, cap));
        }
        frontier.push(s);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

Enumeration close_under_sums(std::vector<Rat> gens, const Rat& T, std::size_t cap) {
  if (T.is_zero()) throw InputError("enumeration bound T must be positive");
  Enumeration e;
  e.T = T;
  e.generator_count = gens.size();
  std::erase_if(gens, [&](const Rat& g) { return T < g; });
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) {
    e.elements = {Rat(0)};
    return e;
  }
  e.max_coefficient = (T / gens.front()).floor();
  BigInt L = T.den();
  for (const Rat& g : gens) L = lcm(L, g.den());
  const BigInt grid = (T * Rat(L)).floor() + 1;
  if (grid <= BigInt(static_cast<long>(cap))) {
    e.elements = grid_closure(gens, T, L);
  } else {
    e.elements = sparse_closure(gens, T, cap);
  }
  return e;
}

// Whether every generator beyond the first `depth` exceeds T.
bool omitted_exceed(const MonoidSpec& spec, const Rat& T, std::size_t depth) {
  if (auto size = family_size(spec); size && depth >= *size) return true;
  if (spec.as<PrimeReciprocalShift>()) return T <= Rat(1);
  if (stream_order(spec) == StreamOrder::kIncreasing) {
    const auto next = generator_stream(spec, depth + 1);
    return next.size() <= depth || T < next.back();
  }
  return false;
}

}  // namespace

bool Enumeration::contains(const Rat& x) const {
  if (T < x) throw InputError("query " + x.str() + " beyond enumeration bound " + T.str());
  return std::binary_search(elements.begin(), elements.end(), x);
}

Enumeration enumerate(const MonoidSpec& spec, const Rat& T, std::size_t depth, std::size_t cap) {
  if (depth == 0) throw InputError("enumeration depth must be at least 1");
  if (depth == kAllGenerators) {
    const auto size = family_size(spec);
    if (!size) throw InputError("the family is infinite; give a generator depth");
    depth = *size;
  }
  Enumeration e = close_under_sums(generator_stream(spec, depth), T, cap);
  e.generator_count = std::min(depth, family_size(spec).value_or(depth));
  e.complete = omitted_exceed(spec, T, depth);
  return e;
}

Enumeration enumerate_generators(const std::vector<Rat>& gens, const Rat& T, std::size_t cap) {
  if (gens.empty()) throw InputError("empty generator list");
  Enumeration e = close_under_sums(gens, T, cap);
  e.complete = true;
  return e;
}

std::vector<Rat> naive_atoms(const Enumeration& e) {
  if (!e.complete) throw InputError("naive_atoms needs a complete enumeration");
  std::vector<Rat> out;
  for (std::size_t i = 1; i < e.elements.size(); ++i) {
    const Rat& x = e.elements[i];
    bool decomposes = false;
    for (std::size_t j = 1; j < i && !decomposes; ++j) {
      const Rat& u = e.elements[j];
      if (x < u + u) break;
      decomposes = std::binary_search(e.elements.begin(), e.elements.end(), x.minus(u));
    }
    if (!decomposes) out.push_back(x);
  }
  return out;
}

std::vector<Factorization> naive_factorizations(const Enumeration& e,
                                                const std::vector<Rat>& atom_list,
                                                const Rat& x) {
  if (!e.complete) throw InputError("naive_factorizations needs a complete enumeration");
  if (e.T < x) throw InputError("x beyond the enumeration bound");
  std::vector<Rat> atoms_sorted = atom_list;
  std::sort(atoms_sorted.begin(), atoms_sorted.end());
  atoms_sorted.erase(std::unique(atoms_sorted.begin(), atoms_sorted.end()), atoms_sorted.end());

  // table[v]: factorizations of v as nondecreasing atom-index lists.
  using Word = std::vector<std::size_t>;
  std::map<Rat, std::set<Word>> table;
  table[Rat(0)].insert(Word{});
  for (const Rat& v : e.elements) {
    if (x < v) break;
    if (v.is_zero()) continue;
    std::set<Word> words;
    for (std::size_t a = 0; a < atoms_sorted.size() && atoms_sorted[a] <= v; ++a) {
      const auto it = table.find(v.minus(atoms_sorted[a]));
      if (it == table.end()) continue;
      for (const Word& w : it->second) {
        if (!w.empty() && w.back() > a) continue;
        Word longer = w;
        longer.push_back(a);
        words.insert(std::move(longer));
      }
    }
    if (!words.empty()) table[v] = std::move(words);
  }

  std::vector<Factorization> out;
  const auto it = table.find(x);
  if (it == table.end()) return out;
  for (const Word& w : it->second) {
    std::map<std::size_t, std::int64_t, std::greater<>> counts;
    for (std::size_t a : w) ++counts[a];
    Factorization z;
    for (const auto& [a, c] : counts) {
      z.parts.push_back({atoms_sorted[a], c});
      z.length += c;
    }
    out.push_back(std::move(z));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace puiseux
