#include "schreier/family.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "schreier/errors.hpp"

namespace schreier {

std::optional<std::size_t> maximal_block_end(std::span<const Element> seq, std::size_t start,
                                             Ordinal xi) {
  if (start >= seq.size()) return std::nullopt;
  if (xi.value == 0) return start + 1;
  const Ordinal lower{xi.value - 1};
  // A maximal S_{z+1} block starting at p is exactly p maximal S_z blocks.
  std::size_t pos = start;
  for (Element c = 0; c < seq[start]; ++c) {
    auto next = maximal_block_end(seq, pos, lower);
    if (!next) return std::nullopt;
    pos = *next;
  }
  return pos;
}

std::size_t admissible_run_end(std::span<const Element> seq, std::size_t start, Ordinal xi) {
  if (start >= seq.size()) return seq.size();
  if (xi.value == 0) return start + 1;
  const Ordinal lower{xi.value - 1};
  std::size_t pos = start;
  for (Element c = 0; c < seq[start] && pos < seq.size(); ++c) pos = admissible_run_end(seq, pos, lower);
  return pos;
}

std::size_t cover_count(std::span<const Element> seq, std::size_t start, Ordinal xi) {
  std::size_t pieces = 0;
  for (std::size_t pos = start; pos < seq.size(); ++pieces) pos = admissible_run_end(seq, pos, xi);
  return pieces;
}

bool greedy_push(std::uint32_t* slots, unsigned xi, Element e, bool started) {
  auto fresh = static_cast<std::uint32_t>(std::min<Element>(e - 1, UINT32_MAX));
  if (started) {
    for (unsigned l = 0; l < xi; ++l) {
      if (slots[l] > 0) {
        --slots[l];
        std::fill(slots, slots + l, fresh);
        return false;
      }
    }
  }
  std::fill(slots, slots + xi, fresh);
  return true;
}

bool is_member(std::span<const Element> f, Ordinal xi) {
  return f.empty() || admissible_run_end(f, 0, xi) == f.size();
}

bool is_member(const FinSet& f, Ordinal xi) { return is_member(f.view(), xi); }

bool is_maximal(const FinSet& f, Ordinal xi) {
  if (!is_member(f, xi))
    throw std::invalid_argument(f.to_string() + " is not a member of S_" + std::to_string(xi.value));
  if (f.empty()) return false;
  std::vector<Element> probe(f.begin(), f.end());
  probe.push_back(f.max() + 1);
  return !is_member(probe, xi);
}

Decomposition decompose(const FinSet& prefix, Ordinal xi) {
  Decomposition d{xi, {}, {}};
  auto seq = prefix.view();
  std::size_t pos = 0;
  while (pos < seq.size()) {
    auto end = maximal_block_end(seq, pos, xi);
    if (!end) break;
    d.blocks.push_back(prefix.slice(pos, *end));
    pos = *end;
  }
  d.remainder = prefix.slice(pos, seq.size());
  return d;
}

std::size_t tau(const FinSet& a, Ordinal xi) {
  if (a.empty()) throw std::invalid_argument("tau is undefined for the empty set");
  // Blocks completed inside A do not depend on the tail; an incomplete
  // remainder is the start of the block holding max A.
  auto d = decompose(a, xi);
  return d.blocks.size() + (d.remainder.empty() ? 0 : 1);
}

namespace {

void charge(std::atomic<std::uint64_t>& nodes, const SearchBudget& budget) {
  if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget.max_nodes)
    throw BudgetExceeded("subset search exceeded " + std::to_string(budget.max_nodes) + " nodes");
}

void collect_members(std::span<const Element> u, std::size_t i, std::vector<Element>& chosen,
                     Ordinal xi, std::vector<FinSet>& out, std::atomic<std::uint64_t>& nodes,
                     const SearchBudget& budget) {
  charge(nodes, budget);
  if (i == u.size()) {
    out.emplace_back(chosen);
    return;
  }
  chosen.push_back(u[i]);
  if (is_member(chosen, xi)) collect_members(u, i + 1, chosen, xi, out, nodes, budget);
  chosen.pop_back();
  collect_members(u, i + 1, chosen, xi, out, nodes, budget);
}

struct MaximalWalk {
  std::span<const Element> u;
  Ordinal xi;
  const std::function<void(const FinSet&)>& visit;
  std::atomic<std::uint64_t>& nodes;
  SearchBudget budget;
  std::vector<Element> chosen;
  std::vector<Element> scratch;

  bool member_with_tail(std::size_t from) {
    scratch.assign(chosen.begin(), chosen.end());
    scratch.insert(scratch.end(), u.begin() + static_cast<std::ptrdiff_t>(from), u.end());
    return is_member(scratch, xi);
  }

  bool extendable() {
    for (Element x : u) {
      if (std::binary_search(chosen.begin(), chosen.end(), x)) continue;
      scratch.assign(chosen.begin(), chosen.end());
      scratch.insert(std::upper_bound(scratch.begin(), scratch.end(), x), x);
      if (is_member(scratch, xi)) return true;
    }
    return false;
  }

  void run(std::size_t i) {
    charge(nodes, budget);
    if (i == u.size()) {
      if (!chosen.empty() && !extendable()) visit(FinSet(chosen));
      return;
    }
    chosen.push_back(u[i]);
    if (is_member(chosen, xi)) run(i + 1);
    chosen.pop_back();
    // Skipping u[i] is pointless when everything left still fits: the final
    // set would then absorb u[i].
    if (!member_with_tail(i)) run(i + 1);
  }
};

}  // namespace

std::vector<FinSet> enumerate_members(const FinSet& universe, Ordinal xi, bool maximal_only,
                                      SearchBudget budget) {
  std::vector<FinSet> out;
  std::vector<Element> chosen;
  std::atomic<std::uint64_t> nodes{0};
  collect_members(universe.view(), 0, chosen, xi, out, nodes, budget);
  if (maximal_only)
    std::erase_if(out, [&](const FinSet& f) { return f.empty() || !is_maximal(f, xi); });
  std::sort(out.begin(), out.end(), [](const FinSet& a, const FinSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

std::uint64_t for_each_universe_maximal(const FinSet& universe, Ordinal xi,
                                        const std::function<void(const FinSet&)>& visit,
                                        SearchBudget budget) {
  std::atomic<std::uint64_t> nodes{0};
  MaximalWalk walk{universe.view(), xi, visit, nodes, budget, {}, {}};
  walk.run(0);
  return nodes.load();
}

std::vector<mpz_class> constants_chain(std::uint64_t d, Ordinal xi) {
  if (d < 1) throw std::invalid_argument("constants_chain needs D >= 1");
  std::vector<mpz_class> e{mpz_class(1)};
  const mpz_class dd(static_cast<unsigned long>(d));
  for (unsigned z = 0; z < xi.value; ++z) {
    mpz_class zz(z);
    e.push_back(((zz + 1) * e.back() + 1) * ((2 * dd + 1) * (zz + 2) + 1));
  }
  return e;
}

}  // namespace schreier
