#include "basilica/enumerate.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <thread>

#include "basilica/detail/packed.hpp"
#include "basilica/errors.hpp"

namespace basilica {

using detail::packed_aut;
using detail::packed_predicates;

group_selector group_selector::parse(std::string_view text) {
  if (text == "M" || text == "m") return {selector_kind::m};
  if (text == "B" || text == "b") return {selector_kind::b};
  if (text == "E" || text == "e") return {selector_kind::e};
  if (text == "frattini" || text == "Frattini") return {selector_kind::frattini};
  if (text == "full" || text == "aut" || text == "all") return {selector_kind::full_aut};
  if (text.size() >= 3 && (text[0] == 'U' || text[0] == 'u') && text[1] == ':') {
    int level = -1;
    auto [ptr, ec] = std::from_chars(text.data() + 2, text.data() + text.size(), level);
    if (ec == std::errc() && ptr == text.data() + text.size() && level >= 0)
      return {selector_kind::u, level};
  }
  throw input_error("unknown selector: " + std::string(text) +
                    " (expected M, B, E, U:<m>, frattini, or full)");
}

std::string group_selector::to_string() const {
  switch (kind) {
    case selector_kind::m: return "M";
    case selector_kind::b: return "B";
    case selector_kind::e: return "E";
    case selector_kind::u: return "U:" + std::to_string(u_level);
    case selector_kind::frattini: return "frattini";
    case selector_kind::full_aut: return "full";
  }
  throw input_error("unknown selector");
}

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

// Static contiguous partition of [0, total); fn(lo, hi, tid) runs per chunk.
template <typename Fn>
void parallel_ranges(std::uint64_t total, int threads, Fn&& fn) {
  if (threads <= 1 || total < 1024) {
    fn(std::uint64_t{0}, total, 0);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(threads));
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const std::uint64_t lo = std::min(total, chunk * static_cast<std::uint64_t>(t));
    const std::uint64_t hi = std::min(total, lo + chunk);
    pool.emplace_back([&fn, lo, hi, t] { fn(lo, hi, t); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace

enumeration_result sweep(int depth, group_selector selector, int threads) {
  if (depth < 1) throw input_error("sweep depth must be at least 1");
  if (depth > 5)
    throw resource_error("sweep is limited to depth 5 (2^31 portraits); depth " +
                         std::to_string(depth) + " was requested");
  if (selector.kind == selector_kind::frattini && depth < 5)
    throw precision_error("Frattini membership needs P mod 8, so depth >= 5");
  if (selector.kind == selector_kind::u && selector.u_level > depth)
    throw input_error("U level exceeds the depth");

  const auto start = clock_type::now();
  const std::uint64_t total = detail::portrait_count(depth);
  const packed_predicates pred(depth);
  threads = detail::resolve_threads(threads);

  std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
  auto count_range = [&](auto&& predicate) {
    parallel_ranges(total, threads, [&](std::uint64_t lo, std::uint64_t hi, int tid) {
      std::uint64_t c = 0;
      for (std::uint64_t w = lo; w < hi; ++w)
        if (predicate(w)) ++c;
      partial[static_cast<std::size_t>(tid)] += c;
    });
  };

  switch (selector.kind) {
    case selector_kind::m:
      count_range([&](std::uint64_t w) { return pred.in_m(w); });
      break;
    case selector_kind::b:
      count_range([&](std::uint64_t w) { return pred.in_b(w); });
      break;
    case selector_kind::e:
      count_range([&](std::uint64_t w) { return pred.in_e(w); });
      break;
    case selector_kind::u:
      count_range([&](std::uint64_t w) { return pred.in_u(w, selector.u_level); });
      break;
    case selector_kind::frattini:
      count_range([&](std::uint64_t w) { return pred.in_frattini(w); });
      break;
    case selector_kind::full_aut:
      count_range([](std::uint64_t) { return true; });
      break;
  }

  enumeration_result result;
  result.depth = depth;
  result.selector = selector.to_string();
  result.method = "sweep";
  for (std::uint64_t c : partial) result.count += c;
  result.seconds = seconds_since(start);
  return result;
}

portrait_set::portrait_set(int depth) : depth_(depth) {
  if (depth < 1 || depth > 5) throw input_error("portrait sets support depths 1..5");
  bits_ = static_cast<int>(detail::portrait_bits(depth));
  const std::size_t words = static_cast<std::size_t>((universe_size() + 63) / 64);
  words_ = std::shared_ptr<std::atomic<std::uint64_t>[]>(new std::atomic<std::uint64_t>[words]());
}

bool portrait_set::insert(std::uint64_t index) {
  const std::uint64_t bit = std::uint64_t{1} << (index & 63);
  return (words_[index >> 6].fetch_or(bit, std::memory_order_relaxed) & bit) == 0;
}

closure_result closure(const std::vector<tree_aut>& generators, const closure_options& options) {
  if (generators.empty()) throw input_error("closure needs at least one generator");
  const int depth = generators.front().depth();
  for (const tree_aut& g : generators)
    if (g.depth() != depth) throw input_error("closure generators must share one depth");
  if (depth > 5)
    throw resource_error("closure materialization is limited to depth 5");

  const auto start = clock_type::now();
  const int threads = detail::resolve_threads(options.threads);

  // Multipliers for the generators and their inverses, in generator order;
  // an inverse that coincides with a listed generator is skipped.
  std::vector<detail::packed_multiplier> mult;
  std::vector<std::uint64_t> seen_packed;
  auto add = [&](const tree_aut& g) {
    const std::uint64_t packed = g.pack_index();
    for (std::uint64_t s : seen_packed)
      if (s == packed) return;
    seen_packed.push_back(packed);
    mult.emplace_back(g);
  };
  for (const tree_aut& g : generators) {
    add(g);
    add(inverse(g));
  }

  closure_result result;
  result.members = portrait_set(depth);
  result.members.insert(0);  // the identity portrait
  result.elements.push_back(0);

  const std::uint64_t budget =
      options.budget == 0 ? result.members.universe_size() : options.budget;

  std::size_t frontier_begin = 0;
  while (frontier_begin < result.elements.size()) {
    const std::size_t frontier_end = result.elements.size();
    const std::size_t frontier_size = frontier_end - frontier_begin;

    if (threads <= 1 || frontier_size < 4096) {
      for (std::size_t q = frontier_begin; q < frontier_end; ++q) {
        const packed_aut w = result.elements[q];
        for (const auto& step : mult) {
          const packed_aut v = step(w);
          if (result.members.insert(v)) result.elements.push_back(static_cast<std::uint32_t>(v));
        }
      }
    } else {
      std::vector<std::vector<std::uint32_t>> local(static_cast<std::size_t>(threads));
      parallel_ranges(frontier_size, threads, [&](std::uint64_t lo, std::uint64_t hi, int tid) {
        auto& out = local[static_cast<std::size_t>(tid)];
        for (std::uint64_t q = lo; q < hi; ++q) {
          const packed_aut w = result.elements[frontier_begin + q];
          for (const auto& step : mult) {
            const packed_aut v = step(w);
            if (result.members.insert(v)) out.push_back(static_cast<std::uint32_t>(v));
          }
        }
      });
      for (const auto& chunk : local)
        result.elements.insert(result.elements.end(), chunk.begin(), chunk.end());
    }

    frontier_begin = frontier_end;
    if (result.elements.size() > budget)
      throw resource_error("closure budget of " + std::to_string(budget) +
                               " elements exceeded; partial count is not final",
                           result.elements.size());
  }

  result.summary.depth = depth;
  result.summary.selector = "closure";
  result.summary.count = result.elements.size();
  result.summary.method = "closure";
  result.summary.seconds = seconds_since(start);
  if (!options.keep_elements) {
    result.elements.clear();
    result.elements.shrink_to_fit();
  }
  return result;
}

m_census census_m5(int threads, std::vector<std::uint32_t>* frattini_members) {
  const auto start = clock_type::now();
  const packed_predicates pred(5);
  threads = detail::resolve_threads(threads);
  const std::uint64_t total = detail::portrait_count(5);

  std::vector<m_census> partial(static_cast<std::size_t>(threads));
  std::vector<std::vector<std::uint32_t>> local_frattini(static_cast<std::size_t>(threads));

  parallel_ranges(total, threads, [&](std::uint64_t lo, std::uint64_t hi, int tid) {
    m_census& c = partial[static_cast<std::size_t>(tid)];
    auto* frat = frattini_members ? &local_frattini[static_cast<std::size_t>(tid)] : nullptr;
    for (std::uint64_t w = lo; w < hi; ++w) {
      if (pred.in_e(w)) ++c.e_count;
      if (!pred.in_m(w)) continue;
      ++c.m_count;
      const unsigned p8 = pred.p_root(w);
      const unsigned root_par = static_cast<unsigned>(w & 1);
      const unsigned level2_odd = pred.level_count_odd(w, 1) ? 1u : 0u;
      ++c.cells[root_par][level2_odd][p8 >> 1];
      if (p8 == 1) {
        ++c.b_count;
        if (root_par == 0 && level2_odd == 0) {
          ++c.frattini_count;
          if (frat) frat->push_back(static_cast<std::uint32_t>(w));
        }
      }
      if (!pred.parity_pattern_holds(w)) ++c.parity_pattern_violations;
    }
  });

  m_census merged;
  merged.total = total;
  for (const m_census& c : partial) {
    merged.m_count += c.m_count;
    merged.b_count += c.b_count;
    merged.e_count += c.e_count;
    merged.frattini_count += c.frattini_count;
    merged.parity_pattern_violations += c.parity_pattern_violations;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int k = 0; k < 4; ++k) merged.cells[i][j][k] += c.cells[i][j][k];
  }
  if (frattini_members) {
    frattini_members->clear();
    for (const auto& chunk : local_frattini)
      frattini_members->insert(frattini_members->end(), chunk.begin(), chunk.end());
  }
  merged.seconds = seconds_since(start);
  return merged;
}

}  // namespace basilica
