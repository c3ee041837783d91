// Command-line front end: every verification as a reproducible run with
// machine-readable output. Exit codes: 0 pass, 2 check failure, 3 input or
// domain error, 4 resource error, 5 precision error.

#include <CLI11.hpp>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "basilica/dyadic.hpp"
#include "basilica/enumerate.hpp"
#include "basilica/errors.hpp"
#include "basilica/groups.hpp"
#include "basilica/json_writer.hpp"
#include "basilica/preimage.hpp"
#include "basilica/rational.hpp"
#include "basilica/reports.hpp"

namespace {

using namespace basilica;

enum class output_format { json, text, csv };

output_format parse_format(const std::string& f) {
  if (f == "json") return output_format::json;
  if (f == "text") return output_format::text;
  if (f == "csv") return output_format::csv;
  throw input_error("unknown format: " + f + " (expected json, text, or csv)");
}

std::complex<double> parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return {std::stod(text), 0.0};
    return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw input_error("malformed complex number: " + text + " (expected re or re,im)");
  }
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos)
    throw input_error("malformed range: " + text + " (expected lo..hi)");
  try {
    const std::int64_t lo = std::stoll(text.substr(0, dots));
    const std::int64_t hi = std::stoll(text.substr(dots + 2));
    if (lo > hi) throw input_error("empty range: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw input_error("malformed range: " + text);
  } catch (const std::out_of_range&) {
    throw input_error("range endpoint out of 64-bit range: " + text);
  }
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

struct common_options {
  int threads = 0;
  std::string format = "json";
  bool timings = false;
};

void add_common(CLI::App* cmd, common_options& opt) {
  cmd->add_option("--threads", opt.threads,
                  "Worker threads (0 = BASILICA_THREADS env or hardware)");
  cmd->add_option("--format", opt.format, "Output format: json, text, csv")
      ->default_val("json");
  cmd->add_flag("--timings", opt.timings,
                "Include wall-clock seconds in JSON output (breaks byte-for-byte "
                "reproducibility)");
}

// ---------------------------------------------------------------- orders --

int cmd_orders(int max_level, bool check, const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  if (max_level < 1 || max_level > 32) throw input_error("orders supports levels 1..32");
  const int sweep_limit = check ? std::min(max_level, 5) : 0;

  bool all_pass = true;
  struct row {
    int n;
    std::int64_t e, b, m, aut;
    bool checked = false;
    bool pass = true;
    std::uint64_t sweep_e = 0, sweep_b = 0, sweep_m = 0;
  };
  std::vector<row> rows;
  for (int n = 1; n <= max_level; ++n) {
    row r{n, log2_order_e(n), log2_order_b(n), log2_order_m(n), log2_order_aut(n)};
    if (log2_order_b_counting(n) != r.b) {
      r.pass = false;
      all_pass = false;
    }
    if (check && n <= sweep_limit) {
      r.checked = true;
      r.sweep_e = sweep(n, {selector_kind::e}, opt.threads).count;
      r.sweep_b = sweep(n, {selector_kind::b}, opt.threads).count;
      r.sweep_m = sweep(n, {selector_kind::m}, opt.threads).count;
      r.pass = r.pass && r.sweep_e == (std::uint64_t{1} << r.e) &&
               r.sweep_b == (std::uint64_t{1} << r.b) && r.sweep_m == (std::uint64_t{1} << r.m);
      if (!r.pass) all_pass = false;
    }
    rows.push_back(r);
  }

  if (fmt == output_format::json) {
    json doc = json::object();
    doc.set("max_level", std::int64_t{max_level});
    doc.set("checked_to", std::int64_t{sweep_limit});
    json arr = json::array();
    for (const row& r : rows) {
      json jr = json::object();
      jr.set("n", std::int64_t{r.n});
      jr.set("e", r.e);
      jr.set("b", r.b);
      jr.set("m", r.m);
      jr.set("aut", r.aut);
      if (r.checked) {
        jr.set("sweep_e", r.sweep_e);
        jr.set("sweep_b", r.sweep_b);
        jr.set("sweep_m", r.sweep_m);
        jr.set("sweep_check", r.pass ? "pass" : "fail");
      }
      arr.push(std::move(jr));
    }
    doc.set("rows", std::move(arr));
    doc.set("pass", all_pass);
    emit(doc);
  } else if (fmt == output_format::csv) {
    std::cout << "n,e,b,m,aut" << (check ? ",sweep_e,sweep_b,sweep_m,sweep_check" : "") << "\n";
    for (const row& r : rows) {
      std::cout << r.n << "," << r.e << "," << r.b << "," << r.m << "," << r.aut;
      if (check) {
        if (r.checked)
          std::cout << "," << r.sweep_e << "," << r.sweep_b << "," << r.sweep_m << ","
                    << (r.pass ? "pass" : "fail");
        else
          std::cout << ",,,,-";
      }
      std::cout << "\n";
    }
  } else {
    std::printf("%4s %10s %10s %10s %12s%s\n", "n", "log2|E|", "log2|B|", "log2|M|",
                "log2|Aut|", check ? "  sweep" : "");
    for (const row& r : rows) {
      std::printf("%4d %10lld %10lld %10lld %12lld", r.n, static_cast<long long>(r.e),
                  static_cast<long long>(r.b), static_cast<long long>(r.m),
                  static_cast<long long>(r.aut));
      if (check) std::printf("  %s", r.checked ? (r.pass ? "PASS" : "FAIL") : "-");
      std::printf("\n");
    }
  }
  return all_pass ? 0 : 2;
}

// ----------------------------------------------------------------- sweep --

int cmd_sweep(int depth, const std::string& selector_text, const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  const group_selector selector = group_selector::parse(selector_text);
  const enumeration_result r = sweep(depth, selector, opt.threads);
  if (fmt == output_format::json) {
    json doc = json::object();
    doc.set("depth", std::int64_t{r.depth});
    doc.set("selector", r.selector);
    doc.set("count", r.count);
    doc.set("method", r.method);
    if (opt.timings) doc.set("seconds", r.seconds);
    emit(doc);
  } else if (fmt == output_format::text) {
    std::cout << "sweep depth " << r.depth << " selector " << r.selector << ": " << r.count
              << " portraits (" << r.seconds << " s)\n";
  } else {
    throw input_error("csv output is available for orders and condition --scan");
  }
  return 0;
}

// --------------------------------------------------------------- closure --

// Accepts generator names and hex-serialized portraits ("hex:...") so closure
// inputs can round-trip through the serialization format.
std::vector<tree_aut> parse_generators(const std::string& text, int depth) {
  std::vector<tree_aut> gens;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string name =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (name == "identity") {
      gens.push_back(identity_aut(depth));
    } else if (name.rfind("hex:", 0) == 0) {
      tree_aut g = tree_aut::from_hex(name.substr(4));
      if (g.depth() != depth)
        throw input_error("hex portrait has depth " + std::to_string(g.depth()) +
                          ", expected " + std::to_string(depth));
      gens.push_back(std::move(g));
    } else if (!name.empty()) {
      gens.push_back(make_generator(parse_generator_name(name), depth));
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (gens.empty()) throw input_error("no generators given");
  return gens;
}

// ------------------------------------------------------------- generator --

int cmd_generator(const std::string& name, int depth, const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  const tree_aut g = name == "identity"
                         ? identity_aut(depth)
                         : make_generator(parse_generator_name(name), depth);
  const node_address root;
  if (fmt == output_format::json) {
    json doc = json::object();
    doc.set("name", name);
    doc.set("depth", std::int64_t{depth});
    doc.set("hex", g.to_hex());
    doc.set("in_m", in_m(g));
    doc.set("in_b", in_b(g));
    doc.set("p_root", p_value(g, root).to_string());
    emit(doc);
  } else {
    std::cout << name << " at depth " << depth << ": hex " << g.to_hex() << ", P(root) "
              << p_value(g, root).to_string() << "\n";
  }
  return 0;
}

int cmd_closure(int depth, const std::string& generators, std::uint64_t budget,
                const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  closure_options copt;
  copt.budget = budget;
  copt.threads = opt.threads;
  copt.keep_elements = false;
  const closure_result r = closure(parse_generators(generators, depth), copt);
  if (fmt == output_format::json) {
    json doc = json::object();
    doc.set("depth", std::int64_t{r.summary.depth});
    json gen_list = json::array();
    {
      std::size_t start = 0;
      while (start <= generators.size()) {
        const std::size_t comma = generators.find(',', start);
        gen_list.push(generators.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    doc.set("generators", std::move(gen_list));
    doc.set("count", r.summary.count);
    doc.set("method", r.summary.method);
    if (opt.timings) doc.set("seconds", r.summary.seconds);
    emit(doc);
  } else if (fmt == output_format::text) {
    std::cout << "closure depth " << r.summary.depth << " of {" << generators
              << "}: " << r.summary.count << " elements (" << r.summary.seconds << " s)\n";
  } else {
    throw input_error("csv output is available for orders and condition --scan");
  }
  return 0;
}

// -------------------------------------------------------------- frattini --

int cmd_frattini(int depth, const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  const frattini_report r = verify_frattini(depth, opt.threads);
  if (fmt == output_format::json) {
    json doc = json::object();
    doc.set("depth", std::int64_t{r.depth});
    doc.set("m_order", r.m_order);
    doc.set("order", r.order);
    doc.set("index", r.index);
    doc.set("normal", r.normal);
    doc.set("cosets_witnessed", std::int64_t{r.cosets_witnessed});
    doc.set("coset_sizes_equal", r.coset_sizes_equal);
    doc.set("parity_pattern_violations", r.parity_pattern_violations);
    doc.set("pass", r.pass);
    if (opt.timings) doc.set("seconds", r.seconds);
    emit(doc);
  } else {
    std::cout << "Frattini subgroup of M_" << r.depth << ": order " << r.order << ", index "
              << r.index << ", normal " << (r.normal ? "yes" : "no") << ", cosets witnessed "
              << r.cosets_witnessed << " -> " << (r.pass ? "PASS" : "FAIL") << "\n";
  }
  return r.pass ? 0 : 2;
}

// -------------------------------------------------------------- preimage --

template <typename Real>
int run_preimage(std::complex<double> x0, int depth, std::uint64_t seed, double tol,
                 double residual_threshold, bool dump, bool extended,
                 const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  const root_chain<Real> chain((depth + 1) / 2 + 1);
  auto tree = canonical_label(basic_preimage_tree<Real>::build(x0, depth, seed, tol), chain);
  const double zeta_residual = max_zetaprod_residual(tree, chain);
  const double square_residual = max_sibling_square_residual(tree);

  std::mt19937_64 rng(seed);
  double nrel_residual = 0.0;
  const int m_max = (depth - 1) / 2;
  for (int m = 0; m <= m_max; ++m) {
    const nrel_report rep =
        verify_nrel(tree, node_address(), m, nrel_selection::from_seed(m, rng()));
    nrel_residual = std::max(nrel_residual, rep.max_residual);
  }

  const bool pass = zeta_residual <= residual_threshold &&
                    square_residual <= residual_threshold &&
                    nrel_residual <= residual_threshold;

  if (fmt == output_format::json) {
    json doc = json::object();
    json x = json::array();
    x.push(x0.real());
    x.push(x0.imag());
    doc.set("x0", std::move(x));
    doc.set("depth", std::int64_t{depth});
    doc.set("seed", std::uint64_t{seed});
    doc.set("tolerance", tol);
    doc.set("extended", extended);
    doc.set("swaps", std::uint64_t{tree.swap_log().size()});
    doc.set("max_zetaprod_residual", zeta_residual);
    doc.set("max_sibling_square_residual", square_residual);
    doc.set("max_nrel_residual", nrel_residual);
    doc.set("residual_threshold", residual_threshold);
    doc.set("pass", pass);
    if (dump) {
      json swaps = json::array();
      for (const auto& [first, second] : tree.swap_log()) {
        json pair = json::array();
        pair.push(first.to_string());
        pair.push(second.to_string());
        swaps.push(std::move(pair));
      }
      doc.set("swap_log", std::move(swaps));
      json nodes = json::array();
      for (int level = 0; level <= depth; ++level) {
        for (std::uint32_t i = 0; i < (std::uint32_t{1} << level); ++i) {
          const node_address a(level, i);
          const std::complex<double> v = tree.value_as_double(a);
          json node = json::object();
          node.set("address", a.to_string());
          node.set("re", v.real());
          node.set("im", v.imag());
          nodes.push(std::move(node));
        }
      }
      doc.set("nodes", std::move(nodes));
    }
    emit(doc);
  } else if (fmt == output_format::text) {
    std::cout << "preimage tree x0=(" << x0.real() << "," << x0.imag() << ") depth " << depth
              << ": swaps " << tree.swap_log().size() << ", max zetaprod residual "
              << zeta_residual << ", max sibling-square residual " << square_residual
              << ", max nrel residual " << nrel_residual << " -> "
              << (pass ? "PASS" : "FAIL") << "\n";
  } else {
    throw input_error("csv output is available for orders and condition --scan");
  }
  return pass ? 0 : 2;
}

// ------------------------------------------------------------- condition --

int cmd_condition(const std::string& x0_text, const std::string& scan_text,
                  const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  if (!x0_text.empty()) {
    const rational x0 = rational::parse(x0_text);
    const bool qualifies = degree_condition(x0);
    if (fmt == output_format::json) {
      json doc = json::object();
      doc.set("x0", x0.to_string());
      doc.set("qualifies", qualifies);
      json classes = json::array();
      classes.push(square_class(-x0));
      classes.push(square_class(x0 + rational(1)));
      classes.push(std::int64_t{-1});
      classes.push(std::int64_t{2});
      doc.set("square_classes", std::move(classes));
      emit(doc);
    } else {
      std::cout << "x0 = " << x0.to_string() << ": degree "
                << (qualifies ? "16 (qualifies)" : "< 16 (does not qualify)") << "\n";
    }
    return 0;
  }

  const auto [lo, hi] = parse_range(scan_text);
  if (hi - lo > 2000000) throw resource_error("scan range too large");
  const std::vector<std::int64_t> hits = scan_integers(lo, hi);
  if (fmt == output_format::json) {
    json doc = json::object();
    doc.set("from", lo);
    doc.set("to", hi);
    json arr = json::array();
    for (std::int64_t v : hits) arr.push(v);
    doc.set("qualifying", std::move(arr));
    emit(doc);
  } else if (fmt == output_format::csv) {
    std::cout << "x0\n";
    for (std::int64_t v : hits) std::cout << v << "\n";
  } else {
    std::cout << "qualifying x0 in [" << lo << ", " << hi << "]:";
    for (std::int64_t v : hits) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

// ------------------------------------------------------------ verify-all --

struct check_line {
  std::string name;
  bool pass;
  std::string detail;
};

int cmd_verify_all(int max_depth, std::uint64_t seed, const common_options& opt) {
  const output_format fmt = parse_format(opt.format);
  if (max_depth < 2 || max_depth > 5) throw input_error("verify-all supports --max-depth 2..5");
  std::vector<check_line> checks;
  auto add = [&](std::string name, bool pass, std::string detail = "") {
    checks.push_back({std::move(name), pass, std::move(detail)});
  };

  {
    bool ok = true;
    for (int n = 1; n <= 10; ++n)
      ok = ok && log2_order_b_counting(n) == log2_order_b(n);
    ok = ok && log2_order_m(5) == 25 && log2_order_b(10) == 687 && log2_order_e(7) == 43;
    add("order_formulas", ok);
  }

  for (int n = 1; n <= max_depth; ++n) {
    const std::uint64_t em = sweep(n, {selector_kind::e}, opt.threads).count;
    const std::uint64_t bm = sweep(n, {selector_kind::b}, opt.threads).count;
    const std::uint64_t mm = sweep(n, {selector_kind::m}, opt.threads).count;
    const bool ok = em == (std::uint64_t{1} << log2_order_e(n)) &&
                    bm == (std::uint64_t{1} << log2_order_b(n)) &&
                    mm == (std::uint64_t{1} << log2_order_m(n));
    add("sweep_orders_depth_" + std::to_string(n), ok,
        "E=" + std::to_string(em) + " B=" + std::to_string(bm) + " M=" + std::to_string(mm));
  }

  for (int n = 1; n <= max_depth; ++n) {
    closure_options copt;
    copt.threads = opt.threads;
    std::vector<tree_aut> ab = {make_generator(generator_name::alpha, n),
                                make_generator(generator_name::beta, n)};
    const closure_result bc = closure(ab, copt);
    ab.push_back(make_generator(generator_name::epsilon, n));
    ab.push_back(make_generator(generator_name::theta, n));
    const closure_result mc = closure(ab, copt);
    bool ok = bc.summary.count == (std::uint64_t{1} << log2_order_b(n)) &&
              mc.summary.count == (std::uint64_t{1} << log2_order_m(n));
    if (n <= 4) {
      for (std::uint64_t w = 0; ok && w < (std::uint64_t{1} << ((1u << n) - 1)); ++w) {
        const tree_aut s = tree_aut::from_index(n, w);
        ok = bc.members.contains(w) == in_b(s) && mc.members.contains(w) == in_m(s);
      }
    } else {
      std::mt19937_64 rng(seed);
      for (int t = 0; ok && t < 20000; ++t) {
        const std::uint64_t w = rng() & ((std::uint64_t{1} << 31) - 1);
        const tree_aut s = tree_aut::from_index(n, w);
        ok = bc.members.contains(w) == in_b(s) && mc.members.contains(w) == in_m(s);
      }
    }
    add("closure_equals_predicates_depth_" + std::to_string(n), ok);
  }

  for (int n = 2; n <= max_depth; ++n) {
    const exact_sequence_report rep = verify_exact_sequence(n, opt.threads, 100, seed);
    add("exact_sequence_depth_" + std::to_string(n), rep.pass,
        "P(epsilon) = " + dyadic_residue{rep.p_epsilon, rep.j}.to_string() +
            ", P(theta) = " + dyadic_residue{rep.p_theta, rep.j}.to_string());
  }

  for (int n = 2; n <= max_depth; ++n) {
    const induct_e_report rep = verify_induct_e(n);
    add("induct_e_depth_" + std::to_string(n), rep.pass,
        "index " + std::to_string(rep.index));
  }

  if (max_depth >= 5) {
    const frattini_report rep = verify_frattini(5, opt.threads);
    add("frattini_depth_5", rep.pass,
        "order " + std::to_string(rep.order) + " index " + std::to_string(rep.index));
  }

  {
    std::mt19937_64 rng(seed);
    bool ok = true;
    for (int depth = 4; depth <= 6 && ok; ++depth) {
      for (int trial = 0; trial < 50 && ok; ++trial) {
        tree_aut::builder sb(depth);
        tree_aut::builder tb(depth);
        for (int level = 0; level < depth; ++level)
          for (std::uint32_t i = 0; i < (1u << level); ++i) {
            sb.set_par(level, i, (rng() & 1) != 0);
            tb.set_par(level, i, (rng() & 1) != 0);
          }
        const tree_aut s = std::move(sb).build();
        const tree_aut t = std::move(tb).build();
        const tree_aut st = compose(s, t);
        for (int level = 0; level < depth && ok; ++level)
          for (std::uint32_t i = 0; i < (1u << level); ++i) {
            const node_address x(level, i);
            if (st.par(x) != (s.par(t.apply(x)) ^ t.par(x))) ok = false;
          }
      }
    }
    add("parity_composition_law", ok);
  }

  {
    const root_chain_d chain(6);
    const preimage_tree tree =
        canonical_label(preimage_tree::build(5.0, 7, seed), chain);
    const double zr = max_zetaprod_residual(tree, chain);
    const double sr = max_sibling_square_residual(tree);
    add("preimage_identities_x0_5_depth_7", zr < 1e-7 && sr < 1e-8,
        "zetaprod " + std::to_string(zr));
  }

  {
    const std::vector<std::int64_t> expected = {5, 6, 10, 11, 12, 13, 14, 19, 20, 21, 22, 23};
    bool ok = scan_integers(1, 23) == expected;
    for (std::int64_t x = -100; ok && x <= 100; ++x) {
      if (x == 0 || x == -1 || -1 - x == 0 || -1 - x == -1) continue;
      ok = degree_condition(rational(x)) == degree_condition(rational(-1 - x));
    }
    add("rational_condition_scan", ok);
  }

  bool all = true;
  for (const check_line& c : checks) all = all && c.pass;

  if (fmt == output_format::json) {
    json doc = json::object();
    doc.set("max_depth", std::int64_t{max_depth});
    json arr = json::array();
    for (const check_line& c : checks) {
      json jc = json::object();
      jc.set("name", c.name);
      jc.set("pass", c.pass);
      if (!c.detail.empty()) jc.set("detail", c.detail);
      arr.push(std::move(jc));
    }
    doc.set("checks", std::move(arr));
    doc.set("pass", all);
    emit(doc);
  } else {
    for (const check_line& c : checks)
      std::cout << (c.pass ? "PASS" : "FAIL") << "  " << c.name
                << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
    std::cout << (all ? "all checks passed" : "SOME CHECKS FAILED") << "\n";
  }
  return all ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-level arithmetic basilica group computations"};
  app.require_subcommand(1);

  common_options orders_opt, sweep_opt, closure_opt, frattini_opt, preimage_opt, condition_opt,
      verify_opt;

  auto* orders = app.add_subcommand("orders", "Order-formula table, optionally sweep-checked");
  int max_level = 10;
  bool orders_check = false;
  orders->add_option("--max-level", max_level, "Largest level to tabulate")->default_val(10);
  orders->add_flag("--check", orders_check, "Cross-check against sweeps (depths <= 5)");
  add_common(orders, orders_opt);

  auto* sw = app.add_subcommand("sweep", "Exhaustive portrait count for one subgroup");
  int sweep_depth = 4;
  std::string sweep_selector = "M";
  sw->add_option("--depth", sweep_depth, "Tree depth (1..5)")->required();
  sw->add_option("--selector", sweep_selector, "M, B, E, U:<m>, frattini, or full")->required();
  add_common(sw, sweep_opt);

  auto* cl = app.add_subcommand("closure", "BFS closure of a generating set");
  int closure_depth = 4;
  std::string closure_gens = "alpha,beta";
  std::uint64_t closure_budget = 0;
  cl->add_option("--depth", closure_depth, "Tree depth (1..5)")->required();
  cl->add_option("--generators", closure_gens,
                 "Comma list of alpha, beta, epsilon, theta, lambda, identity")
      ->default_val("alpha,beta");
  cl->add_option("--budget", closure_budget, "Element budget (0 = unlimited)");
  add_common(cl, closure_opt);

  auto* fr = app.add_subcommand("frattini", "Frattini subgroup structure of M_5");
  int frattini_depth = 5;
  fr->add_option("--depth", frattini_depth, "Tree depth (must be 5)")->default_val(5);
  add_common(fr, frattini_opt);

  auto* pre = app.add_subcommand("preimage", "Preimage tree, canonical labeling, identities");
  std::string x0_text = "5";
  int pre_depth = 9;
  std::uint64_t pre_seed = 1;
  double pre_tol = 1e-9;
  double residual_threshold = 1e-7;
  bool pre_dump = false;
  bool pre_extended = false;
  pre->add_option("--x0", x0_text, "Root point, re or re,im")->default_val("5");
  pre->add_option("--depth", pre_depth, "Tree depth (1..20)")->default_val(9);
  pre->add_option("--seed", pre_seed, "Branch-order seed")->default_val(1);
  pre->add_option("--tol", pre_tol, "Degeneracy/ambiguity tolerance")->default_val(1e-9);
  pre->add_option("--max-residual", residual_threshold, "Pass threshold for residuals")
      ->default_val(1e-7);
  pre->add_flag("--dump", pre_dump, "Include node values and the swap log");
  pre->add_flag("--extended", pre_extended, "Double-double arithmetic (depths 10..20)");
  add_common(pre, preimage_opt);

  auto* gen = app.add_subcommand("generator", "Inspect a named automorphism");
  std::string gen_name = "alpha";
  int gen_depth = 5;
  gen->add_option("--name", gen_name, "alpha, beta, epsilon, theta, lambda, identity")
      ->required();
  gen->add_option("--depth", gen_depth, "Tree depth")->default_val(5);
  common_options gen_opt;
  add_common(gen, gen_opt);

  auto* cond = app.add_subcommand("condition", "Degree-16 condition over Q");
  std::string cond_x0, cond_scan;
  cond->add_option("--x0", cond_x0, "Rational root point p/q");
  cond->add_option("--scan", cond_scan, "Integer range lo..hi");
  add_common(cond, condition_opt);

  auto* ver = app.add_subcommand("verify-all", "Run every verification up to a depth");
  int verify_depth = 4;
  std::uint64_t verify_seed = 1;
  ver->add_option("--max-depth", verify_depth, "Deepest exhaustive level (2..5)")
      ->default_val(4);
  ver->add_option("--seed", verify_seed, "Seed for sampled checks")->default_val(1);
  add_common(ver, verify_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    if (orders->parsed()) return cmd_orders(max_level, orders_check, orders_opt);
    if (sw->parsed()) return cmd_sweep(sweep_depth, sweep_selector, sweep_opt);
    if (cl->parsed()) return cmd_closure(closure_depth, closure_gens, closure_budget, closure_opt);
    if (fr->parsed()) return cmd_frattini(frattini_depth, frattini_opt);
    if (pre->parsed()) {
      if (pre_extended)
        return run_preimage<detail::ddouble>(parse_complex(x0_text), pre_depth, pre_seed,
                                             pre_tol, residual_threshold, pre_dump, true,
                                             preimage_opt);
      if (pre_depth > 9)
        throw precision_error(
            "depths above 9 lose too much double precision; pass --extended");
      return run_preimage<double>(parse_complex(x0_text), pre_depth, pre_seed, pre_tol,
                                  residual_threshold, pre_dump, false, preimage_opt);
    }
    if (gen->parsed()) return cmd_generator(gen_name, gen_depth, gen_opt);
    if (cond->parsed()) {
      if (cond_x0.empty() == cond_scan.empty())
        throw input_error("condition needs exactly one of --x0 or --scan");
      return cmd_condition(cond_x0, cond_scan, condition_opt);
    }
    if (ver->parsed()) return cmd_verify_all(verify_depth, verify_seed, verify_opt);
  } catch (const precision_error& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return 5;
  } catch (const resource_error& e) {
    std::cerr << "resource error: " << e.what();
    if (e.partial_count) std::cerr << " (partial count " << e.partial_count << ", not final)";
    std::cerr << "\n";
    return 4;
  } catch (const input_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 3;
}
