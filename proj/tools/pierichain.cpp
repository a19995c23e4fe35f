// Command line front end. Every subcommand reads a fully explicit
// configuration from flags, runs one library operation and serializes the
// report to stdout (json, csv or text); diagnostics go to stderr. Identical
// configurations yield byte-identical json. Exit codes: 0 success, 1 invalid
// input or exceeded size guard, 2 verification violation (a disconnected
// swap fiber, or a sampled interior element escaping the witness-shifted
// semigroup).

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pierichain/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace pierichain;

// Minimal CSV quoting: fields holding a comma, quote or newline get wrapped,
// embedded quotes doubled.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void csv_row(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) std::cout << ',';
    std::cout << csv_field(fields[i]);
  }
  std::cout << '\n';
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> label_strings(const GeneratorTuple& t) {
  std::vector<std::string> out;
  for (const auto& g : labels_of_tuple(t)) out.push_back(to_string(g));
  return out;
}

struct Config {
  int m = 0;
  int a = 0;
  int b = 0;
  std::vector<Int> r;
  std::vector<Int> s;
  Int level = 0;
  bool has_level = false;
  bool leveled = true;
  std::string set = "X";
  int max_degree = 0;
  Int samples = 32;
  std::uint64_t seed = 42;
  std::string output = "json";
  Int max_objects = 1000000;
  std::string pattern;
  std::vector<int> I;
  std::vector<int> J;
  std::vector<int> pair;
};

void emit(const ordered_json& j) { std::cout << j.dump() << '\n'; }

[[noreturn]] void fail(const std::string& message) {
  throw std::invalid_argument(message);
}

void require_tabular(const Config& c) {
  if (c.output == "csv")
    fail("csv output is only available for gens, relations and hilbert");
}

int run_dim(const Config& c) {
  require_tabular(c);
  const Int d = c.has_level ? dim_conformal_blocks(c.m, c.r, c.s, c.level)
                            : dim_invariants(c.m, c.r, c.s);
  if (c.output == "json") {
    ordered_json j;
    j["dimension"] = d;
    emit(j);
  } else {
    std::cout << "dimension: " << d << '\n';
  }
  return 0;
}

int run_gens(const Config& c) {
  const auto tuples = c.set == "X" ? enumerate_X(c.m, c.a, c.b, c.max_objects)
                                   : enumerate_Y(c.m, c.a, c.b, c.max_objects);
  if (c.output == "json") {
    ordered_json j;
    j["m"] = c.m;
    j["a"] = c.a;
    j["b"] = c.b;
    j["set"] = c.set;
    j["leveled"] = c.leveled;
    j["count"] = tuples.size();
    auto& rows = j["tuples"] = ordered_json::array();
    for (const auto& t : tuples) {
      ordered_json row;
      row["entries"] = to_string(t);
      row["labels"] = label_strings(t);
      row["weights"] = to_string(weights_of_tuple(t, c.leveled));
      rows.push_back(std::move(row));
    }
    emit(j);
  } else if (c.output == "csv") {
    csv_row({"entries", "labels", "weights"});
    for (const auto& t : tuples)
      csv_row({to_string(t), join(label_strings(t), " "),
               to_string(weights_of_tuple(t, c.leveled))});
  } else {
    for (const auto& t : tuples)
      std::cout << to_string(t) << "  " << join(label_strings(t), " ") << "  "
                << to_string(weights_of_tuple(t, c.leveled)) << '\n';
  }
  return 0;
}

int run_relations(const Config& c) {
  const bool leveled = c.set == "X";
  const auto relations = swap_relations(c.m, c.a, c.b, leveled, c.max_objects);
  if (c.output == "json") {
    ordered_json j;
    j["m"] = c.m;
    j["a"] = c.a;
    j["b"] = c.b;
    j["set"] = c.set;
    j["count"] = relations.size();
    auto& rows = j["relations"] = ordered_json::array();
    for (const auto& rel : relations) {
      ordered_json row;
      row["u"] = to_string(rel.u);
      row["v"] = to_string(rel.v);
      row["u_swapped"] = to_string(rel.u_swapped);
      row["v_swapped"] = to_string(rel.v_swapped);
      row["cut"] = rel.cut;
      row["text"] = to_string(rel);
      rows.push_back(std::move(row));
    }
    emit(j);
  } else if (c.output == "csv") {
    csv_row({"u", "v", "u_swapped", "v_swapped", "cut"});
    for (const auto& rel : relations)
      csv_row({to_string(rel.u), to_string(rel.v), to_string(rel.u_swapped),
               to_string(rel.v_swapped), std::to_string(rel.cut)});
  } else {
    for (const auto& rel : relations) std::cout << to_string(rel) << '\n';
  }
  return 0;
}

int run_decompose(const Config& c) {
  require_tabular(c);
  const auto pattern = parse_pattern(c.pattern);
  const auto gens = decompose(pattern);
  Int total = 0;
  for (const auto& [g, mult] : gens) total = checked_add(total, mult);
  if (c.output == "json") {
    ordered_json j;
    j["pattern"] = to_string(pattern);
    j["orientation"] = to_string(pattern.orientation());
    j["total"] = total;
    auto& rows = j["generators"] = ordered_json::array();
    for (const auto& [g, mult] : gens) {
      ordered_json row;
      row["label"] = to_string(g);
      row["multiplicity"] = mult;
      rows.push_back(std::move(row));
    }
    emit(j);
  } else {
    for (const auto& [g, mult] : gens)
      std::cout << to_string(g) << " x " << mult << '\n';
    std::cout << "total: " << total << '\n';
  }
  return 0;
}

int run_weyl(const Config& c) {
  require_tabular(c);
  const int given = !c.I.empty() + !c.J.empty() + !c.pair.empty();
  if (given != 1) fail("weyl needs exactly one of --I, --J, --pair");
  std::string kind;
  std::optional<GeneratorTuple> t;
  if (!c.I.empty()) {
    kind = "I";
    t = weyl_tuple_I(c.m, c.a, c.b, c.I);
  } else if (!c.J.empty()) {
    kind = "J";
    t = weyl_tuple_J(c.m, c.a, c.b, c.J);
  } else {
    if (c.pair.size() != 2) fail("--pair takes exactly two indices i,j");
    kind = "pair";
    t = weyl_tuple_pair(c.m, c.a, c.b, c.pair[0], c.pair[1]);
  }
  if (c.output == "json") {
    ordered_json j;
    j["m"] = c.m;
    j["a"] = c.a;
    j["b"] = c.b;
    j["kind"] = kind;
    j["tuple"] = to_string(*t);
    j["labels"] = label_strings(*t);
    j["weights"] = to_string(weights_of_tuple(*t, c.leveled));
    emit(j);
  } else {
    std::cout << to_string(*t) << "  " << join(label_strings(*t), " ") << '\n';
  }
  return 0;
}

ordered_json multiset_json(const TupleMultiset& ms) {
  auto arr = ordered_json::array();
  for (const auto& t : ms) arr.push_back(to_string(t));
  return arr;
}

int run_markov(const Config& c) {
  require_tabular(c);
  const auto reports = markov_check(c.m, c.a, c.b, c.leveled, c.max_degree, c.max_objects);
  Int nontrivial = 0, disconnected = 0;
  for (const auto& rep : reports) {
    if (rep.fiber_size >= 2) ++nontrivial;
    if (!rep.connected) ++disconnected;
  }
  if (c.output == "json") {
    ordered_json j;
    j["m"] = c.m;
    j["a"] = c.a;
    j["b"] = c.b;
    j["leveled"] = c.leveled;
    j["max_degree"] = c.max_degree;
    j["fibers"] = reports.size();
    j["nontrivial"] = nontrivial;
    j["disconnected"] = disconnected;
    j["connected"] = disconnected == 0;
    auto& rows = j["reports"] = ordered_json::array();
    for (const auto& rep : reports) {
      if (rep.fiber_size < 2) continue;
      ordered_json row;
      row["degree"] = rep.degree;
      row["multidegree"] = to_string(rep.multidegree);
      row["size"] = rep.fiber_size;
      row["connected"] = rep.connected;
      if (rep.connected)
        row["path_length"] = rep.witness_path.size();
      else if (rep.disconnecting_pair) {
        row["component_a"] = multiset_json(rep.disconnecting_pair->first);
        row["component_b"] = multiset_json(rep.disconnecting_pair->second);
      }
      rows.push_back(std::move(row));
    }
    emit(j);
  } else {
    std::cout << "fibers: " << reports.size() << "  nontrivial: " << nontrivial
              << "  disconnected: " << disconnected << '\n';
    for (const auto& rep : reports) {
      if (rep.fiber_size < 2) continue;
      std::cout << "degree " << rep.degree << "  " << to_string(rep.multidegree)
                << "  size " << rep.fiber_size << "  "
                << (rep.connected ? "connected" : "DISCONNECTED") << '\n';
    }
  }
  return disconnected == 0 ? 0 : 2;
}

int run_gorenstein(const Config& c) {
  require_tabular(c);
  const auto rep = gorenstein_check(c.m, c.a, c.b, c.leveled, c.max_degree, c.samples, c.seed,
                                    c.max_objects);
  if (c.output == "json") {
    ordered_json j;
    j["m"] = c.m;
    j["a"] = c.a;
    j["b"] = c.b;
    j["leveled"] = c.leveled;
    j["max_degree"] = c.max_degree;
    j["samples"] = c.samples;
    j["seed"] = c.seed;
    j["condition_holds"] = rep.condition_holds;
    auto& rows = j["junctions"] = ordered_json::array();
    for (const auto& junction : rep.junctions) {
      ordered_json row;
      row["position"] = junction.position;
      row["left"] = to_string(junction.left);
      row["right"] = to_string(junction.right);
      row["left_level"] =
          junction.left_level ? ordered_json(*junction.left_level) : ordered_json(nullptr);
      row["right_level"] =
          junction.right_level ? ordered_json(*junction.right_level) : ordered_json(nullptr);
      row["matches"] = junction.matches;
      rows.push_back(std::move(row));
    }
    j["witness_found"] = rep.witness_found;
    if (rep.witness_found) {
      j["witness_degree"] = rep.witness_degree;
      auto factors = ordered_json::array();
      for (const auto& f : rep.witness->factors()) factors.push_back(to_string(f));
      j["witness_factors"] = std::move(factors);
      j["witness_level"] =
          rep.witness->bound() ? ordered_json(*rep.witness->bound()) : ordered_json(nullptr);
    }
    j["interior_sampled"] = rep.interior_sampled;
    j["sampled_interior_ok"] = rep.sampled_interior_ok;
    emit(j);
  } else {
    std::cout << "condition_holds: " << (rep.condition_holds ? "yes" : "no") << '\n';
    for (const auto& junction : rep.junctions)
      std::cout << "junction " << junction.position << ": " << to_string(junction.left)
                << (junction.matches ? " == " : " != ") << to_string(junction.right) << '\n';
    if (rep.witness_found) {
      std::cout << "witness at degree " << rep.witness_degree << ":";
      for (const auto& f : rep.witness->factors()) std::cout << " [" << to_string(f) << "]";
      std::cout << '\n';
    } else {
      std::cout << "no interior witness within degree " << c.max_degree << '\n';
    }
    std::cout << "interior sampled: " << rep.interior_sampled << "  membership: "
              << (rep.sampled_interior_ok ? "ok" : "FAILED") << '\n';
  }
  return rep.sampled_interior_ok ? 0 : 2;
}

int run_hilbert(const Config& c) {
  if (!c.has_level) fail("hilbert needs --level");
  if (c.level < 0) fail("hilbert needs --level >= 0");
  std::vector<Int> counts;
  for (Int k = 0; k <= c.level; ++k)
    counts.push_back(hilbert_level(c.m, c.a, c.b, k, c.max_objects));
  if (c.output == "json") {
    ordered_json j;
    j["m"] = c.m;
    j["a"] = c.a;
    j["b"] = c.b;
    j["level"] = c.level;
    auto& rows = j["counts"] = ordered_json::array();
    for (Int k = 0; k <= c.level; ++k) {
      ordered_json row;
      row["level"] = k;
      row["count"] = counts[static_cast<std::size_t>(k)];
      rows.push_back(std::move(row));
    }
    emit(j);
  } else if (c.output == "csv") {
    csv_row({"level", "count"});
    for (Int k = 0; k <= c.level; ++k)
      csv_row({std::to_string(k), std::to_string(counts[static_cast<std::size_t>(k)])});
  } else {
    for (Int k = 0; k <= c.level; ++k)
      std::cout << "level " << k << ": " << counts[static_cast<std::size_t>(k)] << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in caterpillar chains of interlacing patterns"};
  app.require_subcommand(1);
  Config c;

  auto add_shape = [&c](CLI::App* sub) {
    sub->add_option("--m", c.m, "Rank, at least 2")->required();
    sub->add_option("--a", c.a, "Normal arm length, at least 2")->required();
    sub->add_option("--b", c.b, "Dual arm length, at least 2")->required();
  };
  auto add_output = [&c](CLI::App* sub) {
    sub->add_option("--output", c.output, "Report format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
  };
  auto add_guard = [&c](CLI::App* sub) {
    sub->add_option("--max-objects", c.max_objects, "Enumeration size guard")
        ->capture_default_str();
  };
  auto add_leveled = [&c](CLI::App* sub) {
    sub->add_flag("--leveled,!--unleveled", c.leveled, "Carry the shared level bound");
  };

  auto* dim = app.add_subcommand("dim", "Invariant space dimension for leg weights");
  dim->add_option("--m", c.m, "Rank, at least 2")->required();
  dim->add_option("--r", c.r, "Normal leg weights, comma separated")
      ->required()
      ->delimiter(',');
  dim->add_option("--s", c.s, "Dual leg weights, comma separated")->required()->delimiter(',');
  auto* dim_level = dim->add_option("--level", c.level, "Truncation level K");
  add_output(dim);
  add_guard(dim);

  auto* gens = app.add_subcommand("gens", "Enumerate the generator tuples of a shape");
  add_shape(gens);
  gens->add_option("--set", c.set, "Tuple family")
      ->check(CLI::IsMember({"X", "Y"}))
      ->capture_default_str();
  add_leveled(gens);
  add_output(gens);
  add_guard(gens);

  auto* relations = app.add_subcommand("relations", "Enumerate the swap relations of a shape");
  add_shape(relations);
  relations->add_option("--set", c.set, "Tuple family (X swaps need the level bound)")
      ->check(CLI::IsMember({"X", "Y"}))
      ->capture_default_str();
  add_output(relations);
  add_guard(relations);

  auto* decompose_cmd = app.add_subcommand("decompose", "Decompose a pattern into generators");
  decompose_cmd->add_option("--pattern", c.pattern, "Pattern as top=..;bottom=..")->required();
  add_output(decompose_cmd);

  auto* weyl = app.add_subcommand("weyl", "Extremal generator tuple for an index set");
  add_shape(weyl);
  weyl->add_option("--I", c.I, "Normal-side index set, comma separated")->delimiter(',');
  weyl->add_option("--J", c.J, "Dual-side index set, comma separated")->delimiter(',');
  weyl->add_option("--pair", c.pair, "Crossing pair i,j")->delimiter(',');
  add_leveled(weyl);
  add_output(weyl);

  auto* markov = app.add_subcommand("markov", "Check swap connectivity of low-degree fibers");
  add_shape(markov);
  add_leveled(markov);
  auto* markov_degree =
      markov->add_option("--max-degree", c.max_degree, "Largest multiset size checked (default 3)");
  add_output(markov);
  add_guard(markov);

  auto* gorenstein =
      app.add_subcommand("gorenstein", "Junction condition and interior witness search");
  add_shape(gorenstein);
  add_leveled(gorenstein);
  auto* gorenstein_degree = gorenstein->add_option(
      "--max-degree", c.max_degree, "Largest witness degree searched (default 4)");
  gorenstein->add_option("--samples", c.samples, "Interior elements sampled")
      ->capture_default_str();
  gorenstein->add_option("--seed", c.seed, "Sampling seed")->capture_default_str();
  add_output(gorenstein);
  add_guard(gorenstein);

  auto* hilbert = app.add_subcommand("hilbert", "Count leveled chains for levels 0..K");
  add_shape(hilbert);
  hilbert->add_option("--level", c.level, "Largest level K")->required();
  add_output(hilbert);
  add_guard(hilbert);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }
  c.has_level = dim_level->count() > 0 || hilbert->parsed();
  if (markov->parsed() && markov_degree->count() == 0) c.max_degree = 3;
  if (gorenstein->parsed() && gorenstein_degree->count() == 0) c.max_degree = 4;

  try {
    if (*dim) return run_dim(c);
    if (*gens) return run_gens(c);
    if (*relations) return run_relations(c);
    if (*decompose_cmd) return run_decompose(c);
    if (*weyl) return run_weyl(c);
    if (*markov) return run_markov(c);
    if (*gorenstein) return run_gorenstein(c);
    if (*hilbert) return run_hilbert(c);
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
