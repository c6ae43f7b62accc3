// quiverhall: exact computations with quivers, path algebras, quiver
// representations over prime fields, Ringel-Hall/composition algebras and
// the moment-map layer of the doubled quiver.  One subcommand per operation;
// identical inputs produce byte-identical outputs.

#include <cstdlib>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "quiverhall/decompose.hpp"
#include "quiverhall/generic.hpp"
#include "quiverhall/hall.hpp"
#include "quiverhall/json_io.hpp"
#include "quiverhall/lusztig.hpp"
#include "quiverhall/path_algebra.hpp"
#include "quiverhall/roots.hpp"

using nlohmann::json;
using namespace qh;

namespace {

struct RunConfig {
  std::string quiver_file;
  std::string lhs_file, rhs_file, rep_file, point_file;
  std::string field = "Q";
  std::string format = "json";
  std::string word, vertices, nu, dims, dim_bound, serre_pair, primes_list;
  std::int64_t prime = 2;
  std::int64_t max_len = 8;
  std::int64_t height_bound = 8;
  std::size_t degree_bound = 2;
  std::uint64_t budget = 1'000'000;
  std::uint64_t seed = 0x5eed5eed;
  int threads = 1;
  bool list_points = false;
};

std::vector<int> parse_vertex_list(const Quiver& q, const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) out.push_back(q.vertex_index(tok));
  return out;
}

std::vector<std::int64_t> parse_prime_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::stringstream in(s);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    try {
      out.push_back(std::stoll(tok));
    } catch (const std::exception&) {
      throw InputError("bad prime '" + tok + "'");
    }
  }
  return out;
}

HallOptions hall_options(const RunConfig& cfg) {
  HallOptions opts;
  opts.rep_point_budget = cfg.budget;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  opts.subspace_budget = cfg.budget > kMax / 10 ? kMax : cfg.budget * 10;
  return opts;
}

void check_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (cfg.format == a) return;
  throw InputError("format '" + cfg.format + "' not supported here");
}

int run_paths(const RunConfig& cfg) {
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  check_format(cfg, {"json", "tsv", "dot"});
  if (cfg.format == "dot") {
    std::cout << quiver_to_dot(*q);
    return 0;
  }
  std::vector<Path> paths = enumerate_paths(*q, static_cast<int>(cfg.max_len));
  if (cfg.format == "tsv") {
    for (const Path& p : paths) std::cout << path_str(*q, p) << "\n";
    return 0;
  }
  json out;
  out["count"] = paths.size();
  json list = json::array();
  for (const Path& p : paths) {
    if (p.is_trivial()) {
      list.push_back(json{{"e", q->vertex_name(p.vertex)}});
    } else {
      json names = json::array();
      for (int a : p.arrows) names.push_back(q->arrow(a).name);
      list.push_back(names);
    }
  }
  out["paths"] = list;
  auto dim = algebra_dimension(*q);
  out["algebra_dimension"] = dim ? json(*dim) : json("infinite");
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_pa_mul(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  std::string lhs = read_text_file(cfg.lhs_file);
  std::string rhs = read_text_file(cfg.rhs_file);
  if (cfg.field == "Q") {
    RationalField f;
    auto x = pa_elem_from_json(q, f, lhs);
    auto y = pa_elem_from_json(q, f, rhs);
    std::cout << pa_elem_to_json(pa_multiply(x, y)) << "\n";
  } else if (cfg.field.size() > 1 && cfg.field[0] == 'F') {
    PrimeField f(std::stoll(cfg.field.substr(1)));
    auto x = pa_elem_from_json(q, f, lhs);
    auto y = pa_elem_from_json(q, f, rhs);
    std::cout << pa_elem_to_json(pa_multiply(x, y)) << "\n";
  } else {
    throw InputError("unknown field tag '" + cfg.field + "'");
  }
  return 0;
}

int run_classify(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  std::cout << classification_to_json(classify_type(*q)) << "\n";
  return 0;
}

int run_roots(const RunConfig& cfg) {
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  check_format(cfg, {"json", "tsv"});
  std::vector<Root> roots = positive_roots(*q, cfg.height_bound);
  if (cfg.format == "tsv")
    std::cout << roots_to_tsv(roots);
  else
    std::cout << roots_to_json(roots) << "\n";
  return 0;
}

int run_decompose(const RunConfig& cfg) {
  ParsedRep parsed = rep_from_json(read_text_file(cfg.rep_file));
  DecomposeOptions opts;
  opts.seed = cfg.seed;
  json out;
  json summands = json::array();
  if (parsed.fp) {
    for (const auto& s : krull_schmidt(*parsed.fp, opts))
      summands.push_back(json::parse(rep_to_json(s)));
  } else {
    for (const auto& s : krull_schmidt(*parsed.rat, opts))
      summands.push_back(json::parse(rep_to_json(s)));
  }
  out["summands"] = summands;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_iso_classes(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  DimVector d = DimVector::parse(cfg.dims, q->vertex_count());
  EnumOptions opts;
  opts.point_budget = cfg.budget;
  IsoClassTable table = enumerate_iso_classes(q, d, cfg.prime, opts);
  json out;
  out["count"] = table.class_count();
  out["space_size"] = table.total_points();
  json classes = json::array();
  for (int c = 0; c < table.class_count(); ++c) {
    json item;
    item["rep"] = json::parse(rep_to_json(table.representative(c)));
    item["orbit_size"] = table.orbit_size(c);
    classes.push_back(item);
  }
  out["classes"] = classes;
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_root_check(const RunConfig& cfg, bool gabriel) {
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  DimVector bound = DimVector::parse(cfg.dim_bound, q->vertex_count());
  RootCheckOptions opts;
  opts.enumeration.point_budget = cfg.budget;
  opts.decomposition.seed = cfg.seed;
  RootCheckReport report = gabriel ? check_gabriel(q, cfg.prime, bound, opts)
                                   : check_kac(q, cfg.prime, bound, opts);
  check_format(cfg, {"json", "tsv"});
  if (cfg.format == "tsv")
    std::cout << root_check_to_tsv(report);
  else
    std::cout << root_check_to_json(report) << "\n";
  return 0;
}

int run_hall_mul(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  HallAlgebra hall(q, cfg.prime, hall_options(cfg));
  HallElement result;
  if (!cfg.word.empty()) {
    result = hall.composition_monomial(parse_vertex_list(*q, cfg.word));
  } else {
    if (cfg.lhs_file.empty() || cfg.rhs_file.empty())
      throw InputError("hall-mul needs --word or both --lhs and --rhs");
    HallElement x = hall_element_from_json(hall, read_text_file(cfg.lhs_file));
    HallElement y = hall_element_from_json(hall, read_text_file(cfg.rhs_file));
    result = hall.multiply(x, y);
  }
  std::cout << hall_element_to_json(hall, result) << "\n";
  return 0;
}

int run_serre_check(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  std::vector<int> verts = parse_vertex_list(*q, cfg.vertices);
  if (verts.size() != 2) throw InputError("--vertices needs exactly two names");
  HallAlgebra hall(q, cfg.prime, hall_options(cfg));
  auto result = hall.serre_check(verts[0], verts[1]);
  json out;
  out["holds"] = result.holds;
  out["residual"] = json::parse(hall_element_to_json(hall, result.residual));
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_generic(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  std::vector<std::int64_t> primes = parse_prime_list(cfg.primes_list);
  GenericOptions opts;
  opts.degree_bound = cfg.degree_bound;
  opts.hall = hall_options(cfg);
  GenericElement elem;
  if (!cfg.word.empty()) {
    elem = generic_lift_word(q, parse_vertex_list(*q, cfg.word), primes, opts);
  } else if (!cfg.serre_pair.empty()) {
    std::vector<int> verts = parse_vertex_list(*q, cfg.serre_pair);
    if (verts.size() != 2) throw InputError("--serre needs exactly two names");
    elem = generic_lift_serre(q, verts[0], verts[1], primes, opts);
  } else {
    throw InputError("generic needs --word or --serre");
  }
  std::cout << generic_element_to_json(elem) << "\n";
  return 0;
}

int run_dim_check(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  DimVector nu = DimVector::parse(cfg.nu, q->vertex_count());
  HallAlgebra hall(q, cfg.prime, hall_options(cfg));
  std::cout << dim_check_to_json(finite_type_dim_check(hall, nu)) << "\n";
  return 0;
}

int run_lambda_count(const RunConfig& cfg) {
  check_format(cfg, {"json"});
  QuiverPtr q = quiver_from_file(cfg.quiver_file);
  auto dq = std::make_shared<const DoubleQuiver>(double_quiver(q));
  DimVector v = DimVector::parse(cfg.dims, q->vertex_count());
  LambdaOptions opts;
  opts.point_budget = cfg.budget;
  opts.threads = cfg.threads;
  LambdaSet set = lambda_points(dq, v, cfg.prime, opts);
  json out;
  out["count"] = set.count();
  out["space_size"] = set.space_size;
  if (cfg.list_points) {
    json pts = json::array();
    for (std::uint64_t idx : set.point_indices) {
      DoubleRepPoint<PrimeField> pt = lambda_point_at(dq, v, cfg.prime, idx);
      json maps = json::object();
      for (int a = 0; a < dq->doubled->arrow_count(); ++a) {
        json rows = json::array();
        for (int r = 0; r < pt.x[a].rows(); ++r) {
          json row = json::array();
          for (int c = 0; c < pt.x[a].cols(); ++c) row.push_back(pt.x[a].at(r, c));
          rows.push_back(row);
        }
        maps[dq->doubled->arrow(a).name] = rows;
      }
      pts.push_back(maps);
    }
    out["points"] = pts;
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_stable_check(const RunConfig& cfg) {
  FramedPoint<PrimeField> fp = framed_point_from_json(read_text_file(cfg.point_file));
  StableOptions opts;
  opts.subspace_budget = cfg.budget;
  json out;
  out["stable"] = is_stable(fp, opts);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quiver / path algebra / Hall algebra computations"};
  app.require_subcommand(1);

  RunConfig cfg;
  if (const char* env = std::getenv("QUIVERHALL_BUDGET")) {
    try {
      cfg.budget = std::stoull(env);
    } catch (const std::exception&) {
      std::cout << json{{"error", "bad QUIVERHALL_BUDGET value"}}.dump() << "\n";
      return 1;
    }
  }

  auto add_common = [&](CLI::App* sub, bool needs_quiver = true) {
    if (needs_quiver)
      sub->add_option("-q,--quiver", cfg.quiver_file, "quiver JSON file")
          ->required();
    sub->add_option("--budget", cfg.budget, "enumeration budget");
    sub->add_option("--seed", cfg.seed, "seed for randomized internals");
    sub->add_option("--format", cfg.format, "output format (json|tsv|dot)");
  };

  CLI::App* paths = app.add_subcommand("paths", "enumerate paths");
  add_common(paths);
  paths->add_option("--max-len", cfg.max_len, "maximum path length");

  CLI::App* pa_mul = app.add_subcommand("pa-mul", "path algebra product");
  add_common(pa_mul);
  pa_mul->add_option("--lhs", cfg.lhs_file, "left element JSON file")->required();
  pa_mul->add_option("--rhs", cfg.rhs_file, "right element JSON file")->required();
  pa_mul->add_option("--field", cfg.field, "coefficient field (Q or Fp)");

  CLI::App* classify = app.add_subcommand("classify", "finite/tame/wild type");
  add_common(classify);

  CLI::App* roots = app.add_subcommand("roots", "positive roots");
  add_common(roots);
  roots->add_option("--height-bound", cfg.height_bound, "height bound");

  CLI::App* decompose = app.add_subcommand("decompose", "Krull-Schmidt summands");
  decompose->add_option("--rep", cfg.rep_file, "representation JSON file")
      ->required();
  decompose->add_option("--seed", cfg.seed, "seed for randomized internals");

  CLI::App* iso = app.add_subcommand("iso-classes", "isomorphism classes");
  add_common(iso);
  iso->add_option("--dims", cfg.dims, "dimension vector, e.g. 1,1")->required();
  iso->add_option("--prime", cfg.prime, "field characteristic")->required();

  CLI::App* gabriel = app.add_subcommand("gabriel-check",
                                         "finite-type root bijection check");
  add_common(gabriel);
  gabriel->add_option("--prime", cfg.prime)->required();
  gabriel->add_option("--dim-bound", cfg.dim_bound, "per-vertex bound, e.g. 1,1,1")
      ->required();

  CLI::App* kac = app.add_subcommand("kac-check", "root criterion check");
  add_common(kac);
  kac->add_option("--prime", cfg.prime)->required();
  kac->add_option("--dim-bound", cfg.dim_bound)->required();

  CLI::App* hall_mul = app.add_subcommand("hall-mul", "Hall algebra product");
  add_common(hall_mul);
  hall_mul->add_option("--prime", cfg.prime)->required();
  hall_mul->add_option("--word", cfg.word, "composition word, e.g. 1,2,1");
  hall_mul->add_option("--lhs", cfg.lhs_file, "left Hall element JSON file");
  hall_mul->add_option("--rhs", cfg.rhs_file, "right Hall element JSON file");

  CLI::App* serre = app.add_subcommand("serre-check",
                                       "quantum Serre relation check");
  add_common(serre);
  serre->add_option("--vertices", cfg.vertices, "pair i,j of vertex names")
      ->required();
  serre->add_option("--prime", cfg.prime)->required();

  CLI::App* generic = app.add_subcommand("generic", "multi-prime generic lift");
  add_common(generic);
  generic->add_option("--word", cfg.word, "composition word");
  generic->add_option("--serre", cfg.serre_pair, "Serre residual pair i,j");
  generic->add_option("--primes", cfg.primes_list, "sample primes, e.g. 2,3,5,7,11")
      ->required();
  generic->add_option("--degree-bound", cfg.degree_bound, "degree bound in q");

  CLI::App* dim_check = app.add_subcommand("dim-check",
                                           "Hall vs Serre-presented dimension");
  add_common(dim_check);
  dim_check->add_option("--nu", cfg.nu, "grading vector, e.g. 1,1")->required();
  dim_check->add_option("--prime", cfg.prime)->required();

  CLI::App* lambda = app.add_subcommand("lambda-count",
                                        "moment-map zero nilpotent points");
  add_common(lambda);
  lambda->add_option("--dims", cfg.dims)->required();
  lambda->add_option("--prime", cfg.prime)->required();
  lambda->add_option("--threads", cfg.threads, "scan shards");
  lambda->add_flag("--points", cfg.list_points, "list the points");

  CLI::App* stable = app.add_subcommand("stable-check", "Nakajima stability");
  stable->add_option("--point", cfg.point_file, "framed point JSON file")
      ->required();
  stable->add_option("--budget", cfg.budget, "subspace scan budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }

  try {
    if (paths->parsed()) return run_paths(cfg);
    if (pa_mul->parsed()) return run_pa_mul(cfg);
    if (classify->parsed()) return run_classify(cfg);
    if (roots->parsed()) return run_roots(cfg);
    if (decompose->parsed()) return run_decompose(cfg);
    if (iso->parsed()) return run_iso_classes(cfg);
    if (gabriel->parsed()) return run_root_check(cfg, true);
    if (kac->parsed()) return run_root_check(cfg, false);
    if (hall_mul->parsed()) return run_hall_mul(cfg);
    if (serre->parsed()) return run_serre_check(cfg);
    if (generic->parsed()) return run_generic(cfg);
    if (dim_check->parsed()) return run_dim_check(cfg);
    if (lambda->parsed()) return run_lambda_count(cfg);
    if (stable->parsed()) return run_stable_check(cfg);
  } catch (const BudgetError& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cout << json{{"error", e.what()}}.dump() << "\n";
    return 1;
  }
  return 0;
}
