#include "weilbound/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>

#include "weilbound/cache.hpp"
#include "weilbound/serialize.hpp"

#ifndef WEILBOUND_VERSION
#define WEILBOUND_VERSION "0.0.0"
#endif

namespace weilbound {

namespace {

namespace fs = std::filesystem;

constexpr unsigned long kMaxQ = 1UL << 16;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string out_file;
  std::string cache_dir = "./.weilbound-cache";
  bool no_cache = false;
  std::string format = "json";

  int g = 0;
  std::string q;
  std::string poly_file;
  unsigned long cutoff = 50;
  unsigned long l = 0;
  int k = 1;
  bool default_k = true;
  bool classify = false;
};

std::string poly_key(const IntPoly& p) {
  std::string s;
  for (const auto& c : p.coeffs()) s += c.get_str() + ",";
  return s;
}

IntPoly load_monic(const std::string& file) {
  IntPoly p = read_poly_file(file);
  if (p.degree() < 1) throw UsageError("polynomial must have degree >= 1");
  if (!p.is_monic()) throw UsageError("polynomial must be monic");
  return p;
}

WeilParams weil_params(const Options& o) {
  if (o.g < 1 || o.g > kMaxDimension) throw UsageError("--g must lie in 1.." + std::to_string(kMaxDimension));
  Integer q;
  try {
    q = parse_integer(o.q);
  } catch (const std::invalid_argument&) {
    throw UsageError("--q must be a decimal integer");
  }
  if (q < 2 || q > kMaxQ) throw UsageError("--q must lie in 2.." + std::to_string(kMaxQ));
  try {
    return WeilParams::from_q(q, o.g);
  } catch (const std::invalid_argument&) {
    throw UsageError("--q = " + o.q + " is not a prime power");
  }
}

std::string run_lattices(const IntPoly& p, const Options& o) {
  const FrobeniusMatrix c = canonical_matrix(p);
  const auto lattices = enumerate_stable_lattices(c, o.l, o.k);
  std::vector<InducedAction> actions;
  for (const auto& lat : lattices) actions.push_back(induced_action(c, lat, o.l, o.k));
  if (!o.classify) return lattices_json(c, lattices, actions, nullptr, o.l, o.k);
  const ActionClassification cls = classify_actions(actions, o.l, o.k);
  return lattices_json(c, lattices, actions, &cls, o.l, o.k);
}

// Resolves the command into (cache key, producer). Validation happens here,
// before anything is computed.
std::pair<std::string, std::function<std::string()>> plan(const std::string& command, const Options& o) {
  const std::string tail = "|format=" + o.format + "|schema=" + std::to_string(kSchemaVersion) + "|v=" WEILBOUND_VERSION;
  if (command == "weil count" || command == "weil list") {
    if (o.format != "json" && o.format != "csv") throw UsageError("--format must be json or csv");
    const WeilParams params = weil_params(o);
    const std::string key = command + "|g=" + std::to_string(params.g) + "|q=" + params.q.get_str() + tail;
    if (command == "weil count") {
      return {key, [params, format = o.format] {
                const std::size_t n = isogeny_class_upper_bound(params);
                return format == "csv" ? count_csv(params, n) : count_json(params, n);
              }};
    }
    return {key, [params, format = o.format] {
              const auto polys = enumerate_weil(params);
              return format == "csv" ? census_csv(params, polys) : census_json(polys);
            }};
  }
  if (o.format != "json") throw UsageError("--format csv is only available for weil count and weil list");
  const IntPoly p = load_monic(o.poly_file);
  if (command == "bounds") {
    return {"bounds|p=" + poly_key(p) + "|cutoff=" + std::to_string(o.cutoff) + tail,
            [p, cutoff = o.cutoff] { return bounds_json(bounds_report(p, cutoff)); }};
  }
  if (command == "factor") {
    return {"factor|p=" + poly_key(p) + tail, [p] { return factor_json(factor_int_poly(p)); }};
  }
  if (command == "lattices") {
    if (!is_prime(o.l)) throw UsageError("--l must be prime");
    if (!o.default_k && o.k < 1) throw UsageError("--k must be >= 1");
    Options resolved = o;
    if (o.default_k) resolved.k = default_precision(decompose(p), o.l);
    return {"lattices|p=" + poly_key(p) + "|l=" + std::to_string(o.l) + "|k=" + std::to_string(resolved.k) +
                "|classify=" + (o.classify ? "1" : "0") + tail,
            [p, resolved] { return run_lattices(p, resolved); }};
  }
  throw UsageError("unknown command " + command);
}

int execute(const std::string& command, const Options& o, std::ostream& out) {
  auto [key, produce] = plan(command, o);
  std::optional<ResultCache> cache;
  if (!o.no_cache) {
    const char* env = std::getenv("WEILBOUND_CACHE");
    cache.emplace(env != nullptr && *env != '\0' ? fs::path(env) : fs::path(o.cache_dir));
  }
  std::optional<std::string> artifact;
  if (cache) artifact = cache->load(key);
  if (!artifact) {
    artifact = produce();
    if (cache) cache->store(key, *artifact);
  }
  if (o.out_file.empty()) {
    out << *artifact << std::flush;
    if (!out) throw std::runtime_error("failed writing to standard output");
  } else {
    atomic_write(o.out_file, *artifact);
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weil polynomial census, Tate-module bounds and stable lattices", "weilbound"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--out", o.out_file, "Write the artifact to FILE (atomically)");
  app.add_option("--cache-dir", o.cache_dir, "Cache directory; WEILBOUND_CACHE takes precedence");
  app.add_flag("--no-cache", o.no_cache, "Neither read nor write the cache");
  app.add_option("--format", o.format, "json or csv (csv only for weil)");
  app.set_version_flag("--version", WEILBOUND_VERSION);

  auto* weil = app.add_subcommand("weil", "Enumerate q-Weil polynomials of degree 2g");
  weil->require_subcommand(1);
  for (const char* name : {"count", "list"}) {
    auto* sub = weil->add_subcommand(name, std::string(name) == "count" ? "Number of Weil polynomials" : "Sorted list");
    sub->add_option("--g", o.g, "Dimension g")->required();
    sub->add_option("--q", o.q, "Field size q, a prime power")->required();
    sub->add_option("--format", o.format, "json or csv");
  }

  auto* bounds = app.add_subcommand("bounds", "Effective bound N and per-prime exponents");
  bounds->add_option("file", o.poly_file, "Polynomial JSON file")->required();
  bounds->add_option("--cutoff", o.cutoff, "Largest prime in the per-prime table");

  auto* lattices = app.add_subcommand("lattices", "Frobenius-stable lattices between l^k Z^n and Z^n");
  lattices->add_option("file", o.poly_file, "Polynomial JSON file")->required();
  lattices->add_option("--l", o.l, "Prime l")->required();
  auto* k_option = lattices->add_option("--k", o.k, "Precision k (default s1 + s2 + 1)");
  lattices->add_flag("--classify", o.classify, "Group induced actions up to conjugacy mod l^k");

  auto* factor = app.add_subcommand("factor", "Factor a monic integer polynomial");
  factor->add_option("file", o.poly_file, "Polynomial JSON file")->required();
  for (auto* sub : {bounds, lattices, factor}) sub->add_option("--format", o.format, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << WEILBOUND_VERSION << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  o.default_k = k_option->count() == 0;
  std::string command;
  if (weil->parsed()) command = weil->get_subcommands().front()->get_name() == "count" ? "weil count" : "weil list";
  else if (bounds->parsed()) command = "bounds";
  else if (lattices->parsed()) command = "lattices";
  else if (factor->parsed()) command = "factor";

  try {
    return execute(command, o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace weilbound
