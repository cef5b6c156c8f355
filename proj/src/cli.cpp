#include "parastab/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "parastab/cache.hpp"
#include "parastab/report.hpp"

namespace parastab {

using nlohmann::json;

namespace {

struct Options {
  std::string type;
  int rank = 0;
  std::string levi;
  std::string characteristic = "0";
  std::string pol = "anticanonical";
  int max_coeff = 1;
  std::string format = "json";
  std::string cache_dir;
  unsigned threads = 1;
  std::size_t subset_cap = kDefaultCap;
  std::size_t basis_cap = kDefaultCap;
  std::size_t polarization_cap = kDefaultCap;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) {
      if (text.find_first_not_of(" \t") == std::string::npos) break;
      throw InputError(std::string("empty entry in ") + what + " list");
    }
    item = item.substr(b, item.find_last_not_of(" \t") - b + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty())
      throw InputError(std::string("invalid integer '") + item + "' in " + what);
    out.push_back(v);
  }
  return out;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

EngineOptions engine_options(const Options& o) {
  EngineOptions e;
  e.subset_cap = o.subset_cap;
  e.basis_cap = o.basis_cap;
  e.polarization_cap = o.polarization_cap;
  e.threads = o.threads;
  std::string dir = o.cache_dir;
  if (dir.empty())
    if (const char* env = std::getenv("PARASTAB_CACHE")) dir = env;
  if (!dir.empty()) e.basis_provider = cache::provider(dir, o.basis_cap);
  return e;
}

class Session {
 public:
  Session(std::string command, const Options& o, std::ostream& out)
      : command_(std::move(command)), opts_(o), out_(out),
        start_(std::chrono::steady_clock::now()) {}

  SimpleType type() const { return SimpleType::parse(opts_.type, opts_.rank); }
  NodeSet levi() const { return NodeSet::from_labels(parse_int_list(opts_.levi, "--levi"), opts_.rank); }

  json& echo() { return echo_; }
  void cap_hit(const std::string& which) { caps_.push_back(which); }

  void emit(const json& result) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    json env = {{"schema_version", report::kSchemaVersion},
                {"command", command_},
                {"input_echo", echo_},
                {"result", result},
                {"caps", caps_},
                {"timing", {{"wall_ms", std::to_string(ms)}}}};
    if (opts_.format == "text") out_ << report::render_text(env);
    else out_ << env.dump(2) << "\n";
  }

 private:
  std::string command_;
  const Options& opts_;
  std::ostream& out_;
  std::chrono::steady_clock::time_point start_;
  json echo_ = json::object();
  json caps_ = json::array();
};

void echo_space(Session& s, const Options& o, const SimpleType& t, NodeSet levi) {
  s.echo()["type"] = std::string(1, static_cast<char>(t.family()));
  s.echo()["rank"] = std::to_string(t.rank());
  s.echo()["levi"] = join(levi.labels(t.rank()));
  s.echo()["subset-cap"] = std::to_string(o.subset_cap);
  s.echo()["basis-cap"] = std::to_string(o.basis_cap);
}

int cmd_rootsys(const Options& o, std::ostream& out) {
  Session s("rootsys", o, out);
  const SimpleType t = s.type();
  s.echo()["type"] = std::string(1, static_cast<char>(t.family()));
  s.echo()["rank"] = std::to_string(t.rank());
  s.emit(report::root_system(RootSystem::build(t)));
  return kExitOk;
}

int cmd_submodules(const Options& o, std::ostream& out) {
  Session s("submodules", o, out);
  const SimpleType t = s.type();
  const NodeSet levi = s.levi();
  const CharMode mode = CharMode::parse(o.characteristic);
  echo_space(s, o, t, levi);
  s.echo()["char"] = std::to_string(mode.characteristic());
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(t));
  auto pd = std::make_shared<const ParabolicData>(rs, levi);
  try {
    s.emit(report::submodules(*pd, mode, enumerate_submodules(pd, mode, o.subset_cap)));
  } catch (const ResourceError& e) {
    s.cap_hit("subset-cap");
    s.emit({{"error", e.what()}, {"completed", std::to_string(e.completed())}});
    return kExitCap;
  }
  return kExitOk;
}

std::optional<Polarization> parse_pol(const std::string& text) {
  if (text == "anticanonical") return std::nullopt;
  return Polarization{parse_int_list(text, "--pol")};
}

int cmd_stability(const Options& o, std::ostream& out) {
  Session s("stability", o, out);
  const SimpleType t = s.type();
  const NodeSet levi = s.levi();
  const CharMode mode = CharMode::parse(o.characteristic);
  const auto pol = parse_pol(o.pol);
  echo_space(s, o, t, levi);
  s.echo()["char"] = std::to_string(mode.characteristic());
  s.echo()["pol"] = pol ? join(pol->coeffs) : "anticanonical";
  const StabilityVerdict v = check_tangent_stability(t, levi, mode, pol, engine_options(o));
  if (v.truncated) s.cap_hit("subset-cap");
  s.emit(report::verdict(v));
  if (v.truncated || !v.status) return kExitCap;
  switch (*v.status) {
    case StabilityStatus::Stable: return kExitOk;
    case StabilityStatus::StrictlySemistable: return kExitSemistable;
    case StabilityStatus::Unstable: return kExitUnstable;
  }
  return kExitOk;
}

int cmd_search(const Options& o, std::ostream& out) {
  Session s("search-polarization", o, out);
  const SimpleType t = s.type();
  const NodeSet levi = s.levi();
  const CharMode mode = CharMode::parse(o.characteristic);
  echo_space(s, o, t, levi);
  s.echo()["char"] = std::to_string(mode.characteristic());
  s.echo()["max-coeff"] = std::to_string(o.max_coeff);
  s.echo()["polarization-cap"] = std::to_string(o.polarization_cap);
  try {
    const auto result = search_destabilizing_polarization(t, levi, mode, o.max_coeff,
                                                          engine_options(o));
    s.emit(report::polarization_search(o.max_coeff, result));
  } catch (const ResourceError& e) {
    s.cap_hit("polarization-cap");
    s.emit({{"error", e.what()}, {"completed", std::to_string(e.completed())}});
    return kExitCap;
  }
  return kExitOk;
}

int cmd_demazure(const Options& o, std::ostream& out) {
  Session s("demazure", o, out);
  const SimpleType t = s.type();
  const NodeSet levi = s.levi();
  s.echo()["type"] = std::string(1, static_cast<char>(t.family()));
  s.echo()["rank"] = std::to_string(t.rank());
  s.echo()["levi"] = join(levi.labels(t.rank()));
  const VectorFieldAlgebra a = demazure_vector_fields(t, levi);
  auto rs = std::make_shared<const RootSystem>(RootSystem::build(t));
  s.emit(report::vector_fields(a, ParabolicData(rs, levi)));
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"parastab: equivariant slope stability of tangent bundles of G/P"};
  app.require_subcommand(1);
  Options o;

  auto add_type = [&](CLI::App* sub) {
    sub->add_option("--type", o.type, "Root system family A..G")->required();
    sub->add_option("--rank", o.rank, "Rank")->required();
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_space = [&](CLI::App* sub) {
    add_type(sub);
    sub->add_option("--levi", o.levi,
                    "Levi subset: comma-separated 1-based Bourbaki indices; empty = full flag");
    sub->add_option("--subset-cap", o.subset_cap, "Maximum number of closed subsets");
    sub->add_option("--basis-cap", o.basis_cap, "Maximum size of W^P");
    sub->add_option("--cache-dir", o.cache_dir, "Schubert basis cache (default $PARASTAB_CACHE)");
    sub->add_option("--threads", o.threads, "Worker threads");
  };

  CLI::App* rootsys = app.add_subcommand("rootsys", "Root system summary");
  add_type(rootsys);
  CLI::App* submodules = app.add_subcommand("submodules", "Closed subsets of tangent roots");
  add_space(submodules);
  submodules->add_option("--char", o.characteristic, "0 or a prime");
  CLI::App* stability = app.add_subcommand("stability", "Equivariant stability verdict");
  add_space(stability);
  stability->add_option("--char", o.characteristic, "0 or a prime");
  stability->add_option("--pol", o.pol, "Polarization coefficients c1,c2,... or 'anticanonical'");
  CLI::App* search =
      app.add_subcommand("search-polarization", "Scan ample polarizations for destabilizers");
  add_space(search);
  search->add_option("--char", o.characteristic, "0 or a prime");
  search->add_option("--max-coeff", o.max_coeff, "Coefficient bound")->required();
  search->add_option("--polarization-cap", o.polarization_cap, "Maximum box size");
  CLI::App* demazure = app.add_subcommand("demazure", "Global vector fields H^0(G/P, T)");
  add_type(demazure);
  demazure->add_option("--levi", o.levi, "Levi subset (1-based Bourbaki indices)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*rootsys) return cmd_rootsys(o, out);
    if (*submodules) return cmd_submodules(o, out);
    if (*stability) return cmd_stability(o, out);
    if (*search) return cmd_search(o, out);
    if (*demazure) return cmd_demazure(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const ResourceError& e) {
    err << "resource cap: " << e.what() << " (completed " << e.completed() << ")\n";
    return kExitCap;
  }
  return kExitInvalid;
}

}  // namespace parastab
