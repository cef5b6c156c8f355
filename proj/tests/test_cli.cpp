#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "parastab/cache.hpp"
#include "parastab/cli.hpp"

using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "parastab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = parastab::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json body(const Run& r) {
  json j = json::parse(r.out);
  j.erase("timing");
  return j;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("parastab_test_" + name + "_" +
                                                  std::to_string(::getpid()));
  fs::remove_all(p);
  return p;
}

void all_strings(const json& j) {
  if (j.is_structured()) {
    for (const auto& x : j) all_strings(x);
  } else {
    CHECK((j.is_string() || j.is_boolean() || j.is_null()));
  }
}

}  // namespace

TEST_CASE("envelope") {
  const Run r = run({"stability", "--type", "C", "--rank", "2", "--levi", "1", "--char", "2"});
  CHECK(r.code == parastab::kExitSemistable);
  const json j = json::parse(r.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"] == "stability");
  CHECK(j["input_echo"]["type"] == "C");
  CHECK(j["input_echo"]["levi"] == "1");
  CHECK(j["input_echo"]["char"] == "2");
  CHECK(j["input_echo"]["pol"] == "anticanonical");
  CHECK(j["timing"]["wall_ms"].is_string());
  CHECK(j["result"]["status"] == "equivariantly-strictly-semistable");
  CHECK(j["result"]["tangent"]["slope"] == "54/3");
  REQUIRE(j["result"]["witnesses"].size() == 1);
  const json& w = j["result"]["witnesses"][0];
  CHECK(w["slope"]["slope"] == "18/1");
  CHECK(w["roots"][0]["display"] == "-(e1+e2)");
  CHECK(w["rank"] == "1");
  all_strings(j);
}

TEST_CASE("exit codes") {
  CHECK(run({"stability", "--type", "A", "--rank", "2", "--levi", "2"}).code == 0);
  CHECK(run({"stability", "--type", "C", "--rank", "2", "--levi", "1", "--char", "3"}).code == 0);
  CHECK(run({"stability", "--type", "A", "--rank", "2", "--pol", "1,2"}).code ==
        parastab::kExitUnstable);
  CHECK(run({"stability", "--type", "A", "--rank", "2", "--levi", "1,2"}).code == 2);
  CHECK(run({"stability", "--type", "A", "--rank", "2", "--levi", "1,x"}).code == 2);
  CHECK(run({"stability", "--type", "Q", "--rank", "2"}).code == 2);
  CHECK(run({"stability", "--type", "A", "--rank", "2", "--char", "6"}).code == 2);
  CHECK(run({"stability", "--type", "A", "--rank", "2", "--pol", "1"}).code == 2);
  CHECK(run({"rootsys"}).code == 2);
  CHECK(run({"submodules", "--type", "A", "--rank", "3", "--subset-cap", "2"}).code == 3);
  CHECK(run({"stability", "--type", "A", "--rank", "3", "--subset-cap", "2"}).code == 3);
  CHECK(run({"stability", "--type", "B", "--rank", "3", "--basis-cap", "5"}).code == 3);
  const Run cap = run({"search-polarization", "--type", "A", "--rank", "3", "--max-coeff", "30",
                       "--polarization-cap", "1000"});
  CHECK(cap.code == 3);
  CHECK(json::parse(cap.out)["caps"][0] == "polarization-cap");
  CHECK(json::parse(cap.out)["result"]["error"].get<std::string>().find("[1,10]^3") !=
        std::string::npos);
}

TEST_CASE("subcommand payloads") {
  json j = body(run({"rootsys", "--type", "G", "--rank", "2"}));
  CHECK(j["result"]["root_count"] == "12");
  CHECK(j["result"]["weyl_order"] == "12");
  CHECK(j["result"]["min_admissible_char"] == "5");

  j = body(run({"submodules", "--type", "C", "--rank", "2", "--levi", "1", "--char", "2"}));
  CHECK(j["result"]["closed_count"] == "3");
  CHECK(j["result"]["proper_count"] == "1");
  CHECK(j["result"]["candidates"][1]["c1_weight"] == json({"0", "1"}));

  j = body(run({"demazure", "--type", "C", "--rank", "3", "--levi", "2,3"}));
  CHECK(j["result"]["algebra"] == "sl(6)");
  CHECK(j["result"]["dimension"] == "35");

  j = body(run({"search-polarization", "--type", "A", "--rank", "2", "--max-coeff", "3"}));
  CHECK(j["result"]["scanned"] == "7");
  CHECK(j["result"]["witness_count"] != "0");

  const Run text = run({"stability", "--type", "A", "--rank", "2", "--levi", "2", "--format",
                        "text"});
  CHECK(text.code == 0);
  CHECK(text.out.find("equivariantly-stable") != std::string::npos);
}

TEST_CASE("output is deterministic apart from timing") {
  const std::vector<std::string> args = {"search-polarization", "--type", "B", "--rank", "2",
                                         "--max-coeff", "5", "--threads", "3"};
  CHECK(body(run(args)) == body(run(args)));
  auto single = args;
  single.back() = "1";
  json a = body(run(args)), b = body(run(single));
  a["input_echo"].erase("threads");
  b["input_echo"].erase("threads");
  CHECK(a["result"] == b["result"]);
}

TEST_CASE("schubert cache") {
  const fs::path dir = scratch("cache");
  const std::vector<std::string> base = {"stability", "--type", "B", "--rank", "3"};
  auto with_cache = base;
  with_cache.insert(with_cache.end(), {"--cache-dir", dir.string()});

  const json cold_reference = body(run(base));
  const json cold = body(run(with_cache));
  const fs::path entry = dir / "schubert_B3_Snone.json";
  REQUIRE(fs::exists(entry));
  const json warm = body(run(with_cache));
  CHECK(cold == cold_reference);
  CHECK(warm == cold_reference);

  std::string stored;
  {
    std::ifstream in(entry);
    stored.assign(std::istreambuf_iterator<char>(in), {});
  }
  json doc = json::parse(stored);
  CHECK(doc["checksum"] == parastab::cache::sha256_hex(doc["payload"].dump()));

  auto rewrite = [&](const json& d) {
    std::ofstream out(entry, std::ios::trunc);
    out << d.dump();
  };
  auto current = [&] {
    std::ifstream in(entry);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };

  // Stale checksum.
  json stale = doc;
  stale["payload"]["edges"][0][2][0] = 7;
  rewrite(stale);
  CHECK(body(run(with_cache)) == cold_reference);
  CHECK(current() == stored);

  // A consistent checksum over a wrong edge label.
  json forged = doc;
  json& gamma = forged["payload"]["edges"][0][2];
  gamma = gamma == json({1, 0, 0}) ? json({0, 1, 0}) : json({1, 0, 0});
  forged["checksum"] = parastab::cache::sha256_hex(forged["payload"].dump());
  rewrite(forged);
  CHECK(body(run(with_cache)) == cold_reference);
  CHECK(current() == stored);

  // Garbage bytes.
  {
    std::ofstream out(entry, std::ios::trunc);
    out << "{not json";
  }
  CHECK(body(run(with_cache)) == cold_reference);
  CHECK(current() == stored);
  rewrite(json::array());
  CHECK(body(run(with_cache)) == cold_reference);
  CHECK(current() == stored);

  // The environment variable is honoured when no flag is given.
  const fs::path env_dir = scratch("env");
  ::setenv("PARASTAB_CACHE", env_dir.string().c_str(), 1);
  CHECK(body(run(base)) == cold_reference);
  ::unsetenv("PARASTAB_CACHE");
  CHECK(fs::exists(env_dir / "schubert_B3_Snone.json"));

  // A leftover temp file does not confuse a later run.
  for (const auto& e : fs::directory_iterator(dir))
    CHECK(e.path().extension() == ".json");
  fs::remove_all(dir);
  fs::remove_all(env_dir);
}

TEST_CASE("input echo round-trips") {
  const std::vector<std::string> args = {"stability", "--type", "C", "--rank", "3", "--levi",
                                         "1, 2", "--char", "2", "--pol", "4"};
  const json first = body(run(args));
  const json& echo = first["input_echo"];
  std::vector<std::string> again = {"stability"};
  for (const char* key : {"type", "rank", "levi", "char", "pol", "subset-cap", "basis-cap"}) {
    again.push_back(std::string("--") + key);
    again.push_back(echo[key].get<std::string>());
  }
  CHECK(body(run(again)) == first);
}
