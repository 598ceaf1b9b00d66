#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "artifact/groups.hpp"
#include "artifact/json_io.hpp"

using namespace msym;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(MSYM_BIN) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args) {
  Run r = run(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "msym_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string write_file(const std::string& name, const std::string& body) {
  auto p = scratch(name);
  std::ofstream(p) << body;
  return p.string();
}

RatVec rats(const json& a) {
  RatVec v;
  for (const auto& x : a) v.push_back(rat_from_json(x));
  return v;
}

}  // namespace

TEST_CASE("farey output round trips") {
  json j = run_json("farey --group gamma0 --level 11");
  CHECK(j["index"] == 12);
  CHECK(j["cusps"] == 2);
  CHECK(j["genus"] == 1);
  FareySymbol s = farey_from_json(j["symbol"]);
  CHECK_NOTHROW(s.validate(gamma0(11).member));
  CHECK(s.size() == FareyGroup::build(gamma0(11))->symbol().size());
}

TEST_CASE("farey with a parent") {
  std::string parent = write_file("parent.json", R"({"group": "gamma0", "level": 2})");
  json j = run_json("farey --group gamma0 --level 6 --parent " + parent);
  CHECK(j["index"] == 12);
  CHECK_NOTHROW(farey_from_json(j["symbol"]).validate(gamma0(6).member));
  // Gamma0(4) does not contain Gamma0(6)
  std::string bad = write_file("bad_parent.json", R"({"group": "gamma0", "level": 4})");
  CHECK(run("farey --group gamma0 --level 6 --parent " + bad).code == 3);
}

TEST_CASE("spaces and operators") {
  json c = run_json("cuspidal --level 11 --weight 2");
  CHECK(c["dimension"] == 2);
  CHECK(c["ambient_dim"] == 3);
  json h = run_json("hecke --ell 2 --level 11 --weight 2");
  // (x + 2)^2 on the cuspidal part, (x - 3)(x + 2)^2 on everything
  CHECK(rats(h["cuspidal_charpoly"]) == RatVec{Rat(4), Rat(4), Rat(1)});
  CHECK(rats(h["charpoly"]) == RatVec{Rat(-12), Rat(-8), Rat(1), Rat(1)});
  json m = run_json("modsym-space --group gamma0 --level 1 --weight 12");
  CHECK(m["dim"] == 3);
  json e = run_json("eisbasis --level 6 --weight 4");
  CHECK(e.dump().find("[6,6,0]") != std::string::npos);
}

TEST_CASE("eisenstein symbol and q-expansion") {
  std::string one = write_file("one.json", R"({"N": 1, "values": [[1]]})");
  json e = run_json("eis-symbol --level 1 --weight 12 --fn " + one);
  CHECK(rat_from_json(e["c_inf"]) / Rat(11) == Rat(691, 360360));
  RatVec p = rats(e["p_mod"]["coeffs"]);
  REQUIRE(p.size() == 11);
  CHECK(p[1] == Rat(-5, 792));
  json q = run_json("qexp --level 1 --weight 4 --terms 5 --fn " + one);
  // 1/120 + 2 sigma_3(n) q^n
  CHECK(q["expansion"]["constant"]["coeffs"][0] == "1/120");
  // the coefficient list starts at q^1
  CHECK(q["expansion"]["coeffs"][1]["coeffs"][0] == "18");
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("bogus").code == 2);
  CHECK(run("cuspidal --weight 2").code == 2);
  CHECK(run("farey --group gamma0 --level 6 --format xml").code == 2);
  std::string bad = write_file("bad_fn.json", R"({"N": 2, "values": [[1, 0], [0]]})");
  CHECK(run("eis-symbol --level 2 --weight 4 --fn " + bad).code == 2);
  // odd weight with -I in the group: nothing to compute
  CHECK(run("modsym-space --group gamma0 --level 5 --weight 3").code == 3);
  CHECK(run("verify --suite delta").code == 0);
}

TEST_CASE("output file and determinism") {
  auto path = scratch("pairing.json");
  std::filesystem::remove(path);
  CHECK(run("pairing-matrix --level 11 --weight 2 --output " + path.string()).code == 0);
  std::ifstream in(path);
  std::string from_file((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::string serial = run("--threads 1 pairing-matrix --level 11 --weight 2").out;
  std::string parallel = run("--threads 4 pairing-matrix --level 11 --weight 2").out;
  CHECK(serial == parallel);
  CHECK(json::parse(from_file) == json::parse(serial));
}
