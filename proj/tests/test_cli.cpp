#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "bgeom/io/atomic_file.hpp"
#include "bgeom/io/csv.hpp"

#ifndef BGEOM_CLI_PATH
#error "BGEOM_CLI_PATH must name the bgeom executable"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Arguments are passed to /bin/sh verbatim; callers quote as needed.
Run run(const std::string& args, bool merge_stderr = false) {
  const std::string cmd = std::string("'") + BGEOM_CLI_PATH + "' " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "bgeom_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run("farey dist 0/1 0/1").out == "0\n");
  CHECK(run("farey dist 0/1 0/1").code == 0);
  CHECK(run("coeffs 1/2 1/2").code == 1);
  CHECK(run("farey dist 0/0 1").code == 2);
  CHECK(run("no-such-command").code == 2);
  CHECK(run("collar").code == 2);
  CHECK(run("collar -- -1").code == 1);
}

TEST_CASE("bounded geometry decisions") {
  const auto golden = run("decide '[1;1,1](period:1)' inf -K 10");
  CHECK(golden.code == 0);
  CHECK(golden.out.rfind("Bounded\n", 0) == 0);
  const auto doubling = run("decide '[0;1,2,4,8,16,32,...]' inf -K 10");
  CHECK(doubling.code == 3);
  CHECK(doubling.out.rfind("Unbounded\n", 0) == 0);
  const auto open = run("decide '[0;1,2,1,...]' inf -K 10");
  CHECK(open.code == 4);
  CHECK(open.out.rfind("IndeterminateAtDepth\n", 0) == 0);
  CHECK(run("decide 0/1 inf -K 0").code == 1);
}

TEST_CASE("numeric output") {
  const auto r = run("twist-ratio");
  CHECK(r.code == 0);
  CHECK(r.out.find("ratio_max=1.41722") == 0);
  const auto c = run("--format csv collar 1");
  CHECK(c.code == 0);
  const auto t = bgeom::io::parse_csv(c.out);
  REQUIRE(t.rows().size() == 1);
  CHECK(t.columns()[0] == "ell");
  CHECK(std::stod(t.rows()[0][1]) == doctest::Approx(1.4068291137).epsilon(1e-10));
}

TEST_CASE("json output") {
  const auto r = run("--format json cf 355/113");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "cf");
  REQUIRE(j["rows"].size() == 3);
  CHECK(j["rows"][2]["a_k"] == 16);
  CHECK(j["rows"][2]["convergent"] == "355/113");
}

TEST_CASE("resolution round trip through files") {
  const auto dir = scratch();
  const auto seq = dir / "seq.txt";
  CHECK(run("resolve 0/1 -21/13 -o '" + seq.string() + "'").code == 0);
  const auto text = bgeom::io::read_file(seq);
  CHECK(text.find("# from 0/1") != std::string::npos);
  const auto ok = run("check-resolution '" + seq.string() + "'");
  CHECK(ok.code == 0);
  CHECK(ok.out.find("on_geodesic=true") != std::string::npos);
  // Same sequence judged against a different target.
  CHECK(run("check-resolution '" + seq.string() + "' --to 5/3").code == 1);
  bgeom::io::write_atomic(dir / "bad.txt", "# surface 1 1\nstep 0: remove\n");
  CHECK(run("check-resolution '" + (dir / "bad.txt").string() + "'").code == 2);

  const auto opaque = run("resolve --surface 0,5 '*1,*2,c1 | *3,c1,c2 | *4,*5,c2' '*1,*3,c1~0 | *2,c1~0,c2 | *4,*5,c2'");
  CHECK(opaque.code == 0);
  CHECK(opaque.out.find("remove c1 insert c1~0 type S index 0") != std::string::npos);
}

TEST_CASE("config file and flag precedence") {
  const auto dir = scratch();
  const auto cfg = dir / "job.json";
  bgeom::io::write_atomic(cfg, R"({"format": "csv"})");
  const auto r = bgeom::io::parse_csv(run("--config '" + cfg.string() + "' farey dist 0/1 5/3").out);
  CHECK(r.columns() == std::vector<std::string>{"a", "b", "distance"});
  const auto f = run("--config '" + cfg.string() + "' --format text farey dist 0/1 5/3");
  CHECK(f.out == "3\n");
}

TEST_CASE("batch rows replay individually") {
  const auto dir = scratch();
  const auto jobs = dir / "jobs.txt";
  bgeom::io::write_atomic(jobs,
                          "# comment\n"
                          "farey dist 0/1 13/8\n"
                          "decide \"[0;1,2,4,8,16,32,...]\" inf -K 10\n"
                          "coeffs 1/2 1/2\n"
                          "twist 1/0 7/2\n");
  const auto r = run("--format csv batch '" + jobs.string() + "'");
  CHECK(r.code == 1);
  const auto t = bgeom::io::parse_csv(r.out);
  REQUIRE(t.rows().size() == 4);
  for (const auto& row : t.rows()) {
    std::string cmd = row[1];
    for (std::size_t p; (p = cmd.find('"')) != std::string::npos;) cmd[p] = '\'';
    const auto single = run(cmd, true);
    CHECK(std::to_string(single.code) == row[2]);
    std::string o = single.out;
    while (!o.empty() && o.back() == '\n') o.pop_back();
    CHECK(o == row[3]);
  }
}

TEST_CASE("dot export") {
  const auto r = run("export-dot farey --center 0/1 --radius 2 --height 5 --path 0/1 3/5");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("graph", 0) == 0);
  CHECK(r.out.find("red") != std::string::npos);
  CHECK(run("export-dot pants --surface 1,2").out.find("c2") != std::string::npos);
}
