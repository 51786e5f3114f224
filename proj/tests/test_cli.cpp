#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "suites.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run cli(const std::string& args) {
  std::string cmd = std::string(HYPERLOG_CLI_PATH) + " " + args + " 2>&1";
  Run r{-1, {}};
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/hyperlog_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("prove exit codes") {
  CHECK(cli("prove --logic a --calculus hyper --goal '(A->B)\\/(B->A)'").code == 0);
  Run p = cli("prove --logic l --calculus label --goal p");
  CHECK(p.code == 1);
  CHECK(p.out.find("p=-1") != std::string::npos);
  CHECK(cli("prove --logic l --calculus hyper --goal 'bot => p'").code == 0);
  CHECK(cli("prove --logic a --calculus term --goal 'p |- p | q |- p'").code == 0);
  CHECK(cli("prove --logic a --calculus single-elab --goal 'p, q |- p + q'").code == 0);
  CHECK(cli("prove --logic a --goal '(p'").code == 2);
  CHECK(cli("prove --logic l --calculus single-elab --goal p").code == 2);
  CHECK(cli("prove --logic x --goal p").code == 2);
}

TEST_CASE("json output is deterministic") {
  const std::string args = "prove --logic a --calculus label --format json --goal '(p=>q)\\/(q=>p)'";
  Run a = cli(args), b = cli(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("\"verdict\": \"valid\"") != std::string::npos);
}

TEST_CASE("check-proof") {
  const std::string prelinearity = hyperlog::suites::data_path("ga_prelinearity.json");
  CHECK(cli("check-proof --calculus GA --file " + prelinearity).code == 0);

  std::ifstream in(prelinearity);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  auto pos = text.find("A, B |- A, B");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 12, "A, B |- A, A");
  Run bad = cli("check-proof --calculus GA --file " + temp_file("corrupt.json", text));
  CHECK(bad.code == 1);
  CHECK(bad.out.find("rejected at") != std::string::npos);

  CHECK(cli("check-proof --calculus GA --file " + temp_file("empty.json", "")).code == 2);
  CHECK(cli("check-proof --calculus GZ --file " + prelinearity).code == 2);
}

TEST_CASE("translate") {
  Run r = cli("translate --mode enthymematic --goal 'p =>> p'");
  CHECK(r.code == 0);
  CHECK(r.out == "t /\\ p -> p\n");
  CHECK(cli("translate --mode material --goal 'p =>> p'").code == 2);
}

TEST_CASE("corpus") {
  Run r = cli("corpus --suite axioms");
  CHECK(r.code == 0);
  CHECK(r.out.find("0 failed") != std::string::npos);
  CHECK(cli("corpus --suite nonsense").code == 2);
}
