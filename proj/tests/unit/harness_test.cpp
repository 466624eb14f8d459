#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "generator.hpp"
#include "instance.hpp"
#include "oracle.hpp"

using namespace toricmld;
using namespace toricmld::harness;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

template <typename Cmd>
Run run(Cmd cmd, const CommandOptions& opt) {
  std::ostringstream out, err;
  const int code = cmd(opt, out, err);
  return {code, out.str(), err.str()};
}

CommandOptions on(const std::string& name) {
  CommandOptions opt;
  opt.instance = fixtures::corpus_dir() + "/" + name;
  return opt;
}

std::vector<fs::path> corpus_files(const std::string& sub = "") {
  std::vector<fs::path> out;
  for (const auto& entry : fs::directory_iterator(fixtures::corpus_dir() + sub))
    if (entry.path().extension() == ".json") out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("toricmld_test_" + name); }

}  // namespace

TEST_CASE("corpus serialization round-trips byte for byte") {
  const auto files = corpus_files();
  CHECK(files.size() >= 10);
  for (const auto& f : files) {
    const std::string text = read_file(f.string());
    CHECK_MESSAGE(serialize_instance(parse_instance(text, f.string())) == text, f.string());
  }
}

TEST_CASE("generated instances round-trip and are deterministic") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance a = generate_instance(seed);
    const std::string text = serialize_instance(a);
    CHECK(serialize_instance(parse_instance(text)) == text);
    CHECK(serialize_instance(generate_instance(seed)) == text);
    CHECK(a.rank_n <= 3);
  }
}

TEST_CASE("parse errors locate the problem") {
  try {
    parse_instance("{\"rank_N\": 2,", "broken.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("broken.json") != std::string::npos);
  }
  const std::string base = read_file(fixtures::corpus_dir() + "/a2_identity.json");
  std::string bad = base;
  bad.replace(bad.find("\"rank_N\": 2"), 11, "\"rank_N\": \"x\"");
  try {
    parse_instance(bad, "bad.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("/rank_N") != std::string::npos);
  }
  std::string extra = base;
  extra.insert(1, "\"colour\": 1,");
  CHECK_THROWS_AS(parse_instance(extra), Error);
}

TEST_CASE("certificates round-trip") {
  const Instance inst = load_instance(fixtures::corpus_dir() + "/case2_rank3.json");
  const HyperplaneCertificate cert = find_hyperplane(inst.contraction(), inst.pair());
  const HyperplaneCertificate back = parse_certificate(serialize_certificate(cert));
  CHECK(back.phi_bar == cert.phi_bar);
  CHECK(back.gamma == cert.gamma);
  CHECK(back.mld == cert.mld);
  CHECK(back.d == cert.d);
  CHECK(verify_certificate(inst.contraction(), inst.pair(), back).ok);
}

TEST_CASE("check command") {
  const Run ok = run(cmd_check, on("a2_identity.json"));
  CHECK(ok.code == kOk);
  CHECK(ok.out == "valid\n");
  const Run quad = run(cmd_check, on("invalid/quadrant_over_line.json"));
  CHECK(quad.code == kInvalidInput);
  CHECK(quad.err.find("support") != std::string::npos);
  const Run range = run(cmd_check, on("invalid/b_out_of_range.json"));
  CHECK(range.code == kInvalidInput);
  const Run missing = run(cmd_check, on("no_such_file.json"));
  CHECK(missing.code == kInvalidInput);
}

TEST_CASE("mld, lc and lct commands") {
  CHECK(run(cmd_mld, on("a1_family.json")).out == "2/3\n");
  CHECK(run(cmd_mld, on("a1_family_a_1_2.json")).out == "1/2\n");
  CHECK(run(cmd_mld, on("a1_family_a_1_3.json")).out == "1/3\n");
  CHECK(run(cmd_mld, on("cax4.json")).out == "2\n");
  CommandOptions lct = on("a2_identity.json");
  lct.phibar = "1,0";
  CHECK(run(cmd_lct, lct).out == "1\n");
  lct.phibar = "1";
  CHECK(run(cmd_lct, lct).code == kInvalidInput);
  lct.phibar = "1,x";
  CHECK(run(cmd_lct, lct).code == kInvalidInput);
  CHECK(run(cmd_lc, on("a2_identity.json")).code == kOk);
  const Run not_lc = run(cmd_lc, on("invalid/a2_not_glc.json"));
  CHECK(not_lc.code == kNegative);
  CHECK(not_lc.out == "not g-lc\n");
  CommandOptions js = on("cax4.json");
  js.json = true;
  CHECK(run(cmd_mld, js).out.find("\"mld\":\"2\"") != std::string::npos);
}

TEST_CASE("find and verify commands") {
  CHECK(run(cmd_find, on("a2_identity.json")).out.find("\"phi_bar\"") != std::string::npos);
  for (const auto& f : corpus_files()) {
    CommandOptions opt;
    opt.instance = f.string();
    opt.out = temp_file(f.filename().string()).string();
    REQUIRE(run(cmd_find, opt).code == kOk);
    opt.certificate = opt.out;
    const Run v = run(cmd_verify, opt);
    CHECK_MESSAGE(v.code == kOk, f.string());
    CHECK(v.out == "ok\n");
    fs::remove(opt.out);
  }
  CommandOptions opt = on("a2_identity.json");
  opt.out = temp_file("tamper.json").string();
  REQUIRE(run(cmd_find, opt).code == kOk);
  HyperplaneCertificate cert = parse_certificate(read_file(opt.out));
  CHECK(cert.phi_bar == int_vector({1, 0}));
  CHECK(cert.gamma == 1);
  cert.gamma = 2;
  {
    std::ofstream f(opt.out);
    f << serialize_certificate(cert);
  }
  opt.certificate = opt.out;
  const Run rejected = run(cmd_verify, opt);
  CHECK(rejected.code == kNegative);
  CHECK(rejected.out.find("rejected") == 0);
  fs::remove(opt.out);
}

TEST_CASE("halfplane certificate") {
  CommandOptions opt = on("halfplane.json");
  opt.json = true;
  opt.out = temp_file("halfplane_cert.json").string();
  const Run r = run(cmd_find, opt);
  CHECK(r.out.find("\"phi_bar\":[\"1\"]") != std::string::npos);
  CHECK(r.out.find("\"gamma\":\"1\"") != std::string::npos);
  fs::remove(opt.out);
}

TEST_CASE("oracle command") {
  CommandOptions a2 = on("a2_identity.json");
  a2.box = 3;
  CHECK(run(cmd_oracle_mld, a2).out.rfind("2 at (1,1)\n", 0) == 0);
  CommandOptions h = on("halfplane.json");
  h.box = 3;
  CHECK(run(cmd_oracle_mld, h).out.rfind("1 at (0,1)\n", 0) == 0);
  CommandOptions c = on("cax4.json");
  c.box = 4;
  CHECK(run(cmd_oracle_mld, c).out.rfind("2 at", 0) == 0);
  c.box = 0;
  CHECK(run(cmd_oracle_mld, c).code == kInvalidInput);
}

TEST_CASE("gamma command") {
  CommandOptions opt;
  opt.dim = 2;
  opt.mld = "1";
  CHECK(run(cmd_gamma, opt).out.rfind("1/4\n", 0) == 0);
  opt.dim = 1;
  opt.mld = "7/5";
  CHECK(run(cmd_gamma, opt).out.rfind("7/5\n", 0) == 0);
  opt.dim = 3;
  opt.mld = "1";
  CHECK(run(cmd_gamma, opt).out.rfind("1/324\n", 0) == 0);
  opt.dim = 0;
  CHECK(run(cmd_gamma, opt).code == kInvalidInput);
}

TEST_CASE("seeded inputs") {
  CommandOptions opt;
  opt.seed = 5;
  CHECK(run(cmd_mld, opt).code == kOk);
  CHECK(run(cmd_mld, CommandOptions{}).code == kInvalidInput);
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorCode::kNotPositive) == kNegative);
  CHECK(exit_code_for(ErrorCode::kLemmaViolation) == kNegative);
  CHECK(exit_code_for(ErrorCode::kParse) == kInvalidInput);
  CHECK(exit_code_for(ErrorCode::kInvalidContraction) == kInvalidInput);
}

TEST_CASE("oracle scan bounds the mld from above") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = generate_instance(seed);
    const ToricContraction tc = inst.contraction();
    const MldResult m = mld_over_fiber(tc, box_square(tc, inst.pair()));
    const OracleResult small = oracle_mld(tc, inst.pair(), 2);
    if (small.found) CHECK(small.value >= m.value);
  }
}
