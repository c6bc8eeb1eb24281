#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>

#include "slidechrom/cli.hpp"

using namespace slidechrom;
using namespace slidechrom::cli;

TEST_CASE("graph command on the drawn paths") {
  auto a = cmd_graph("ENEENENEE@3,3");
  REQUIRE(a.status == Status::ok);
  CHECK(a.payload["edges"] == nlohmann::json::parse("[[1,2],[2,3]]"));
  CHECK(a.payload["rho"] == nlohmann::json::parse("[1,3,3]"));
  CHECK(a.payload["n"] == 3);
  CHECK(a.payload["dot"].get<std::string>().find("graph") != std::string::npos);

  auto b = cmd_graph("ENEEENENEENNEENEE@6,5");
  REQUIRE(b.status == Status::ok);
  CHECK(b.payload["edges"] == nlohmann::json::parse("[[1,2],[1,3],[2,3],[3,4],[3,5],[4,5],[5,6]]"));
  CHECK(b.payload["rho"] == nlohmann::json::parse("[1,4,5,5,5,5]"));
}

TEST_CASE("malformed input is an error") {
  CHECK(cmd_graph("EEE@3,0").status == Status::error);
  CHECK(cmd_graph("ENX@1,0").status == Status::error);
  CHECK(cmd_chromatic("ENNNEE@3,0", std::nullopt, ChromaticMode::brute).status == Status::error);
  CHECK(cmd_slides(nlohmann::json::parse("{\"bogus\": 1}"), std::nullopt).status == Status::error);
  CHECK(cmd_backstable("1,0|1", 2, 1).status == Status::error);
  CHECK(cmd_backstable("021", 3, 0).status == Status::error);
  auto e = error_result("boom");
  CHECK(e.payload["status"] == "error");
  CHECK(e.payload["message"] == "boom");
}

TEST_CASE("status to exit code") {
  CHECK(exit_code(Status::ok) == 0);
  CHECK(exit_code(Status::mismatch) == 1);
  CHECK(exit_code(Status::error) == 2);
  CHECK(std::string(status_name(Status::mismatch)) == "mismatch");
}

TEST_CASE("chromatic command") {
  for (const auto& D : enumerate_paths(2, 0)) {
    auto res = cmd_chromatic(D.literal(), std::nullopt, ChromaticMode::brute);
    REQUIRE(res.status == Status::ok);
    CHECK(tpolynomial_from_json(res.payload["brute"]).is_zero());
  }
  for (const char* lit : {"ENEENENEE@3,3", "ENEEENENEENNEENEE@6,5"}) {
    auto res = cmd_chromatic(lit, std::nullopt, ChromaticMode::both);
    REQUIRE(res.status == Status::ok);
    CHECK(res.payload["equal"] == true);
    CHECK(tpolynomial_from_json(res.payload["brute"]) == tpolynomial_from_json(res.payload["theorem"]));
  }
  auto wide = cmd_chromatic("ENEENENEE@3,3", Window(-1, 3), ChromaticMode::both);
  CHECK(wide.status == Status::ok);
  CHECK(wide.payload["window"] == nlohmann::json::parse("[-1,3]"));
}

TEST_CASE("slides command round-trips a polynomial") {
  auto p = slide_poly(WeakComposition::parse("0201"), Window(1, 4)) + scale_t(slide_poly(WeakComposition::parse("111"), Window(1, 4)), 2);
  auto res = cmd_slides(nlohmann::json::parse(to_json(p).dump()), std::nullopt);
  REQUIRE(res.status == Status::ok);
  CHECK(res.payload["positive"] == true);
  CHECK(res.payload["expansion"].size() == 2);
}

TEST_CASE("rdes and backstable commands") {
  auto t = cmd_rdes("ENEENENEE@3,3");
  REQUIRE(t.status == Status::ok);
  CHECK(t.payload["rows"].size() == 6);
  auto b = cmd_backstable("1,2|0,2,0,1", 4, 2);
  REQUIRE(b.status == Status::ok);
  CHECK(b.payload["identity_holds"] == true);
  CHECK(b.payload["terms"].size() == 4);
  CHECK(b.payload["eta0"] == nlohmann::json::parse("[1,2,2,1]"));
  CHECK(cmd_backstable("ENEENENEE@3,3", 0, 2).status == Status::ok);
  auto q = cmd_qsym("ENEENENEE@3,3", std::nullopt);
  CHECK(q.status == Status::ok);
  CHECK(q.payload["m"] == 3);
}

TEST_CASE("sweeps") {
  CHECK(cmd_sweep({.n = 4, .r = 3}).status == Status::ok);
  CHECK(cmd_sweep({.n = 3, .r = 3, .mode = SweepMode::corollary, .m = 3}).status == Status::ok);
  CHECK(cmd_sweep({.n = 3, .r = 2, .mode = SweepMode::backstable, .m = 2}).status == Status::ok);
  auto refused = cmd_sweep({.n = 7, .r = 2});
  CHECK(refused.status == Status::error);
  auto keys = cmd_sweep({.n = 3, .r = 3, .mode = SweepMode::keys});
  CHECK(keys.status == Status::ok);
  CHECK(keys.payload["findings"].empty());
}

TEST_CASE("output is deterministic across runs and thread counts") {
  auto a = cmd_sweep({.n = 4, .r = 3, .threads = 1}).payload.dump();
  auto b = cmd_sweep({.n = 4, .r = 3, .threads = 4}).payload.dump();
  auto c = cmd_sweep({.n = 4, .r = 3, .threads = 4}).payload.dump();
  CHECK(a == b);
  CHECK(b == c);
  auto k1 = cmd_sweep({.n = 5, .r = 5, .mode = SweepMode::keys, .threads = 1}).payload.dump();
  auto k3 = cmd_sweep({.n = 5, .r = 5, .mode = SweepMode::keys, .threads = 3}).payload.dump();
  CHECK(k1 == k3);
  CHECK(cmd_chromatic("ENEEENENEENNEENEE@6,5", std::nullopt, ChromaticMode::theorem).payload.dump() ==
        cmd_chromatic("ENEEENENEENNEENEE@6,5", std::nullopt, ChromaticMode::theorem).payload.dump());
}

TEST_CASE("recorded findings replay") {
  auto dir = std::filesystem::temp_directory_path() / "slidechrom_cli_test_fixtures";
  std::filesystem::remove_all(dir);
  ::setenv("SLIDECHROM_FIXTURES", dir.c_str(), 1);
  auto rec = cmd_sweep({.n = 5, .r = 5, .mode = SweepMode::keys, .record = true});
  REQUIRE(rec.status == Status::ok);
  REQUIRE_FALSE(rec.payload["findings"].empty());
  CHECK(std::filesystem::exists(dir / "keys_n5_r5.json"));
  auto rep = cmd_keys("", true);
  CHECK(rep.status == Status::ok);
  CHECK(rep.payload["fixtures"].size() == rec.payload["findings"].size());
  std::filesystem::remove_all(dir);
  ::unsetenv("SLIDECHROM_FIXTURES");
  CHECK(cmd_keys("", true).status == Status::error);

  auto k = cmd_keys("EENEENENEENEENE@5,5", false);
  REQUIRE(k.status == Status::ok);
  CHECK(k.payload["key_positive"] == false);
  CHECK(cmd_keys("ENEENENEE@3,3", false).payload["key_positive"] == true);
}
