#include <cstdio>      // for popen, pclose
#include <filesystem>  // for temp_directory_path, remove
#include <fstream>     // for ofstream
#include <sstream>     // for ostringstream

#include <json.hpp>

#include "catch_amalgamated.hpp"

#include "cli.hpp"
#include "freegrowth/errors.hpp"

namespace freegrowth {

  namespace {
    struct Result {
      int         code;
      std::string out;
      std::string err;
    };

    Result run(std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int const          code = cli::run(args, out, err);
      return {code, out.str(), err.str()};
    }
  }  // namespace

  TEST_CASE("count as csv", "[cli][quick]") {
    auto const r = run({"count", "--kind", "ideal", "--rank", "2", "--max-index",
                        "6", "--format", "csv", "--threads", "1"});
    REQUIRE(r.code == cli::exit_code::ok);
    REQUIRE(r.out == "n,count\n1,2\n2,3\n3,6\n4,10\n5,20\n6,35\n");

    auto const c = run({"count", "--kind", "congruence", "--rank", "2",
                        "--max-classes", "3"});
    REQUIRE(c.code == cli::exit_code::ok);
    REQUIRE(c.out == "n,count\n1,1\n2,10\n3,40\n");

    auto const s = run({"count", "--kind", "subsemigroup", "--rank", "1",
                        "--max-index", "5"});
    REQUIRE(s.out == "n,count\n1,1\n2,2\n3,4\n4,7\n5,12\n");

    auto const ri = run({"count", "--kind", "right-ideal", "-r", "2", "-n", "4"});
    REQUIRE(ri.out == "n,count\n1,2\n2,5\n3,14\n4,42\n");
  }

  TEST_CASE("count as json", "[cli][quick]") {
    auto const r = run({"count", "--kind", "subsemigroup", "--rank", "2",
                        "--max-index", "3", "--format", "json", "--threads", "2"});
    REQUIRE(r.code == cli::exit_code::ok);
    auto const j = nlohmann::json::parse(r.out);
    REQUIRE(j["kind"] == "subsemigroup");
    REQUIRE(j["rank"] == 2);
    REQUIRE(j["values"].size() == 3);
    REQUIRE(j["values"][2]["index"] == 3);
    REQUIRE(j["values"][2]["count"] == 62);
    REQUIRE(j["meta"]["threads"] == 2);
    REQUIRE(j["meta"].contains("elapsed_ms"));
    REQUIRE(j["meta"].contains("version"));
  }

  TEST_CASE("count resumes from a checkpoint", "[cli][quick]") {
    auto const path = (std::filesystem::temp_directory_path()
                       / "freegrowth-cli-test.ckpt")
                          .string();
    std::filesystem::remove(path);
    std::vector<std::string> args{"count", "--rank", "2", "--max-index", "6",
                                  "--checkpoint", path, "--checkpoint-depth",
                                  "3"};
    auto const first  = run(args);
    auto const second = run(args);
    REQUIRE(first.code == cli::exit_code::ok);
    REQUIRE(first.out == second.out);
    REQUIRE(first.out == run({"count", "--rank", "2", "--max-index", "6"}).out);
    std::filesystem::remove(path);
  }

  TEST_CASE("fit", "[cli][quick]") {
    REQUIRE(run({"fit", "--kind", "subsemigroup", "--index", "2"}).out
            == "a_2(FS_r) = 7/2 r^2 - 3/2 r\n");
    REQUIRE(run({"fit", "--kind", "ideal", "--index", "3"}).out
            == "a_3^I(FS_r) = 1/6 r^3 + 3/2 r^2 - 2/3 r\n");
    REQUIRE(run({"fit", "--kind", "congruence", "--index", "2"}).out
            == "a_2^C(FS_r) = 4*2^r - 6\n");
    REQUIRE(run({"fit", "--kind", "right-ideal", "--index", "2"}).out
            == "a_2^RI(FS_r) = 3/2 r^2 - 1/2 r\n");
  }

  TEST_CASE("verify", "[cli][quick]") {
    auto const d = run({"verify", "--scope", "appendix-d"});
    REQUIRE(d.code == cli::exit_code::ok);
    REQUIRE(d.out.find("75 cells checked, 0 mismatches") != std::string::npos);

    auto const t = run({"verify", "--scope", "table-1", "--budget", "10m"});
    REQUIRE(t.code == cli::exit_code::ok);
    REQUIRE(t.out.find("table-1 n=4 k=4: ok") != std::string::npos);
  }

  TEST_CASE("verify reports mismatches against altered data", "[cli][quick]") {
    auto const dir = std::filesystem::temp_directory_path() / "freegrowth-bad-data";
    std::filesystem::remove_all(dir);
    std::filesystem::copy(FREEGROWTH_DATA_DIR, dir);
    {
      std::ofstream out(dir / "table_1.csv");
      out << "n,k,count\n1,1,1\n2,1,2\n2,2,9\n3,1,3\n3,2,37\n3,3,113\n"
             "4,1,4\n4,2,145\n4,3,1257\n4,4,3492\n";
    }
    auto const r = run({"verify", "--scope", "table-1", "--data-dir", dir.string()});
    REQUIRE(r.code == cli::exit_code::mismatch);
    REQUIRE(r.out.find("table-1 n=2 k=2: MISMATCH (expected 9, computed 8)")
            != std::string::npos);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("exit codes", "[cli][quick]") {
    REQUIRE(run({}).code == cli::exit_code::invalid_flags);
    REQUIRE(run({"count", "--kind", "ideal"}).code == cli::exit_code::invalid_flags);
    REQUIRE(run({"count", "--kind", "nonsense", "--rank", "2", "-n", "3"}).code
            == cli::exit_code::invalid_flags);
    REQUIRE(run({"count", "--rank", "2"}).code == cli::exit_code::invalid_flags);
    REQUIRE(run({"count", "--rank", "2", "-n", "3", "--format", "xml"}).code
            == cli::exit_code::invalid_flags);
    REQUIRE(run({"count", "--kind", "congruence", "--rank", "2",
                 "--max-classes", "5"})
                .code
            == cli::exit_code::resource_limit);
    REQUIRE(run({"count", "--rank", "2", "-n", "12", "--budget", "0s"}).code
            == cli::exit_code::budget_exhausted);
    REQUIRE(run({"fit", "--kind", "subsemigroup", "--index", "10"}).code
            == cli::exit_code::resource_limit);
    auto const partial = run({"verify", "--scope", "all", "--budget", "0"});
    REQUIRE(partial.code == cli::exit_code::budget_exhausted);
    REQUIRE(partial.out.find("partial: ") != std::string::npos);
  }

  TEST_CASE("budget parsing", "[cli][quick]") {
    using std::chrono::seconds;
    REQUIRE(cli::parse_budget("90") == seconds(90));
    REQUIRE(cli::parse_budget("30s") == seconds(30));
    REQUIRE(cli::parse_budget("10m") == seconds(600));
    REQUIRE(cli::parse_budget("2h") == seconds(7200));
    REQUIRE_THROWS_AS(cli::parse_budget("10x"), Error);
    REQUIRE_THROWS_AS(cli::parse_budget(""), Error);
  }

  TEST_CASE("the executable prints the same bytes as run()", "[cli][quick]") {
    std::string const cmd = std::string(FREEGROWTH_CLI_PATH)
                            + " count --kind ideal --rank 3 --max-index 5";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char        buf[256];
    while (std::size_t got = fread(buf, 1, sizeof(buf), pipe)) {
      out.append(buf, got);
    }
    REQUIRE(pclose(pipe) == 0);
    REQUIRE(out == run({"count", "--kind", "ideal", "--rank", "3", "-n", "5"}).out);
  }

}  // namespace freegrowth
