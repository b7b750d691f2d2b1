#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "json_io.hpp"
#include "pencillab/melnikov.hpp"
#include "support.hpp"

using namespace pencillab;
using nlohmann::json;
using pencillab::cli::JobSpec;
using pencillab::testing::Generator;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_job(const JobSpec& job) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(job, out, err);
  return {code, out.str(), err.str()};
}

JobSpec job_for(const std::string& command, json input = json::object()) {
  JobSpec job;
  job.command = command;
  job.input = std::move(input);
  return job;
}

json triangle_poly() {
  // x*y*(x + y - 1)
  return {{"terms",
           {{{"c", "1"}, {"x", 2}, {"y", 1}}, {{"c", "1"}, {"x", 1}, {"y", 2}}, {{"c", "-1"}, {"x", 1}, {"y", 1}}}}};
}

json poly_term(const std::string& c, int x, int y) { return {{"terms", {{{"c", c}, {"x", x}, {"y", y}}}}}; }

}  // namespace

TEST_CASE("analyze reports the canonical counts") {
  JobSpec job = job_for("analyze");
  job.canonical_d = 3;
  const auto r = run_job(job);
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["counts"] == json({{"a1", 2}, {"a2", 6}, {"a3", 1}}));
  CHECK(report["mu"]["milnor"] == 9);
  CHECK(report["mu"]["match"] == true);
  CHECK(report["closed_forms_match"] == true);
  CHECK(report["intersection_form"]["radical_rank"] == 3);
}

TEST_CASE("orbit from a face spans modulo the radical") {
  JobSpec job = job_for("orbit");
  job.canonical_d = 2;
  job.start = "face:0";
  const auto r = run_job(job);
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  REQUIRE(report["orbits"].size() == 1);
  CHECK(report["orbits"][0]["rank_mod_radical"] == 2);
  CHECK(report["orbits"][0]["orbit_spans_modulo_radical"] == true);
}

TEST_CASE("melnikov with a random first order form is obstructed at order one") {
  Generator gen(31);
  json input = {{"canonical_d", 2}, {"k", 1}, {"forms", {{"1", io::to_json(gen.form(2, 0.9))}}}};
  const auto r = run_job(job_for("melnikov", input));
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["status"] == "obstructed");
  CHECK(report["order"] == 1);
}

TEST_CASE("melnikov certifies a constructed deformation") {
  Generator gen(32);
  const auto arr = arrangement::canonical_arrangement(3);
  const auto g = melnikov::consecutive_grouping({2, 2}, arr);
  const auto def = melnikov::log_deformation(g, {Rational(1), Rational(5)}, {gen.poly(2), gen.poly(2)}, 1);
  json forms = json::object();
  for (const auto& [order, w] : def.forms) forms[std::to_string(order)] = io::to_json(w);
  const auto r = run_job(job_for("melnikov", {{"canonical_d", 3}, {"k", 1}, {"forms", forms}}));
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["status"] == "log_certificate");
  CHECK(report["grouping"] == json({{0, 1}, {2, 3}}));
  CHECK(report["lambda"].size() == 4);
}

TEST_CASE("connection and kernel on the triangle") {
  // y(x + y - 1) dx lies in the kernel of the second power
  const json ydx = {{"terms", {{{"c", "1"}, {"x", 1}, {"y", 1}}, {{"c", "1"}, {"x", 0}, {"y", 2}}, {{"c", "-1"}, {"x", 0}, {"y", 1}}}}};
  json input = {{"f", triangle_poly()}, {"form", {{"dx", ydx}}}};
  const auto r = run_job(job_for("connection", input));
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  CHECK(report["min_poly"] == "t^2 + 1/27*t");
  CHECK(report["power_annihilation"]["holds"] == true);

  json kin = {{"f", triangle_poly()},
              {"factors", {poly_term("1", 1, 0), poly_term("1", 0, 1),
                           json{{"terms", {{{"c", "1"}, {"x", 1}, {"y", 0}}, {{"c", "1"}, {"x", 0}, {"y", 1}},
                                           {{"c", "-1"}, {"x", 0}, {"y", 0}}}}}}}};
  JobSpec kjob = job_for("kernel", kin);
  kjob.n = 2;
  const auto k = run_job(kjob);
  REQUIRE(k.code == 0);
  CHECK(json::parse(k.out)["dimension"] == 2);
  CHECK(json::parse(k.out)["sharp"] == true);
}

TEST_CASE("relexact finds P and Q") {
  // d(x^2 y) + x * d(xy(x+y-1)) built through the library, then sent as JSON
  const auto f = io::poly_from_json(triangle_poly());
  const OneForm w = exterior_derivative(testing::X() * testing::X() * testing::Y()) + testing::X() * exterior_derivative(f);
  const auto r = run_job(job_for("relexact", {{"f", triangle_poly()}, {"form", io::to_json(w)}}));
  REQUIRE(r.code == 0);
  const json report = json::parse(r.out);
  REQUIRE(report["member"] == true);
  const auto P = io::poly_from_json(report["P"]);
  const auto Q = io::poly_from_json(report["Q"]);
  CHECK(exterior_derivative(P) + Q * exterior_derivative(f) == w);
}

TEST_CASE("exit codes") {
  SUBCASE("malformed input is 2") {
    CHECK(run_job(job_for("relexact", {{"f", "x"}})).code == 2);
    CHECK(run_job(job_for("melnikov", {{"canonical_d", 2}})).code == 2);
    CHECK(run_job(job_for("analyze", {{"canonical_d", "three"}})).code == 2);
    CHECK(run_job(job_for("nonsense")).code == 2);
    JobSpec missing = job_for("analyze");
    missing.input.reset();
    missing.input_path = "/nonexistent/input.json";
    CHECK(run_job(missing).code == 2);
  }
  SUBCASE("size cap is 2") {
    JobSpec job = job_for("analyze");
    job.canonical_d = 4;
    job.max_d = 3;
    const auto r = run_job(job);
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("exceeds") != std::string::npos);
  }
  SUBCASE("non-general-position arrangement is 2") {
    json lines = {{"arrangement", {{"lines", {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}}}}};
    CHECK(run_job(job_for("analyze", lines)).code == 2);
  }
  SUBCASE("multi-reducible fiber kernel request is 4") {
    json input = {{"f", triangle_poly()}, {"factors", {poly_term("1", 1, 0), poly_term("1", 0, 1)}}};
    const auto r = run_job(job_for("kernel", input));
    CHECK(r.code == 4);
    CHECK_FALSE(r.err.empty());
  }
  SUBCASE("invariant violations are 3") {
    std::string message;
    int code = 0;
    try {
      throw InvariantViolation("audit failed");
    } catch (...) {
      code = cli::classify_current_exception(message);
    }
    CHECK(code == 3);
    CHECK(message == "audit failed");
  }
}

TEST_CASE("reports are byte-identical across runs") {
  for (const char* command : {"analyze", "dynkin", "orbit", "bounds"}) {
    JobSpec job = job_for(command);
    job.canonical_d = 3;
    const auto a = run_job(job);
    const auto b = run_job(job);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
  }
  JobSpec st = job_for("selftest");
  st.seed = 5;
  CHECK(run_job(st).out == run_job(st).out);
}

TEST_CASE("batch results match individual runs in order, for any worker count") {
  json jobs = json::array();
  std::vector<JobSpec> singles;
  for (int d = 2; d <= 4; ++d) {
    for (const char* command : {"analyze", "orbit", "bounds"}) {
      jobs.push_back({{"command", command}, {"canonical_d", d}});
      JobSpec s = job_for(command);
      s.canonical_d = d;
      singles.push_back(s);
    }
  }
  jobs.push_back({{"command", "analyze"}, {"canonical_d", 40}});

  std::string first;
  for (int workers : {1, 2, 4}) {
    JobSpec batch = job_for("batch", {{"jobs", jobs}});
    batch.workers = workers;
    const auto r = run_job(batch);
    REQUIRE(r.code == 0);
    if (first.empty()) first = r.out;
    CHECK(r.out == first);
    const json report = json::parse(r.out);
    REQUIRE(report["results"].size() == singles.size() + 1);
    for (std::size_t i = 0; i < singles.size(); ++i)
      CHECK(report["results"][i]["report"] == json::parse(run_job(singles[i]).out));
    CHECK(report["results"].back()["exit_code"] == 2);
  }
}

TEST_CASE("emitted polynomials and forms re-parse to the same values") {
  Generator gen(77);
  for (int i = 0; i < 30; ++i) {
    const auto p = gen.poly(4);
    const auto w = gen.form(3);
    CHECK(io::poly_from_json(json::parse(io::to_json(p).dump())) == p);
    CHECK(io::form_from_json(json::parse(io::to_json(w).dump())) == w);
  }
  JobSpec job = job_for("analyze");
  job.canonical_d = 4;
  const json report = json::parse(run_job(job).out);
  CHECK(io::poly_from_json(report["f"]) == arrangement::canonical_arrangement(4).f);
}

TEST_CASE("selftest passes") {
  JobSpec job = job_for("selftest");
  job.seed = 11;
  const auto r = run_job(job);
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
}
