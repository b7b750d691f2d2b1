#include "cli.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "json_io.hpp"
#include "pencillab/arrangement.hpp"
#include "pencillab/lefschetz.hpp"
#include "pencillab/melnikov.hpp"
#include "pencillab/milnor.hpp"
#include "pencillab/petrov.hpp"

namespace pencillab::cli {

using nlohmann::json;
using namespace pencillab::io;

namespace {

constexpr int kDefaultMaxD = 6;

int max_d(const JobSpec& job) {
  if (job.max_d) return *job.max_d;
  const char* env = std::getenv("PENCILLAB_MAX_D");
  if (env == nullptr || *env == '\0') return kDefaultMaxD;
  try {
    std::size_t used = 0;
    const int v = std::stoi(env, &used);
    if (used == std::string(env).size() && v >= 1) return v;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("PENCILLAB_MAX_D must be a positive integer, got \"") + env + "\"");
}

void check_size(int d, const JobSpec& job) {
  const int cap = max_d(job);
  if (d > cap)
    throw InputError("arrangement size d=" + std::to_string(d) + " exceeds PENCILLAB_MAX_D=" + std::to_string(cap));
}

json load_input(const JobSpec& job) {
  json j = json::object();
  if (job.input) {
    j = *job.input;
  } else if (job.input_path) {
    std::ifstream in(*job.input_path);
    if (!in) throw InputError("cannot open input file " + *job.input_path);
    try {
      j = json::parse(in);
    } catch (const json::parse_error& e) {
      throw InputError("input is not valid JSON: " + std::string(e.what()));
    }
  }
  if (!j.is_object()) throw InputError("input must be a JSON object");
  if (job.canonical_d) j["canonical_d"] = *job.canonical_d;
  return j;
}

arrangement::Arrangement load_arrangement(const json& input, const JobSpec& job) {
  if (input.contains("canonical_d") && input.at("canonical_d").is_number_integer())
    check_size(input.at("canonical_d").get<int>(), job);
  arrangement::Arrangement arr = arrangement_from_json(input);
  check_size(arr.d, job);
  return arr;
}

bool is_canonical(const json& input) { return input.contains("canonical_d"); }

json lines_json(const arrangement::Arrangement& arr) {
  json out = json::array();
  for (const auto& l : arr.lines) out.push_back(json::array({to_json(l.a), to_json(l.b), to_json(l.c)}));
  return out;
}

json counts_json(const arrangement::Counts& c) { return {{"a1", c.a1}, {"a2", c.a2}, {"a3", c.a3}}; }

json matrix_json(const IntegerMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    out.push_back(row);
  }
  return out;
}

json labels_json(const lefschetz::CycleLattice& lat) {
  json out = json::array();
  for (const auto& l : lat.labels) out.push_back(lefschetz::to_string(l));
  return out;
}

int read_n(const JobSpec& job, const json& input, int fallback) {
  if (job.n) return *job.n;
  if (input.contains("n")) {
    if (!input.at("n").is_number_integer()) throw InputError("n must be an integer");
    return input.at("n").get<int>();
  }
  return fallback;
}

BivariatePoly required_poly(const json& input, const char* key) {
  if (!input.contains(key)) throw InputError(std::string("input needs \"") + key + "\"");
  return poly_from_json(input.at(key));
}

OneForm required_form(const json& input, const char* key) {
  if (!input.contains(key)) throw InputError(std::string("input needs \"") + key + "\"");
  return form_from_json(input.at(key));
}

// ---------------------------------------------------------------------------

json cmd_analyze(const JobSpec& job) {
  const json input = load_input(job);
  const auto arr = load_arrangement(input, job);
  const auto validation = arrangement::validate(arr, true);
  if (!validation.ok()) {
    std::string msg = "arrangement is not in general position:";
    for (const auto& v : validation.violations) msg += " " + v + ";";
    throw InputError(msg);
  }
  const auto comb = arrangement::build_combinatorics(arr);
  const auto counts = arrangement::counts(comb);
  const auto ma = milnor::milnor_algebra(arr.f);
  const auto sd = milnor::multiplication_matrix(ma);
  const auto signs = milnor::critical_value_signs(sd);
  const auto lat = lefschetz::intersection_form(comb);

  json report;
  report["command"] = "analyze";
  report["d"] = arr.d;
  report["lines"] = lines_json(arr);
  report["f"] = to_json(arr.f);
  report["warnings"] = validation.warnings;
  report["counts"] = counts_json(counts);
  if (is_canonical(input)) {
    const auto closed = arrangement::canonical_counts(arr.d);
    report["closed_forms"] = counts_json(closed);
    report["closed_forms_match"] = closed == counts;
  }
  const int combinatorial = static_cast<int>(comb.vertices.size() + comb.faces.size());
  report["mu"] = {{"milnor", ma.mu}, {"vertices_plus_faces", combinatorial}, {"match", combinatorial == ma.mu}};
  report["critical_values"] = {
      {"char_poly", to_string(sd.char_poly)},
      {"min_poly", to_string(sd.min_poly)},
      {"signs", {{"negative", signs.negative}, {"zero", signs.zero}, {"positive", signs.positive}}}};
  const std::size_t radical = lefschetz::radical_rank(lat);
  report["intersection_form"] = {{"dim", lat.dim},
                                 {"rank", lat.dim - static_cast<int>(radical)},
                                 {"radical_rank", radical},
                                 {"flipped", lat.flipped}};
  return report;
}

json cmd_dynkin(const JobSpec& job) {
  const json input = load_input(job);
  const auto arr = load_arrangement(input, job);
  const auto comb = arrangement::build_combinatorics(arr);
  const auto lat = lefschetz::intersection_form(comb);
  const auto lines = lefschetz::line_cycles(lat, comb);

  json report;
  report["command"] = "dynkin";
  report["d"] = arr.d;
  report["labels"] = labels_json(lat);
  report["form"] = matrix_json(lat.form);
  report["flipped"] = lat.flipped;
  json radical = json::array();
  for (const auto& c : lefschetz::radical_basis(lat)) radical.push_back(to_json(c));
  report["radical_basis"] = radical;
  json cycles = json::array();
  for (const auto& c : lines.cycles) cycles.push_back(to_json(c));
  report["line_cycles"] = {{"signs", lines.signs}, {"cycles", cycles}};
  report["saddle_span_rank"] = lefschetz::saddle_span_rank(lat, comb);
  return report;
}

int start_position(const std::string& start, const lefschetz::CycleLattice& lat) {
  const auto colon = start.find(':');
  if (colon == std::string::npos) throw InputError("start must be face:N or saddle:N");
  const std::string kind = start.substr(0, colon);
  int index = -1;
  try {
    std::size_t used = 0;
    index = std::stoi(start.substr(colon + 1), &used);
    if (used != start.size() - colon - 1) index = -1;
  } catch (const std::exception&) {
    index = -1;
  }
  if (kind == "face") {
    if (index < 0 || index >= static_cast<int>(lat.face_position.size()))
      throw InputError("no bounded face " + start.substr(colon + 1));
    return lat.face_position[index];
  }
  if (kind == "saddle") {
    if (index < 0 || index >= static_cast<int>(lat.vertex_position.size()))
      throw InputError("no vertex " + start.substr(colon + 1));
    return lat.vertex_position[index];
  }
  throw InputError("start must be face:N or saddle:N");
}

json cmd_orbit(const JobSpec& job) {
  const json input = load_input(job);
  const auto arr = load_arrangement(input, job);
  const auto comb = arrangement::build_combinatorics(arr);
  const auto lat = lefschetz::intersection_form(comb);

  std::vector<int> positions;
  std::optional<std::string> start = job.start;
  if (!start && input.contains("start")) start = input.at("start").get<std::string>();
  if (start) {
    positions.push_back(start_position(*start, lat));
  } else {
    for (int p = 0; p < lat.dim; ++p) positions.push_back(p);
  }

  json orbits = json::array();
  bool all = true;
  for (int p : positions) {
    const auto res = lefschetz::orbit_span(lat, lat.unit(p));
    all = all && res.certificate;
    orbits.push_back({{"start", lefschetz::to_string(lat.labels[p])},
                      {"rank_total", res.rank_total},
                      {"rank_mod_radical", res.rank_mod_radical},
                      {"orbit_spans_modulo_radical", res.certificate},
                      {"word_log", res.word_log}});
  }
  json report;
  report["command"] = "orbit";
  report["d"] = arr.d;
  report["dim"] = lat.dim;
  report["expected_rank_mod_radical"] = lat.dim - lat.d;
  report["orbits"] = orbits;
  report["all_span_modulo_radical"] = all;
  return report;
}

json cmd_connection(const JobSpec& job) {
  const json input = load_input(job);
  const BivariatePoly f = required_poly(input, "f");
  const OneForm w = required_form(input, "form");
  const int n = read_n(job, input, 2);
  if (n < 1) throw InputError("n must be at least 1");
  const auto ctx = petrov::make_context(f);
  const auto gm = petrov::gauss_manin(w, ctx);
  const auto power = petrov::nabla_power(w, n, ctx);

  json report;
  report["command"] = "connection";
  report["f"] = to_json(f);
  report["form"] = to_json(w);
  report["eta"] = to_json(gm.eta);
  report["p"] = to_string(gm.p);
  report["policy"] = "class_annihilator";
  report["min_poly"] = to_string(ctx.sd.min_poly);
  report["power_annihilation"] = {{"n", n}, {"holds", petrov::htilde_is_zero(power, f)}};
  return report;
}

json cmd_kernel(const JobSpec& job) {
  const json input = load_input(job);
  BivariatePoly f;
  std::vector<BivariatePoly> factors;
  if (input.contains("f")) {
    f = poly_from_json(input.at("f"));
    if (!input.contains("factors") || !input.at("factors").is_array())
      throw InputError("kernel input with \"f\" needs a \"factors\" array");
    for (const auto& g : input.at("factors")) factors.push_back(poly_from_json(g));
  } else {
    const auto arr = load_arrangement(input, job);
    f = arr.f;
    factors = arr.forms;
  }
  const int n = read_n(job, input, 2);
  const auto basis = petrov::kernel_basis(f, n, factors);
  json report;
  report["command"] = "kernel";
  report["f"] = to_json(f);
  report["n"] = n;
  json forms = json::array();
  for (const auto& w : basis) forms.push_back(to_json(w));
  report["basis"] = forms;
  report["dimension"] = petrov::h_dimension(basis, f);
  if (basis.empty()) {
    report["annihilated"] = true;
    report["sharp"] = nullptr;
    return report;
  }
  const auto ctx = petrov::make_context(f);
  bool annihilated = true;
  bool sharp = false;
  for (const auto& w : basis) {
    annihilated = annihilated && petrov::htilde_is_zero(petrov::nabla_power(w, n, ctx), f);
    if (n == 1) continue;
    sharp = sharp || !petrov::htilde_is_zero(petrov::nabla_power(w, n - 1, ctx), f);
  }
  report["annihilated"] = annihilated;
  if (n == 1) report["sharp"] = nullptr;
  else report["sharp"] = sharp;
  return report;
}

json cmd_relexact(const JobSpec& job) {
  const json input = load_input(job);
  const BivariatePoly f = required_poly(input, "f");
  const OneForm w = required_form(input, "form");
  if (f.degree() < 1) throw InputError("Hamiltonian must be nonconstant");
  json report;
  report["command"] = "relexact";
  const auto wit = petrov::relative_exact_decompose(w, f);
  report["member"] = wit.has_value();
  const auto bound = petrov::q_degree_bound(w, f);
  if (bound) report["q_degree_bound"] = *bound;
  else report["q_degree_bound"] = nullptr;
  if (wit) {
    report["P"] = to_json(wit->P);
    report["Q"] = to_json(wit->Q);
  }
  return report;
}

json grouping_json(const melnikov::Grouping& g) { return g.groups; }

json cmd_melnikov(const JobSpec& job) {
  const json input = load_input(job);
  const auto arr = load_arrangement(input, job);
  melnikov::Deformation def;
  def.k = input.value("k", 1);
  if (!input.contains("forms") || !input.at("forms").is_object())
    throw InputError("melnikov input needs a \"forms\" object keyed by order");
  for (const auto& [key, value] : input.at("forms").items()) {
    int order = 0;
    try {
      std::size_t used = 0;
      order = std::stoi(key, &used);
      if (used != key.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("form order \"" + key + "\" is not an integer");
    }
    def.forms[order] = form_from_json(value);
  }
  const auto out = melnikov::francoise_recursion(def, arr);

  json report;
  report["command"] = "melnikov";
  report["d"] = arr.d;
  report["k"] = def.k;
  report["order"] = out.order;
  report["log"] = out.log;
  if (out.status == melnikov::Status::LogCertificate) {
    const auto& cert = *out.certificate;
    report["status"] = "log_certificate";
    report["lambda"] = to_json(cert.lambdas);
    report["grouping"] = grouping_json(cert.grouping);
    report["P"] = to_json(cert.P);
    report["shift"] = to_json(cert.shift);
    json A = json::array();
    for (const auto& a : cert.A) A.push_back(to_json(a));
    report["A"] = A;
  } else {
    report["status"] = "obstructed";
    report["reason"] = out.reason;
    report["residual"] = to_json(out.residual);
  }
  return report;
}

std::vector<int> parse_partition(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(part, &used));
      if (used != part.size()) throw InputError("");
    } catch (const std::exception&) {
      throw InputError("partition must be comma-separated integers, got \"" + text + "\"");
    }
  }
  return out;
}

json cmd_bounds(const JobSpec& job) {
  const json input = load_input(job);
  if (!input.contains("canonical_d") || !input.at("canonical_d").is_number_integer())
    throw InputError("bounds needs --canonical-d or \"canonical_d\"");
  const int d = input.at("canonical_d").get<int>();
  if (d < 2) throw InputError("bounds needs d >= 2");
  check_size(d, job);

  std::vector<std::vector<int>> parts;
  if (job.partition) {
    parts.push_back(parse_partition(*job.partition));
  } else if (input.contains("partition")) {
    parts.push_back(input.at("partition").get<std::vector<int>>());
  } else {
    parts = melnikov::partitions(d + 1);
  }

  json rows = json::array();
  for (const auto& p : parts) {
    const auto b = melnikov::codim_and_cyclicity(d, p);
    const int tangent = melnikov::tangent_codim_minus_one(d, p);
    const auto audit = melnikov::dimension_audit(d, p);
    rows.push_back({{"partition", p},
                    {"s", b.s},
                    {"codim_minus_one", b.codim_minus_one},
                    {"cyclicity_lower_bound", b.cyclicity_lower_bound},
                    {"tangent_rank_codim_minus_one", tangent},
                    {"tangent_rank_matches", tangent == b.codim_minus_one},
                    {"structure_dimension",
                     {{"vanishing_rank", audit.vanishing_rank},
                      {"representable_rank", audit.representable_rank},
                      {"vanishing_formula", audit.vanishing_formula},
                      {"group_formula", audit.group_formula},
                      {"single_offset_formula", audit.single_offset_formula},
                      {"consistent", audit.consistent()},
                      {"single_offset_matches", audit.single_offset_matches()}}}});
  }
  json report;
  report["command"] = "bounds";
  report["d"] = d;
  report["partitions"] = rows;
  return report;
}

// ---------------------------------------------------------------------------

class SelfTestRng {
 public:
  explicit SelfTestRng(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  Rational rational() { return Rational(integer(-9, 9)) / Rational(integer(1, 5)); }
  BivariatePoly poly(int degree) {
    BivariatePoly p;
    for (const auto& m : monomials_up_to(degree))
      if (integer(0, 3) != 0) p.add_term(m, rational());
    return p;
  }

 private:
  std::mt19937_64 rng_;
};

json cmd_selftest(const JobSpec& job) {
  SelfTestRng rng(job.seed);
  json checks = json::array();
  bool passed = true;
  auto record = [&](const std::string& name, int cases, int failures) {
    checks.push_back({{"name", name}, {"cases", cases}, {"failures", failures}});
    passed = passed && failures == 0;
  };

  const auto arr = arrangement::canonical_arrangement(3);
  const OneForm df = exterior_derivative(arr.f);

  int failures = 0;
  for (int i = 0; i < 20; ++i) {
    const OneForm w = exterior_derivative(rng.poly(5)) + rng.poly(1) * df;
    const auto wit = petrov::relative_exact_decompose(w, arr.f);
    if (!wit || exterior_derivative(wit->P) + wit->Q * df != w) ++failures;
  }
  record("relative exactness round-trip", 20, failures);

  failures = 0;
  for (int i = 0; i < 20; ++i) {
    RationalVector lambdas(4);
    for (int p = 0; p < 3; ++p) lambdas[p] = rng.rational();
    lambdas[3] = -(lambdas[0] + lambdas[1] + lambdas[2]);
    BivariatePoly P = rng.poly(4);
    P.add_term({0, 0}, -P.coefficient({0, 0}));
    const auto dec = melnikov::log_decompose(melnikov::log_form(lambdas, arr) + exterior_derivative(P), arr);
    if (!dec || dec->lambdas != lambdas || dec->P != P) ++failures;
  }
  record("log decomposition round-trip", 20, failures);

  failures = 0;
  const auto ctx = petrov::make_context(arr.f);
  for (int i = 0; i < 5; ++i) {
    const OneForm w{rng.poly(2), rng.poly(2)};
    const auto gm = petrov::gauss_manin(w, ctx);
    const bool identity = wedge(df, gm.eta).g == gm.p.compose(arr.f) * exterior_derivative(w).g;
    const OneForm shifted = w + exterior_derivative(rng.poly(3));
    const bool well_defined = petrov::htilde_equal(petrov::nabla_power(w, 1, ctx), petrov::nabla_power(shifted, 1, ctx), arr.f);
    if (!identity || !well_defined) ++failures;
  }
  record("connection identity and well-definedness", 5, failures);

  failures = 0;
  const auto comb = arrangement::build_combinatorics(arr);
  const auto lat = lefschetz::intersection_form(comb);
  for (int p = 0; p < lat.dim; ++p)
    if (!lefschetz::orbit_span(lat, lat.unit(p)).certificate) ++failures;
  record("orbit spans modulo radical", lat.dim, failures);

  failures = 0;
  int cases = 0;
  for (const auto& partition : melnikov::partitions(4)) {
    const auto g = melnikov::consecutive_grouping(partition, arr);
    std::vector<Rational> mu;
    std::vector<BivariatePoly> h;
    for (std::size_t i = 0; i < g.size(); ++i) {
      mu.push_back(Rational(static_cast<long>(20 * i)) + rng.rational());
      h.push_back(rng.poly(g.degrees[i]));
    }
    const int k = rng.integer(1, 2);
    const auto out = melnikov::francoise_recursion(melnikov::log_deformation(g, mu, h, k), arr);
    ++cases;
    if (out.status != melnikov::Status::LogCertificate || out.certificate->grouping.groups != g.groups) ++failures;
  }
  record("constructed deformations certified", cases, failures);

  json report;
  report["command"] = "selftest";
  report["seed"] = job.seed;
  report["checks"] = checks;
  report["passed"] = passed;
  return report;
}

JobSpec batch_entry(const json& entry, const JobSpec& parent) {
  if (!entry.is_object() || !entry.contains("command") || !entry.at("command").is_string())
    throw InputError("each batch job needs a \"command\" string");
  JobSpec job;
  job.command = entry.at("command").get<std::string>();
  if (job.command == "batch") throw InputError("batch jobs cannot nest");
  job.input = entry.value("input", json::object());
  if (entry.contains("canonical_d")) job.canonical_d = entry.at("canonical_d").get<int>();
  if (entry.contains("n")) job.n = entry.at("n").get<int>();
  if (entry.contains("start")) job.start = entry.at("start").get<std::string>();
  if (entry.contains("partition")) job.partition = entry.at("partition").get<std::string>();
  if (entry.contains("seed")) job.seed = entry.at("seed").get<std::uint64_t>();
  job.max_d = parent.max_d;
  if (!job.max_d) job.max_d = max_d(parent);
  return job;
}

json cmd_batch(const JobSpec& job) {
  const json input = load_input(job);
  if (!input.contains("jobs") || !input.at("jobs").is_array()) throw InputError("batch input needs a \"jobs\" array");
  const json& entries = input.at("jobs");
  std::vector<json> results(entries.size());

  auto work = [&](std::size_t i) {
    json result;
    try {
      result["report"] = execute(batch_entry(entries[i], job));
      result["exit_code"] = static_cast<int>(kOk);
    } catch (...) {
      std::string message;
      result["exit_code"] = classify_current_exception(message);
      result["error"] = message;
    }
    results[i] = std::move(result);
  };

  unsigned workers = job.workers > 0 ? static_cast<unsigned>(job.workers) : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(entries.size())));
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < entries.size(); i = next++) work(i);
    });
  for (auto& t : pool) t.join();

  json report;
  report["command"] = "batch";
  report["results"] = results;
  return report;
}

}  // namespace

int classify_current_exception(std::string& message) {
  try {
    throw;
  } catch (const InputError& e) {
    message = e.what();
    return kInputError;
  } catch (const UnsupportedInput& e) {
    message = e.what();
    return kUnsupported;
  } catch (const InvariantViolation& e) {
    message = e.what();
    return kInvariantViolation;
  } catch (const nlohmann::json::exception& e) {
    message = std::string("malformed input: ") + e.what();
    return kInputError;
  } catch (const std::exception& e) {
    message = e.what();
    return kInvariantViolation;
  }
}

json execute(const JobSpec& job) {
  if (job.command == "analyze") return cmd_analyze(job);
  if (job.command == "dynkin") return cmd_dynkin(job);
  if (job.command == "orbit") return cmd_orbit(job);
  if (job.command == "connection") return cmd_connection(job);
  if (job.command == "kernel") return cmd_kernel(job);
  if (job.command == "relexact") return cmd_relexact(job);
  if (job.command == "melnikov") return cmd_melnikov(job);
  if (job.command == "bounds") return cmd_bounds(job);
  if (job.command == "selftest") return cmd_selftest(job);
  if (job.command == "batch") return cmd_batch(job);
  throw InputError("unknown command \"" + job.command + "\"");
}

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  json report;
  try {
    report = execute(job);
  } catch (...) {
    std::string message;
    const int code = classify_current_exception(message);
    err << "error: " << message << "\n";
    return code;
  }
  const std::string text = report.dump(2) + "\n";
  if (job.output_path) {
    std::ofstream file(*job.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << *job.output_path << "\n";
      return kInputError;
    }
    file << text;
  } else {
    out << text;
  }
  if (job.command == "selftest" && !report.value("passed", false)) return kInvariantViolation;
  return kOk;
}

}  // namespace pencillab::cli
