#include "leibniz/cli.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "leibniz/conjugacy.hpp"
#include "leibniz/constructions.hpp"
#include "leibniz/levi.hpp"
#include "leibniz/random.hpp"
#include "leibniz/structure.hpp"

namespace leibniz::cli {

namespace {

class Report {
 public:
  Report(std::string command, Json input) : command_(std::move(command)), input_(std::move(input)) {}

  void digest(std::string d) { digest_ = std::move(d); }
  void seed(std::uint64_t s) { seed_ = s; }

  bool check(const std::string& name, bool pass, Json witness = nullptr) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!witness.is_null()) c["witness"] = std::move(witness);
    checks_.push_back(std::move(c));
    all_pass_ = all_pass_ && pass;
    return pass;
  }

  bool all_pass() const { return all_pass_; }
  Json& result() { return result_; }

  CommandResult finish(int exit_code) const {
    Json r;
    r["command"] = command_;
    r["input"] = input_;
    if (digest_) r["input_digest"] = *digest_;
    if (seed_) r["seed"] = *seed_;
    r["checks"] = checks_;
    r["result"] = result_.is_null() ? Json::object() : result_;
    r["exit_code"] = exit_code;
    return {exit_code, std::move(r)};
  }

 private:
  std::string command_;
  Json input_;
  std::optional<std::string> digest_;
  std::optional<std::uint64_t> seed_;
  Json checks_ = Json::array();
  Json result_;
  bool all_pass_ = true;
};

Json subspace_block(const Subspace& u, const LeibnizAlgebra& alg) { return subspace_to_json(u, alg.labels()); }

Json witnesses_json(const LeviWitnesses& w) {
  Json j;
  j["spans"] = w.spans;
  j["trivial_intersection"] = w.trivial_intersection;
  j["closed"] = w.closed;
  j["semisimple"] = w.semisimple;
  return j;
}

void levi_checks(Report& report, const std::string& prefix, const LeviWitnesses& w) {
  report.check(prefix + "S+R=L", w.spans);
  report.check(prefix + "S∩R=0", w.trivial_intersection);
  report.check(prefix + "S·S⊆S", w.closed);
  report.check(prefix + "S semisimple", w.semisimple);
}

Json violation_json(const LeibnizAlgebra& alg, const Violation& v) {
  Json j;
  j["triple"] = Json::array({alg.labels()[v.a], alg.labels()[v.b], alg.labels()[v.c]});
  j["indices"] = Json::array({v.a, v.b, v.c});
  j["a(bc)"] = vector_to_json(v.lhs);
  j["(ab)c+b(ac)"] = vector_to_json(v.rhs);
  return j;
}

// Loads the algebra and records the identity check. Returns nullopt (with the
// report already marked as failed) when the identity does not hold.
std::optional<LeibnizAlgebra> load_checked(const std::filesystem::path& file, Report& report) {
  LeibnizAlgebra alg = algebra_from_json(read_json_file(file));
  report.digest(digest(alg));
  const ViolationReport violations = check_left_leibniz(alg);
  Json witness = Json::array();
  for (const auto& v : violations.violations) witness.push_back(violation_json(alg, v));
  report.check("left_leibniz", violations.ok(), violations.ok() ? Json(nullptr) : witness);
  if (!violations.ok()) return std::nullopt;
  return alg;
}

Json matrix_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return rows;
}

}  // namespace

CommandResult validate(const std::filesystem::path& file, const Options&) {
  Report report("validate", file.string());
  const auto alg = load_checked(file, report);
  if (!alg) return report.finish(kMathFailure);
  report.result()["dim"] = alg->dim();
  report.result()["lie"] = is_lie(*alg);
  return report.finish(kOk);
}

CommandResult analyze(const std::filesystem::path& file, const Options& opts) {
  Report report("analyze", file.string());
  report.seed(opts.seed);
  const auto alg = load_checked(file, report);
  if (!alg) return report.finish(kMathFailure);
  const std::size_t n = alg->dim();
  const Subspace kernel = leibniz_kernel(*alg);
  const Subspace radical = soluble_radical(*alg);
  const DerivedSeries series = derived_series(*alg, Subspace::full(n));

  report.check("kernel_is_ideal", is_ideal(*alg, kernel));
  report.check("kernel_annihilates_left", subspace_product(*alg, kernel, Subspace::full(n)).is_zero());
  report.check("kernel_inside_radical", radical.contains(kernel));
  report.check("radical_is_soluble_ideal", is_ideal(*alg, radical) && is_soluble(*alg, radical));

  // Randomized oracle: squares of seeded random elements.
  Rng rng(opts.seed);
  std::vector<Vector> squares;
  bool each_inside = true;
  for (std::size_t t = 0; t < 3 * n; ++t) {
    const Vector x = rng.vector(n);
    squares.push_back(product(*alg, x, x));
    each_inside = each_inside && kernel.contains(squares.back());
  }
  report.check("random_squares_in_kernel", each_inside, Json{{"samples", squares.size()}});
  report.check("random_squares_span_kernel", Subspace::span(n, squares) == kernel);

  Json& r = report.result();
  r["dim"] = n;
  r["lie"] = is_lie(*alg);
  r["leibniz_kernel"] = subspace_block(kernel, *alg);
  Json dims = Json::array();
  for (const auto& t : series.terms) dims.push_back(t.dim());
  r["derived_series_dims"] = dims;
  r["soluble"] = series.reaches_zero();
  r["soluble_radical"] = subspace_block(radical, *alg);
  r["semisimple"] = is_semisimple(*alg);
  return report.finish(report.all_pass() ? kOk : kMathFailure);
}

CommandResult levi(const std::filesystem::path& file, const Options&) {
  Report report("levi", file.string());
  const auto alg = load_checked(file, report);
  if (!alg) return report.finish(kMathFailure);
  const LeviDecomposition d = leibniz_levi(*alg);
  levi_checks(report, "", d.witnesses);
  Json& r = report.result();
  r["dim"] = alg->dim();
  r["S"] = subspace_block(d.semisimple_part, *alg);
  r["R"] = subspace_block(d.radical, *alg);
  r["witnesses"] = witnesses_json(d.witnesses);
  return report.finish(report.all_pass() ? kOk : kMathFailure);
}

CommandResult example(const std::string& name, const std::vector<std::string>& lambdas,
                      const std::optional<std::filesystem::path>& out_dir, const Options&) {
  Json input;
  input["simple"] = name;
  input["lambda"] = lambdas;
  Report report("example", input);
  std::vector<Scalar> values;
  for (const auto& l : lambdas) values.push_back(parse_scalar(l));
  const CounterexampleBundle b = counterexample(name);
  const LeibnizAlgebra& alg = b.algebra;
  report.digest(digest(alg));

  report.check("left_leibniz", check_left_leibniz(alg).ok());
  report.check("leibniz_kernel=K", leibniz_kernel(alg) == b.kernel);
  report.check("soluble_radical=K", soluble_radical(alg) == b.kernel);
  levi_checks(report, "S: ", verify_levi(alg, b.first_block));
  levi_checks(report, "S1: ", verify_levi(alg, b.diagonal));

  Json& r = report.result();
  r["algebra"] = algebra_to_json(alg);
  r["K"] = subspace_block(b.kernel, alg);
  r["S"] = subspace_block(b.first_block, alg);
  r["S1"] = subspace_block(b.diagonal, alg);
  Json extra = Json::array();
  std::vector<Subspace> lambda_spaces;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const Subspace s = diagonal_complement(b, values[i]);
    levi_checks(report, "S_" + lambdas[i] + ": ", verify_levi(alg, s));
    Json e;
    e["lambda"] = to_string(values[i]);
    e["subspace"] = subspace_block(s, alg);
    extra.push_back(std::move(e));
    lambda_spaces.push_back(s);
  }
  r["S_lambda"] = std::move(extra);

  if (out_dir) {
    std::filesystem::create_directories(*out_dir);
    Json written = Json::array();
    auto emit = [&](const std::string& file, const Json& j) {
      write_json_file(*out_dir / file, j);
      written.push_back((*out_dir / file).string());
    };
    emit("algebra.json", r["algebra"]);
    emit("K.json", r["K"]);
    emit("S.json", r["S"]);
    emit("S1.json", r["S1"]);
    for (std::size_t i = 0; i < lambda_spaces.size(); ++i)
      emit("S_lambda_" + std::to_string(i) + ".json", subspace_block(lambda_spaces[i], alg));
    r["written"] = std::move(written);
  }
  return report.finish(report.all_pass() ? kOk : kMathFailure);
}

CommandResult conjugacy(const std::filesystem::path& file, const std::filesystem::path& complement_a,
                        const std::filesystem::path& complement_b, const Options&) {
  Json input;
  input["algebra"] = file.string();
  input["complement_a"] = complement_a.string();
  input["complement_b"] = complement_b.string();
  Report report("conjugacy", input);
  const auto alg = load_checked(file, report);
  if (!alg) return report.finish(kUsageError);
  const Subspace a = subspace_from_json(read_json_file(complement_a), alg->dim());
  const Subspace b = subspace_from_json(read_json_file(complement_b), alg->dim());

  const LeviWitnesses wa = verify_levi(*alg, a);
  const LeviWitnesses wb = verify_levi(*alg, b);
  levi_checks(report, "A: ", wa);
  levi_checks(report, "B: ", wb);
  if (!wa.all() || !wb.all()) return report.finish(kUsageError);

  try {
    const NonConjugacyCertificate cert = non_conjugacy_certificate(*alg, a, b);
    report.check("distinctness", true, vector_to_json(cert.distinctness));
    report.check("invariance " + std::to_string(cert.invariance.rows.size()) + "/" +
                     std::to_string(cert.invariance.rows.size()),
                 cert.invariance.all_pass());
    bool exp_ok = true;
    for (const auto& e : cert.exp_checks) exp_ok = exp_ok && e.maps_onto;
    report.check("exp_checks", exp_ok);

    Json c;
    c["algebra_digest"] = cert.algebra_digest;
    c["S"] = subspace_block(cert.s, *alg);
    c["S1"] = subspace_block(cert.s1, *alg);
    c["distinctness"] = vector_to_json(cert.distinctness);
    Json rows = Json::array();
    for (const auto& row : cert.invariance.rows) rows.push_back({{"x", alg->labels()[row.basis_index]}, {"pass", row.pass}});
    c["invariance"] = std::move(rows);
    Json exps = Json::array();
    for (const auto& e : cert.exp_checks)
      exps.push_back({{"x", alg->labels()[e.basis_index]},
                      {"exp_matrix", matrix_rows(e.automorphism.matrix())},
                      {"maps_onto", e.maps_onto}});
    c["exp_checks"] = std::move(exps);
    c["conclusion"] = cert.conclusion;
    report.result()["certificate"] = std::move(c);
  } catch (const Error& e) {
    if (e.code() != Errc::NotDistinct && e.code() != Errc::InvarianceFailed) throw;
    report.check(e.code() == Errc::NotDistinct ? "distinctness" : "invariance", false, e.what());
    return report.finish(kMathFailure);
  }
  return report.finish(report.all_pass() ? kOk : kMathFailure);
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << "command: " << report.value("command", "") << "\n";
  if (report.contains("input_digest")) os << "digest: " << report["input_digest"].get<std::string>() << "\n";
  for (const auto& c : report["checks"])
    os << (c["pass"].get<bool>() ? "[PASS] " : "[FAIL] ") << c["name"].get<std::string>() << "\n";
  for (const auto& [key, value] : report["result"].items()) {
    if (value.is_object() && value.contains("rows")) {
      os << key << ": dim " << value["rows"].size() << "\n";
      for (const auto& row : value["rows"]) os << "  " << row.dump() << "\n";
    } else {
      os << key << ": " << value.dump() << "\n";
    }
  }
  os << "exit: " << report["exit_code"].get<int>() << "\n";
  return os.str();
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Levi decompositions of left Leibniz algebras over Q"};
  app.require_subcommand(1);
  Options opts;
  std::string format = "json";
  app.add_option("--seed", opts.seed, "seed for randomized oracle checks");
  app.add_option("--format", format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", opts.timing, "include elapsed time in the report");

  std::string file, complement_a, complement_b, simple;
  std::vector<std::string> lambdas;
  std::string out_dir;

  auto* validate_cmd = app.add_subcommand("validate", "check the left Leibniz identity");
  validate_cmd->add_option("file", file, "algebra file")->required();
  auto* analyze_cmd = app.add_subcommand("analyze", "Leibniz kernel, derived series, radical");
  analyze_cmd->add_option("file", file, "algebra file")->required();
  auto* levi_cmd = app.add_subcommand("levi", "Levi decomposition with witnesses");
  levi_cmd->add_option("file", file, "algebra file")->required();
  auto* example_cmd = app.add_subcommand("example", "build the non-conjugate complements example");
  example_cmd->add_option("--simple", simple, "catalog name (sl2, sl3, so3)")->required();
  example_cmd->add_option("--lambda", lambdas, "extra diagonal complements S_lambda (p/q)");
  example_cmd->add_option("--out-dir", out_dir, "write algebra and subspace files here");
  auto* conj_cmd = app.add_subcommand("conjugacy", "non-conjugacy certificate for two complements");
  conj_cmd->add_option("file", file, "algebra file")->required();
  conj_cmd->add_option("--complement-a", complement_a, "subspace file")->required();
  conj_cmd->add_option("--complement-b", complement_b, "subspace file")->required();
  for (auto* sub : {validate_cmd, analyze_cmd, levi_cmd, example_cmd, conj_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsageError;
  }
  opts.text = format == "text";

  const auto start = std::chrono::steady_clock::now();
  CommandResult result;
  try {
    if (*validate_cmd) result = validate(file, opts);
    else if (*analyze_cmd) result = analyze(file, opts);
    else if (*levi_cmd) result = levi(file, opts);
    else if (*example_cmd)
      result = example(simple, lambdas, out_dir.empty() ? std::nullopt : std::optional<std::filesystem::path>(out_dir),
                       opts);
    else result = conjugacy(file, complement_a, complement_b, opts);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  if (opts.timing) {
    const auto elapsed = std::chrono::steady_clock::now() - start;
    result.report["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
  }
  out << (opts.text ? render_text(result.report) : result.report.dump(2) + "\n");
  return result.exit_code;
}

}  // namespace leibniz::cli
