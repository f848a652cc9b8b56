// gimat: exact full-rank analysis for generalized interval matrices.
//
// Subcommands: check, maxrank, rohn, rect, oracle, selftest.
// Exit codes: 0 full rank / success, 1 not full rank (with certificate),
// 2 usage or input error.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "gim/detc.hpp"
#include "gim/genfull.hpp"
#include "gim/linalg.hpp"
#include "gim/oracle.hpp"
#include "gim/parse.hpp"
#include "gim/rect.hpp"
#include "gim/rohn.hpp"

using json = nlohmann::ordered_json;
using namespace gim;

namespace {

constexpr std::size_t kMaxDim = 8;
constexpr std::size_t kMaxBoundedCells = 24;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::string format = "text";
  std::string verify_path;
  std::string oracle_mode = "auto";
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  unsigned threads = 1;
  bool force = false;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path);
  if (!file) throw UsageError("cannot open input file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

GIMatrix load_matrix(const Options& opt) {
  const GIMatrix mu = parse_matrix(read_input(opt.input));
  if (!opt.force) {
    if (mu.rows() > kMaxDim || mu.cols() > kMaxDim)
      throw UsageError("matrix exceeds " + std::to_string(kMaxDim) +
                       " rows/columns; enumeration is exponential, pass "
                       "--force to run anyway");
    if (bounded_cells(mu).size() > kMaxBoundedCells)
      throw UsageError("matrix has more than " +
                       std::to_string(kMaxBoundedCells) +
                       " bounded cells; vertex enumeration is exponential, "
                       "pass --force to run anyway");
  }
  return mu;
}

// ---------------------------------------------------------------------------
// Certificate (de)serialization. Cells are 1-based in reports.

json cells_to_json(const std::vector<Cell>& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back({c.row + 1, c.col + 1});
  return out;
}

std::vector<Cell> cells_from_json(const json& j) {
  std::vector<Cell> out;
  for (const auto& item : j) {
    const std::size_t row = item.at(0).get<std::size_t>();
    const std::size_t col = item.at(1).get<std::size_t>();
    if (row == 0 || col == 0) throw UsageError("certificate cell index is 0");
    out.push_back({row - 1, col - 1});
  }
  return out;
}

json certificate_to_json(const Certificate& certificate) {
  return std::visit(
      [](const auto& cert) -> json {
        using T = std::decay_t<decltype(cert)>;
        json j;
        if constexpr (std::is_same_v<T, AllConditionsHold>) {
          j["kind"] = "all-conditions-hold";
        } else if constexpr (std::is_same_v<T, Condition1Violation>) {
          j["kind"] = "condition1-violation";
          j["unbounded-cell"] = {cert.unbounded_cell.row + 1,
                                 cert.unbounded_cell.col + 1};
          j["minor-diagonal"] = cells_to_json(cert.diagonal);
          j["full-length"] = cert.full_length;
          if (!cert.full_length) j["detc"] = to_string(cert.detc_value);
        } else if constexpr (std::is_same_v<T, Condition2Violation>) {
          j["kind"] = "condition2-violation";
          j["vertex-matrix"] = format_matrix(cert.vertex);
          j["left-matrix"] = format_matrix(cert.left);
          j["det-vertex"] = to_string(cert.det_vertex);
          j["det-left"] = to_string(cert.det_left);
        } else if constexpr (std::is_same_v<T, Condition3Violation>) {
          j["kind"] = "condition3-violation";
          j["vertex-matrix"] = format_matrix(cert.vertex);
          j["tuple"] = cells_to_json(cert.tuple.cells);
          j["value"] = to_string(cert.value);
        } else {
          j["kind"] = "singular-witness";
          j["witness"] = format_matrix(cert.witness);
          j["det"] = "0";
        }
        return j;
      },
      certificate);
}

Certificate certificate_from_json(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "all-conditions-hold") return AllConditionsHold{};
  if (kind == "condition1-violation") {
    Condition1Violation c;
    const auto cell = j.at("unbounded-cell");
    c.unbounded_cell = {cell.at(0).get<std::size_t>() - 1,
                        cell.at(1).get<std::size_t>() - 1};
    c.diagonal = cells_from_json(j.at("minor-diagonal"));
    c.full_length = j.at("full-length").get<bool>();
    if (!c.full_length)
      c.detc_value = parse_rational(j.at("detc").get<std::string>());
    return c;
  }
  if (kind == "condition2-violation") {
    Condition2Violation c;
    c.vertex = to_rmatrix(parse_matrix(j.at("vertex-matrix").get<std::string>()));
    c.left = to_rmatrix(parse_matrix(j.at("left-matrix").get<std::string>()));
    c.det_vertex = parse_rational(j.at("det-vertex").get<std::string>());
    c.det_left = parse_rational(j.at("det-left").get<std::string>());
    return c;
  }
  if (kind == "condition3-violation") {
    Condition3Violation c;
    c.vertex = parse_matrix(j.at("vertex-matrix").get<std::string>());
    c.tuple.cells = cells_from_json(j.at("tuple"));
    c.value = parse_rational(j.at("value").get<std::string>());
    return c;
  }
  if (kind == "singular-witness")
    return SingularWitness{
        to_rmatrix(parse_matrix(j.at("witness").get<std::string>()))};
  throw UsageError("unknown certificate kind: " + kind);
}

// ---------------------------------------------------------------------------
// Report printing. The structured form is the JSON document itself; the text
// form is a flat key/value rendering with matrices indented. Both are
// byte-deterministic for fixed input and flags.

void print_text(std::ostream& os, const json& j, const std::string& indent) {
  for (const auto& [key, value] : j.items()) {
    if (value.is_object()) {
      os << indent << key << ":\n";
      print_text(os, value, indent + "  ");
    } else if (value.is_string()) {
      const std::string s = value.get<std::string>();
      if (s.find('\n') != std::string::npos) {
        os << indent << key << ":\n";
        std::istringstream lines(s);
        std::string line;
        while (std::getline(lines, line)) os << indent << "  " << line << "\n";
      } else {
        os << indent << key << ": " << s << "\n";
      }
    } else {
      os << indent << key << ": " << value.dump() << "\n";
    }
  }
}

void emit_report(const Options& opt, const json& report) {
  if (opt.format == "structured") {
    std::cout << report.dump(2) << "\n";
  } else {
    print_text(std::cout, report, "");
  }
}

json base_report(const char* command, const GIMatrix& mu) {
  json j;
  j["tool"] = "gimat";
  j["command"] = command;
  j["input"] = json{{"rows", mu.rows()}, {"cols", mu.cols()}};
  return j;
}

// ---------------------------------------------------------------------------
// Subcommands.

int run_check(const Options& opt) {
  const GIMatrix mu = load_matrix(opt);
  if (!mu.is_square())
    throw UsageError("check requires a square matrix; use rect for "
                     "rectangular classical interval matrices");

  if (!opt.verify_path.empty()) {
    std::ifstream in(opt.verify_path);
    if (!in) throw UsageError("cannot open report: " + opt.verify_path);
    json report = json::parse(in, nullptr, true);
    const Certificate cert = certificate_from_json(report.at("certificate"));
    const bool valid = verify_certificate(mu, cert);
    json out = base_report("verify-certificate", mu);
    out["certificate-kind"] = report.at("certificate").at("kind");
    out["valid"] = valid;
    emit_report(opt, out);
    return valid ? 0 : 1;
  }

  const Verdict verdict = full_rank_general(mu);
  json out = base_report("check", mu);
  out["decision"] = verdict.full_rank ? "full-rank" : "not-full-rank";
  out["certificate"] = certificate_to_json(verdict.certificate);
  emit_report(opt, out);
  return verdict.full_rank ? 0 : 1;
}

int run_maxrank(const Options& opt) {
  const GIMatrix mu = load_matrix(opt);
  json out = base_report("maxrank", mu);
  out["max-rank"] = max_rank(mu);
  emit_report(opt, out);
  return 0;
}

int run_rohn(const Options& opt) {
  const GIMatrix mu = load_matrix(opt);
  if (!mu.is_square()) throw UsageError("rohn requires a square matrix");
  if (!is_classical(mu))
    throw UsageError("rohn requires a classical interval matrix "
                     "(bounded or constant entries only)");
  const RohnResult by_signs = rohn_full_rank_signs_report(mu);
  const RohnResult by_vertex = rohn_full_rank_vertex_report(mu);
  if (by_signs.full_rank != by_vertex.full_rank)
    throw std::logic_error("sign test and vertex test disagree");

  json out = base_report("rohn", mu);
  out["decision"] = by_signs.full_rank ? "full-rank" : "not-full-rank";
  out["sign-test"] = by_signs.full_rank;
  out["vertex-test"] = by_vertex.full_rank;
  if (by_signs.conflict) {
    json c;
    c["first-matrix"] = format_matrix(by_signs.conflict->first);
    c["second-matrix"] = format_matrix(by_signs.conflict->second);
    c["det-first"] = to_string(by_signs.conflict->det_first);
    c["det-second"] = to_string(by_signs.conflict->det_second);
    out["conflict"] = c;
  }
  emit_report(opt, out);
  return by_signs.full_rank ? 0 : 1;
}

int run_rect(const Options& opt) {
  const GIMatrix mu = load_matrix(opt);
  if (!is_classical(mu))
    throw UsageError("rect requires a classical interval matrix "
                     "(bounded or constant entries only)");
  const RectResult result = rect_full_rank(mu);
  json out = base_report("rect", mu);
  out["decision"] = result.full_rank ? "full-rank" : "not-full-rank";
  out["transposed"] = mu.rows() < mu.cols();
  if (result.witness) {
    json w;
    json x = json::array();
    for (const Rational& v : result.witness->x) x.push_back(to_string(v));
    w["x"] = x;
    w["completion"] = format_matrix(result.witness->completion);
    out["witness"] = w;
  }
  emit_report(opt, out);
  return result.full_rank ? 0 : 1;
}

int run_oracle(const Options& opt) {
  const GIMatrix mu = load_matrix(opt);
  std::string mode = opt.oracle_mode;
  if (mode == "auto") mode = is_classical(mu) ? "range" : "witness";

  json out = base_report("oracle", mu);
  out["mode"] = mode;
  if (mode == "range") {
    if (!is_classical(mu))
      throw UsageError("oracle --mode range requires a classical matrix");
    if (!mu.is_square())
      throw UsageError("oracle --mode range requires a square matrix");
    const auto [lo, hi] = vertex_det_range(mu);
    const bool full = !(lo <= 0 && 0 <= hi);
    out["det-min"] = to_string(lo);
    out["det-max"] = to_string(hi);
    out["decision"] = full ? "full-rank" : "not-full-rank";
    emit_report(opt, out);
    return full ? 0 : 1;
  }

  const SampleConfig cfg{opt.seed, opt.trials, 1000};
  out["seed"] = cfg.seed;
  out["trials"] = cfg.trials;
  if (mode == "witness") {
    if (!mu.is_square())
      throw UsageError("oracle --mode witness requires a square matrix");
    const auto witness = singular_witness(mu, cfg, opt.threads);
    out["found"] = witness.has_value();
    if (witness)
      out["certificate"] = certificate_to_json(SingularWitness{*witness});
    emit_report(opt, out);
    return witness ? 1 : 0;
  }
  if (mode == "samplerank") {
    out["sample-max-rank"] = sample_max_rank(mu, cfg, opt.threads);
    emit_report(opt, out);
    return 0;
  }
  throw UsageError("unknown oracle mode: " + mode);
}

// Built-in golden checks over the worked examples.
int run_selftest() {
  int failures = 0;
  auto expect = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok - " : "FAIL - ") << what << "\n";
    failures += ok ? 0 : 1;
  };

  const GIMatrix alpha = parse_matrix(
      "(-inf,inf) [1,inf) 1 1 4\n"
      "1 [2,3] 6 2 4\n"
      "(-inf,2] 0 [1,4] 0 [3,6]\n"
      "0 [-1,2] 3 1 2\n"
      "3 0 3 1 2\n");
  const GIMatrix beta = parse_matrix(
      "[2,inf) 1 2 (-inf,inf)\n"
      "[1,2] 0 3 2\n"
      "3 [3,7] 5 3\n"
      "0 0 0 [1,inf)\n");
  const GIMatrix delta = parse_matrix(
      "(-inf,inf) 1 2 (-inf,inf)\n"
      "[1,2] [1,2] 9 2\n"
      "3 [1,5] 4 0\n"
      "2 [1,2] [-1,inf) 3\n");

  const Verdict va = full_rank_general(alpha);
  expect(!va.full_rank, "alpha is not full-rank");
  expect(std::holds_alternative<Condition2Violation>(va.certificate),
         "alpha fails through a vertex sign conflict");
  expect(verify_certificate(alpha, va.certificate),
         "alpha certificate re-verifies");
  const RMatrix left = to_rmatrix(take_left(pin_half_bounded(zero_unbounded(alpha))));
  expect(det(left) == -88, "alpha left completion has determinant -88");
  RMatrix singular = left;
  singular(3, 1) = Rational(6, 5);
  expect(contains(alpha, singular) && det(singular) == 0,
         "alpha contains the singular 6/5 completion");

  const Verdict vb = full_rank_general(beta);
  expect(vb.full_rank, "beta is full-rank");

  const Verdict vd = full_rank_general(delta);
  expect(!vd.full_rank, "delta is not full-rank");
  expect(std::holds_alternative<Condition1Violation>(vd.certificate),
         "delta fails at an unbounded cell");
  expect(verify_certificate(delta, vd.certificate),
         "delta certificate re-verifies");

  const GIMatrix mu = parse_matrix("[1,2] [2,3] [2,inf)\n[-3,4] [-1,5] [1,4]\n");
  const GIMatrix gamma = parse_matrix("1 2 [2,inf)\n4 5 1\n");
  const GIMatrix odd = parse_matrix("1 3 [2,inf)\n4 5 1\n");
  expect(is_even_type(mu, gamma), "vertex matrix gamma is of even type");
  expect(!is_even_type(mu, odd), "vertex matrix delta is of odd type");

  std::cout << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact full-rank analysis for generalized interval matrices"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool takes_input = true) {
    if (takes_input)
      cmd->add_option("input", opt.input, "matrix file, or - for stdin")
          ->required();
    cmd->add_option("--format", opt.format, "report format")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag("--force", opt.force, "skip the size guard");
    cmd->add_option("--threads", opt.threads, "worker count cap");
  };

  auto* check = app.add_subcommand(
      "check", "decide full rank for a general closed interval matrix");
  add_common(check);
  check->add_option("--verify-certificate", opt.verify_path,
                    "verify the certificate of a previous report against "
                    "this input instead of deciding");

  auto* maxrank =
      app.add_subcommand("maxrank", "maximal rank over all completions");
  add_common(maxrank);

  auto* rohn = app.add_subcommand(
      "rohn", "classical full-rank tests (sign and vertex form)");
  add_common(rohn);

  auto* rect = app.add_subcommand(
      "rect", "rectangular full-rank test via orthant feasibility");
  add_common(rect);

  auto* oracle = app.add_subcommand(
      "oracle", "brute-force verification: vertex range or randomized search");
  add_common(oracle);
  oracle->add_option("--mode", opt.oracle_mode, "range, witness or samplerank")
      ->check(CLI::IsMember({"auto", "range", "witness", "samplerank"}));
  oracle->add_option("--seed", opt.seed, "sampling seed");
  oracle->add_option("--trials", opt.trials, "sampling budget");

  auto* selftest =
      app.add_subcommand("selftest", "run the built-in golden checks");
  (void)selftest;

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const auto started = std::chrono::steady_clock::now();
  int code = 2;
  try {
    if (app.got_subcommand(check)) code = run_check(opt);
    else if (app.got_subcommand(maxrank)) code = run_maxrank(opt);
    else if (app.got_subcommand(rohn)) code = run_rohn(opt);
    else if (app.got_subcommand(rect)) code = run_rect(opt);
    else if (app.got_subcommand(oracle)) code = run_oracle(opt);
    else code = run_selftest();
  } catch (const ParseError& e) {
    std::cerr << "gimat: parse error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "gimat: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "gimat: error: " << e.what() << "\n";
    return 2;
  }
  const auto elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - started)
                           .count();
  // Timing stays on stderr so stdout is byte-deterministic.
  std::cerr << "gimat: completed in " << elapsed << " s\n";
  return code;
}
