// Command-line front end: exact coefficients, tables, restrictions, scans,
// lifts, and the named verification checks.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or argument error.

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "hermeis/serialize.hpp"
#include "hermeis/verify.hpp"

namespace {

using namespace hermeis;

void apply_jobs(int jobs) {
#ifdef _OPENMP
  if (jobs > 0) {
    omp_set_num_threads(jobs);
    return;
  }
  if (const char* env = std::getenv("HERMEIS_JOBS")) {
    int n = std::atoi(env);
    if (n > 0) omp_set_num_threads(n);
  }
#else
  (void)jobs;
#endif
}

void check_weight(Int k) {
  if (k < 4 || k % 2 != 0)
    throw std::invalid_argument("weight must be even and at least 4");
}

void emit(std::ostream& os, const io::json& j) { os << j.dump(2) << "\n"; }

struct CoeffArgs {
  Int weight = 0;
  std::optional<Int> delta;
  std::string t_index;
  std::string r_index;
};

int run_coeff(const CoeffArgs& args) {
  check_weight(args.weight);
  Rational value;
  if (!args.t_index.empty()) {
    if (!args.delta) throw std::invalid_argument("--T needs --delta");
    field::Field f(*args.delta);
    value = hermitian::eisenstein_coefficient(
        static_cast<unsigned>(args.weight), f,
        field::hermitian_index_from_string(args.t_index));
  } else {
    value = siegel::siegel_coefficient(static_cast<unsigned>(args.weight),
                                       siegel::half_int_matrix_from_string(args.r_index));
  }
  std::cout << io::json(to_fraction_string(value)).dump() << "\n";
  return 0;
}

struct TableArgs {
  Int weight = 0;
  std::optional<Int> delta;
  bool siegel_side = false;
  Int trace_bound = 4;
  std::string format = "json";
  int jobs = 0;
};

int run_table(const TableArgs& args) {
  check_weight(args.weight);
  if (args.trace_bound < 0) throw std::invalid_argument("trace bound must be >= 0");
  apply_jobs(args.jobs);
  if (args.siegel_side) {
    siegel::SiegelFourierTable table =
        siegel::siegel_table(static_cast<unsigned>(args.weight), args.trace_bound);
    if (args.format == "csv")
      std::cout << io::to_csv(table);
    else
      emit(std::cout, io::to_json(table));
    return 0;
  }
  if (!args.delta) throw std::invalid_argument("need --delta or --siegel");
  field::Field f(*args.delta);
  hermitian::HermitianFourierTable table =
      hermitian::eisenstein_table(static_cast<unsigned>(args.weight), f, args.trace_bound);
  if (args.format == "csv")
    std::cout << io::to_csv(table);
  else
    emit(std::cout, io::to_json(table));
  return 0;
}

struct SiegelOutArgs {
  Int weight = 0;
  Int delta = 0;
  Int trace_bound = 4;
  std::string format = "json";
  int jobs = 0;
};

int run_restrict(const SiegelOutArgs& args) {
  check_weight(args.weight);
  apply_jobs(args.jobs);
  field::Field f(args.delta);
  siegel::SiegelFourierTable table = restriction::restrict_to_siegel(
      hermitian::eisenstein_table(static_cast<unsigned>(args.weight), f, args.trace_bound));
  if (args.format == "csv")
    std::cout << io::to_csv(table);
  else
    emit(std::cout, io::to_json(table));
  return 0;
}

int run_gform(const SiegelOutArgs& args) {
  check_weight(args.weight);
  apply_jobs(args.jobs);
  field::Field f(args.delta);
  siegel::SiegelFourierTable table =
      restriction::g_form(static_cast<unsigned>(args.weight), f, args.trace_bound);
  if (args.format == "csv")
    std::cout << io::to_csv(table);
  else
    emit(std::cout, io::to_json(table));
  return 0;
}

struct ScanArgs {
  Int weight = 0;
  Int delta_min = 3;
  Int delta_max = 500;
  int jobs = 0;
  std::string out;
  std::string format = "json";
};

int run_scan(const ScanArgs& args) {
  if (args.weight < 10 || args.weight % 2 != 0)
    throw std::invalid_argument("scan weight must be even and at least 10");
  if (args.delta_min < 1 || args.delta_max < 1)
    throw std::invalid_argument("scan range bounds must be positive");
  apply_jobs(args.jobs);
  restriction::ScanReport report = restriction::nonvanishing_scan(
      static_cast<unsigned>(args.weight), args.delta_min, args.delta_max);
  std::string payload = args.format == "csv" ? io::to_csv(report)
                                             : io::to_json(report).dump(2) + "\n";
  if (args.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream os(args.out, std::ios::binary);
    if (!os) throw std::invalid_argument("cannot open output file " + args.out);
    os << payload;
  }
  return 0;
}

struct CohenArgs {
  Int r = 0;
  Int n = 0;
};

int run_cohen(const CohenArgs& args) {
  if (args.r < 2) throw std::invalid_argument("--r must be at least 2");
  if (args.n < 0) throw std::invalid_argument("--N must be >= 0");
  std::cout << io::json(to_fraction_string(
                            siegel::cohen_h(static_cast<unsigned>(args.r), args.n)))
                   .dump()
            << "\n";
  return 0;
}

struct ShimuraArgs {
  std::string in;
  Int t = 1;
  Int weight = 0;
  Int m_out = 0;
};

int run_shimura(const ShimuraArgs& args) {
  std::ifstream is(args.in);
  if (!is) throw std::invalid_argument("cannot open input file " + args.in);
  io::json j;
  is >> j;
  shimura::CoefficientSequence seq = io::sequence_from_json(j);
  unsigned k = args.weight > 0 ? static_cast<unsigned>(args.weight) : seq.weight_tag;
  if (k < 3) throw std::invalid_argument("lift weight must be provided (--weight or \"k\")");
  shimura::CoefficientSequence lifted = shimura::shimura_lift(seq, args.t, k, args.m_out);
  emit(std::cout, io::to_json(lifted, args.t));
  return 0;
}

struct EvaluateArgs {
  Int weight = 0;
  Int delta = 0;
  Int trace_bound = 4;
  double y = 1.0;
  int jobs = 0;
};

int run_evaluate(const EvaluateArgs& args) {
  check_weight(args.weight);
  if (!(args.y > 0)) throw std::invalid_argument("--y must be positive");
  apply_jobs(args.jobs);
  field::Field f(args.delta);
  hermitian::HermitianFourierTable table =
      hermitian::eisenstein_table(static_cast<unsigned>(args.weight), f, args.trace_bound);
  hermitian::TruncatedValue v = hermitian::evaluate_truncated(table, args.y);
  io::json j;
  j["approx"] = true;
  j["weight"] = args.weight;
  j["delta"] = args.delta;
  j["trace_bound"] = args.trace_bound;
  j["y"] = args.y;
  j["value"] = v.value;
  j["truncation_bound"] = v.tail_bound;
  emit(std::cout, j);
  return 0;
}

struct VerifyArgs {
  std::string check = "all";
  Int delta_max = 500;
  std::optional<Int> delta;
  Int trace_bound = 4;
  int jobs = 0;
};

int run_verify(const VerifyArgs& args) {
  apply_jobs(args.jobs);
  verify::VerifyOptions opts;
  opts.delta_max = args.delta_max;
  if (args.delta) opts.delta_max = *args.delta < 0 ? -*args.delta : *args.delta;
  opts.trace_bound = args.trace_bound;
  std::vector<std::string> selected;
  if (args.check == "all")
    selected = verify::check_names();
  else if (verify::is_check_name(args.check))
    selected = {args.check};
  else
    throw std::invalid_argument("unknown check " + args.check);

  bool all_pass = true;
  for (const std::string& name : selected) {
    verify::VerifyOutcome outcome = verify::run_check(name, opts);
    io::json j;
    j["check"] = outcome.check;
    j["status"] = verify::to_string(outcome.status);
    io::json witnesses = io::json::array();
    for (const auto& [what, value] : outcome.witnesses)
      witnesses.push_back({{"what", what}, {"value", value}});
    j["witnesses"] = std::move(witnesses);
    std::cout << j.dump() << "\n";
    std::cout.flush();
    std::cerr << "check " << outcome.check << ": " << outcome.wall_ms << " ms\n";
    all_pass = all_pass && outcome.status == verify::Status::pass;
  }
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Fourier coefficients of Hermitian and Siegel Eisenstein series of degree 2"};
  app.require_subcommand(1);

  CoeffArgs coeff_args;
  CLI::App* coeff = app.add_subcommand("coeff", "One exact Fourier coefficient");
  coeff->add_option("--weight", coeff_args.weight, "even weight >= 4")->required();
  coeff->add_option("--delta", coeff_args.delta, "fundamental discriminant < 0");
  CLI::Option* t_opt = coeff->add_option("--T", coeff_args.t_index, "Hermitian index n,m,p,q");
  CLI::Option* r_opt = coeff->add_option("--R", coeff_args.r_index, "Siegel index a,b,c");
  t_opt->excludes(r_opt);

  TableArgs table_args;
  CLI::App* table = app.add_subcommand("table", "Full coefficient table up to a trace bound");
  table->add_option("--weight", table_args.weight)->required();
  CLI::Option* table_delta =
      table->add_option("--delta", table_args.delta, "Hermitian table for this field");
  table->add_flag("--siegel", table_args.siegel_side, "Siegel table instead")
      ->excludes(table_delta);
  table->add_option("--trace-bound", table_args.trace_bound);
  table->add_option("--format", table_args.format)->check(CLI::IsMember({"json", "csv"}));
  table->add_option("--jobs", table_args.jobs);

  SiegelOutArgs restrict_args;
  CLI::App* restrict_cmd =
      app.add_subcommand("restrict", "Restriction of E_k to the Siegel half-space");
  restrict_cmd->add_option("--weight", restrict_args.weight)->required();
  restrict_cmd->add_option("--delta", restrict_args.delta)->required();
  restrict_cmd->add_option("--trace-bound", restrict_args.trace_bound);
  restrict_cmd->add_option("--format", restrict_args.format)
      ->check(CLI::IsMember({"json", "csv"}));
  restrict_cmd->add_option("--jobs", restrict_args.jobs);

  SiegelOutArgs gform_args;
  CLI::App* gform = app.add_subcommand("gform", "G_k = restricted E_k minus S_k");
  gform->add_option("--weight", gform_args.weight)->required();
  gform->add_option("--delta", gform_args.delta)->required();
  gform->add_option("--trace-bound", gform_args.trace_bound);
  gform->add_option("--format", gform_args.format)->check(CLI::IsMember({"json", "csv"}));
  gform->add_option("--jobs", gform_args.jobs);

  ScanArgs scan_args;
  CLI::App* scan = app.add_subcommand("scan", "Nonvanishing scan of G_k over discriminants");
  scan->add_option("--weight", scan_args.weight)->required();
  scan->add_option("--delta-min", scan_args.delta_min, "smallest |delta|");
  scan->add_option("--delta-max", scan_args.delta_max, "largest |delta|");
  scan->add_option("--jobs", scan_args.jobs);
  scan->add_option("--out", scan_args.out, "write the report here instead of stdout");
  scan->add_option("--format", scan_args.format)->check(CLI::IsMember({"json", "csv"}));

  CohenArgs cohen_args;
  CLI::App* cohen = app.add_subcommand("cohen-h", "One value of Cohen's function H(r, N)");
  cohen->add_option("--r", cohen_args.r)->required();
  cohen->add_option("--N", cohen_args.n)->required();

  ShimuraArgs shimura_args;
  CLI::App* shim = app.add_subcommand("shimura", "Coefficient lift of a half-integral sequence");
  shim->add_option("--in", shimura_args.in, "sequence JSON ({\"k\":..,\"values\":[..]})")
      ->required();
  shim->add_option("--t", shimura_args.t, "squarefree lift parameter")->required();
  shim->add_option("--weight", shimura_args.weight, "integer weight tag k (default: from file)");
  shim->add_option("--M-out", shimura_args.m_out, "output length")->required();

  EvaluateArgs eval_args;
  CLI::App* evaluate = app.add_subcommand("evaluate", "Truncated value of E_k at Z = iyI");
  evaluate->add_option("--weight", eval_args.weight)->required();
  evaluate->add_option("--delta", eval_args.delta)->required();
  evaluate->add_option("--trace-bound", eval_args.trace_bound);
  evaluate->add_option("--y", eval_args.y)->required();
  evaluate->add_option("--jobs", eval_args.jobs);

  VerifyArgs verify_args;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run named verification checks");
  verify_cmd->add_option("--check", verify_args.check, "check name or \"all\"");
  verify_cmd->add_option("--delta-max", verify_args.delta_max);
  verify_cmd->add_option("--delta", verify_args.delta,
                         "limit discriminant ranges to |delta| <= |this|");
  verify_cmd->add_option("--trace-bound", verify_args.trace_bound);
  verify_cmd->add_option("--jobs", verify_args.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (coeff->parsed()) {
      if (coeff_args.t_index.empty() == coeff_args.r_index.empty())
        throw std::invalid_argument("need exactly one of --T or --R");
      return run_coeff(coeff_args);
    }
    if (table->parsed()) return run_table(table_args);
    if (restrict_cmd->parsed()) return run_restrict(restrict_args);
    if (gform->parsed()) return run_gform(gform_args);
    if (scan->parsed()) return run_scan(scan_args);
    if (cohen->parsed()) return run_cohen(cohen_args);
    if (shim->parsed()) return run_shimura(shimura_args);
    if (evaluate->parsed()) return run_evaluate(eval_args);
    if (verify_cmd->parsed()) return run_verify(verify_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
