#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <pauli_fwht/bench.hpp>
#include <pauli_fwht/pauli_fwht.hpp>
#include <pauli_fwht/verify.hpp>

namespace pauli_fwht::cli {
namespace {

enum class InputFormat { automatic, text, binary };

const std::map<std::string, InputFormat> kInputFormats = {
    {"auto", InputFormat::automatic}, {"text", InputFormat::text}, {"binary", InputFormat::binary}};
const std::map<std::string, MatrixFormat> kOutputFormats = {{"text", MatrixFormat::text},
                                                            {"binary", MatrixFormat::binary}};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open input file '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open output file '" + path + "'");
  return out;
}

ComplexMatrix load_matrix(const std::string& path, InputFormat format) {
  std::ifstream in = open_input(path);
  MatrixFormat resolved = MatrixFormat::text;
  if (format == InputFormat::binary) {
    resolved = MatrixFormat::binary;
  } else if (format == InputFormat::automatic) {
    char magic[4] = {};
    in.read(magic, 4);
    if (in.gcount() == 4 && std::equal(magic, magic + 4, kMatrixMagic.begin())) {
      resolved = MatrixFormat::binary;
    }
    in.clear();
    in.seekg(0);
  }
  try {
    return read_matrix(in, resolved);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct DecomposeArgs {
  std::string input;
  InputFormat input_format = InputFormat::automatic;
  std::string output;
  double threshold = 1e-12;
  std::string emit = "terms";
  unsigned threads = default_threads();
};

int cmd_decompose(const DecomposeArgs& a, std::ostream& err) {
  ComplexMatrix m = load_matrix(a.input, a.input_format);
  const unsigned n = m.qubits();
  std::ofstream out = open_output(a.output);

  const auto start = std::chrono::steady_clock::now();
  CoefficientMatrix c = decompose(std::move(m), nullptr, a.threads);
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::size_t count = 0;
  if (a.emit == "dense") {
    write_matrix(c, out, MatrixFormat::binary);
    count = c.size();
  } else {
    const TermList terms = terms_from_coefficients(c, a.threshold);
    write_terms(terms, out);
    count = terms.size();
  }
  err << "n=" << n << " terms=" << count << " elapsed=" << elapsed << "s\n";
  return kSuccess;
}

struct ReconstructArgs {
  std::string input;
  std::string output;
  MatrixFormat format = MatrixFormat::binary;
  std::optional<unsigned> qubits;
  unsigned threads = default_threads();
};

int cmd_reconstruct(const ReconstructArgs& a, std::ostream& err) {
  std::ifstream in = open_input(a.input);
  TermList terms;
  try {
    terms = read_terms(in, a.qubits);
  } catch (const ParseError& e) {
    throw ParseError(a.input + ": " + e.what());
  }
  const ComplexMatrix m = reconstruct(terms, a.threads);
  std::ofstream out = open_output(a.output);
  write_matrix(m, out, a.format);
  err << "n=" << terms.n << " terms=" << terms.size() << '\n';
  return kSuccess;
}

int cmd_verify(const VerifyConfig& cfg, std::ostream& out) {
  const VerifyResult res = run_verify(cfg);
  out << "n,class,oracle_deviation,structure_deviation,status\n";
  for (const VerifyRow& row : res.rows) {
    out << row.n << ',' << to_string(row.kind) << ',' << std::setprecision(3) << std::scientific
        << row.oracle_deviation << ',' << row.structure_deviation << ','
        << (row.passed ? "ok" : "FAIL") << '\n';
  }
  out << std::defaultfloat << "max deviation " << res.max_deviation << " (tolerance " << cfg.tolerance
      << "): " << (res.passed ? "PASS" : "FAIL") << '\n';
  return res.passed ? kSuccess : kVerifyFailed;
}

int cmd_bench(const BenchConfig& cfg, const std::string& csv_path, std::ostream& out) {
  validate(cfg);
  std::ofstream csv = open_output(csv_path);
  out << "n,mean_seconds,ratio\n";
  const BenchResult res = run_bench(cfg, [&out](const BenchSummary& s) {
    out << s.n << ',' << s.mean_seconds << ',';
    if (s.ratio_to_previous) out << *s.ratio_to_previous;
    out << '\n' << std::flush;
  });
  write_bench_csv(res.records, csv);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pauli decomposition of 2^n x 2^n matrices via the fast Walsh-Hadamard transform",
               args.empty() ? "pauli-fwht" : args.front()};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  DecomposeArgs dec;
  auto* sc_dec = app.add_subcommand("decompose", "Decompose a matrix into Pauli coefficients");
  sc_dec->add_option("-i,--input", dec.input, "Input matrix file")->required();
  sc_dec->add_option("--input-format", dec.input_format, "auto, text or binary")
      ->transform(CLI::CheckedTransformer(kInputFormats, CLI::ignore_case));
  sc_dec->add_option("-o,--output", dec.output, "Output file")->required();
  sc_dec->add_option("-t,--threshold", dec.threshold, "Drop terms with |coeff| <= threshold")
      ->check(CLI::NonNegativeNumber);
  sc_dec->add_option("--emit", dec.emit, "terms (CSV) or dense (binary coefficient matrix)")
      ->check(CLI::IsMember({"terms", "dense"}));
  sc_dec->add_option("--threads", dec.threads, "Worker threads")->check(CLI::PositiveNumber);

  ReconstructArgs rec;
  auto* sc_rec = app.add_subcommand("reconstruct", "Rebuild a matrix from a term CSV");
  sc_rec->add_option("-i,--input", rec.input, "Input term CSV")->required();
  sc_rec->add_option("-o,--output", rec.output, "Output matrix file")->required();
  sc_rec->add_option("--format", rec.format, "binary or text")
      ->transform(CLI::CheckedTransformer(kOutputFormats, CLI::ignore_case));
  sc_rec->add_option("--qubits", rec.qubits, "Qubit count when the term file has no terms");
  sc_rec->add_option("--threads", rec.threads, "Worker threads")->check(CLI::PositiveNumber);

  VerifyConfig ver;
  ver.threads = default_threads();
  auto* sc_ver = app.add_subcommand("verify", "Check the transform against the trace oracle");
  sc_ver->add_option("--n-max", ver.n_max, "Largest qubit count (at most 8)");
  sc_ver->add_option("--seed", ver.seed, "Random seed");
  sc_ver->add_option("--trials", ver.trials, "Matrices per size and symmetry class");
  sc_ver->add_option("--threads", ver.threads, "Worker threads")->check(CLI::PositiveNumber);
  sc_ver->add_flag("--inject-fault", ver.inject_fault, "Corrupt the transform (negative control)")
      ->group("");

  BenchConfig bench;
  std::string bench_csv;
  auto* sc_bench = app.add_subcommand("bench", "Time decomposition of random Hermitian matrices");
  sc_bench->add_option("--n-min", bench.n_min, "Smallest qubit count");
  sc_bench->add_option("--n-max", bench.n_max, "Largest qubit count (at most 14)");
  sc_bench->add_option("--repeats", bench.repeats, "Timed runs per matrix");
  sc_bench->add_option("--matrices", bench.matrices, "Random matrices per size");
  sc_bench->add_option("--seed", bench.seed, "Random seed");
  sc_bench->add_option("-o,--output", bench_csv, "CSV output path")->required();
  sc_bench->add_option("--threads", bench.threads, "Worker threads")->check(CLI::PositiveNumber);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  for (const std::string& a : args) argv.push_back(a.c_str());
  if (argv.empty()) argv.push_back("pauli-fwht");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (sc_dec->parsed()) return cmd_decompose(dec, err);
    if (sc_rec->parsed()) return cmd_reconstruct(rec, err);
    if (sc_ver->parsed()) return cmd_verify(ver, out);
    if (sc_bench->parsed()) return cmd_bench(bench, bench_csv, out);
  } catch (const LimitError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDataError;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return kDataError;
  }
  return kUsageError;
}

}  // namespace pauli_fwht::cli
