#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "hermiq/serialize.hpp"

namespace {

using namespace hermiq;

struct QArg {
  int p = 0, k = 0;
};

// Accepts "q" (an odd prime power) or the explicit "p^k" form.
QArg parse_q(const std::string& s) {
  long long q = 0;
  const auto caret = s.find('^');
  if (caret != std::string::npos) {
    const int p = std::stoi(s.substr(0, caret));
    const int k = std::stoi(s.substr(caret + 1));
    return {p, k};
  }
  q = std::stoll(s);
  if (q < 3) throw Error("q must be an odd prime power >= 3, got '" + s + "'");
  long long p = 0;
  for (long long d = 2; d * d <= q; ++d)
    if (q % d == 0) { p = d; break; }
  if (p == 0) p = q;
  int k = 0;
  long long rest = q;
  while (rest % p == 0) { rest /= p; ++k; }
  if (rest != 1)
    throw Error("q must be a prime power, got '" + s + "'");
  return {static_cast<int>(p), k};
}

int max_q_bound() {
  if (const char* env = std::getenv("HERMIQ_MAX_Q")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return Field::kDefaultMaxQ;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot open output file '" + out_path + "'");
  f << text;
}

QuadricCoeffs coeffs_from_arg(const Field& F, const std::string& arg) {
  io::json j;
  try {
    j = io::json::parse(arg);
  } catch (const std::exception&) {
    throw Error("malformed --coeffs JSON: '" + arg + "'");
  }
  return io::coeffs_from_json(F, j);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hermitian surface / quadric intersection toolkit over GF(q^2)"};
  app.require_subcommand(1);

  std::string q_arg, coeffs_arg, type_arg, format = "json", out_path;
  bool exhaustive = false;
  std::uint64_t samples = 0, seed = 0, witness_budget = 4000000;

  auto add_q = [&](CLI::App* cmd) {
    cmd->add_option("--q", q_arg, "field order q = p^k, q odd")->required();
  };
  auto add_scan = [&](CLI::App* cmd) {
    cmd->add_flag("--exhaustive", exhaustive, "scan every coefficient tuple");
    cmd->add_option("--samples", samples, "number of sampled tuples");
    cmd->add_option("--seed", seed, "seed for the splitmix64 sampler");
    cmd->add_option("--witness-budget", witness_budget,
                    "classifier-call budget for the witness search");
  };
  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "json or csv");
    cmd->add_option("--out", out_path, "write the report to a file");
  };

  CLI::App* count = app.add_subcommand("count", "brute-force intersection counts");
  add_q(count);
  count->add_option("--coeffs", coeffs_arg, "quadric coefficients as JSON")->required();
  add_out(count);

  CLI::App* classify = app.add_subcommand("classify", "closed-form classifier report");
  add_q(classify);
  classify->add_option("--coeffs", coeffs_arg, "quadric coefficients as JSON")->required();
  add_out(classify);

  CLI::App* spectrum = app.add_subcommand("spectrum", "achieved intersection sizes");
  add_q(spectrum);
  spectrum->add_option("--type", type_arg, "elliptic, hyperbolic or cone")->required();
  add_scan(spectrum);
  add_out(spectrum);

  CLI::App* verify = app.add_subcommand("verify", "check spectra against the expected lists");
  add_q(verify);
  add_scan(verify);
  add_out(verify);

  CLI::App* extremal_cmd = app.add_subcommand("extremal", "extremal structure checks");
  add_q(extremal_cmd);
  extremal_cmd->add_option("--coeffs", coeffs_arg, "quadric coefficients as JSON")->required();
  add_out(extremal_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const QArg qa = parse_q(q_arg);
    const Field F(qa.p, qa.k, max_q_bound());

    if (format != "json" && format != "csv")
      throw Error("unknown --format '" + format + "'");

    canonical::Budget budget = canonical::Budget::exhaustive();
    if (!exhaustive) {
      if (samples > 0) budget = canonical::Budget::sampled(samples, seed);
      else if (spectrum->parsed() || verify->parsed())
        throw Error("choose --exhaustive or --samples N");
    }

    if (count->parsed()) {
      const QuadricCoeffs qc = coeffs_from_arg(F, coeffs_arg);
      emit(io::dump(io::count_json(oracle::affine_count(F, qc),
                                   oracle::infinity_count(F, qc))),
           out_path);
      return 0;
    }
    if (classify->parsed()) {
      const QuadricCoeffs qc = coeffs_from_arg(F, coeffs_arg);
      emit(io::dump(io::classifier_json(F, qc, classifier::classify(F, qc))), out_path);
      return 0;
    }
    if (spectrum->parsed()) {
      QuadricType type;
      if (type_arg == "elliptic") type = QuadricType::Elliptic;
      else if (type_arg == "hyperbolic") type = QuadricType::Hyperbolic;
      else if (type_arg == "cone") type = QuadricType::Cone;
      else throw Error("unknown --type '" + type_arg + "'");
      const auto sp = canonical::spectrum(F, type, budget);
      emit(format == "csv" ? io::spectrum_csv(F, sp) : io::dump(io::spectrum_json(F, sp)),
           out_path);
      return 0;
    }
    if (verify->parsed()) {
      const auto rep = canonical::verify_spectra(F, budget, witness_budget);
      emit(format == "csv" ? io::verify_csv(F, rep) : io::dump(io::verify_json(F, rep)),
           out_path);
      switch (rep.status) {
        case canonical::Status::Pass: return 0;
        case canonical::Status::Fail: return 1;
        case canonical::Status::Inconclusive: return 3;
      }
    }
    if (extremal_cmd->parsed()) {
      const QuadricCoeffs qc = coeffs_from_arg(F, coeffs_arg);
      try {
        const std::int64_t q = F.q(), total = oracle::total_count(F, qc);
        const auto rep = total == q * q + 1
                             ? extremal::check_minimum_structure(F, qc)
                             : extremal::check_maximum_structure(F, qc);
        emit(io::dump(io::extremal_json(F, qc, rep)), out_path);
        return rep.pass ? 0 : 1;
      } catch (const WrongCardinalityError& e) {
        io::json j{{"error", "WrongCardinality"}, {"message", e.what()}};
        emit(io::dump(j), out_path);
        return 1;
      }
    }
  } catch (const InvalidFieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
