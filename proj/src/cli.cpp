#include "tropbound/cli.hpp"

#include <fstream>
#include <iostream>

#include "tropbound/bounds.hpp"
#include "tropbound/errors.hpp"
#include "tropbound/io.hpp"
#include "tropbound/render.hpp"
#include "tropbound/tropical.hpp"
#include "tropbound/verify.hpp"

namespace tropbound {

namespace {

using io::json;

void emit(const CliConfig &config, std::ostream &out, const std::string &name,
          const std::string &text) {
  if (config.out_dir.empty()) {
    out << text;
    return;
  }
  std::filesystem::create_directories(config.out_dir);
  const auto path = config.out_dir / name;
  std::ofstream file(path, std::ios::binary);
  if (!file)
    throw std::runtime_error("cannot write " + path.string());
  file << text;
}

std::string dump(const json &doc) { return doc.dump(2) + "\n"; }

struct Loaded {
  json doc;
  NumericalData data;
  InsertionSpec insertions;
};

Loaded load_input(const CliConfig &config) {
  if (config.input.empty())
    throw InvalidInput("--input", "an input file is required");
  Loaded l;
  l.doc = io::load_json(config.input);
  l.data = io::numerical_data_from_json(l.doc);
  l.insertions = io::insertions_from_json(l.doc, l.data);
  return l;
}

CountOptions count_options(const CliConfig &config, bool collect) {
  CountOptions opts;
  opts.max_legs = config.cap;
  opts.collect_solutions = collect;
  return opts;
}

int run_bound(const CliConfig &config, std::ostream &out) {
  const auto in = load_input(config);
  const auto bound = theorem_main_bound(in.data, in.insertions);
  if (config.format == "json") {
    json doc = io::to_json(bound);
    doc["input"] = io::to_json(in.data);
    doc["insertions"] = io::to_json(in.insertions);
    emit(config, out, "bound.json", dump(doc));
  } else if (config.format == "csv") {
    emit(config, out, "bound.csv",
         "value,multiplier_product,binomial,power\n" + bound.value.get_str() +
             "," + bound.multiplier_product.get_str() + "," +
             bound.binomial.get_str() + "," + bound.power.get_str() + "\n");
  } else {
    emit(config, out, "bound.txt", bound.value.get_str() + "\n");
  }
  return 0;
}

int run_exact(const CliConfig &config, std::ostream &out) {
  const auto in = load_input(config);
  const bool want_json = config.format == "json";
  const auto result =
      solve_invariant(in.data, config.seed, count_options(config, want_json));
  if (want_json)
    emit(config, out, "exact.json", dump(io::invariant_to_json(result)));
  else
    emit(config, out, "exact.txt", result.total.get_str() + "\n");
  return 0;
}

int run_render(const CliConfig &config, std::ostream &out, std::ostream &err) {
  if (config.out_dir.empty())
    throw InvalidInput("--out", "render needs an output directory");
  const auto in = load_input(config);
  const auto result =
      solve_invariant(in.data, config.seed, count_options(config, true));
  const auto paths = render_all(result.solutions, config.out_dir);
  if (paths.empty())
    err << "warning: no tropical curves through the sampled points; "
           "nothing rendered\n";
  for (const auto &p : paths)
    out << p.string() << "\n";
  return 0;
}

int run_verify(const CliConfig &config, std::ostream &out, std::ostream &err) {
  if (config.paper_suite) {
    std::vector<VerificationReport> reports;
    try {
      reports = paper_example_suite(config.seed);
    } catch (const VerificationFailure &f) {
      err << "verification failed: " << dump(io::to_json(f.report()));
      return static_cast<int>(ExitCode::verification_failed);
    }
    if (config.format == "csv") {
      emit(config, out, "report.csv", io::suite_to_csv(reports));
    } else {
      emit(config, out, "report.json",
           dump(io::suite_to_json(reports, config.seed)));
      if (!config.out_dir.empty())
        emit(config, out, "report.csv", io::suite_to_csv(reports));
    }
    return 0;
  }
  if (config.random_three_leg) {
    const auto report = random_three_leg_suite(
        config.seed, config.trials, std::min(config.exact_trials, config.trials));
    emit(config, out, "random_three_leg.json", dump(io::to_json(report)));
    return report.ok() ? 0 : static_cast<int>(ExitCode::verification_failed);
  }
  const auto in = load_input(config);
  CountOptions opts = count_options(config, false);
  const auto report = verify_case(config.input.stem().string(), in.data,
                                  in.insertions, config.seed, opts);
  const std::vector<VerificationReport> one{report};
  if (config.format == "csv")
    emit(config, out, "report.csv", io::suite_to_csv(one));
  else
    emit(config, out, "report.json", dump(io::suite_to_json(one, config.seed)));
  return report.ok == false ? static_cast<int>(ExitCode::verification_failed)
                            : 0;
}

} // namespace

int run(const CliConfig &config, std::ostream &out, std::ostream &err) {
  try {
    if (config.cap < 3)
      throw InvalidInput("--cap", "must be at least 3");
    if (config.subcommand == "bound")
      return run_bound(config, out);
    if (config.subcommand == "exact")
      return run_exact(config, out);
    if (config.subcommand == "nd") {
      emit(config, out, "nd.csv", io::nd_table_csv(config.max_degree));
      return 0;
    }
    if (config.subcommand == "verify")
      return run_verify(config, out, err);
    if (config.subcommand == "render")
      return run_render(config, out, err);
    throw InvalidInput("", "unknown subcommand '" + config.subcommand + "'");
  } catch (const CapExceeded &e) {
    err << "error: " << e.what() << "\n";
  } catch (const InvalidInput &e) {
    err << "error: " << e.what() << "\n";
  } catch (const HypothesisViolation &e) {
    err << "error: " << e.what() << "\n";
  } catch (const DimensionMismatch &e) {
    err << "error: " << e.what() << "\n";
  } catch (const GenericityFailure &e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error &e) {
    err << "error: " << e.what() << "\n";
  }
  return static_cast<int>(ExitCode::invalid);
}

} // namespace tropbound
