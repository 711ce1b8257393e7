// vkp: check, normalize and query proof scripts.
//
//   vkp check FILE... [--calculus IPC|V|KP]
//   vkp normalize FILE NAME [--strategy full|weakhead|evalV|random] [--seed N] [--trace] [--json]
//   vkp extract FILE NAME
//   vkp prove FORMULA [--max-worlds N]
//
// Exit status: 0 success, 1 usage/parse/type/precondition failure, 2 I/O failure.
// VKP_BUDGET overrides the normalization step budget.

#include <CLI11.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "vkp/normalize.hpp"
#include "vkp/oracle/prover.hpp"
#include "vkp/parser.hpp"
#include "vkp/printer.hpp"
#include "vkp/script.hpp"
#include "vkp/trace.hpp"
#include "vkp/typing.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kIoError = 2;

struct IoError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError{"cannot open " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError{"cannot read " + path};
  return buf.str();
}

std::optional<vkp::Calculus> calculus_option(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return vkp::calculus_from_name(s);
}

struct FileReport {
  int status = kOk;
  std::string out;
  std::string err;
};

FileReport check_file(const std::string& path, std::optional<vkp::Calculus> forced) {
  FileReport r;
  std::string text;
  try {
    text = read_file(path);
  } catch (const IoError& e) {
    r.status = kIoError;
    r.err = "vkp: " + e.message + "\n";
    return r;
  }
  vkp::ProofScript script;
  try {
    script = vkp::parse_script(text);
  } catch (const vkp::ParseError& e) {
    r.status = kFailed;
    r.err = path + ":" + e.what() + "\n";
    return r;
  }
  std::size_t ok = 0;
  for (const auto& d : script.declarations) {
    const vkp::Calculus calc = forced.value_or(d.calculus);
    try {
      vkp::check({}, d.body, d.claimed, calc);
      r.out += d.name + " : OK (" + vkp::to_string(d.claimed) + ")\n";
      ++ok;
    } catch (const vkp::TypeError& e) {
      r.status = kFailed;
      r.err += path + ":" + std::to_string(d.line) + ":" + std::to_string(d.column) + ": " + d.name + " : " +
               std::string(vkp::type_error_name(e.kind())) + ": " + e.what() + "\n";
    }
  }
  r.out += path + ": " + std::to_string(ok) + " of " + std::to_string(script.declarations.size()) +
           " declarations OK\n";
  return r;
}

int run_check(const std::vector<std::string>& files, std::optional<vkp::Calculus> forced) {
  std::vector<std::future<FileReport>> jobs;
  for (const auto& f : files) jobs.push_back(std::async(std::launch::async, check_file, f, forced));
  int status = kOk;
  for (auto& j : jobs) {
    const FileReport r = j.get();
    std::cout << r.out;
    std::cerr << r.err;
    status = std::max(status, r.status);
  }
  return status;
}

// Loads a declaration and the calculus it is processed in.
struct Loaded {
  vkp::Declaration decl;
  vkp::Calculus calculus;
};

Loaded load(const std::string& path, const std::string& name, std::optional<vkp::Calculus> forced) {
  const vkp::ProofScript script = vkp::parse_script(read_file(path));
  const vkp::Declaration* d = script.find(name);
  if (!d) throw std::invalid_argument("no declaration named " + name + " in " + path);
  const vkp::Calculus calc = forced.value_or(d->calculus);
  vkp::check({}, d->body, d->claimed, calc);
  return {*d, calc};
}

void print_trace(const vkp::ReductionTrace& trace) {
  for (std::size_t k = 0; k < trace.size(); ++k) {
    std::cout << "step " << k + 1 << ": " << vkp::rule_name(trace[k].rule) << " at [";
    for (std::size_t i = 0; i < trace[k].path.size(); ++i) std::cout << (i ? "," : "") << trace[k].path[i];
    std::cout << "]\n  " << vkp::to_string(trace[k].after) << "\n";
  }
}

// Runs f and maps the library's exceptions to exit codes.
template <class F>
int guarded(F&& f) {
  try {
    return f();
  } catch (const IoError& e) {
    std::cerr << "vkp: " << e.message << "\n";
    return kIoError;
  } catch (const vkp::ParseError& e) {
    std::cerr << "vkp: parse error: " << e.what() << "\n";
  } catch (const vkp::TypeError& e) {
    std::cerr << "vkp: " << vkp::type_error_name(e.kind()) << ": " << e.what() << "\n";
  } catch (const vkp::NormalizeError& e) {
    switch (e.kind()) {
      case vkp::NormalizeError::Kind::BudgetExceeded:
        std::cerr << "vkp: BudgetExceeded: " << e.what() << "\n";
        if (e.last_term()) std::cerr << "last term: " << vkp::to_string(*e.last_term()) << "\n";
        break;
      case vkp::NormalizeError::Kind::PreconditionViolation:
        std::cerr << "vkp: PreconditionViolation: " << e.what() << "\n";
        break;
      case vkp::NormalizeError::Kind::InternalError:
        std::cerr << "vkp: InternalError: " << e.what() << "\n";
        break;
    }
  } catch (const vkp::ReductionError& e) {
    std::cerr << "vkp: reduction error: " << e.what() << "\n";
  } catch (const vkp::oracle::SearchBudgetExceeded& e) {
    std::cerr << "vkp: SearchBudgetExceeded: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "vkp: " << e.what() << "\n";
  }
  return kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof terms for IPC, Visser's rules (V) and Kreisel-Putnam logic (KP)"};
  app.require_subcommand(1);
  const std::vector<std::string> calculi{"IPC", "V", "KP"};

  auto* check = app.add_subcommand("check", "Type-check every declaration of the given scripts");
  std::vector<std::string> check_files;
  std::string check_calc;
  check->add_option("files", check_files, "Proof scripts")->required();
  check->add_option("--calculus", check_calc, "Override the calculus of every declaration")
      ->check(CLI::IsMember(calculi));

  auto* norm = app.add_subcommand("normalize", "Print the normal form of a declaration");
  std::string norm_file, norm_name, norm_calc, strategy = "full";
  std::uint64_t seed = 0;
  bool show_trace = false, json = false;
  norm->add_option("file", norm_file, "Proof script")->required();
  norm->add_option("name", norm_name, "Declaration")->required();
  norm->add_option("--strategy", strategy, "full, weakhead, evalV or random")
      ->check(CLI::IsMember({"full", "weakhead", "evalV", "random"}));
  norm->add_option("--seed", seed, "Seed for the random strategy");
  norm->add_option("--calculus", norm_calc, "Override the declaration's calculus")->check(CLI::IsMember(calculi));
  norm->add_flag("--trace", show_trace, "Print every step");
  norm->add_flag("--json", json, "Print the trace as JSON");

  auto* extract = app.add_subcommand("extract", "Extract the proved disjunct from a closed proof of a disjunction");
  std::string ex_file, ex_name, ex_calc;
  extract->add_option("file", ex_file, "Proof script")->required();
  extract->add_option("name", ex_name, "Declaration")->required();
  extract->add_option("--calculus", ex_calc, "Override the declaration's calculus")->check(CLI::IsMember(calculi));

  auto* prove = app.add_subcommand("prove", "Decide IPC derivability of a formula");
  std::string formula_text;
  std::size_t max_worlds = 6;
  prove->add_option("formula", formula_text, "Formula")->required();
  prove->add_option("--max-worlds", max_worlds, "Largest countermodel searched")->check(CLI::Range(1, 12));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFailed;
  }

  if (*check) return run_check(check_files, calculus_option(check_calc));

  if (*norm) {
    return guarded([&] {
      const Loaded l = load(norm_file, norm_name, calculus_option(norm_calc));
      vkp::ReductionTrace trace;
      vkp::NormalizeOptions options;
      if (show_trace || json) options.trace = &trace;
      vkp::Term nf = l.decl.body;
      vkp::Calculus trace_calc = l.calculus;
      if (strategy == "full") {
        nf = vkp::normalize(l.decl.body, l.calculus, {}, options);
      } else if (strategy == "weakhead") {
        nf = vkp::weak_head_normalize(l.decl.body, {}, options);
        trace_calc = vkp::Calculus::KP;
      } else if (strategy == "evalV") {
        nf = vkp::eval_v(l.decl.body, {}, options);
        trace_calc = vkp::Calculus::V;
      } else {
        nf = vkp::normalize_random(l.decl.body, l.calculus, seed, {}, options);
      }
      if (json) {
        std::cout << vkp::trace_to_json(trace, trace_calc, 2) << "\n";
        return kOk;
      }
      if (show_trace) print_trace(trace);
      std::cout << vkp::to_string(nf) << "\n";
      return kOk;
    });
  }

  if (*extract) {
    return guarded([&] {
      const Loaded l = load(ex_file, ex_name, calculus_option(ex_calc));
      const vkp::Disjunct d = vkp::extract_disjunct(l.decl.body, l.calculus);
      std::cout << (d.side == vkp::Side::Left ? "Left" : "Right") << "\n"
                << vkp::to_string(d.witness) << " : " << vkp::to_string(d.type) << "\n";
      return kOk;
    });
  }

  return guarded([&] {
    const vkp::Formula a = vkp::parse_formula(formula_text);
    vkp::oracle::ProverOptions options;
    options.countermodel.max_worlds = max_worlds;
    const auto result = vkp::oracle::ipc_provable(a, options);
    if (const auto* p = std::get_if<vkp::oracle::Provable>(&result)) {
      std::cout << "provable\n" << vkp::to_string(p->witness) << "\n";
    } else {
      std::cout << "not provable\n" << vkp::oracle::to_text(std::get<vkp::oracle::NotProvable>(result).countermodel);
    }
    return kOk;
  });
}
