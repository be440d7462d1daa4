#include "stagelet/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>
#include <ostream>

#include "stagelet/codec.hpp"
#include "stagelet/error.hpp"
#include "stagelet/examples.hpp"

namespace stagelet::cli {

namespace {

struct Config {
  std::string name;
  std::string format = "pretty";
  std::vector<std::string> raw_args;
  std::optional<std::size_t> canon_limit;
  std::optional<std::uint64_t> step_limit;
};

std::int64_t parse_int(const std::string& text) {
  std::size_t used = 0;
  const long long v = std::stoll(text, &used);
  if (used != text.size()) throw std::invalid_argument(text);
  return v;
}

Ast code_of(const ExampleEntry& entry, const Config& config) {
  if (!entry.is_generator()) return entry.program();
  return show(entry.generator(), ChildOrder::LeftToRight, config.canon_limit.value_or(default_canon_limit));
}

int do_list(std::ostream& out) {
  for (const auto& entry : registry()) out << entry.name << ' ' << to_string(entry.kind) << '\n';
  return exit_ok;
}

int do_show(const ExampleEntry& entry, const Config& config, std::ostream& out) {
  const Ast tree = code_of(entry, config);
  out << (config.format == "sexp" ? to_sexp(tree) : pretty(tree)) << '\n';
  return exit_ok;
}

int do_run(const ExampleEntry& entry, const Config& config, const std::vector<std::int64_t>& args,
           std::ostream& out) {
  Limits limits;
  if (config.step_limit) limits.steps = *config.step_limit;
  const Value v = entry.is_generator()
                      ? run(entry.generator(), limits, config.canon_limit.value_or(default_canon_limit))
                      : eval_ast(entry.program(), {}, limits);
  out << apply_ints(v, args).to_string() << '\n';
  return exit_ok;
}

int do_check(const ExampleEntry& entry, const Config& config, std::ostream& out) {
  const auto free = free_vars(code_of(entry, config));
  if (free.empty()) {
    out << "closed\n";
    return exit_ok;
  }
  std::vector<std::string> names;
  for (const auto& n : free) names.push_back(n.render());
  std::sort(names.begin(), names.end());
  out << "free:";
  for (const auto& n : names) out << ' ' << n;
  out << '\n';
  return exit_free_names;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config config;
  CLI::App app{"Inspect and run staged code generators", "stagelet"};
  app.require_subcommand(1, 1);
  app.add_option("--canon-limit", config.canon_limit, "Forcings allowed per letrec locus")->take_last();
  app.add_option("--step-limit", config.step_limit, "Evaluation steps allowed")->take_last();

  auto* list = app.add_subcommand("list", "List the examples");
  auto* show_cmd = app.add_subcommand("show", "Print the code an example generates");
  show_cmd->add_option("name", config.name)->required();
  show_cmd->add_option("--format", config.format)->check(CLI::IsMember({"pretty", "sexp"}))->take_last();
  auto* run_cmd = app.add_subcommand("run", "Run an example on integer arguments");
  run_cmd->add_option("name", config.name)->required();
  run_cmd->add_option("args", config.raw_args);
  auto* check = app.add_subcommand("check", "Report free names in the generated code");
  check->add_option("name", config.name)->required();
  for (auto* sub : {list, show_cmd, run_cmd, check}) sub->fallthrough();

  // CLI11 expects argv order reversed.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return exit_usage;
  }

  std::vector<std::int64_t> ints;
  try {
    for (const auto& raw : config.raw_args) ints.push_back(parse_int(raw));
  } catch (const std::exception&) {
    err << "error: run arguments must be integers\n" << app.help();
    return exit_usage;
  }

  if (list->parsed()) return do_list(out);

  const ExampleEntry* entry = find_example(config.name);
  if (entry == nullptr) {
    err << "error: unknown example '" << config.name << "' (try `stagelet list`)\n";
    return exit_unknown_example;
  }

  try {
    if (show_cmd->parsed()) return do_show(*entry, config, out);
    if (run_cmd->parsed()) return do_run(*entry, config, ints, out);
    return do_check(*entry, config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_generation_failed;
  }
}

}  // namespace stagelet::cli
