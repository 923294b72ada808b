// Copyright (c) 2026 the nilspec authors.
// SPDX-License-Identifier: MIT

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "nilspec/cli.hpp"
#include "nilspec/errors.hpp"

namespace {

int fail(const std::string& code, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = code;
  j["message"] = message;
  std::cerr << j.dump() << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac spectra and eta invariants of Heisenberg nilmanifolds"};
  std::string command;
  std::string config_path;
  std::string out_path;
  std::string format;
  bool use_float = false;
  app.add_option("command", command, "spectrum|eta|verify|family|example5d")
      ->required();
  app.add_option("--config", config_path, "flat key=value or JSON config file")
      ->required();
  app.add_option("--out", out_path, "write the result here instead of stdout");
  app.add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--float", use_float,
               "evaluate manifold parameters in floating point");
  CLI11_PARSE(app, argc, argv);

  std::ifstream in(config_path, std::ios::binary);
  if (!in) return fail("ParseError", "cannot read config " + config_path);
  std::ostringstream buf;
  buf << in.rdbuf();

  nilspec::RunConfig cfg;
  try {
    cfg = nilspec::parse_config(buf.str());
  } catch (const nilspec::Error& e) {
    return fail(nilspec::error_code_name(e.code()), e.what());
  } catch (const std::exception& e) {
    return fail("Unexpected", e.what());
  }

  cfg.command = command;  // the positional command always wins
  if (!out_path.empty()) cfg.output = out_path;
  if (!format.empty()) cfg.format = format;
  if (use_float) nilspec::force_float_mode(cfg);

  return nilspec::run(cfg, std::cout, std::cerr);
}
