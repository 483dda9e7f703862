#include "snellfagnano/cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "snellfagnano/error.hpp"

namespace sf::cli {
namespace {

struct IoError {
  std::string message;
};

std::string slurp(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError{"cannot read " + path};
  return slurp(f);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw IoError{"cannot write " + path};
  f << text;
  f.flush();
  if (!f) throw IoError{"write failed for " + path};
}

// "1e-9" sets the residual tolerance; "name=value" sets any named one.
Json parse_tol_flag(const std::vector<std::string>& flags) {
  Json out = Json::object();
  for (const std::string& f : flags) {
    const auto eq = f.find('=');
    const std::string name = eq == std::string::npos ? "residual" : f.substr(0, eq);
    const std::string text = eq == std::string::npos ? f : f.substr(eq + 1);
    size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(text, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != text.size()) {
      throw Error(ErrorCode::InvalidArgument, "--tol expects VALUE or NAME=VALUE, got " + f);
    }
    out[name] = v;
  }
  return out;
}

Json error_doc(std::string_view command, const std::string& code, const std::string& message,
               int exit_code) {
  Json d;
  d["version"] = std::string(kVersion);
  d["command"] = std::string(command);
  d["status"] = "error";
  Json e;
  e["code"] = code;
  e["message"] = message;
  d["error"] = e;
  d["exit_code"] = exit_code;
  return d;
}

int run_batch(const std::string& command, const std::string& text, const CommandOptions& opts,
              unsigned jobs, std::ostream& out) {
  std::vector<std::string> lines;
  std::istringstream ss(text);
  for (std::string line; std::getline(ss, line);) {
    if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
  }

  std::vector<CommandResult> results(lines.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < lines.size(); i = next++) {
      Json spec;
      try {
        spec = Json::parse(lines[i]);
      } catch (const Json::exception& e) {
        results[i].exit_code = kInvalidInput;
        results[i].doc = error_doc(command, "InvalidArgument",
                                   "line " + std::to_string(i + 1) + ": " + e.what(),
                                   kInvalidInput);
        continue;
      }
      results[i] = execute(command, spec, opts);
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(lines.size())));
  std::vector<std::thread> pool;
  for (unsigned k = 0; k + 1 < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  int code = kOk;
  for (const CommandResult& r : results) {
    out << format_json(r.doc, -1) << '\n';
    if (code == kOk && r.exit_code != kOk) code = r.exit_code;
  }
  return code;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Weighted Fagnano orbits, Snell billiards and triangle coordinates", "sf"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string input, batch, svg, config;
  std::vector<std::string> tol_flags;
  unsigned jobs = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));

  const std::pair<const char*, const char*> commands[] = {
      {"point", "Snell-Fagnano point, orbit and diagnostics"},
      {"convert", "convert barycentric, trilinear or tripolar coordinates"},
      {"simulate", "iterate the Snell billiard map"},
      {"minimize", "brute-force weighted-perimeter minimizer"},
      {"river", "two villages and a river"},
      {"render", "SVG figure of the construction"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "job spec JSON file (default: stdin)");
    sub->add_option("--batch", batch, "JSON-lines file of job specs");
    sub->add_option("--tol", tol_flags, "tolerance override, VALUE (residual) or NAME=VALUE")
        ->allow_extra_args(false);
    sub->add_option("--svg", svg, "write the figure to this path");
    sub->add_option("--config", config, "JSON config file with default tolerances");
    sub->add_option("--jobs", jobs, "worker threads for --batch")->check(CLI::Range(1u, 256u));
  }

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "sf: " << e.what() << '\n';
    return kInvalidInput;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    CommandOptions opts;
    if (!config.empty()) {
      const Json cfg = Json::parse(read_file(config));
      if (!cfg.is_object()) throw Error(ErrorCode::InvalidArgument, "config must be an object");
      if (cfg.contains("tolerances")) opts.tol = apply_tolerances(opts.tol, cfg.at("tolerances"));
    }
    opts.tol_overrides = parse_tol_flag(tol_flags);
    apply_tolerances(opts.tol, opts.tol_overrides);  // validate names up front

    if (!batch.empty()) {
      if (!input.empty()) throw Error(ErrorCode::InvalidArgument, "--input and --batch are exclusive");
      if (!svg.empty()) throw Error(ErrorCode::InvalidArgument, "--svg cannot be used with --batch");
      return run_batch(command, read_file(batch), opts, jobs, out);
    }

    if (!svg.empty() && command != "point" && command != "render") {
      throw Error(ErrorCode::InvalidArgument, "--svg applies to point and render only");
    }
    opts.want_svg = !svg.empty();
    const Json spec = Json::parse(input.empty() ? slurp(in) : read_file(input));
    CommandResult r = execute(command, spec, opts);

    if (command == "render" && svg.empty()) {
      // Without a target path the figure itself is the output.
      if (r.svg) {
        out << *r.svg;
      } else {
        out << format_json(r.doc) << '\n';
      }
      return r.exit_code;
    }
    if (r.svg && !svg.empty()) write_file(svg, *r.svg);
    out << format_json(r.doc) << '\n';
    return r.exit_code;
  } catch (const IoError& e) {
    err << "sf: " << e.message << '\n';
    out << format_json(error_doc(command, "IoFailure", e.message, kIoFailure)) << '\n';
    return kIoFailure;
  } catch (const Error& e) {
    err << "sf: " << e.what() << '\n';
    out << format_json(error_doc(command, std::string(to_string(e.code())), e.what(),
                                 kInvalidInput))
        << '\n';
    return kInvalidInput;
  } catch (const Json::exception& e) {
    err << "sf: " << e.what() << '\n';
    out << format_json(error_doc(command, "InvalidArgument", e.what(), kInvalidInput)) << '\n';
    return kInvalidInput;
  }
}

}  // namespace sf::cli
