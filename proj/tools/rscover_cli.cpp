// Command-line front end. Talks to the library only through rscover.h.
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "rscover.h"

namespace {

struct Leaf {
  const char* group;
  const char* name;
  const char* help;
};

const Leaf kLeaves[] = {
    {"bound", "random-hamming", "average covering radius of a random Hamming code"},
    {"bound", "random-chordal", "average chordal distance of a random spherical code"},
    {"bound", "punctures-unique", "closed-form average punctures, unique decoding"},
    {"bound", "punctures-list", "bounds on average punctures, list decoding"},
    {"bound", "coverage", "lower bound on the fraction covered at radius tau"},
    {"bound", "tau-max", "largest radius with a positive coverage bound"},
    {"bound", "crs-upper", "upper bound on the CRS covering distance"},
    {"bound", "crs-min-snr", "minimum SNR for the CRS bound to apply"},
    {"sim", "grs-cover", "Monte Carlo covering of uniform words with a GRS code"},
    {"sim", "crs-cover", "Monte Carlo covering of Gaussian vectors with a CRS code"},
    {"sim", "exhaustive", "Monte Carlo nearest-codeword distance by full search"},
    {"code", "crs-size", "number of distinct CRS codewords"},
    {"code", "weights", "weight distribution of a GRS code"},
    {"repro", "table1", "average punctures for q=7, n=6"},
    {"repro", "fig1", "Hamming covering distance series"},
    {"repro", "fig2", "covering distance against field size"},
    {"repro", "fig5", "chordal covering distance series"},
    {"repro", "fig6-property", "bound ratio over a list of primes"},
};

const char* kValueOptions[] = {
    "q", "p", "m", "n", "k", "M", "logM", "tau", "taus", "caps", "trials",
    "seed", "mode", "best-of-n", "mu", "sigma", "R", "beta", "workers",
    "gs-s-max", "bw", "space", "cap", "gamma-path", "q-min", "q-max", "rates",
    "primes", "primes-up-to"};

const char* kFlagOptions[] = {"exact", "oracle", "clamp", "map"};

int status_exit(rsc_status s) {
  switch (s) {
    case RSC_OK: return 0;
    case RSC_ERR_DOMAIN:
    case RSC_ERR_USAGE:
    case RSC_ERR_REFUSED:
      return 2;
    default:
      return 1;
  }
}

int report_error(rsc_status s) {
  std::fprintf(stderr, "error: %s: %s\n", rsc_status_name(s), rsc_last_error());
  return status_exit(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Covering codes toolkit: bounds, simulations and reproductions"};
  app.set_version_flag("--version", std::string(rsc_version()));
  app.require_subcommand(1);

  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::string format = "csv";
  std::string out = "-";
  std::string trial_log;

  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, std::string>> leaves;
  for (const char* g : {"bound", "sim", "code", "repro"}) {
    groups[g] = app.add_subcommand(g, std::string(g) + " commands");
    groups[g]->require_subcommand(1);
  }
  for (const auto& leaf : kLeaves) {
    CLI::App* sub = groups[leaf.group]->add_subcommand(leaf.name, leaf.help);
    for (const char* key : kValueOptions)
      sub->add_option(std::string("--") + key, values[key]);
    for (const char* key : kFlagOptions)
      sub->add_flag(std::string("--") + key, flags[key]);
    sub->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out, "output path, - for stdout");
    sub->add_option("--trial-log", trial_log, "write per-trial records (CSV)");
    leaves.emplace_back(sub, std::string(leaf.group) + " " + leaf.name);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* chosen = nullptr;
  std::string command;
  for (const auto& [sub, name] : leaves)
    if (sub->parsed()) chosen = sub, command = name;
  if (!chosen) return 2;

  rsc_config* cfg = nullptr;
  rsc_status s = rsc_config_create(command.c_str(), &cfg);
  if (s != RSC_OK) return report_error(s);
  for (const char* key : kValueOptions) {
    if (chosen->count(std::string("--") + key) == 0) continue;
    s = rsc_config_set(cfg, key, values[key].c_str());
    if (s != RSC_OK) break;
  }
  for (const char* key : kFlagOptions) {
    if (s != RSC_OK) break;
    if (flags[key]) s = rsc_config_set(cfg, key, "true");
  }
  rsc_report* report = nullptr;
  if (s == RSC_OK) s = rsc_run(cfg, &report);
  rsc_config_destroy(cfg);
  if (s != RSC_OK) return report_error(s);

  s = rsc_report_write(report, format.c_str(), out.c_str());
  if (s == RSC_OK && !trial_log.empty())
    s = rsc_report_write_trials(report, trial_log.c_str());
  rsc_report_destroy(report);
  if (s != RSC_OK) return report_error(s);
  return 0;
}
