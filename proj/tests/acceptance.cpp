// One line per acceptance criterion: "criterion N: PASS|FAIL title".
//   acceptance <id>
//   acceptance 12 --cli <path to eqwb>   runs `eqwb verify-all` twice
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>

#include "eqwb/verify.hpp"

namespace {

struct RunResult {
  std::string output;
  int exit_code = -1;
};

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.output.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int cli_determinism(const std::string& cli) {
  const std::string command = "'" + cli + "' verify-all";
  const RunResult first = run(command);
  const RunResult second = run(command);
  const bool identical = first.output == second.output;
  const bool clean = first.exit_code == 0 && second.exit_code == 0;
  std::cout << "criterion 12: " << (identical && clean ? "PASS" : "FAIL") << " CLI verify-all is deterministic and exits 0\n";
  std::cout << "  byte-identical report: " << (identical ? "yes" : "no") << "\n";
  std::cout << "  exit codes: " << first.exit_code << ", " << second.exit_code << "\n";
  if (!clean) {
    std::istringstream lines(first.output);
    for (std::string line; std::getline(lines, line);) {
      if (line.find("FAIL") != std::string::npos) std::cout << "  " << line << "\n";
    }
  }
  return identical && clean ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2 && argc != 4) {
    std::cerr << "usage: acceptance <criterion 1-" << eqwb::kCriterionCount << "> [--cli <eqwb>]\n";
    return 2;
  }
  const int id = std::atoi(argv[1]);
  if (id < 1 || id > eqwb::kCriterionCount) {
    std::cerr << "unknown criterion " << argv[1] << "\n";
    return 2;
  }
  if (argc == 4) {
    if (id != 12 || std::string(argv[2]) != "--cli") {
      std::cerr << "--cli applies to criterion 12 only\n";
      return 2;
    }
    return cli_determinism(argv[3]);
  }
  const eqwb::CriterionReport report = eqwb::verify_criterion(id, eqwb::VerifyOptions{});
  std::cout << "criterion " << id << ": " << (report.passed() ? "PASS" : "FAIL") << " " << report.title << "\n";
  for (const auto& c : report.checks) {
    if (c.verified) continue;
    std::cout << "  mismatch [" << c.case_name << "] " << c.relation << "\n    lhs: " << c.lhs << "\n    rhs: " << c.rhs << "\n";
  }
  return report.passed() ? 0 : 1;
}
