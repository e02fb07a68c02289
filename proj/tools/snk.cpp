#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "snk/errors.hpp"
#include "snk/runner.hpp"

namespace fs = std::filesystem;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw snk::InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void spit(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw snk::InputError("cannot write " + path);
  out << text;
}

struct Job {
  std::string file;
  int exit_code = 1;
  std::string output;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "snk: symbolic regulosity and seminormalization toolkit.\n"
      "Usage: snk <task|run|verify> <problem-file>... "
      "[--out PATH] [--budget N] [--jobs N] [--order lex|grevlex]"};
  app.require_subcommand(0);

  std::string task;
  std::vector<std::string> files;
  std::string out_path;
  long budget = 0;
  int jobs = 1;
  std::string order = "grevlex";

  app.add_option("task", task,
                 "task name from the problem file, 'run' to use each file's "
                 "header, or 'verify' for certificates")
      ->required();
  app.add_option("files", files, "problem or certificate files")->required();
  app.add_option("--out", out_path,
                 "certificate output path (directory when several files)");
  app.add_option("--budget", budget, "S-pair budget (0: default)");
  app.add_option("--jobs", jobs, "parallel workers for independent files")
      ->check(CLI::Range(1, 64));
  app.add_option("--order", order, "basis order for the gb task")
      ->check(CLI::IsMember({"lex", "grevlex"}));

  CLI11_PARSE(app, argc, argv);

  if (const char* env = std::getenv("SNK_BUDGET"); env && budget == 0)
    budget = std::atol(env);
  if (budget > 0) snk::config::set_spair_budget(budget);

  // Certificate verification mode.
  if (task == "verify") {
    int exit_code = 0;
    for (const std::string& f : files) {
      try {
        snk::Certificate cert = snk::parse_certificate(slurp(f));
        snk::VerifyOutcome v = snk::verify_certificate(cert);
        std::cout << f << ": " << (v.ok ? "valid" : "INVALID") << "\n";
        if (!v.reason.empty()) std::cout << "  " << v.reason << "\n";
        if (!v.ok) exit_code = 1;
      } catch (const std::exception& e) {
        std::cout << f << ": INVALID\n  " << e.what() << "\n";
        exit_code = 1;
      }
    }
    return exit_code;
  }

  std::vector<Job> results(files.size());
  std::mutex mu;
  size_t next = 0;

  auto worker = [&]() {
    while (true) {
      size_t mine;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next >= files.size()) return;
        mine = next++;
      }
      Job& job = results[mine];
      job.file = files[mine];
      try {
        snk::ProblemFile p = snk::parse_problem(slurp(job.file));
        if (task != "run" && p.task != task)
          throw snk::InputError("problem file declares task '" + p.task +
                                "', command line asked for '" + task + "'");
        snk::RunOptions opt;
        opt.budget = budget;
        opt.order = order;
        snk::RunResult rr = snk::run_problem(p, opt);
        job.exit_code = rr.exit_code;
        std::ostringstream os;
        os << job.file << ":\n" << rr.human;
        job.output = os.str();

        std::string cert_text = snk::emit_certificate(rr.cert);
        std::string dest;
        if (out_path.empty()) {
          dest = job.file + ".cert";
        } else if (files.size() == 1 && !fs::is_directory(out_path)) {
          dest = out_path;
        } else {
          fs::create_directories(out_path);
          dest = (fs::path(out_path) /
                  (fs::path(job.file).filename().string() + ".cert"))
                     .string();
        }
        spit(dest, cert_text);
      } catch (const std::exception& e) {
        job.exit_code = 1;
        job.output = job.file + ": error: " + std::string(e.what()) + "\n";
      }
    }
  };

  int nthreads = std::min<int>(jobs, static_cast<int>(files.size()));
  if (nthreads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  int exit_code = 0;
  for (const Job& job : results) {
    std::cout << job.output;
    exit_code = std::max(exit_code, job.exit_code);
  }
  return exit_code;
}
