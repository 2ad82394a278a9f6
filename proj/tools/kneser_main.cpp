#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "kneser/baranyai.hpp"
#include "kneser/graycode.hpp"
#include "kneser/hamilton.hpp"
#include "kneser/instances.hpp"
#include "kneser/subsets.hpp"
#include "kneser/verify.hpp"

namespace {

using namespace kneser;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadUsage = 2;

constexpr std::uint64_t kDumpCap = 10'000'000;

const char* path_name(PlanPath path) {
  return path == PlanPath::kStandard ? "standard" : "splice-last";
}

std::string render_subset(const Subset& s, const std::string& format) {
  if (format == "ranks") return std::to_string(rank_colex(s));
  return to_text(s);
}

Subset subset_from_rank_text(const std::string& line, GroundParams g) {
  std::istringstream in(line);
  std::uint64_t rank = 0;
  if (!(in >> rank)) detail::throw_usage("expected a decimal rank, got '" + line + "'");
  std::string rest;
  if (in >> rest) detail::throw_usage("trailing text after rank in '" + line + "'");
  return unrank_colex(rank, g);
}

Subset parse_subset(const std::string& line, GroundParams g, const std::string& format) {
  if (format == "ranks") return subset_from_rank_text(line, g);
  return subset_from_text(line, g);
}

// All output is buffered and written in one piece, so a failed run leaves no
// partial file behind.
int write_output(const std::string& path, const std::string& body) {
  if (path.empty()) {
    std::cout << body;
    return std::cout ? kExitOk : kExitVerifyFailed;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << path << "'\n";
    return kExitBadUsage;
  }
  out << body;
  out.close();
  if (!out) {
    std::cerr << "error: failed writing output file '" << path << "'\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_build(int n, int k, const std::string& format, const std::string& out_path,
              bool self_check) {
  const HamCycle cycle = build_hamiltonian(n, k);
  if (self_check) {
    const VerifyReport report = verify_cycle(cycle);
    if (!report.ok) {
      std::cerr << report.to_text();
      return kExitVerifyFailed;
    }
  }
  std::ostringstream buf;
  for (const Subset& v : cycle.order) buf << render_subset(v, format) << '\n';
  return write_output(out_path, buf.str());
}

int run_verify(int n, int k, const std::string& format, const std::string& in_path) {
  validate_ground({n, k});
  std::ifstream in(in_path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open input file '" << in_path << "'\n";
    return kExitBadUsage;
  }
  const GroundParams g{n, k};
  HamCycle cycle{g, {}};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      cycle.order.push_back(parse_subset(line, g, format));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << in_path << ":" << line_no << ": " << e.what() << "\n";
      return kExitBadUsage;
    }
  }
  const VerifyReport report = verify_cycle(cycle);
  if (!report.ok) {
    std::cout << report.to_text();
    return kExitVerifyFailed;
  }
  std::cout << "ok\n";
  return kExitOk;
}

int run_partition(int n, int k, const std::string& format, const std::string& out_path,
                  bool self_check) {
  const SizePlan plan = compute_size_plan(n, k);
  const MatchingPartition partition = baranyai_partition(plan);
  if (self_check) {
    const VerifyReport report = verify_partition(partition);
    if (!report.ok) {
      std::cerr << report.to_text();
      return kExitVerifyFailed;
    }
  }
  std::ostringstream buf;
  for (std::size_t i = 0; i < partition.classes.size(); ++i) {
    if (i > 0) buf << '\n';
    buf << "class " << i << " size " << partition.classes[i].size() << '\n';
    for (const Subset& member : partition.classes[i])
      buf << render_subset(member, format) << '\n';
  }
  return write_output(out_path, buf.str());
}

int run_graycode(int n, int k, const std::string& format, const std::string& out_path,
                 bool self_check) {
  validate_ground({n, k});
  detail::require(binomial(n, k) <= kDumpCap, "instance too large to materialize");
  std::vector<int> elements(static_cast<std::size_t>(n));
  for (int e = 1; e <= n; ++e) elements[static_cast<std::size_t>(e - 1)] = e;
  const GraySequence seq = gray_code(elements, k);
  if (self_check) {
    std::string diagnostic;
    if (!verify_graycode(seq, &diagnostic)) {
      std::cerr << diagnostic << "\n";
      return kExitVerifyFailed;
    }
  }
  const GroundParams g{n, k};
  std::ostringstream buf;
  for (std::uint64_t mask : seq.order) buf << render_subset(Subset(mask, g), format) << '\n';
  return write_output(out_path, buf.str());
}

int run_bench(std::uint64_t max_vertices, int jobs) {
  std::vector<GroundParams> grid;
  for (GroundParams g : reference_grid())
    if (max_vertices == 0 || binomial(g.n, g.k) <= max_vertices) grid.push_back(g);

  struct Row {
    std::uint64_t vertices = 0;
    PlanPath path = PlanPath::kStandard;
    std::int64_t millis = 0;
  };
  std::vector<Row> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= grid.size()) return;
      const auto start = std::chrono::steady_clock::now();
      const BuildTrace trace = build_pipeline(grid[i].n, grid[i].k);
      const auto stop = std::chrono::steady_clock::now();
      rows[i].vertices = trace.cycle.order.size();
      rows[i].path = trace.plan.path;
      rows[i].millis =
          std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  std::ostringstream buf;
  buf << "n k vertices path ms\n";
  for (std::size_t i = 0; i < grid.size(); ++i)
    buf << grid[i].n << ' ' << grid[i].k << ' ' << rows[i].vertices << ' '
        << path_name(rows[i].path) << ' ' << rows[i].millis << '\n';
  std::cout << buf.str();
  return std::cout ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian cycles in Kneser graphs K(n,k), built and checked for n >= 4k"};
  app.require_subcommand(1);

  const auto format_check = CLI::IsMember({"sets", "ranks"});
  const auto toggle_check = CLI::IsMember({"on", "off"});

  struct {
    int n = 0, k = 0;
    std::string format = "sets", out, self_check = "on";
  } build;
  CLI::App* build_cmd = app.add_subcommand("build", "Build a Hamiltonian cycle of K(n,k)");
  build_cmd->add_option("--n", build.n, "ground set size")->required();
  build_cmd->add_option("--k", build.k, "subset size")->required();
  build_cmd->add_option("--format", build.format, "vertex encoding")->check(format_check);
  build_cmd->add_option("--out", build.out, "output file, default standard output");
  build_cmd->add_option("--self-check", build.self_check, "verify the cycle before writing")
      ->check(toggle_check);

  struct {
    int n = 0, k = 0;
    std::string format = "sets", in;
  } verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify a Hamiltonian cycle file");
  verify_cmd->add_option("--n", verify.n, "ground set size")->required();
  verify_cmd->add_option("--k", verify.k, "subset size")->required();
  verify_cmd->add_option("--format", verify.format, "vertex encoding")->check(format_check);
  verify_cmd->add_option("--in", verify.in, "cycle file, one vertex per line")->required();

  struct {
    int n = 0, k = 0;
    std::string format = "sets", out, self_check = "on";
  } partition;
  CLI::App* partition_cmd =
      app.add_subcommand("partition", "Partition all k-subsets into disjoint-member classes");
  partition_cmd->add_option("--n", partition.n, "ground set size")->required();
  partition_cmd->add_option("--k", partition.k, "subset size")->required();
  partition_cmd->add_option("--format", partition.format, "member encoding")->check(format_check);
  partition_cmd->add_option("--out", partition.out, "output file, default standard output");
  partition_cmd
      ->add_option("--self-check", partition.self_check, "verify the partition before writing")
      ->check(toggle_check);

  struct {
    int n = 0, k = 0;
    std::string format = "sets", out, self_check = "on";
  } gray;
  CLI::App* gray_cmd = app.add_subcommand(
      "graycode", "List all k-subsets of [n] in cyclic one-exchange order");
  gray_cmd->add_option("--n", gray.n, "ground set size")->required();
  gray_cmd->add_option("--k", gray.k, "subset size")->required();
  gray_cmd->add_option("--format", gray.format, "subset encoding")->check(format_check);
  gray_cmd->add_option("--out", gray.out, "output file, default standard output");
  gray_cmd->add_option("--self-check", gray.self_check, "verify the order before writing")
      ->check(toggle_check);

  struct {
    std::uint64_t max_vertices = 0;
    int jobs = 1;
  } bench;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Build the reference instance battery and print timings");
  bench_cmd->add_option("--max-vertices", bench.max_vertices,
                        "skip instances with more vertices, 0 means no limit");
  bench_cmd->add_option("--jobs", bench.jobs, "worker threads")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadUsage;
  }

  try {
    if (build_cmd->parsed())
      return run_build(build.n, build.k, build.format, build.out, build.self_check == "on");
    if (verify_cmd->parsed()) return run_verify(verify.n, verify.k, verify.format, verify.in);
    if (partition_cmd->parsed())
      return run_partition(partition.n, partition.k, partition.format, partition.out,
                           partition.self_check == "on");
    if (gray_cmd->parsed())
      return run_graycode(gray.n, gray.k, gray.format, gray.out, gray.self_check == "on");
    if (bench_cmd->parsed()) return run_bench(bench.max_vertices, bench.jobs);
    std::cerr << "error: no subcommand given\n";
    return kExitBadUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFailed;
  }
}
