#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "resolv/betti.hpp"
#include "resolv/code.hpp"
#include "resolv/error.hpp"
#include "resolv/families.hpp"
#include "resolv/serialize.hpp"
#include "resolv/verify.hpp"

namespace fs = std::filesystem;
using namespace resolv;

namespace {

constexpr const char* kVersion = "resolv-1";

struct Job {
  std::string family;
  std::string code_file;
  std::optional<std::uint64_t> q, k, r, m, h, n;
  std::string method = "auto";
  std::string format = "json";
  std::string cache_dir;
  std::size_t scan_limit = Budget{}.scan_limit;
  std::uint64_t subcode_limit = Budget{}.subcodes;
  std::size_t threads = 1;

  Budget budget() const {
    Budget b;
    b.scan_limit = scan_limit;
    b.subcodes = subcode_limit;
    b.threads = threads;
    return b;
  }
};

struct Built {
  LinearCode code;
  std::optional<ProjectiveSystem> system;
};

std::uint64_t need(const std::optional<std::uint64_t>& v, const char* flag, const std::string& family) {
  if (!v) throw Error(ErrorKind::InvalidParameters, "family " + family + " needs --" + flag);
  return *v;
}

Built build_family(const Job& job) {
  const std::string& f = job.family;
  const Budget budget = job.budget();
  auto geometric = [](ProjectiveSystem s) { return Built{projective_system_code(s), s}; };
  if (f == "rm") return {reed_muller(need(job.q, "q", f), need(job.r, "r", f), need(job.m, "m", f), budget), {}};
  if (f == "simplex") return {simplex(need(job.q, "q", f), need(job.k, "k", f)), {}};
  if (f == "rs") return {mds_rs(need(job.q, "q", f), need(job.n, "n", f), need(job.k, "k", f)), {}};
  if (f == "hyperoval") return geometric(hyperoval(need(job.q, "q", f)));
  if (f == "dual-hyperoval") return geometric(dual_hyperoval(need(job.q, "q", f)));
  if (f == "denniston") return geometric(denniston_arc(need(job.q, "q", f), need(job.h, "h", f)));
  if (f == "ovoid") return geometric(ovoid(need(job.q, "q", f)));
  if (f == "hermitian") return geometric(hermitian(need(job.q, "q", f), need(job.k, "k", f), budget));
  if (f == "subfield") return geometric(subfield_system(need(job.q, "q", f), need(job.k, "k", f)));
  throw Error(ErrorKind::UnknownFamily, "unknown family " + f);
}

LinearCode load_code(const Job& job) {
  if (!job.family.empty() && !job.code_file.empty())
    throw Error(ErrorKind::InvalidParameters, "give either --family or --code, not both");
  if (!job.code_file.empty()) {
    std::ifstream in(job.code_file);
    if (!in) throw Error(ErrorKind::InvalidParameters, "cannot read " + job.code_file);
    std::stringstream text;
    text << in.rdbuf();
    return parse_code_file(text.str());
  }
  if (job.family.empty()) throw Error(ErrorKind::InvalidParameters, "no code source: use --family or --code");
  return build_family(job).code;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string cache_directory(const Job& job) {
  if (!job.cache_dir.empty()) return job.cache_dir;
  if (const char* env = std::getenv("RESOLV_CACHE_DIR")) return env;
  return {};
}

fs::path cache_path(const std::string& dir, const std::string& method, const LinearCode& code) {
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a(std::string(kVersion) + "|" + method + "|" + to_json(code).dump());
  return fs::path(dir) / (name.str() + ".json");
}

std::optional<Json> cache_read(const fs::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::stringstream text;
  text << in.rdbuf();
  try {
    Json j = Json::parse(text.str());
    betti_from_json(j);
    return j;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void cache_write(const fs::path& path, const Json& j) {
  fs::create_directories(path.parent_path());
  std::random_device rd;
  fs::path tmp = path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << j.dump(2) << "\n";
    if (!out) throw Error(ErrorKind::InvalidParameters, "cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, path);
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s : std::string(w - s.size(), ' ') + s; }

void print_table(const BettiTable& t) {
  std::cout << "[" << t.n << "," << t.k << "]_" << t.q << "  method " << to_string(t.method) << "\n";
  std::cout << pad("i", 4) << pad("j", 6) << pad("beta", 16) << "\n";
  for (const auto& [cell, beta] : t.entries)
    std::cout << pad(std::to_string(cell.first), 4) << pad(std::to_string(cell.second), 6)
              << pad(beta.get_str(), 16) << "\n";
  auto type = t.pure_type();
  std::cout << "pure " << (type ? "yes" : "no");
  if (type) {
    std::cout << " (";
    for (std::size_t i = 0; i < type->size(); ++i) std::cout << (i ? "," : "") << (*type)[i];
    std::cout << ")";
  }
  std::cout << "\n";
}

ClosedFormKind closed_form_kind(const Job& job, const LinearCode& code) {
  const std::string& f = job.family;
  const std::uint64_t q = code.q();
  if (f == "rs" || f == "hyperoval") return MdsForm{code.length(), code.dimension(), q};
  if (f == "simplex") {
    std::uint64_t d = 1;
    for (std::size_t i = 1; i < code.dimension(); ++i) d *= q;
    return ConstantWeightForm{q, code.dimension(), static_cast<std::size_t>(d)};
  }
  if (f == "rm" && job.r && *job.r == 1 && q >= 2) return FirstOrderReedMullerForm{q, static_cast<std::size_t>(*job.m)};
  throw Error(ErrorKind::InvalidParameters, "no closed form for this code source");
}

Json shifts_json(const LinearCode& code, const ShiftSets& shifts) {
  Json j;
  j["n"] = code.length();
  j["k"] = code.dimension();
  j["q"] = code.q();
  j["method"] = "shifts";
  Json s = Json::object();
  for (const auto& [i, js] : shifts) s[std::to_string(i)] = js;
  j["shifts"] = std::move(s);
  return j;
}

int cmd_betti(const Job& job) {
  const LinearCode code = load_code(job);
  const Budget budget = job.budget();
  std::string method = job.method;
  if (method == "auto") method = code.length() <= budget.scan_limit ? "hochster" : "bs-solve";

  const std::string dir = cache_directory(job);
  std::optional<fs::path> path;
  if (!dir.empty() && method != "shifts") path = cache_path(dir, method, code);
  if (path) {
    if (auto hit = cache_read(*path)) {
      std::cerr << "cache: hit\n";
      if (job.format == "table") print_table(betti_from_json(*hit));
      else emit(*hit);
      return 0;
    }
  }

  BettiTable table;
  if (method == "hochster") {
    table = betti_table_hochster(code, budget);
  } else if (method == "shifts") {
    ShiftSets shifts = betti_shifts(code, budget);
    if (job.format == "table") {
      for (const auto& [i, js] : shifts) {
        std::cout << pad(std::to_string(i), 4) << " :";
        for (auto j : js) std::cout << " " << j;
        std::cout << "\n";
      }
    } else {
      emit(shifts_json(code, shifts));
    }
    return 0;
  } else if (method == "bs-solve") {
    std::map<Cell, BigInt> known;
    for (const auto& [w, beta] : first_step_betti(code, budget)) known[{1, w}] = beta;
    table = bs_solve(code.length(), code.dimension(), code.q(), betti_shifts(code, budget), known);
  } else if (method == "closed-form") {
    table = closed_form(closed_form_kind(job, code));
    if (table.n != code.length() || table.k != code.dimension())
      throw Error(ErrorKind::InvalidParameters, "closed form parameters do not match the code");
  } else {
    throw Error(ErrorKind::InvalidParameters, "unknown method " + method);
  }

  Json j = to_json(table);
  if (path) {
    std::cerr << "cache: miss\n";
    cache_write(*path, j);
  }
  if (job.format == "table") print_table(table);
  else emit(j);
  return 0;
}

int cmd_family(const Job& job) {
  if (job.family.empty()) throw Error(ErrorKind::InvalidParameters, "family needs --family");
  Built b = build_family(job);
  Json j;
  j["family"] = job.family;
  j["code"] = to_json(b.code);
  if (b.system) j["system"] = to_json(*b.system);
  if (job.format == "table") {
    std::cout << "[" << b.code.length() << "," << b.code.dimension() << "]_" << b.code.q() << "\n";
    const Matrix& g = b.code.generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      for (std::size_t c = 0; c < g.cols(); ++c) std::cout << (c ? " " : "") << g(r, c);
      std::cout << "\n";
    }
  } else {
    emit(j);
  }
  return 0;
}

int cmd_purity(const Job& job) {
  const LinearCode code = load_code(job);
  PurityReport report = purity(code, job.budget());
  if (job.format == "table") {
    std::cout << "pure " << (report.pure ? "yes" : "no") << "\n";
    for (std::size_t i = 0; i < report.step_weights.size(); ++i) {
      std::cout << pad(std::to_string(i + 1), 4) << " :";
      if (!report.step_weights[i]) std::cout << " unresolved";
      else
        for (auto w : *report.step_weights[i]) std::cout << " " << w;
      std::cout << "\n";
    }
    if (report.left_pure_from) std::cout << "left pure from step " << *report.left_pure_from << "\n";
  } else {
    emit(to_json(report, code.length()));
  }
  return 0;
}

int cmd_ghw(const Job& job) {
  const LinearCode code = load_code(job);
  auto hierarchy = ghw_hierarchy(code, job.budget());
  if (job.format == "table") {
    for (std::size_t i = 0; i < hierarchy.size(); ++i) std::cout << "d_" << i + 1 << " = " << hierarchy[i] << "\n";
  } else {
    Json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["q"] = code.q();
    j["ghw"] = hierarchy;
    emit(j);
  }
  return 0;
}

int cmd_wdist(const Job& job) {
  const LinearCode code = load_code(job);
  WeightDistribution wd = weight_distribution(code, job.budget());
  wd.erase(0);
  if (job.format == "table") {
    for (const auto& [w, c] : wd) std::cout << pad(std::to_string(w), 6) << pad(std::to_string(c), 12) << "\n";
  } else {
    Json j;
    j["n"] = code.length();
    j["k"] = code.dimension();
    j["q"] = code.q();
    j["distribution"] = to_json(wd);
    emit(j);
  }
  return 0;
}

int cmd_verify(const Job& job, const std::vector<std::string>& only, bool inject_fault) {
  VerifyOptions options;
  for (const auto& tag : only) {
    std::stringstream parts(tag);
    std::string t;
    while (std::getline(parts, t, ','))
      if (!t.empty()) options.only.insert(t);
  }
  options.budget = job.budget();
  options.inject_fault = inject_fault;
  options.on_item = [](const VerifyItem& item) {
    std::cout << (item.passed ? "PASS " : "FAIL ") << std::setw(2) << item.number << " [" << item.tag << "] "
              << item.title << std::fixed << std::setprecision(2) << " (" << item.seconds << " s, limit "
              << item.limit_seconds << " s)\n";
    for (const auto& line : item.lines) std::cout << "       " << line << "\n";
    for (const auto& note : item.notes) std::cout << "       note " << note << "\n";
    std::cout.flush();
  };
  auto items = run_verification(options);
  std::size_t passed = 0;
  for (const auto& item : items) passed += item.passed;
  std::cout << passed << "/" << items.size() << " items passed\n";
  return passed == items.size() ? 0 : 1;
}

void add_code_options(CLI::App* sub, Job& job) {
  sub->add_option("--family", job.family, "rm simplex rs hyperoval dual-hyperoval denniston ovoid hermitian subfield");
  sub->add_option("--code", job.code_file, "JSON file with a generator matrix");
  sub->add_option("--q", job.q, "field order");
  sub->add_option("--k", job.k, "dimension");
  sub->add_option("--r", job.r, "Reed-Muller degree");
  sub->add_option("--m", job.m, "number of variables");
  sub->add_option("--h", job.h, "arc degree");
  sub->add_option("--n", job.n, "length");
}

void add_run_options(CLI::App* sub, Job& job) {
  sub->add_option("--scan-limit", job.scan_limit, "largest n for the full subset scan")->check(CLI::PositiveNumber);
  sub->add_option("--subcode-limit", job.subcode_limit, "largest Grassmannian to enumerate")
      ->check(CLI::PositiveNumber);
  sub->add_option("--threads", job.threads, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--format", job.format, "json or table")->check(CLI::IsMember({"json", "table"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded Betti numbers and purity of linear codes"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help");
  Job job;
  std::vector<std::string> only;
  bool inject_fault = false;

  auto* family = app.add_subcommand("family", "construct a code family");
  auto* betti = app.add_subcommand("betti", "graded Betti table");
  auto* pur = app.add_subcommand("purity", "purity report with witnesses");
  auto* ghw = app.add_subcommand("ghw", "generalized Hamming weights");
  auto* wdist = app.add_subcommand("wdist", "weight distribution");
  auto* verify = app.add_subcommand("verify", "run the verification suite");

  for (auto* sub : {family, betti, pur, ghw, wdist}) {
    add_code_options(sub, job);
    add_run_options(sub, job);
  }
  betti->add_option("--method", job.method, "auto hochster shifts bs-solve closed-form")
      ->check(CLI::IsMember({"auto", "hochster", "shifts", "bs-solve", "closed-form"}));
  betti->add_option("--cache-dir", job.cache_dir, "result cache (default $RESOLV_CACHE_DIR)");
  verify->add_option("--only", only, "tags to run (comma separated)");
  verify->add_flag("--inject-fault", inject_fault, "corrupt one field multiplication entry");
  verify->add_option("--threads", job.threads, "worker threads")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*family) return cmd_family(job);
    if (*betti) return cmd_betti(job);
    if (*pur) return cmd_purity(job);
    if (*ghw) return cmd_ghw(job);
    if (*wdist) return cmd_wdist(job);
    if (*verify) return cmd_verify(job, only, inject_fault);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
