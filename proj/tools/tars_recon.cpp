// Command-line front end: enumeration, reconfiguration-graph builds, Gray
// code and hypercube cycle inspection, certificate construction, search
// verdicts, certificate verification, and graph6 surveys.
//
// Exit codes: 0 success/verified, 1 verified-negative, 2 inconclusive,
// 3 usage or parse error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tars/certificate_io.hpp"
#include "tars/constructions.hpp"

namespace {

using namespace tars;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 3;

struct CommonOpts {
  std::string input = "-";
  std::string format = "edgelist";
  std::string mode = "TARS";
  std::uint64_t budget = kDefaultBudget;
  std::int64_t cap = kDefaultVertexCap;
  int threads = 1;
  bool deterministic = false;
  std::string output;
  bool dot = false, json = false, trace = false, hamilton_only = false, edges = false;
};

std::uint64_t env_budget() {
  if (const char* s = std::getenv("TARS_RECON_BUDGET")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const CommonOpts& o) {
  std::string text = read_all(o.input);
  if (o.format == "graph6") {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line))
      if (!line.empty()) return parse_graph6(line);
    throw std::invalid_argument("no graph6 line in input");
  }
  return parse_edge_list(text);
}

std::string set_to_string(VertexSet s) {
  std::string out = "{";
  bool first = true;
  while (s) {
    int v = std::countr_zero(s);
    s &= s - 1;
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

std::ostream& open_output(const CommonOpts& o, std::ofstream& file) {
  if (o.output.empty()) return std::cout;
  file.open(o.output);
  if (!file) throw std::runtime_error("cannot open output " + o.output);
  return file;
}

int cmd_enumerate(const CommonOpts& o) {
  Graph g = load_graph(o);
  DominatingFamily fam = enumerate_dominating_sets(g);
  std::ofstream file;
  std::ostream& out = open_output(o, file);
  for (VertexSet s : fam.sets) out << set_to_string(s) << "\n";
  out << "count: " << fam.size() << " (odd: " << (fam.size() % 2 ? "yes" : "no") << ")\n";
  return kExitOk;
}

int cmd_build(const CommonOpts& o) {
  Graph g = load_graph(o);
  ReconGraph r = build_recon_graph(g, mode_from_name(o.mode), o.cap);
  std::ofstream file;
  std::ostream& out = open_output(o, file);
  long long tar = r.edge_count(Mode::TAR), ts = r.edge_count(Mode::TS);
  int comps = component_count(r);
  if (o.json) {
    nlohmann::ordered_json j;
    j["N"] = r.size();
    j["tar_edges"] = tar;
    j["ts_edges"] = ts;
    j["mode"] = o.mode;
    j["components"] = comps;
    out << j.dump() << "\n";
  } else {
    out << "N=" << r.size() << " tar=" << tar << " ts=" << ts << " components=" << comps << "\n";
  }
  if (o.edges) {
    for (int i = 0; i < r.size(); ++i)
      for (int j : r.neighbors(i))
        if (i < j)
          out << i << " " << j << " " << (r.edge_kind(i, j) == EdgeKind::TAR ? "TAR" : "TS")
              << "\n";
  }
  if (o.dot) {
    out << "graph recon {\n";
    for (int i = 0; i < r.size(); ++i)
      out << "  n" << i << " [label=\"" << set_to_string(r.family.sets[i]) << "\"];\n";
    for (int i = 0; i < r.size(); ++i)
      for (int j : r.tars_nbrs[i])
        if (i < j) {
          bool is_tar = r.edge_kind(i, j) == EdgeKind::TAR;
          if (r.mode == Mode::TAR && !is_tar) continue;
          if (r.mode == Mode::TS && is_tar) continue;
          out << "  n" << i << " -- n" << j << (is_tar ? " [style=solid];" : " [style=dashed];")
              << "\n";
        }
    out << "}\n";
  }
  return kExitOk;
}

int cmd_graycode(int bits) {
  for (std::uint64_t j = 0; j < (1ull << bits); ++j) {
    Word w = brgc_term(j, bits);
    std::string s(bits, '0');
    for (int k = 0; k < bits; ++k)
      if ((w >> k) & 1u) s[bits - 1 - k] = '1';
    std::cout << s << "\n";
  }
  return kExitOk;
}

Word parse_word(const std::string& s, int bits) {
  Word w = 0;
  if (static_cast<int>(s.size()) != bits) throw std::invalid_argument("word width mismatch");
  for (int i = 0; i < bits; ++i) {
    char c = s[i];
    if (c != '0' && c != '1') throw std::invalid_argument("word must be binary");
    if (c == '1') w |= 1u << (bits - 1 - i);
  }
  return w;
}

int cmd_bipan(int bits, const std::string& a, const std::string& b, std::uint64_t len) {
  auto cyc = bipan_cycle_with_edge(bits, parse_word(a, bits), parse_word(b, bits), len);
  for (Word w : cyc) {
    std::string s(bits, '0');
    for (int k = 0; k < bits; ++k)
      if ((w >> k) & 1u) s[bits - 1 - k] = '1';
    std::cout << s << "\n";
  }
  return kExitOk;
}

int cmd_construct(const CommonOpts& o) {
  Graph g = load_graph(o);
  SearchOptions opt;
  opt.budget = o.budget;
  Mode mode = mode_from_name(o.mode);
  std::vector<std::string> trace;
  ConstructionResult res;
  if (mode == Mode::TARS) {
    res = construct_certificate(g, opt, &trace);
  } else {
    // only the TARS layer admits the constructive paths; other modes are
    // certified by search alone
    trace.push_back("non-TARS mode: search only");
    ReconGraph r = build_recon_graph(g, mode, o.cap);
    PancyclicReport rep = check_pancyclic(r, opt);
    res.certificate = rep.certificate;
    res.strategy = "searched";
    res.status = rep.verdict == PancyclicVerdict::Pancyclic ? ConstructStatus::Ok
                 : rep.verdict == PancyclicVerdict::FailsAt ? ConstructStatus::NonPancyclic
                                                            : ConstructStatus::Inconclusive;
    res.failing_length = rep.failing_length;
  }
  if (o.trace) {
    std::cerr << "strategy: " << res.strategy << "\n";
    for (const auto& line : trace) std::cerr << "  " << line << "\n";
  }
  if (res.status == ConstructStatus::NonPancyclic) {
    std::cerr << "not pancyclic: no cycle of length " << res.failing_length << "\n";
    return kExitNegative;
  }
  if (res.status == ConstructStatus::Inconclusive) {
    std::cerr << "inconclusive: budget exhausted\n";
    return kExitInconclusive;
  }
  {
    ReconGraph r = build_recon_graph(g, mode, o.cap);
    if (auto bad = validate_certificate(r, res.certificate)) {
      std::cerr << "internal error: produced certificate failed validation: " << bad->message
                << "\n";
      return kExitNegative;
    }
  }
  std::ofstream file;
  std::ostream& out = open_output(o, file);
  out << certificate_to_string(g, mode, res.certificate);
  return kExitOk;
}

int cmd_check(const CommonOpts& o) {
  Graph g = load_graph(o);
  SearchOptions opt;
  opt.budget = o.budget;
  ReconGraph r = build_recon_graph(g, mode_from_name(o.mode), o.cap);
  std::ofstream file;
  std::ostream& out = open_output(o, file);
  if (o.hamilton_only) {
    SearchResult res = find_hamilton_cycle(r, opt);
    switch (res.status) {
      case SearchStatus::Found: {
        out << "hamilton cycle found (N=" << r.size() << "):";
        for (int v : res.cycle) out << " " << v;
        out << "\n";
        return kExitOk;
      }
      case SearchStatus::ExhaustedNone:
        out << "no hamilton cycle (exhaustive)\n";
        return kExitNegative;
      default:
        out << "inconclusive (budget " << o.budget << " exhausted)\n";
        return kExitInconclusive;
    }
  }
  PancyclicReport rep = check_pancyclic(r, opt);
  for (int len = 3; len <= r.size(); ++len) {
    out << "length " << len << ": ";
    if (rep.certificate.cycles.count(len)) out << "cycle found\n";
    else if (std::find(rep.inconclusive.begin(), rep.inconclusive.end(), len) !=
             rep.inconclusive.end())
      out << "inconclusive (budget)\n";
    else
      out << "none (exhaustive)\n";
  }
  switch (rep.verdict) {
    case PancyclicVerdict::Pancyclic:
      out << "verdict: pancyclic (N=" << r.size() << ")\n";
      return kExitOk;
    case PancyclicVerdict::FailsAt:
      out << "verdict: fails-at-" << rep.failing_length << "\n";
      return kExitNegative;
    default:
      out << "verdict: inconclusive\n";
      return kExitInconclusive;
  }
}

int cmd_verify(const std::string& cert_path, const CommonOpts& o) {
  CertificateFile cf = load_certificate_file(cert_path);
  Graph seed = cf.seed;
  if (!o.input.empty() && o.input != "-") {
    Graph given = load_graph(o);
    if (!(given == seed)) {
      std::cout << "violation: certificate seed does not match the given graph\n";
      return kExitNegative;
    }
  }
  ReconGraph r = build_recon_graph(seed, cf.mode, o.cap);
  if (auto bad = validate_certificate(r, cf.certificate)) {
    std::cout << "violation";
    if (bad->position >= 0) std::cout << " (position " << bad->position << ")";
    std::cout << ": " << bad->message << "\n";
    return kExitNegative;
  }
  std::cout << "ok: certificate covers lengths 3.." << cf.certificate.vertex_count
            << " on N=" << r.size() << " vertices\n";
  return kExitOk;
}

struct SurveyRow {
  bool parse_error = false;
  std::string error;
  int order = 0;
  int n = 0;
  std::string strategy;
  std::string verdict;
  double millis = 0.0;
  int exit_class = kExitOk;
};

SurveyRow survey_one(const std::string& line, Mode mode, const SearchOptions& opt,
                     std::int64_t cap) {
  SurveyRow row;
  auto t0 = std::chrono::steady_clock::now();
  try {
    Graph g = parse_graph6(line);
    row.order = g.order;
    if (mode == Mode::TARS) {
      ConstructionResult res = construct_certificate(g, opt, nullptr);
      row.n = res.certificate.vertex_count;
      row.strategy = res.strategy;
      switch (res.status) {
        case ConstructStatus::Ok: row.verdict = "pancyclic"; break;
        case ConstructStatus::NonPancyclic:
          row.verdict = "fails-at-" + std::to_string(res.failing_length);
          row.exit_class = kExitNegative;
          break;
        case ConstructStatus::Inconclusive:
          row.verdict = "inconclusive";
          row.exit_class = kExitInconclusive;
          break;
      }
    } else {
      ReconGraph r = build_recon_graph(g, mode, cap);
      row.n = r.size();
      row.strategy = "searched";
      PancyclicReport rep = check_pancyclic(r, opt);
      switch (rep.verdict) {
        case PancyclicVerdict::Pancyclic: row.verdict = "pancyclic"; break;
        case PancyclicVerdict::FailsAt:
          row.verdict = "fails-at-" + std::to_string(rep.failing_length);
          row.exit_class = kExitNegative;
          break;
        default:
          row.verdict = "inconclusive";
          row.exit_class = kExitInconclusive;
          break;
      }
    }
  } catch (const std::exception& e) {
    row.parse_error = true;
    row.error = e.what();
    row.exit_class = kExitUsage;
  }
  row.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
  return row;
}

int cmd_survey(const CommonOpts& o) {
  std::string text = read_all(o.input);
  std::vector<std::string> lines;
  {
    std::istringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
      while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
      if (!line.empty()) lines.push_back(line);
    }
  }
  Mode mode = mode_from_name(o.mode);
  SearchOptions opt;
  opt.budget = o.budget;
  int threads = o.deterministic ? 1 : std::max(1, o.threads);
  std::vector<SurveyRow> rows(lines.size());
  if (threads <= 1) {
    for (size_t i = 0; i < lines.size(); ++i) rows[i] = survey_one(lines[i], mode, opt, o.cap);
  } else {
    std::vector<std::future<void>> futs;
    std::atomic<size_t> next{0};
    for (int t = 0; t < threads; ++t)
      futs.push_back(std::async(std::launch::async, [&]() {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= lines.size()) return;
          rows[i] = survey_one(lines[i], mode, opt, o.cap);
        }
      }));
    for (auto& f : futs) f.get();
  }
  std::ofstream file;
  std::ostream& out = open_output(o, file);
  int pan = 0, neg = 0, inc = 0, err = 0;
  for (size_t i = 0; i < rows.size(); ++i) {
    const SurveyRow& r = rows[i];
    if (r.parse_error) {
      ++err;
      out << i + 1 << "\tparse-error\t" << r.error << "\n";
      continue;
    }
    out << i + 1 << "\torder=" << r.order << "\tN=" << r.n << "\t" << r.strategy << "\t"
        << r.verdict << "\t" << r.millis << "ms\n";
    if (r.exit_class == kExitNegative) ++neg;
    else if (r.exit_class == kExitInconclusive) ++inc;
    else ++pan;
  }
  out << "total=" << rows.size() << " pancyclic=" << pan << " non-pancyclic=" << neg
      << " inconclusive=" << inc << " parse-errors=" << err << "\n";
  if (neg) return kExitNegative;
  if (inc) return kExitInconclusive;
  if (err) return kExitUsage;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"TARS domination-reconfiguration toolkit"};
  app.require_subcommand(1);

  CommonOpts o;
  o.budget = env_budget();

  auto add_common = [&](CLI::App* cmd, bool with_input = true) {
    if (with_input)
      cmd->add_option("input", o.input, "input file or '-' for stdin")->capture_default_str();
    cmd->add_option("--format", o.format, "input format: edgelist|graph6")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->capture_default_str();
    cmd->add_option("--mode", o.mode, "edge layer: TARS|TAR|TS")
        ->check(CLI::IsMember({"TARS", "TAR", "TS"}))
        ->capture_default_str();
    cmd->add_option("--budget", o.budget, "node-expansion budget per searched length");
    cmd->add_option("--cap", o.cap, "reconfiguration-graph vertex cap");
    cmd->add_option("--threads", o.threads, "worker threads (survey)");
    cmd->add_flag("--deterministic", o.deterministic, "force single-threaded, reproducible runs");
    cmd->add_option("-o,--output", o.output, "write output to file");
    cmd->add_flag("--dot", o.dot, "emit DOT (build)");
    cmd->add_flag("--json", o.json, "emit JSON where applicable");
    cmd->add_flag("--trace", o.trace, "print the construction strategy trace (construct)");
    cmd->add_flag("--edges", o.edges, "print the labeled edge list (build)");
    cmd->add_flag("--hamilton-only", o.hamilton_only, "only search for a Hamilton cycle (check)");
  };

  auto* c_enum = app.add_subcommand("enumerate", "list all dominating sets");
  add_common(c_enum);
  auto* c_build = app.add_subcommand("build", "build the reconfiguration graph and summarize");
  add_common(c_build);
  auto* c_gray = app.add_subcommand("graycode", "print the binary-reflected Gray code");
  int gray_bits = 5;
  c_gray->add_option("bits", gray_bits, "word width")->required();
  auto* c_bipan = app.add_subcommand("bipan", "print a hypercube cycle through a given edge");
  int bipan_bits = 3;
  std::string bipan_a, bipan_b;
  std::uint64_t bipan_len = 4;
  c_bipan->add_option("bits", bipan_bits)->required();
  c_bipan->add_option("a", bipan_a, "first word (binary)")->required();
  c_bipan->add_option("b", bipan_b, "second word (binary)")->required();
  c_bipan->add_option("len", bipan_len, "cycle length (even)")->required();
  auto* c_construct = app.add_subcommand("construct", "build a pancyclicity certificate");
  add_common(c_construct);
  auto* c_check = app.add_subcommand("check", "search for cycles of every length");
  add_common(c_check);
  auto* c_verify = app.add_subcommand("verify", "validate a certificate file");
  std::string cert_path;
  c_verify->add_option("certificate", cert_path, "certificate JSON file")->required();
  c_verify->add_option("-i,--input", o.input, "cross-check against this graph")
      ->capture_default_str();
  c_verify->add_option("--format", o.format, "input format: edgelist|graph6")
      ->check(CLI::IsMember({"edgelist", "graph6"}));
  c_verify->add_option("--cap", o.cap, "reconfiguration-graph vertex cap");
  auto* c_survey = app.add_subcommand("survey", "per-graph verdicts over a graph6 stream");
  add_common(c_survey);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_enum->parsed()) return cmd_enumerate(o);
    if (c_build->parsed()) return cmd_build(o);
    if (c_gray->parsed()) return cmd_graycode(gray_bits);
    if (c_bipan->parsed()) return cmd_bipan(bipan_bits, bipan_a, bipan_b, bipan_len);
    if (c_construct->parsed()) return cmd_construct(o);
    if (c_check->parsed()) return cmd_check(o);
    if (c_verify->parsed()) return cmd_verify(cert_path, o);
    if (c_survey->parsed()) return cmd_survey(o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
