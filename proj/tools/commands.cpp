#include "commands.hpp"

#include <atomic>
#include <ostream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "rnametric/oracles.hpp"
#include "rnametric/orbits.hpp"

namespace rnametric::cli {

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError:
    case ErrorKind::UnbalancedBracket:
    case ErrorKind::UnknownCharacter:
      return kParse;
    case ErrorKind::IndexOutOfRange:
    case ErrorKind::AdjacentContact:
    case ErrorKind::SelfLoop:
    case ErrorKind::DuplicateBond:
    case ErrorKind::InvalidLength:
      return kInvalid;
    case ErrorKind::LengthMismatch:
      return kLengthMismatch;
    case ErrorKind::IoError:
      return kIo;
    case ErrorKind::Infeasible:
      return kInfeasible;
    default:
      return kFailure;
  }
}

namespace {

bool looks_inline(const std::string& arg) {
  if (arg.empty()) return false;
  for (char ch : arg) {
    if (ch == '.') continue;
    bool bracket = false;
    for (auto [open, close] : bracket_families()) bracket = bracket || ch == open || ch == close;
    if (!bracket) return false;
  }
  return true;
}

int report(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
  return exit_code_for(e.kind());
}

std::string kind_name(OrbitKind k) { return k == OrbitKind::Cyclic ? "cyclic" : "linear"; }

}  // namespace

SecondaryStructure load_structure(const std::string& arg) {
  if (looks_inline(arg)) return parse_dotbracket(arg);
  auto structures = parse_records(read_file(arg));
  if (structures.empty()) throw Error(ErrorKind::SyntaxError, "'" + arg + "' holds no structure");
  return structures.front();
}

int cmd_validate(const std::string& path, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    text = read_file(path);
  } catch (const Error& e) {
    return report(e, err);
  }
  const auto format = detect_format(text);
  const auto records = split_records(text, format);
  if (records.empty()) {
    err << "error: SyntaxError: '" << path << "' holds no structure\n";
    return kParse;
  }
  int status = kOk;
  for (const auto& rec : records) {
    try {
      const auto s = parse_record(rec, format);
      out << "record " << rec.index << ": valid (n=" << s.length()
          << ", contacts=" << s.num_contacts() << ")\n";
    } catch (const Error& e) {
      out << to_string(e.kind()) << " at record " << rec.index << ": " << e.what() << '\n';
      const int code = exit_code_for(e.kind());
      // parse failures outrank validation failures
      if (status == kOk || code == kParse) status = code;
    }
  }
  return status;
}

int cmd_dist(const std::string& a, const std::string& b, Metric metric, bool verbose,
             std::ostream& out, std::ostream& err) {
  try {
    const auto s1 = load_structure(a);
    const auto s2 = load_structure(b);
    out << format_distance(metric, distance(metric, s1, s2)) << '\n';
    if (verbose) {
      const auto orbits = decompose_orbits(s1, s2);
      out << "symdiff=" << symmetric_difference_size(s1, s2) << '\n';
      out << "omega=" << orbits.omega << '\n';
      if (metric == Metric::Mag) {
        out << "n=" << s1.length() << " rank(T-Id)=" << d_mag(s1, s2) << '\n';
      }
    }
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int cmd_orbits(const std::string& a, const std::string& b, std::ostream& out, std::ostream& err) {
  try {
    const auto s1 = load_structure(a);
    const auto s2 = load_structure(b);
    const auto dec = decompose_orbits(s1, s2);
    for (const auto& o : dec.orbits) {
      out << kind_name(o.kind) << " [";
      for (std::size_t k = 0; k < o.members.size(); ++k) out << (k ? "," : "") << o.members[k];
      out << "] size=" << o.size() << '\n';
    }
    out << "omega=" << dec.omega << " symdiff=" << symmetric_difference_size(s1, s2)
        << " d_inv=" << d_inv(s1, s2) << '\n';
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int cmd_matrix(const std::string& path, Metric metric, std::ostream& out, std::ostream& err) {
  std::vector<SecondaryStructure> records;
  try {
    records = parse_records(read_file(path));
  } catch (const Error& e) {
    return report(e, err);
  }
  if (records.empty()) {
    err << "error: SyntaxError: '" << path << "' holds no structure\n";
    return kParse;
  }
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].length() != records[0].length()) {
      err << "error: LengthMismatch: record " << r + 1 << " has length " << records[r].length()
          << ", record 1 has length " << records[0].length() << '\n';
      return kLengthMismatch;
    }
  }

  const std::size_t m = records.size();
  std::vector<double> d(m * m, 0.0);
  std::atomic<std::size_t> next_row{0};
  auto worker = [&] {
    for (std::size_t i = next_row++; i < m; i = next_row++) {
      for (std::size_t j = i + 1; j < m; ++j) {
        d[i * m + j] = d[j * m + i] = distance(metric, records[i], records[j]);
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(m, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (std::size_t j = 0; j < m; ++j) out << (j ? "\t" : "") << j + 1;
  out << '\n';
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out << (j ? "\t" : "") << format_distance(metric, d[i * m + j]);
    out << '\n';
  }
  return kOk;
}

int cmd_gen(Index n, std::size_t k, std::size_t count, std::uint64_t seed, Format format,
            std::ostream& out, std::ostream& err) {
  try {
    SplitMix64 rng(seed);
    std::string buffer;
    for (std::size_t r = 0; r < count; ++r) {
      const auto s = oracles::random_structure(n, k, rng);
      if (format == Format::PairList) {
        if (r) buffer += '\n';
        buffer += emit_pairlist(s);
      } else {
        buffer += emit_dotbracket(s);
        buffer += '\n';
      }
    }
    out << buffer;
    return kOk;
  } catch (const Error& e) {
    return report(e, err);
  }
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances between RNA secondary structures (pseudoknots allowed)"};
  app.require_subcommand(1);

  std::string metric_name = "inv";
  const std::vector<std::string> metric_names{"inv", "sgr", "sgr2", "mag"};

  std::string validate_path;
  auto* validate = app.add_subcommand("validate", "Check every record of a structure file");
  validate->add_option("path", validate_path, "pair-list or dot-bracket file")->required();

  std::string dist_a, dist_b;
  bool verbose = false;
  auto* dist = app.add_subcommand("dist", "Distance between two structures");
  dist->add_option("a", dist_a, "dot-bracket string or file")->required();
  dist->add_option("b", dist_b, "dot-bracket string or file")->required();
  dist->add_option("--metric", metric_name, "inv, sgr, sgr2 or mag")
      ->check(CLI::IsMember(metric_names));
  dist->add_flag("--verbose,-v", verbose, "also print |Q1 delta Q2|, omega and rank details");

  std::string orb_a, orb_b;
  auto* orbits = app.add_subcommand("orbits", "Orbit decomposition of two structures");
  orbits->add_option("a", orb_a, "dot-bracket string or file")->required();
  orbits->add_option("b", orb_b, "dot-bracket string or file")->required();

  std::string matrix_path;
  auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix (TSV) of a structure file");
  matrix->add_option("path", matrix_path, "multi-structure file")->required();
  matrix->add_option("--metric", metric_name, "inv, sgr, sgr2 or mag")
      ->check(CLI::IsMember(metric_names));

  Index gen_n = 0;
  std::size_t gen_k = 0, gen_count = 1;
  std::uint64_t seed = 0;
  std::string format_name = "pairlist";
  auto* gen = app.add_subcommand("gen", "Generate seeded random structures");
  gen->add_option("-n,--length", gen_n, "structure length")->required()->check(CLI::PositiveNumber);
  gen->add_option("-k,--contacts", gen_k, "contacts per structure")->required();
  gen->add_option("--count", gen_count, "number of structures");
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--format", format_name, "pairlist or dotbracket")
      ->check(CLI::IsMember({"pairlist", "dotbracket"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  const Metric metric = parse_metric(metric_name);
  if (*validate) return cmd_validate(validate_path, out, err);
  if (*dist) return cmd_dist(dist_a, dist_b, metric, verbose, out, err);
  if (*orbits) return cmd_orbits(orb_a, orb_b, out, err);
  if (*matrix) return cmd_matrix(matrix_path, metric, out, err);
  const Format format = format_name == "dotbracket" ? Format::DotBracket : Format::PairList;
  return cmd_gen(gen_n, gen_k, gen_count, seed, format, out, err);
}

}  // namespace rnametric::cli
