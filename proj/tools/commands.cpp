#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "bvm/catalog.hpp"
#include "bvm/error.hpp"
#include "bvm/markers.hpp"
#include "bvm/serialize.hpp"
#include "bvm/trapezoid.hpp"
#include "bvm/vershik.hpp"

namespace bvm::cli {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error("cannot write '" + out_path + "'");
  f << text;
}

std::string diagram_text(const OrderedBratteliDiagram& d, const std::string& format) {
  return format == "dot" ? to_dot(d) : serialize(d);
}

std::string join(const std::vector<PathPrefix>& ps) {
  std::string s;
  for (const auto& p : ps) s += (s.empty() ? "" : " ") + format_path(p);
  return s;
}

// --- build-fullshift ------------------------------------------------------

struct BuildArgs {
  std::size_t levels = 3;
  std::optional<std::size_t> word_length;
  std::string widths = "1";
  std::string format = "bvd";
  std::string out_path;
  std::size_t threads = 0;
};

void build_fullshift(const BuildArgs& a, std::ostream& out, std::ostream& err) {
  const WidenSchedule schedule = WidenSchedule::parse(a.widths);
  const std::size_t L = a.word_length.value_or(dependence_bound(a.levels, schedule) + 2);
  err << "enumerating words of length " << L << " (widths " << schedule.to_string()
      << ")\n";
  const auto levels = enumerate_levels(a.levels, schedule, L, a.threads);
  for (std::size_t k = 1; k <= levels.size(); ++k) {
    out << "V_" << k << " = " << levels[k - 1].size() << "\n";
  }
  if (a.format == "text") {
    std::ostringstream os;
    for (std::size_t k = 1; k <= levels.size(); ++k) {
      for (std::size_t v = 0; v < levels[k - 1].size(); ++v) {
        os << "\n[" << k << ":" << v << "]\n" << render(levels[k - 1][v]) << "\n";
      }
    }
    emit(os.str(), a.out_path, out);
    return;
  }
  const OrderedBratteliDiagram d = build_diagram(levels, schedule);
  require_valid(d);
  emit(diagram_text(d, a.format), a.out_path, out);
}

// --- markers --------------------------------------------------------------

struct MarkerArgs {
  std::string word;
  std::size_t rows = 1;
  std::string format = "positions";
};

void markers(const MarkerArgs& a, std::ostream& out) {
  const MarkedWord mw = mark_all_rows(a.word, a.rows);
  if (a.format == "text") {
    out << render(mw) << "\n";
    return;
  }
  for (std::size_t k = 1; k <= mw.row_count(); ++k) {
    const auto& row = mw.row(k);
    out << "row " << k << " determined [" << row.determined.lo << ", " << row.determined.hi
        << "] markers";
    for (Position m : row.markers) out << " " << m;
    out << "\n";
  }
}

// --- successor ------------------------------------------------------------

struct SuccessorArgs {
  std::string file;
  std::string path;
  std::size_t steps = 1;
};

void successor_cmd(const SuccessorArgs& a, std::ostream& out) {
  const OrderedBratteliDiagram d = deserialize(read_file(a.file));
  const PathPrefix p = parse_path(d, a.path);
  const Orbit o = orbit(p, a.steps);
  for (const auto& q : o.prefixes) out << format_path(q) << "\n";
  if (o.exhausted) out << "MAXIMAL-EXHAUSTED\n";
}

// --- diagnose -------------------------------------------------------------

struct DiagnoseArgs {
  std::string file;
  std::size_t probe_depth = 2;
  std::size_t steps = 8;
};

void diagnose(const DiagnoseArgs& a, std::ostream& out) {
  const OrderedBratteliDiagram d = deserialize(read_file(a.file));
  const std::size_t K = d.depth();
  out << "depth " << K << "\n";
  for (std::size_t N = 1; N <= K; ++N) {
    out << "N=" << N << " maximal " << maximal_prefixes(d, N).size() << " minimal "
        << minimal_prefixes(d, N).size() << "\n";
  }
  for (Side side : {Side::Max, Side::Min}) {
    for (std::size_t N = 1; N < K; ++N) {
      const auto r = interior_witness(d, side, N, a.probe_depth);
      out << "interior " << to_string(side) << " N=" << N << ": ";
      if (r.certified_absent()) {
        out << "no witness to depth " << r.probe_until;
      } else {
        out << "witnesses to depth " << r.probe_until << ": " << join(r.candidates);
      }
      out << "\n";
    }
  }
  out << "image diameters of minimal prefixes at depth " << K << ":\n";
  for (const auto& row : image_diameter_profile(d, a.steps, K)) {
    out << "n=" << row.n << " diameter " << row.diameter << " common "
        << (row.common_prefix ? std::to_string(*row.common_prefix) : "-") << " determined "
        << row.determined_count << " undetermined " << row.undetermined_count << "\n";
  }
}

// --- catalog --------------------------------------------------------------

struct CatalogArgs {
  std::string name;
  std::size_t depth = 4;
  std::string format = "bvd";
  std::string out_path;
};

void catalog(const CatalogArgs& a, std::ostream& out) {
  emit(diagram_text(by_name(a.name, a.depth), a.format), a.out_path, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordered Bratteli diagrams, Vershik maps and marker trapezoids", "bvm"};
  app.require_subcommand(1);

  BuildArgs build;
  auto* b = app.add_subcommand("build-fullshift", "Build the trapezoid diagram of the 2-shift");
  b->add_option("-k,--levels", build.levels, "Number of levels K")
      ->check(CLI::Range(std::size_t{1}, std::size_t{8}));
  b->add_option("-L,--word-length", build.word_length,
                "Length of the enumerated words (default: dependence bound + 2)");
  b->add_option("--widths", build.widths, "Widening rectangle widths, comma separated");
  b->add_option("--format", build.format)->check(CLI::IsMember({"bvd", "dot", "text"}));
  b->add_option("-o,--out", build.out_path, "Diagram output file (default: stdout)");
  b->add_option("--threads", build.threads, "Enumeration workers (0 = hardware)");

  MarkerArgs mk;
  auto* m = app.add_subcommand("markers", "Mark a binary word");
  m->add_option("--word", mk.word)->required();
  m->add_option("-k,--rows", mk.rows)->check(CLI::Range(std::size_t{1}, std::size_t{64}));
  m->add_option("--format", mk.format)->check(CLI::IsMember({"positions", "text"}));

  SuccessorArgs sa;
  auto* s = app.add_subcommand("successor", "Iterate the successor map on a prefix");
  s->add_option("file", sa.file, "BVD file")->required();
  s->add_option("path", sa.path, "Prefix i1/i2/.../iN")->required();
  s->add_option("--steps", sa.steps);

  DiagnoseArgs da;
  auto* g = app.add_subcommand("diagnose", "Finite-depth evidence on the extremal path sets");
  g->add_option("file", da.file, "BVD file")->required();
  g->add_option("--probe-depth", da.probe_depth);
  g->add_option("--steps", da.steps, "Largest n in the image-diameter profile");

  CatalogArgs ca;
  auto* c = app.add_subcommand("catalog", "Emit an example diagram");
  c->add_option("name", ca.name)->required();
  c->add_option("--depth", ca.depth)->check(CLI::Range(std::size_t{1}, std::size_t{24}));
  c->add_option("--format", ca.format)->check(CLI::IsMember({"bvd", "dot"}));
  c->add_option("-o,--out", ca.out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (b->parsed()) build_fullshift(build, out, err);
    if (m->parsed()) markers(mk, out);
    if (s->parsed()) successor_cmd(sa, out);
    if (g->parsed()) diagnose(da, out);
    if (c->parsed()) catalog(ca, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace bvm::cli
