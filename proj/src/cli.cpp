#include "filling/cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "filling/moves.hpp"
#include "filling/search.hpp"
#include "filling/svg.hpp"
#include "filling/tables.hpp"
#include "filling/verifier.hpp"

namespace filling {

namespace {

// Semantic failure: the input parsed but is not what the command needs.
class Rejected : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

struct SigmaSource
{
  std::string text;
  std::string file;
  int n = 0;

  void attach(CLI::App *cmd)
  {
    auto *text_opt = cmd->add_option("--sigma", text, "Permutation in cycle notation");
    auto *file_opt = cmd->add_option("--sigma-file", file, "Read the permutation from a file ('-' for stdin)");
    text_opt->excludes(file_opt);
    cmd->add_option("--n", n, "Intersection number; the degree becomes 4n")->check(CLI::PositiveNumber);
  }

  Permutation read(std::istream &in) const
  {
    std::string source = text;
    if (text.empty()) {
      if (file.empty() || file == "-") {
        source.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream f(file);
        if (!f)
          throw ParseError("cannot read " + file);
        source.assign(std::istreambuf_iterator<char>(f), {});
      }
    }
    return parse_cycles(source, n > 0 ? std::optional<int>(4 * n) : std::nullopt);
  }
};

void require_glueable(Permutation const &sigma)
{
  if (!is_parity_reversing(sigma))
    throw Rejected("sigma is not parity reversing");
  if (!check_equation(sigma))
    throw Rejected("sigma does not satisfy sigma Q sigma = tau");
}

void print_surface(GluedSurface const &s, std::ostream &out)
{
  out << format_faces(s);
  out << "V=" << s.vertex_count() << " E=" << s.edge_count() << " F=" << s.face_count() << '\n';
  out << "euler=" << s.euler_characteristic << '\n';
  out << "genus=" << s.genus << '\n';
  out << "connected=" << (s.connected ? "yes" : "no") << '\n';
}

std::string table_cell(int g, int p)
{
  try {
    return std::to_string(min_intersection(g, p));
  } catch (NoFillingPair const &) {
    return "none";
  }
}

} // namespace

int run_cli(std::vector<std::string> const &args, std::istream &in, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Verify, glue, search and extend filling permutations"};
  app.name(args.empty() ? "filling" : args.front());
  app.require_subcommand(1);

  auto *verify = app.add_subcommand("verify", "Check every filling-permutation condition");
  SigmaSource verify_sigma;
  int verify_genus = 0, verify_punctures = 0;
  verify_sigma.attach(verify);
  verify->add_option("--genus", verify_genus)->required()->check(CLI::NonNegativeNumber);
  verify->add_option("--punctures", verify_punctures)->required()->check(CLI::NonNegativeNumber);

  auto *glue_cmd = app.add_subcommand("glue", "Glue the polygons of sigma and report the surface");
  SigmaSource glue_sigma;
  int glue_punctures = 0;
  glue_sigma.attach(glue_cmd);
  glue_cmd->add_option("--punctures", glue_punctures)->check(CLI::NonNegativeNumber);

  auto *search = app.add_subcommand("search", "Enumerate filling permutations");
  SearchQuery query;
  std::size_t limit = 0;
  double max_seconds = 600;
  search->add_option("--genus", query.genus)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--punctures", query.punctures)->required()->check(CLI::NonNegativeNumber);
  search->add_option("--n", query.n)->required()->check(CLI::PositiveNumber);
  search->add_flag("--dedup", query.dedup, "Print one canonical form per symmetry class");
  search->add_flag("--naive", query.naive, "Brute-force oracle (degree <= 8)");
  search->add_flag("--symmetry-prune", query.symmetry_pruning, "Fix the symmetry orbit of sigma(1)");
  search->add_option("--limit", limit, "Stop after this many solutions")->check(CLI::PositiveNumber);
  search->add_option("--threads", query.threads)->check(CLI::PositiveNumber);
  search->add_option("--max-nodes", query.max_nodes)->check(CLI::PositiveNumber);
  search->add_option("--max-seconds", max_seconds)->check(CLI::PositiveNumber);

  auto *extend = app.add_subcommand("extend", "Apply double-bigon moves up to a puncture count");
  SigmaSource extend_sigma;
  int extend_genus = 0, extend_punctures = 0, target_p = 0;
  extend_sigma.attach(extend);
  extend->add_option("--genus", extend_genus)->required()->check(CLI::NonNegativeNumber);
  extend->add_option("--punctures", extend_punctures)->required()->check(CLI::NonNegativeNumber);
  extend->add_option("--target-p", target_p)->required()->check(CLI::NonNegativeNumber);

  auto *table = app.add_subcommand("table", "Minimal intersection numbers of filling pairs");
  int table_genus = 0, table_punctures = 0, max_genus = 0, max_punctures = 0;
  auto *tg = table->add_option("--genus", table_genus)->check(CLI::NonNegativeNumber);
  auto *tp = table->add_option("--punctures", table_punctures)->check(CLI::NonNegativeNumber);
  auto *mg = table->add_option("--max-genus", max_genus)->check(CLI::NonNegativeNumber);
  auto *mp = table->add_option("--max-punctures", max_punctures)->check(CLI::NonNegativeNumber);
  tg->needs(tp);
  tp->needs(tg);
  mg->needs(mp);
  mp->needs(mg);
  tg->excludes(mg);

  auto *svg = app.add_subcommand("export-svg", "Draw the polygon decomposition as SVG");
  SigmaSource svg_sigma;
  int svg_punctures = 0;
  std::string svg_out;
  svg_sigma.attach(svg);
  svg->add_option("--punctures", svg_punctures)->check(CLI::NonNegativeNumber);
  svg->add_option("--out", svg_out)->required();

  std::vector<char const *> argv;
  for (auto const &a : args)
    argv.push_back(a.c_str());
  if (argv.empty())
    argv.push_back("filling");

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (CLI::Success const &e) {
    return app.exit(e, out, err);
  } catch (CLI::ParseError const &e) {
    app.exit(e, out, err);
    return exit_code::usage;
  }

  try {
    if (*verify) {
      FillingInstance inst(verify_sigma.read(in), verify_genus, verify_punctures);
      auto report = validate(inst);
      out << format_report(report);
      return report.valid() ? exit_code::ok : exit_code::invalid;
    }

    if (*glue_cmd) {
      auto sigma = glue_sigma.read(in);
      require_glueable(sigma);
      print_surface(glue(sigma, glue_punctures), out);
      return exit_code::ok;
    }

    if (*search) {
      if (limit > 0)
        query.limit = limit;
      query.max_time = std::chrono::milliseconds(static_cast<long long>(max_seconds * 1000));
      auto result = enumerate(query);
      if (result.vacuous)
        err << "note: " << *result.vacuous << '\n';
      for (auto const &sigma : result.solutions)
        out << format_cycles(sigma) << '\n';
      out << "count=" << result.raw_count << " dedup=" << result.dedup_count
          << " nodes=" << result.nodes_explored << '\n';
      return exit_code::ok;
    }

    if (*extend) {
      FillingInstance inst(extend_sigma.read(in), extend_genus, extend_punctures);
      if (target_p < extend_punctures || (target_p - extend_punctures) % 2 != 0)
        throw std::invalid_argument("--target-p must be at least --punctures and differ by an even number");
      auto report = validate(inst);
      if (!report.valid()) {
        out << format_report(report);
        throw Rejected("input instance is not valid");
      }
      auto extended = extend_to(inst, target_p);
      out << format_cycles(extended.sigma) << '\n';
      auto extended_report = validate(extended);
      out << format_report(extended_report);
      return extended_report.valid() ? exit_code::ok : exit_code::invalid;
    }

    if (*table) {
      if (tg->count()) {
        out << table_cell(table_genus, table_punctures) << '\n';
        return exit_code::ok;
      }
      if (!mg->count())
        throw std::invalid_argument("table needs --genus/--punctures or --max-genus/--max-punctures");

      out << std::setw(4) << "g\\p";
      for (int p = 0; p <= max_punctures; ++p)
        out << std::setw(5) << p;
      out << '\n';
      for (int g = 0; g <= max_genus; ++g) {
        out << std::setw(4) << g;
        for (int p = 0; p <= max_punctures; ++p)
          out << std::setw(5) << table_cell(g, p);
        out << '\n';
      }
      return exit_code::ok;
    }

    if (*svg) {
      auto sigma = svg_sigma.read(in);
      require_glueable(sigma);
      auto drawing = render_svg(glue(sigma, svg_punctures));
      std::ofstream file(svg_out, std::ios::binary);
      if (!file || !(file << drawing))
        throw std::runtime_error("cannot write " + svg_out);
      out << "wrote " << svg_out << '\n';
      return exit_code::ok;
    }
  } catch (ResourceLimitExceeded const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::resources;
  } catch (Rejected const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid;
  } catch (GluingError const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::invalid;
  } catch (std::invalid_argument const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  } catch (std::exception const &e) {
    err << "error: " << e.what() << '\n';
    return exit_code::usage;
  }
  return exit_code::usage;
}

} // namespace filling
