#include "hoops/counterexample.hpp"
#include "hoops/error.hpp"
#include "hoops/formats.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <iostream>

namespace {

using namespace hoops;

constexpr const char* kReportHeader = "hoops-report 1\n";

std::string yes_no(bool b)
{
  return b ? "yes" : "no";
}

std::string exponent_string(const words::Word& w, int generators)
{
  const auto ev = words::exponent_vector(w);
  std::string out = "[";
  for (int i = 1; i <= generators; ++i)
    out += fmt::format("{}{}", i > 1 ? "," : "", ev[i]);
  return out + "]";
}

std::string report_reduce(const std::string& word_file)
{
  const words::Word w = io::parse_word(io::read_file(word_file));
  const words::Word r = words::reduce(w);
  return fmt::format("{}command: reduce\ninput: {}\nreduced: {}\nlength: {}\n", kReportHeader, w.to_signed_string(),
                     r.to_signed_string(), r.size());
}

std::string report_decompose(const std::string& loop_file, const std::string& tree, std::uint64_t seed,
                             const std::string& json_out)
{
  const geom::PolyLoop loop = io::parse_loop(io::read_file(loop_file));
  geom::TreeOptions opt;
  opt.seed = seed;
  if (tree == "dfs")
    opt.strategy = geom::TreeStrategy::DepthFirst;
  else if (tree == "reverse")
    opt.strategy = geom::TreeStrategy::ReverseBreadthFirst;
  else if (tree == "random")
    opt.strategy = geom::TreeStrategy::RandomBreadthFirst;
  const geom::Decomposition dec = geom::decompose(loop, opt);
  const int k = static_cast<int>(dec.generators.size());

  std::string out = fmt::format("{}command: decompose\nsegments: {}\ngenerators: {}\nword: {}\nexponent_vector: {}\n",
                                kReportHeader, loop.num_segments(), k, dec.word.to_signed_string(),
                                exponent_string(dec.word, k));
  out += fmt::format("independent: {}\nclearance_verified: {}\n", yes_no(geom::is_independent(dec)),
                     yes_no(geom::verify_clearance(dec)));
  for (const auto& g : dec.generators)
    out += fmt::format("e{}: marked {} -> {} clearance {:.6e} loop_segments {}\n", g.index, g.marked_start.to_string(),
                       g.marked_end.to_string(), g.clearance, g.loop.num_segments());
  if (!json_out.empty()) {
    io::write_file(json_out, io::format_decomposition(io::record_of(dec)));
    out += "json: " + json_out + "\n";
  }
  return out;
}

std::string report_hoop_trivial(const std::string& loop_file, const std::string& group, std::uint64_t seed,
                                const std::string& witness_out, int steps)
{
  const geom::PolyLoop loop = io::parse_loop(io::read_file(loop_file));
  std::string out = std::string(kReportHeader) + "command: hoop-trivial\n";

  gauge::GroupName name{};
  bool lie = true;
  try {
    name = gauge::parse_group_name(group);
  } catch (const Error&) {
    lie = false;
  }
  if (!lie) {
    if (!std::filesystem::is_regular_file(group))
      throw InputError("--group must be u1, so3, su2, sl2r or a Cayley table file; got '" + group + "'");
    const auto table = words::CayleyTable::parse(io::read_file(group));
    const geom::Decomposition dec = geom::decompose(loop);
    const bool law = words::is_identity(dec.word, words::Finite{table});
    out += fmt::format("group: table {}\norder: {}\nsolvable: {}\nword: {}\nverdict: {}\n", group, table.order(),
                       yes_no(words::is_solvable(table)), dec.word.to_signed_string(),
                       law ? "TRIVIAL" : "NONTRIVIAL");
    if (!witness_out.empty())
      out += "witness: none (finite structure group)\n";
    return out;
  }

  const auto spec = gauge::LieGroupSpec::make(name);
  synth::FalsifyOptions opt;
  opt.seed = seed;
  opt.synthesis.steps = steps;
  const auto result = synth::falsify_hoop_triviality(loop, spec, opt);
  out += fmt::format("group: {}\nword: {}\nverdict: {}\n", gauge::to_string(name),
                     result.decomposition.word.to_signed_string(), synth::to_string(result.verdict));
  if (result.holonomy) {
    out += fmt::format("distance_from_identity: {:.6e}\nholonomy_error: {:.3e}\nholonomy:\n{}",
                       result.distance_from_identity, result.holonomy->error, io::format_matrix(result.holonomy->matrix));
    out += fmt::format("connection_terms: {}\n", result.synthesis->connection.terms().size());
  }
  if (!witness_out.empty() && result.synthesis) {
    io::write_file(witness_out, io::format_witness(result));
    out += "witness: " + witness_out + "\n";
  }
  return out;
}

std::string report_holonomy(const std::string& loop_file, const std::string& connection_file, int steps)
{
  const geom::PolyLoop loop = io::parse_loop(io::read_file(loop_file));
  const gauge::Connection a = io::parse_connection(io::read_file(connection_file));
  const gauge::Holonomy h = gauge::transport(a, loop, steps);
  return fmt::format("{}command: holonomy\ngroup: {}\nsteps: {}\nmatrix:\n{}error: {:.6e}\nresidual: {:.3e}\n"
                     "distance_from_identity: {:.6e}\n",
                     kReportHeader, gauge::to_string(a.spec().name()), steps, io::format_matrix(h.matrix), h.error,
                     h.residual, gauge::group_distance(h, a.spec().identity()));
}

std::string report_counterexample(int levels, int trials, const std::string& group, std::uint64_t seed,
                                  int resolution, int order, const std::string& csv_out)
{
  const auto spec = gauge::LieGroupSpec::make(gauge::parse_group_name(group));
  const auto fam = pathology::counterexample_family(levels);
  if (trials < 1)
    throw PreconditionError("--trials must be positive");

  gauge::RandomConnectionOptions opt;
  opt.region_lo = {-0.5, -0.5};
  opt.region_hi = {1.5, 0.5};
  double worst = 0.0, worst_error = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto a = gauge::random_connection(spec, opt, 6, seed * 1000003ULL + static_cast<std::uint64_t>(t));
    const auto h = pathology::transport_loop(a, fam);
    worst = std::max(worst, gauge::group_distance(h, spec.identity()));
    worst_error = std::max(worst_error, h.error);
  }

  const auto dec = geom::decompose(pathology::flatten_loop(fam, resolution));
  const int k = static_cast<int>(dec.generators.size());
  std::string out = fmt::format("{}command: counterexample\ngroup: {}\nlevels: {}\ntrials: {}\nseed: {}\n",
                                kReportHeader, gauge::to_string(spec.name()), levels, trials, seed);
  out += fmt::format("max_holonomy_deviation: {:.3e}\nmax_transport_error: {:.3e}\n", worst, worst_error);
  out += fmt::format("pl_resolution: {}\ngenerators: {}\nword_length: {}\nexponent_vector: {}\nexponent_vector_zero: {}\n",
                     resolution, k, dec.word.size(), exponent_string(dec.word, k),
                     yes_no(words::exponent_vector(dec.word).is_zero()));
  for (int m = 1; m < levels; ++m) {
    const auto d = pathology::cn_distance(pathology::counterexample_family(m).curves[0],
                                          pathology::counterexample_family(m + 1).curves[0], order);
    out += fmt::format("cn_distance levels {}->{} order {}: {:.6e} (coarse {:.6e})\n", m, m + 1, order, d.value,
                       d.coarse_value);
  }
  if (!csv_out.empty()) {
    io::write_file(csv_out, io::curves_csv({fam.curves.begin(), fam.curves.end()}, order, 1025));
    out += "csv: " + csv_out + "\n";
  }
  return out;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Loops, hoops and holonomies of piecewise-linear curves"};
  app.require_subcommand(1);
  std::string report;
  std::uint64_t seed = 0;

  auto* reduce = app.add_subcommand("reduce", "Freely reduce a word");
  std::string word_file;
  reduce->add_option("word-file", word_file, "JSON word, e.g. [1,1,-1]")->required();

  auto* decompose = app.add_subcommand("decompose", "Decompose a loop into independent generator loops");
  std::string loop_file, tree = "bfs", json_out;
  decompose->add_option("loop-file", loop_file)->required();
  decompose->add_option("--tree", tree, "Spanning tree order")->check(CLI::IsMember({"bfs", "dfs", "reverse", "random"}));
  decompose->add_option("--json", json_out, "Write the decomposition record here");
  decompose->add_option("--seed", seed);

  auto* hoop = app.add_subcommand("hoop-trivial", "Decide hoop triviality of a loop for a structure group");
  std::string group = "u1", witness_out;
  int steps = gauge::kDefaultSteps;
  hoop->add_option("loop-file", loop_file)->required();
  hoop->add_option("--group", group, "u1, so3, su2, sl2r or a Cayley table file");
  hoop->add_option("--witness", witness_out, "Write the witnessing connection here");
  hoop->add_option("--steps", steps, "RK4 steps per piece")->check(CLI::PositiveNumber);
  hoop->add_option("--seed", seed);

  auto* holonomy = app.add_subcommand("holonomy", "Holonomy of a loop under a connection");
  std::string connection_file;
  holonomy->add_option("loop-file", loop_file)->required();
  holonomy->add_option("connection-file", connection_file)->required();
  holonomy->add_option("--steps", steps, "RK4 steps per piece")->check(CLI::PositiveNumber);

  auto* counter = app.add_subcommand("counterexample", "Abelian-trivial but nontrivial loop of graph curves");
  int levels = 4, trials = 50, resolution = 4, order = 4;
  std::string csv_out;
  counter->add_option("--levels", levels, "Truncation level (1..24)");
  counter->add_option("--trials", trials, "Random connections");
  counter->add_option("--group", group, "u1, so3, su2 or sl2r");
  counter->add_option("--seed", seed);
  counter->add_option("--resolution", resolution, "PL samples per level")->check(CLI::Range(2, 1000));
  counter->add_option("--order", order, "Derivative order for C^N distances and CSV")->check(CLI::Range(0, 8));
  counter->add_option("--csv", csv_out, "Write x and derivatives of the four curves here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (reduce->parsed())
      report = report_reduce(word_file);
    else if (decompose->parsed())
      report = report_decompose(loop_file, tree, seed, json_out);
    else if (hoop->parsed())
      report = report_hoop_trivial(loop_file, group, seed, witness_out, steps);
    else if (holonomy->parsed())
      report = report_holonomy(loop_file, connection_file, steps);
    else if (counter->parsed())
      report = report_counterexample(levels, trials, group, seed, resolution, order, csv_out);
  } catch (const hoops::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const hoops::BudgetError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const hoops::PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cout << report;
  return 0;
}
