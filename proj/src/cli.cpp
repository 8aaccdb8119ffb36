#include "slepnet/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "slepnet/dataio.hpp"
#include "slepnet/error.hpp"
#include "slepnet/fixture.hpp"
#include "slepnet/slepian.hpp"
#include "slepnet/spectral.hpp"
#include "slepnet/summarize.hpp"

namespace slepnet::cli {

namespace {

struct RunConfig {
  std::string graph_path;
  std::string meta_path;
  std::string select;
  Index bandwidth = 0;
  std::string design = "embedded";
  Index dims = 2;
  std::string out_path;
  std::string svg_path;
  std::string vectors_path;
  std::vector<Index> sweep;
  std::uint64_t seed = kDefaultFixtureSeed;
  Index fixture_nodes = 60;
  std::string meta_out_path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything a command needs after ingestion.
struct Inputs {
  Graph graph;
  std::vector<std::string> ids;
  std::optional<NodeMetadata> meta;
  std::optional<Selection> selection;
};

Design parse_design(const std::string& s) {
  if (s == "concentration") return Design::concentration;
  if (s == "embedded" || s == "embedded_distance") return Design::embedded_distance;
  throw UsageError("--design must be 'concentration' or 'embedded', got '" + s + "'");
}

// `@file` lists node ids (one per line or comma-separated, '#' comments);
// anything else is a comma-separated union of tags.
SelectionQuery parse_select(const std::string& arg) {
  SelectionQuery q;
  std::string body = arg;
  if (!arg.empty() && arg.front() == '@') {
    q.kind = SelectionQuery::Kind::ids;
    body.clear();
    std::istringstream lines(read_text_file(arg.substr(1)));
    for (std::string line; std::getline(lines, line);) {
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      body += line + ",";
    }
  }
  std::istringstream parts(body);
  for (std::string item; std::getline(parts, item, ',');) {
    const auto first = item.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = item.find_last_not_of(" \t\r");
    q.items.push_back(item.substr(first, last - first + 1));
  }
  return q;
}

void check_distinct_outputs(std::initializer_list<const std::string*> paths) {
  std::set<std::string> seen;
  for (const auto* p : paths) {
    if (p->empty()) continue;
    const auto key = std::filesystem::absolute(*p).lexically_normal().string();
    if (!seen.insert(key).second) throw UsageError("output path '" + *p + "' given twice");
  }
}

Inputs load(const RunConfig& cfg, std::ostream& err, bool selection_required) {
  Inputs in;
  std::vector<std::string> warnings;
  in.graph = graph_from_edge_list(read_text_file(cfg.graph_path), &warnings);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  in.ids = node_labels(in.graph);
  if (!cfg.meta_path.empty()) {
    in.meta = parse_metadata(read_text_file(cfg.meta_path));
    for (const auto& id : in.ids) {
      if (in.meta->find(id) == nullptr) {
        throw Error(ErrorKind::MissingMetadata, "no metadata row for node '" + id + "'");
      }
    }
  }
  if (!cfg.select.empty()) {
    in.selection = resolve_selection(parse_select(cfg.select), in.meta ? &*in.meta : nullptr, in.ids);
  } else if (selection_required) {
    throw UsageError("--select is required");
  }
  return in;
}

SpectralBasis decompose(const Inputs& in, Index k, std::ostream& err) {
  auto basis = spectral_basis(in.graph, k, options_from_environment());
  for (const auto& w : basis.warnings) err << "warning: " << w << '\n';
  return basis;
}

CoordsContext context(const Inputs& in) {
  CoordsContext ctx;
  ctx.ids = &in.ids;
  ctx.meta = in.meta ? &*in.meta : nullptr;
  ctx.selection = in.selection ? &*in.selection : nullptr;
  return ctx;
}

void report_selection(const Inputs& in, std::ostream& out) {
  const auto& sel = *in.selection;
  out << "N=" << in.graph.num_nodes() << " N_S=" << sel.size() << " N_S/N=" << std::fixed
      << std::setprecision(2) << 100.0 * sel.fraction() << "%\n";
  out.unsetf(std::ios::floatfield);
}

int cmd_embed(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_distinct_outputs({&cfg.out_path, &cfg.svg_path});
  const Inputs in = load(cfg, err, false);
  const auto basis = decompose(in, std::min(in.graph.num_nodes(), cfg.dims + 1), err);
  const auto coords = laplacian_embedding(basis, cfg.dims);
  const auto ctx = context(in);
  write_coords_csv(coords, ctx, cfg.out_path);
  if (!cfg.svg_path.empty()) {
    render_scatter_svg(coords, ctx, cfg.svg_path, {.title = "Laplacian embedding"});
  }
  out << "embedding: " << in.graph.num_nodes() << " nodes, axes";
  for (const auto& l : coords.axis_labels) out << ' ' << l;
  out << '\n';
  return kExitOk;
}

int cmd_slepian(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_distinct_outputs({&cfg.out_path, &cfg.vectors_path});
  const Design design = parse_design(cfg.design);
  const Inputs in = load(cfg, err, true);
  const auto basis = decompose(in, cfg.bandwidth, err);
  const auto& sel = *in.selection;
  const auto c = embedded_matrix(concentration_matrix(basis, sel), basis.values);
  const auto slep = slepian_design(basis, sel, design);
  const auto mu = cross_eigenvalue(slep, c, Quantity::concentration);
  const auto xi = cross_eigenvalue(slep, c, Quantity::embedded_distance);
  write_text_file(cfg.out_path, format_spectrum_csv(slep, mu, xi));
  if (!cfg.vectors_path.empty()) write_text_file(cfg.vectors_path, format_vectors_csv(slep, in.ids));

  report_selection(in, out);
  out << "K=" << format_real(shannon_number(cfg.bandwidth, sel.size(), in.graph.num_nodes()))
      << " sum_mu=" << format_real(mu.sum())
      << " max_offdiag_GtSG=" << format_real(selection_offdiagonal(slep, sel)) << '\n';
  return kExitOk;
}

int cmd_summarize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_distinct_outputs({&cfg.out_path, &cfg.svg_path});
  const Design design = parse_design(cfg.design);
  const Inputs in = load(cfg, err, true);
  const auto basis = decompose(in, cfg.bandwidth, err);
  const auto slep = slepian_design(basis, *in.selection, design);
  const auto coords = slepian_summary(slep, *in.selection, cfg.dims);
  const auto ctx = context(in);
  write_coords_csv(coords, ctx, cfg.out_path);
  if (!cfg.svg_path.empty()) {
    render_scatter_svg(coords, ctx, cfg.svg_path,
                       {.title = "Slepian summary, N_W = " + std::to_string(cfg.bandwidth)});
  }
  report_selection(in, out);
  out << "axis_weights:";
  for (Eigen::Index k = 0; k < coords.axis_weights.size(); ++k) {
    out << ' ' << format_real(coords.axis_weights[k]);
  }
  out << '\n';
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  check_distinct_outputs({&cfg.out_path, &cfg.svg_path});
  if (cfg.sweep.empty()) throw Error(ErrorKind::InvalidArgument, "empty bandwidth list");
  const Inputs in = load(cfg, err, true);
  // One decomposition at the largest bandwidth serves every row.
  const Index top = *std::max_element(cfg.sweep.begin(), cfg.sweep.end());
  const auto basis = decompose(in, top, err);
  const auto rows = shannon_sweep(basis, *in.selection, cfg.sweep);
  write_text_file(cfg.out_path, format_sweep_csv(rows));
  if (!cfg.svg_path.empty()) write_text_file(cfg.svg_path, format_sweep_svg(rows, "Shannon sweep"));
  report_selection(in, out);
  out << "rows: " << rows.size() << '\n';
  return kExitOk;
}

int cmd_fixture(const RunConfig& cfg, std::ostream& out) {
  check_distinct_outputs({&cfg.out_path, &cfg.meta_out_path});
  const auto fx = generate_connectome_fixture(cfg.seed, cfg.fixture_nodes);
  write_text_file(cfg.out_path, fx.edge_list);
  if (!cfg.meta_out_path.empty()) write_text_file(cfg.meta_out_path, fx.metadata);
  out << "fixture: " << cfg.fixture_nodes << " nodes, seed " << cfg.seed << '\n';
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Graph Slepian bases, subgraph-aware embeddings and concentration sweeps", "slepnet"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "Edge list: src,dst[,weight] per line")->required();
    sub->add_option("--meta", cfg.meta_path, "Node metadata CSV: id,categories[,display_name]");
  };
  const auto add_select = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--select", cfg.select,
                                "Comma-separated tags, or @FILE listing node ids");
    if (required) opt->required();
  };
  const auto add_design = [&](CLI::App* sub) {
    sub->add_option("--design", cfg.design, "concentration | embedded")
        ->capture_default_str();
  };

  auto* embed = app.add_subcommand("embed", "Laplacian embedding on u2, u3, ...");
  add_graph(embed);
  add_select(embed, false);
  embed->add_option("--dims", cfg.dims, "Embedding dimension")->capture_default_str()
      ->check(CLI::PositiveNumber);
  embed->add_option("--out", cfg.out_path, "Coordinates CSV")->required();
  embed->add_option("--svg", cfg.svg_path, "Scatter plot (2-D only)");

  auto* slepian = app.add_subcommand("slepian", "Slepian eigenvalue spectrum");
  add_graph(slepian);
  add_select(slepian, true);
  slepian->add_option("--bandwidth", cfg.bandwidth, "Band limit N_W")->required()
      ->check(CLI::PositiveNumber);
  add_design(slepian);
  slepian->add_option("--out", cfg.out_path, "Spectrum CSV")->required();
  slepian->add_option("--vectors", cfg.vectors_path, "Slepian vectors CSV");

  auto* summarize = app.add_subcommand("summarize", "Slepian summary embedding");
  add_graph(summarize);
  add_select(summarize, true);
  summarize->add_option("--bandwidth", cfg.bandwidth, "Band limit N_W")->required()
      ->check(CLI::PositiveNumber);
  add_design(summarize);
  summarize->add_option("--dims", cfg.dims, "Summary dimension")->capture_default_str()
      ->check(CLI::PositiveNumber);
  summarize->add_option("--out", cfg.out_path, "Coordinates CSV")->required();
  summarize->add_option("--svg", cfg.svg_path, "Scatter plot (2-D only)");

  auto* sweep = app.add_subcommand("sweep", "Graph-bandwidth product against summed concentration");
  add_graph(sweep);
  add_select(sweep, true);
  sweep->add_option("--sweep", cfg.sweep, "Ascending bandwidths N1,N2,...")->required()
      ->delimiter(',');
  sweep->add_option("--out", cfg.out_path, "Sweep CSV")->required();
  sweep->add_option("--svg", cfg.svg_path, "Line plot");

  auto* fixture = app.add_subcommand("fixture", "Write the synthetic connectome fixture");
  fixture->add_option("--seed", cfg.seed, "Generator seed")->capture_default_str();
  fixture->add_option("--nodes", cfg.fixture_nodes, "Node count")->capture_default_str();
  fixture->add_option("--out", cfg.out_path, "Edge list output")->required();
  fixture->add_option("--meta-out", cfg.meta_out_path, "Metadata output");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*embed) return cmd_embed(cfg, out, err);
    if (*slepian) return cmd_slepian(cfg, out, err);
    if (*summarize) return cmd_summarize(cfg, out, err);
    if (*sweep) return cmd_sweep(cfg, out, err);
    if (*fixture) return cmd_fixture(cfg, out);
  } catch (const UsageError& e) {
    err << "error: usage: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace slepnet::cli
