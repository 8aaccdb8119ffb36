#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slepnet/graph.hpp"
#include "slepnet/slepian.hpp"
#include "slepnet/summarize.hpp"

namespace slepnet {

// ---- Edge lists -----------------------------------------------------------
//
// One edge per line, `src,dst[,weight]`; weight defaults to 1. Lines starting
// with '#' and blank lines are ignored. Node ids are arbitrary strings,
// numbered densely in order of first appearance. A pair listed more than once
// (in either orientation) is summed into a single edge and reported in
// `warnings`.

struct ParsedEdges {
  std::vector<Edge> edges;
  std::vector<std::string> ids;
  std::vector<std::string> warnings;
};

// Throws ParseError, NonPositiveWeight or SelfLoop, each naming the line.
ParsedEdges parse_edge_list(std::string_view text);

// parse_edge_list followed by build_graph.
Graph graph_from_edge_list(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::string format_edge_list(const Graph& g);

// ---- Node metadata --------------------------------------------------------

struct NodeRecord {
  std::string id;
  std::vector<std::string> tags;  // in file order
  std::string display_name;
};

class NodeMetadata {
 public:
  NodeMetadata() = default;
  explicit NodeMetadata(std::vector<NodeRecord> records);  // throws DuplicateId

  const std::vector<NodeRecord>& records() const noexcept { return records_; }
  const NodeRecord* find(std::string_view id) const;
  bool empty() const noexcept { return records_.empty(); }

 private:
  std::vector<NodeRecord> records_;
  std::unordered_map<std::string, std::size_t> index_;
};

// CSV with header `id,categories[,display_name]`; tags separated by ';'.
NodeMetadata parse_metadata(std::string_view text);

// ---- Selections -----------------------------------------------------------

struct SelectionQuery {
  enum class Kind { ids, tags };
  Kind kind = Kind::tags;
  // Node ids, or tags whose union is selected.
  std::vector<std::string> items;
};

// Tag queries select every node whose tag set intersects the query tags, so a
// polymodal node is picked up by any of its categories. Throws EmptySelection,
// UnknownId, UnknownTag, or MissingMetadata.
Selection resolve_selection(const SelectionQuery& query, const NodeMetadata* meta,
                            const std::vector<std::string>& node_ids);

// Graph ids, or decimal indices when the graph has none.
std::vector<std::string> node_labels(const Graph& g);

// ---- Coordinates ----------------------------------------------------------

struct CoordsContext {
  const std::vector<std::string>* ids = nullptr;  // required
  const NodeMetadata* meta = nullptr;             // adds the category column
  const Selection* selection = nullptr;           // adds the in_selection column
  bool axis_comments = true;                      // leading `# axes` lines
};

// Header `id,x,y[,category,in_selection]`; x,y,z for d <= 3, x1..xd above.
// Values use 17 significant digits; rows are in node order.
std::string format_coords_csv(const EmbeddingCoords& coords, const CoordsContext& ctx);
void write_coords_csv(const EmbeddingCoords& coords, const CoordsContext& ctx,
                      const std::filesystem::path& path);

struct CoordsTable {
  std::vector<std::string> ids;
  std::vector<std::string> columns;
  Eigen::MatrixXd values;  // one column per numeric axis
};
CoordsTable parse_coords_csv(std::string_view text);

// ---- Spectra and sweeps ----------------------------------------------------

std::string format_spectrum_csv(const SlepianBasis& b, const Eigen::VectorXd& mu,
                                const Eigen::VectorXd& xi);
std::string format_vectors_csv(const SlepianBasis& b, const std::vector<std::string>& ids);
std::string format_sweep_csv(const std::vector<SweepRow>& rows);

// ---- SVG ------------------------------------------------------------------

struct ScatterOptions {
  int width = 720;
  int height = 560;
  double radius = 4.0;
  std::string title;
};

// One circle per node, colored by its first category tag; selected nodes get
// a ring. Throws NotTwoDimensional unless d == 2.
std::string format_scatter_svg(const EmbeddingCoords& coords, const CoordsContext& ctx,
                               const ScatterOptions& options = {});
void render_scatter_svg(const EmbeddingCoords& coords, const CoordsContext& ctx,
                        const std::filesystem::path& path, const ScatterOptions& options = {});

std::string format_sweep_svg(const std::vector<SweepRow>& rows, const std::string& title = {});

// The fixed categorical palette, indexed by sorted category name.
const std::vector<std::string>& category_palette();

// ---- Files ----------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path);        // throws IoError
void write_text_file(const std::filesystem::path& path, std::string_view content);

// %.17g-style text; parses back to the identical double.
std::string format_real(double value);

}  // namespace slepnet
