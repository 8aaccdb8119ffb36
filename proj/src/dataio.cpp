#include "slepnet/dataio.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "slepnet/error.hpp"

namespace slepnet {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Calls fn(line_number, line) for each line, numbering from 1.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find('\n', start);
    const auto line = text.substr(start, pos == std::string_view::npos ? pos : pos - start);
    ++line_no;
    if (pos == std::string_view::npos && line.empty()) break;
    fn(line_no, line);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line); }

bool parse_double(std::string_view s, double& out) {
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 17);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

// ---- Edge lists -----------------------------------------------------------

ParsedEdges parse_edge_list(std::string_view text) {
  ParsedEdges out;
  std::unordered_map<std::string, Index> index;
  std::map<std::pair<Index, Index>, std::size_t> seen;  // pair -> position in out.edges
  std::map<std::pair<Index, Index>, std::size_t> repeats;

  auto node_index = [&](std::string_view id) {
    auto [it, inserted] = index.emplace(std::string(id), out.ids.size());
    if (inserted) out.ids.emplace_back(id);
    return it->second;
  };

  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') return;
    const auto fields = split(line, ',');
    if (fields.size() < 2 || fields.size() > 3) {
      throw Error(ErrorKind::ParseError,
                  at_line(line_no) + ": expected src,dst[,weight], got '" + std::string(line) + "'");
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + ": empty node id");
    }
    double weight = 1.0;
    if (fields.size() == 3 && !parse_double(fields[2], weight)) {
      throw Error(ErrorKind::ParseError,
                  at_line(line_no) + ": bad weight '" + std::string(fields[2]) + "'");
    }
    if (fields[0] == fields[1]) {
      throw Error(ErrorKind::SelfLoop, at_line(line_no) + ": node '" + std::string(fields[0]) + "'");
    }
    if (!(weight > 0.0) || !std::isfinite(weight)) {
      throw Error(ErrorKind::NonPositiveWeight,
                  at_line(line_no) + ": weight " + std::string(fields[2]));
    }
    const Index a = node_index(fields[0]);
    const Index b = node_index(fields[1]);
    const auto key = std::minmax(a, b);
    if (auto it = seen.find(key); it != seen.end()) {
      out.edges[it->second].weight += weight;
      ++repeats[key];
      return;
    }
    seen.emplace(key, out.edges.size());
    out.edges.push_back({a, b, weight});
  });

  for (const auto& [key, count] : repeats) {
    out.warnings.push_back("edge " + out.ids[key.first] + "," + out.ids[key.second] +
                           " listed " + std::to_string(count + 1) + " times; weights summed");
  }
  return out;
}

Graph graph_from_edge_list(std::string_view text, std::vector<std::string>* warnings) {
  ParsedEdges parsed = parse_edge_list(text);
  if (parsed.ids.empty()) throw Error(ErrorKind::ParseError, "edge list contains no edges");
  if (warnings) warnings->insert(warnings->end(), parsed.warnings.begin(), parsed.warnings.end());
  const Index n = parsed.ids.size();
  return build_graph(parsed.edges, n, std::move(parsed.ids));
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += g.node_label(e.source);
    out += ',';
    out += g.node_label(e.target);
    out += ',';
    out += format_real(e.weight);
    out += '\n';
  }
  return out;
}

// ---- Node metadata --------------------------------------------------------

NodeMetadata::NodeMetadata(std::vector<NodeRecord> records) : records_(std::move(records)) {
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (!index_.emplace(records_[i].id, i).second) {
      throw Error(ErrorKind::DuplicateId, "metadata id '" + records_[i].id + "'");
    }
  }
}

const NodeRecord* NodeMetadata::find(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  return it == index_.end() ? nullptr : &records_[it->second];
}

NodeMetadata parse_metadata(std::string_view text) {
  std::vector<NodeRecord> records;
  std::size_t columns = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') return;
    const auto fields = split(line, ',');
    if (columns == 0) {
      const bool ok = (fields.size() == 2 || fields.size() == 3) && fields[0] == "id" &&
                      fields[1] == "categories" && (fields.size() == 2 || fields[2] == "display_name");
      if (!ok) {
        throw Error(ErrorKind::ParseError,
                    at_line(line_no) + ": expected header id,categories[,display_name]");
      }
      columns = fields.size();
      return;
    }
    if (fields.size() != columns) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + ": expected " +
                                             std::to_string(columns) + " fields, got " +
                                             std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw Error(ErrorKind::ParseError, at_line(line_no) + ": empty id");
    NodeRecord rec;
    rec.id = std::string(fields[0]);
    for (const auto tag : split(fields[1], ';')) {
      if (tag.empty()) {
        throw Error(ErrorKind::ParseError, at_line(line_no) + ": empty category for '" + rec.id + "'");
      }
      if (std::find(rec.tags.begin(), rec.tags.end(), tag) == rec.tags.end()) {
        rec.tags.emplace_back(tag);
      }
    }
    if (columns == 3) rec.display_name = std::string(fields[2]);
    records.push_back(std::move(rec));
  });
  if (columns == 0) throw Error(ErrorKind::ParseError, "metadata has no header");
  return NodeMetadata(std::move(records));
}

// ---- Selections -----------------------------------------------------------

std::vector<std::string> node_labels(const Graph& g) {
  if (g.has_node_ids()) return g.node_ids();
  std::vector<std::string> out;
  out.reserve(g.num_nodes());
  for (Index i = 0; i < g.num_nodes(); ++i) out.push_back(std::to_string(i));
  return out;
}

Selection resolve_selection(const SelectionQuery& query, const NodeMetadata* meta,
                            const std::vector<std::string>& node_ids) {
  if (query.items.empty()) throw Error(ErrorKind::EmptySelection, "empty selection query");
  const Index n = node_ids.size();
  std::vector<Index> members;

  if (query.kind == SelectionQuery::Kind::ids) {
    std::unordered_map<std::string_view, Index> index;
    for (Index i = 0; i < n; ++i) index.emplace(node_ids[i], i);
    std::set<Index> picked;
    for (const auto& id : query.items) {
      const auto it = index.find(id);
      if (it == index.end()) throw Error(ErrorKind::UnknownId, "node '" + id + "' is not in the graph");
      picked.insert(it->second);
    }
    members.assign(picked.begin(), picked.end());
  } else {
    if (meta == nullptr || meta->empty()) {
      throw Error(ErrorKind::MissingMetadata, "tag selection needs node metadata");
    }
    std::set<std::string_view> known;
    for (const auto& rec : meta->records()) known.insert(rec.tags.begin(), rec.tags.end());
    for (const auto& tag : query.items) {
      if (!known.count(tag)) throw Error(ErrorKind::UnknownTag, "no node carries tag '" + tag + "'");
    }
    for (Index i = 0; i < n; ++i) {
      const NodeRecord* rec = meta->find(node_ids[i]);
      if (rec == nullptr) {
        throw Error(ErrorKind::MissingMetadata, "no metadata row for node '" + node_ids[i] + "'");
      }
      const bool hit = std::any_of(rec->tags.begin(), rec->tags.end(), [&](const std::string& t) {
        return std::find(query.items.begin(), query.items.end(), t) != query.items.end();
      });
      if (hit) members.push_back(i);
    }
  }
  if (members.empty()) throw Error(ErrorKind::EmptySelection, "query matched no graph node");
  return Selection(n, std::move(members));
}

// ---- Coordinates ----------------------------------------------------------

namespace {

std::vector<std::string> axis_columns(Index d) {
  static const char* const kShort[] = {"x", "y", "z"};
  std::vector<std::string> out;
  for (Index k = 0; k < d; ++k) {
    out.push_back(d <= 3 ? std::string(kShort[k]) : "x" + std::to_string(k + 1));
  }
  return out;
}

std::string join_tags(const NodeRecord* rec) {
  std::string out;
  if (rec == nullptr) return out;
  for (std::size_t i = 0; i < rec->tags.size(); ++i) {
    if (i) out += ';';
    out += rec->tags[i];
  }
  return out;
}

void require_ids(const EmbeddingCoords& coords, const CoordsContext& ctx) {
  if (ctx.ids == nullptr || ctx.ids->size() != coords.num_nodes()) {
    throw Error(ErrorKind::DimensionMismatch, "coordinate rows and node ids disagree");
  }
  if (ctx.selection && ctx.selection->num_nodes() != coords.num_nodes()) {
    throw Error(ErrorKind::DimensionMismatch, "selection and coordinates disagree");
  }
}

}  // namespace

std::string format_coords_csv(const EmbeddingCoords& coords, const CoordsContext& ctx) {
  require_ids(coords, ctx);
  const bool with_meta = ctx.meta != nullptr && !ctx.meta->empty();
  std::string out;
  if (ctx.axis_comments) {
    out += "# axes:";
    for (std::size_t k = 0; k < coords.axis_labels.size(); ++k) {
      out += (k ? "," : " ") + coords.axis_labels[k];
    }
    out += "\n# axis_weights:";
    for (Eigen::Index k = 0; k < coords.axis_weights.size(); ++k) {
      out += (k ? "," : " ") + format_real(coords.axis_weights[k]);
    }
    out += '\n';
  }
  out += "id";
  for (const auto& c : axis_columns(coords.dims())) out += "," + c;
  if (with_meta) out += ",category";
  if (ctx.selection) out += ",in_selection";
  out += '\n';
  for (Index i = 0; i < coords.num_nodes(); ++i) {
    const auto& id = (*ctx.ids)[i];
    out += id;
    for (Index k = 0; k < coords.dims(); ++k) {
      out += ',';
      out += format_real(coords.coords(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
    }
    if (with_meta) out += "," + join_tags(ctx.meta->find(id));
    if (ctx.selection) out += ctx.selection->contains(i) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

void write_coords_csv(const EmbeddingCoords& coords, const CoordsContext& ctx,
                      const std::filesystem::path& path) {
  write_text_file(path, format_coords_csv(coords, ctx));
}

CoordsTable parse_coords_csv(std::string_view text) {
  CoordsTable table;
  std::vector<std::vector<double>> rows;
  std::size_t numeric = 0;
  for_each_line(text, [&](std::size_t line_no, std::string_view raw) {
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') return;
    const auto fields = split(line, ',');
    if (table.columns.empty()) {
      if (fields.empty() || fields[0] != "id") {
        throw Error(ErrorKind::ParseError, at_line(line_no) + ": expected coordinate header");
      }
      for (std::size_t k = 1; k < fields.size(); ++k) table.columns.emplace_back(fields[k]);
      numeric = static_cast<std::size_t>(
          std::find_if(table.columns.begin(), table.columns.end(),
                       [](const std::string& c) { return c == "category" || c == "in_selection"; }) -
          table.columns.begin());
      table.columns.resize(numeric);
      return;
    }
    if (fields.size() < numeric + 1) {
      throw Error(ErrorKind::ParseError, at_line(line_no) + ": too few fields");
    }
    table.ids.emplace_back(fields[0]);
    std::vector<double> row(numeric);
    for (std::size_t k = 0; k < numeric; ++k) {
      if (!parse_double(fields[k + 1], row[k])) {
        throw Error(ErrorKind::ParseError, at_line(line_no) + ": bad number '" +
                                               std::string(fields[k + 1]) + "'");
      }
    }
    rows.push_back(std::move(row));
  });
  table.values.resize(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(numeric));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t k = 0; k < numeric; ++k) {
      table.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) = rows[i][k];
    }
  }
  return table;
}

// ---- Spectra and sweeps ----------------------------------------------------

std::string format_spectrum_csv(const SlepianBasis& b, const Eigen::VectorXd& mu,
                                const Eigen::VectorXd& xi) {
  std::string out = "k,eigenvalue,mu,xi\n";
  for (Eigen::Index k = 0; k < b.values.size(); ++k) {
    out += std::to_string(k + 1) + "," + format_real(b.values[k]) + "," + format_real(mu[k]) +
           "," + format_real(xi[k]) + "\n";
  }
  return out;
}

std::string format_vectors_csv(const SlepianBasis& b, const std::vector<std::string>& ids) {
  if (ids.size() != b.num_nodes()) {
    throw Error(ErrorKind::DimensionMismatch, "node ids and Slepian vectors disagree");
  }
  std::string out = "id";
  for (Index k = 0; k < b.bandwidth(); ++k) out += ",g" + std::to_string(k + 1);
  out += '\n';
  for (Index i = 0; i < b.num_nodes(); ++i) {
    out += ids[i];
    for (Index k = 0; k < b.bandwidth(); ++k) {
      out += "," + format_real(b.vectors(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)));
    }
    out += '\n';
  }
  return out;
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows) {
  std::string out = "N_W,K,sum_mu_concentration,sum_mu_embedded\n";
  for (const auto& r : rows) {
    out += std::to_string(r.bandwidth) + "," + format_real(r.shannon) + "," +
           format_real(r.sum_mu_concentration) + "," + format_real(r.sum_mu_embedded) + "\n";
  }
  return out;
}

// ---- Files ----------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::IoError, "failed reading '" + path.string() + "'");
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::IoError, "failed writing '" + path.string() + "'");
}

}  // namespace slepnet
