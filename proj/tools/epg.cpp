// Command-line front end: construct, validate, analyze, bounds, transform,
// search and render.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "epg/epg.hpp"

namespace {

enum ExitCode { kOk = 0, kFailed = 1, kUsage = 2, kConflict = 3 };

int exit_code_for(epg::ErrorCode code) {
  switch (code) {
    case epg::ErrorCode::ConflictError:
    case epg::ErrorCode::UnsupportedM:
    case epg::ErrorCode::NotB1:
    case epg::ErrorCode::TooLarge:
    case epg::ErrorCode::IntersectingInput:
      return kConflict;
    default:
      return kUsage;
  }
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    epg::write_text_file(path, text);
  }
}

std::pair<std::int64_t, std::int64_t> parse_grid(const std::string& spec) {
  std::int64_t w = 0;
  std::int64_t h = 0;
  char x = 0;
  std::istringstream in(spec);
  if (!(in >> w >> x >> h) || (x != 'x' && x != 'X') || !in.eof()) {
    throw epg::Error(epg::ErrorCode::BudgetError, "grid must look like WxH, got '" + spec + "'");
  }
  return {w, h};
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-intersection representations of graphs by paths on a grid"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a catalog representation");
  std::string family;
  int cm = 2;
  int cn = 1;
  std::string rep_out;
  std::string graph_out;
  construct->add_option("family", family, "star | kmn | h1 | h2 | fig2")
      ->required()
      ->check(CLI::IsMember({"star", "kmn", "h1", "h2", "fig2"}));
  construct->add_option("--m", cm, "left part size (kmn)");
  construct->add_option("--n", cn, "right part size (star, kmn)");
  construct->add_option("-o,--output", rep_out, "representation document (default stdout)");
  construct->add_option("--graph-out", graph_out, "also write the graph document here");

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "Check a representation against a graph");
  std::string graph_path;
  std::string rep_path;
  std::optional<std::int64_t> max_bends;
  bool monotonic = false;
  validate_cmd->add_option("--graph", graph_path)->required();
  validate_cmd->add_option("--rep", rep_path)->required();
  validate_cmd->add_option("--max-bends", max_bends);
  validate_cmd->add_flag("--monotonic", monotonic);

  // analyze
  auto* analyze = app.add_subcommand("analyze", "Bends, monotonicity and a/c/p counts");
  std::string subset;
  std::optional<std::int64_t> pair_k;
  analyze->add_option("--rep", rep_path)->required();
  analyze->add_option("--subset", subset, "comma-separated labels for the a/c/p count (default: all)");
  analyze->add_option("--k", pair_k, "check the pair bounds for a two-label subset with this k");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Evaluate the necessary-condition inequalities");
  std::string which;
  std::int64_t bm = 0;
  std::int64_t bn = 0;
  std::int64_t bk = 0;
  std::int64_t ba = 0;
  std::int64_t bc = 0;
  std::int64_t bp = 0;
  bounds->add_option("which", which, "lbl1 | lbl | acp | mlbl | mlbl2 | threshold | heldt | verdict")
      ->required()
      ->check(CLI::IsMember({"lbl1", "lbl", "acp", "mlbl", "mlbl2", "threshold", "heldt", "verdict"}));
  bounds->add_option("--m", bm);
  bounds->add_option("--n", bn);
  bounds->add_option("--k", bk);
  bounds->add_option("--a", ba);
  bounds->add_option("--c", bc);
  bounds->add_option("--p", bp);
  bounds->add_flag("--monotonic", monotonic);

  // transform
  auto* transform = app.add_subcommand("transform", "B_1 -> monotonic B_3");
  std::string lines_out;
  bool only_normalize = false;
  bool check_only = false;
  transform->add_option("--rep", rep_path)->required();
  transform->add_option("-o,--output", rep_out);
  transform->add_option("--lines", lines_out, "line-assignment sidecar document");
  transform->add_flag("--normalize", only_normalize, "only write the normalized representation");
  transform->add_flag("--check-only", check_only, "report collinear point touches and exit");

  // search
  auto* search = app.add_subcommand("search", "Bounded exhaustive search for a representation");
  std::string grid = "6x6";
  std::int64_t search_bends = 0;
  std::optional<std::uint64_t> node_limit;
  bool upto = false;
  search->add_option("--graph", graph_path)->required();
  search->add_option("--max-bends", search_bends);
  search->add_option("--grid", grid, "WxH grid points");
  search->add_flag("--monotonic", monotonic);
  search->add_option("--node-limit", node_limit);
  search->add_flag("--upto", upto, "try k = 0..max-bends and report the smallest");
  search->add_option("-o,--output", rep_out);

  // render
  auto* render = app.add_subcommand("render", "Draw a representation");
  std::string format;
  epg::RenderOptions ropts;
  render->add_option("format", format, "svg | ascii")->required()->check(CLI::IsMember({"svg", "ascii"}));
  render->add_option("--rep", rep_path)->required();
  render->add_flag("--offset", ropts.offset_collinear);
  render->add_option("--cell", ropts.cell_size);
  render->add_flag("--labels", ropts.labels);
  render->add_option("-o,--output", rep_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct) {
      epg::Construction c;
      if (family == "star") {
        c = epg::star_b0(cn);
      } else if (family == "kmn") {
        c = epg::kmn_monotonic(cm, cn);
      } else if (family == "h1") {
        c = {epg::h1_graph(), epg::h1_b2_representation()};
      } else if (family == "h2") {
        c = epg::h2_construction();
      } else {
        c = epg::fig2_fixture();
      }
      emit(rep_out, epg::serialize(epg::representation_to_json(c.representation)));
      if (!graph_out.empty()) emit(graph_out, epg::serialize(epg::graph_to_json(c.graph)));
      return kOk;
    }

    if (*validate_cmd) {
      if (max_bends && *max_bends < 0) throw epg::Error(epg::ErrorCode::RangeError, "--max-bends must be >= 0");
      const epg::Graph g = epg::graph_from_json(epg::read_json_file(graph_path));
      const auto loaded = epg::representation_from_json_lenient(epg::read_json_file(rep_path));
      std::optional<std::size_t> mb;
      if (max_bends) mb = static_cast<std::size_t>(*max_bends);
      const auto report = epg::validate(loaded.paths, g, mb, monotonic, loaded.malformed);
      emit("", epg::to_json(report).dump(2));
      return report.ok ? kOk : kFailed;
    }

    if (*analyze) {
      const epg::Representation r = epg::representation_from_json(epg::read_json_file(rep_path));
      epg::Json doc;
      epg::Json vertices = epg::Json::object();
      for (const auto& [label, path] : r) {
        vertices[label] = {{"bends", epg::bend_count(path)}, {"monotonic", epg::is_monotonic(path)}};
      }
      doc["vertices"] = vertices;
      epg::Representation chosen;
      if (subset.empty()) {
        chosen = r;
      } else {
        for (const auto& label : split_csv(subset)) {
          auto it = r.find(label);
          if (it == r.end()) throw epg::Error(epg::ErrorCode::DomainMismatch, "unknown label '" + label + "'");
          chosen.emplace(label, it->second);
        }
      }
      doc["acp"] = epg::to_json(epg::count_acp(chosen));
      if (pair_k) {
        if (chosen.size() != 2) throw epg::Error(epg::ErrorCode::RangeError, "--k needs exactly two labels in --subset");
        if (*pair_k < 0) throw epg::Error(epg::ErrorCode::RangeError, "--k must be >= 0");
        doc["pair_bounds"] = epg::to_json(epg::check_pair_bounds(chosen.begin()->second, std::next(chosen.begin())->second,
                                                                 static_cast<std::size_t>(*pair_k)));
      }
      emit("", doc.dump(2));
      return kOk;
    }

    if (*bounds) {
      epg::Json doc;
      if (which == "lbl1") {
        doc = epg::to_json(epg::lbl1(bm, bn, bk));
      } else if (which == "lbl") {
        doc = epg::to_json(epg::lbl_crossings(bm, bn, bk, bc));
      } else if (which == "acp") {
        doc = epg::to_json(epg::acp_lower(bm, bn, bk, ba, bc, bp));
      } else if (which == "mlbl") {
        doc = epg::to_json(epg::mlbl(bm, bn, bk));
      } else if (which == "mlbl2") {
        doc = epg::to_json(epg::mlbl2(bm, bn, bk));
      } else if (which == "threshold") {
        doc = {{"m", bm}, {"threshold", epg::to_fraction_string(epg::threshold_b2m3(bm))}};
      } else if (which == "heldt") {
        doc = {{"m", bm}, {"n", epg::heldt_n(bm)}};
      } else {
        doc = epg::to_json(epg::verdict(bm, bn, bk, monotonic));
      }
      emit("", doc.dump(2));
      return kOk;
    }

    if (*transform) {
      const epg::Representation r = epg::representation_from_json(epg::read_json_file(rep_path));
      if (check_only) {
        epg::Json doc;
        epg::Json before = epg::Json::array();
        for (const auto& c : epg::check_collinear_separation(r)) before.push_back(epg::to_json(c));
        epg::Json after = epg::Json::array();
        for (const auto& c : epg::check_collinear_separation(epg::normalize(r))) after.push_back(epg::to_json(c));
        doc["conflicts"] = before;
        doc["conflicts_after_normalize"] = after;
        emit("", doc.dump(2));
        return after.empty() ? kOk : kConflict;
      }
      if (only_normalize) {
        emit(rep_out, epg::serialize(epg::representation_to_json(epg::normalize(r))));
        return kOk;
      }
      const auto result = epg::b1_to_b3m(r);
      emit(rep_out, epg::serialize(epg::representation_to_json(result.representation)));
      if (!lines_out.empty()) emit(lines_out, epg::to_json(result).dump(2));
      return kOk;
    }

    if (*search) {
      const epg::Graph g = epg::graph_from_json(epg::read_json_file(graph_path));
      const auto [w, h] = parse_grid(grid);
      epg::SearchBudget budget{search_bends, w, h, monotonic, node_limit, true};
      if (upto) {
        const auto res = epg::bend_number_upto(g, search_bends, budget);
        epg::Json trail = epg::Json::array();
        for (auto s : res.per_k) trail.push_back(epg::to_string(s));
        epg::Json doc{{"per_k", trail}};
        doc["bend_number"] = res.bend_number ? epg::Json(*res.bend_number) : epg::Json(nullptr);
        std::cerr << doc.dump() << '\n';
        if (!res.bend_number) return kFailed;
        emit(rep_out, epg::serialize(epg::representation_to_json(*res.witness)));
        return kOk;
      }
      const auto res = epg::find_representation(g, budget);
      std::cerr << epg::Json{{"status", epg::to_string(res.status)}, {"nodes", res.nodes}}.dump() << '\n';
      if (res.status != epg::SearchStatus::Found) return kFailed;
      emit(rep_out, epg::serialize(epg::representation_to_json(*res.representation)));
      return kOk;
    }

    if (*render) {
      const epg::Representation r = epg::representation_from_json(epg::read_json_file(rep_path));
      emit(rep_out, format == "svg" ? epg::render_svg(r, ropts) : epg::render_ascii(r, ropts));
      return kOk;
    }
  } catch (const epg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsage;
}
