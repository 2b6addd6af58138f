#include "minoru/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>

#include <CLI11.hpp>

#include "minoru/embed.hpp"
#include "minoru/export.hpp"
#include "minoru/fixtures.hpp"
#include "minoru/reduce.hpp"
#include "minoru/universal.hpp"
#include "minoru/verify.hpp"

namespace minoru::cli {

namespace {

using io::Json;

Json size_json(const EmbeddingSize& s) { return Json::array({s.m, s.n}); }

Json violations_json(const std::vector<Violation>& violations) {
  Json list = Json::array();
  for (const auto& v : violations) list.push_back({{"kind", to_string(v.kind)}, {"ids", v.ids}});
  return list;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorKind::kParse, "cannot write " + path);
  file << text;
}

class Stopwatch {
 public:
  double lap() {
    const auto now = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    return seconds;
  }

 private:
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

// A graph for witness checking: polygons stand for their sewing.
Graph graph_for_witness(const Json& j) {
  if (io::is_polygonal(j)) return sew(io::polygonal_from_json(j)).graph;
  return io::graph_from_json(j);
}

}  // namespace

bool RunManifest::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& kv) { return kv.second; });
}

io::Json RunManifest::to_json() const {
  Json stage_list = Json::array();
  for (const auto& s : stages) {
    Json entry{{"name", s.name}, {"size", size_json(s.size)}, {"seconds", s.seconds}};
    if (!s.output.empty()) entry["output"] = s.output;
    stage_list.push_back(std::move(entry));
  }
  Json check_map = Json::object();
  for (const auto& [name, ok] : checks) check_map[name] = ok;
  return {{"format", io::kFormat}, {"input", input},        {"stages", stage_list},
          {"witnesses", witness_paths}, {"checks", check_map}, {"passed", passed()}};
}

RunManifest run_pipeline(const PolygonalEmbedding& p, const std::string& input, const std::string& out_dir) {
  require_valid(p, "pipeline input");
  RunManifest manifest;
  manifest.input = input;
  const auto path_for = [&](const std::string& name) {
    return out_dir.empty() ? std::string() : (std::filesystem::path(out_dir) / name).string();
  };
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  Stopwatch clock;
  const EmbeddingSize start = p.size();
  manifest.stages.push_back({"input", start, 0.0, ""});
  OuterplanarResult reduced = outerplanarize(p);
  const double reduce_seconds = clock.lap();

  const std::size_t anchors = reduced.forest.trees.size();
  const std::size_t blown_internal = 2 * start.n - anchors;
  const EmbeddingSize blown = reduced.blown.embedding.size();
  const EmbeddingSize split = reduced.split.embedding.size();
  const EmbeddingSize flat = reduced.result.size();
  manifest.stages.push_back({"guard", reduced.guarded.size(), 0.0, ""});
  manifest.stages.push_back({"triangulate", reduced.triangulated.size(), 0.0, ""});
  manifest.stages.push_back({"blow-up", blown, 0.0, ""});
  manifest.stages.push_back({"twin-split", split, 0.0, ""});
  manifest.stages.push_back({"outerplanar", flat, reduce_seconds, path_for("outerplanar.json")});
  manifest.checks["blow_up_internal_is_2n_minus_k"] = blown.n == blown_internal;
  manifest.checks["twin_split_size"] = split.n == blown_internal && split.m <= start.m + anchors;
  manifest.checks["outerplanar_size"] = flat.n == 0 && flat.m <= start.m + 2 * start.n;
  manifest.checks["sewings_agree"] =
      edge_sets_equal(sew(reduced.split.embedding).graph, sew(reduced.result).graph);

  EmbedResult embedded = universal_embed(p, std::move(reduced));
  const double embed_seconds = clock.lap();
  manifest.stages.push_back({"padded", embedded.padded.size(), 0.0, ""});
  manifest.stages.push_back({"universal", embedded.universal.base.size(), embed_seconds, path_for("universal.json")});
  const auto target = static_cast<std::int64_t>(start.m + 2 * start.n);
  manifest.checks["universal_side_is_m_plus_2n"] =
      static_cast<std::int64_t>(embedded.universal.base.size().m) == std::max<std::int64_t>(target, 1);
  const auto violations = verify_p_minor(p, embedded.universal.base, embedded.witness);
  manifest.checks["p_minor_witness"] = violations.empty();
  manifest.stages.back().seconds += clock.lap();

  if (!out_dir.empty()) {
    io::write_file(path_for("outerplanar.json"), io::to_json(embedded.reduction.result));
    io::write_file(path_for("universal.json"), io::to_json(embedded.universal.base, &embedded.universal.coords));
    io::write_file(path_for("witness.json"), io::to_json(embedded.witness));
    manifest.witness_paths["sewn"] = path_for("witness.json");
    io::write_file(path_for("manifest.json"), manifest.to_json());
  }
  return manifest;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minor-universal graphs for surfaces given by polygonal schemata"};
  app.require_subcommand(1);
  int status = kOk;

  // universal
  std::vector<std::string> signature_tokens;
  std::int64_t m = 1;
  std::string out_path;
  std::string dot_path;
  std::string svg_path;
  auto* universal = app.add_subcommand("universal", "Build the universal polygon for a signature");
  universal->add_option("--signature", signature_tokens, "Signature tokens, e.g. a1 a2 ~a1 ~a2")->required();
  universal->add_option("--m", m, "Non-corner vertices per side")->required();
  universal->add_option("--out", out_path, "Output JSON");
  universal->add_option("--dot", dot_path, "Also write DOT");
  universal->add_option("--svg", svg_path, "Also write SVG");
  universal->callback([&] {
    const Signature sigma = Signature::parse(signature_tokens);
    const UniversalEmbedding u = build_universal(sigma, m);
    if (!out_path.empty()) io::write_file(out_path, io::to_json(u.base, &u.coords));
    if (!dot_path.empty()) write_text(dot_path, to_dot(u.base.graph().skeleton()));
    if (!svg_path.empty()) write_text(svg_path, to_svg(u.base, &u.coords));
    const auto counts = universal_counts(sigma, m);
    const SewnGraph sewn = sew(u.base);
    out << io::dump({{"format", io::kFormat},
                     {"signature", sigma.tokens()},
                     {"m", m},
                     {"size", size_json(u.base.size())},
                     {"sewn_vertices", sewn.graph.vertex_count()},
                     {"sewn_upper_bound", counts.sewn_upper},
                     {"sewn_genus", sewn_genus(u.base)}});
  });

  // outerplanarize
  std::string input_path;
  std::string witness_path;
  std::string trace_path;
  auto* outerplanar = app.add_subcommand("outerplanarize", "Reduce a polygonal embedding to an outerplanar one");
  outerplanar->add_option("input", input_path, "Polygonal embedding JSON")->required();
  outerplanar->add_option("--out", out_path, "Outerplanar embedding JSON");
  outerplanar->add_option("--witness", witness_path, "Sewn witness JSON");
  outerplanar->add_option("--trace", trace_path, "Minor steps JSON");
  outerplanar->callback([&] {
    const PolygonalEmbedding p = io::polygonal_from_json(io::read_file(input_path));
    const OuterplanarResult r = outerplanarize(p);
    if (!out_path.empty()) io::write_file(out_path, io::to_json(r.result));
    if (!witness_path.empty()) io::write_file(witness_path, io::to_json(r.witness));
    if (!trace_path.empty()) io::write_file(trace_path, io::to_json(r.trace));
    out << io::dump({{"format", io::kFormat},
                     {"input_size", size_json(p.size())},
                     {"anchors", r.forest.trees.size()},
                     {"output_size", size_json(r.result.size())}});
  });

  // embed
  std::string universal_out;
  auto* embed = app.add_subcommand("embed", "Embed a polygonal embedding into its universal polygon");
  embed->add_option("input", input_path, "Polygonal embedding JSON")->required();
  embed->add_option("--out-universal", universal_out, "Universal polygon JSON");
  embed->add_option("--out-witness", witness_path, "Sewn witness JSON");
  embed->callback([&] {
    const PolygonalEmbedding p = io::polygonal_from_json(io::read_file(input_path));
    const EmbedResult r = universal_embed(p);
    if (!universal_out.empty()) io::write_file(universal_out, io::to_json(r.universal.base, &r.universal.coords));
    if (!witness_path.empty()) io::write_file(witness_path, io::to_json(r.witness));
    out << io::dump({{"format", io::kFormat},
                     {"input_size", size_json(p.size())},
                     {"universal_m", r.universal.base.size().m},
                     {"universal_size", size_json(r.universal.base.size())}});
  });

  // verify-witness
  std::string minor_path;
  std::string major_path;
  auto* verify = app.add_subcommand("verify-witness", "Check a minor witness");
  verify->add_option("minor", minor_path, "Minor graph or polygon JSON")->required();
  verify->add_option("major", major_path, "Major graph or polygon JSON")->required();
  verify->add_option("witness", witness_path, "Witness JSON")->required();
  verify->callback([&] {
    const Json minor_json = io::read_file(minor_path);
    const Json major_json = io::read_file(major_path);
    const Witness w = io::witness_from_json(io::read_file(witness_path));
    std::vector<Violation> violations;
    if (io::is_polygonal(minor_json) && io::is_polygonal(major_json)) {
      violations = verify_p_minor(io::polygonal_from_json(minor_json), io::polygonal_from_json(major_json), w);
    } else {
      violations = verify_witness(graph_for_witness(minor_json), graph_for_witness(major_json), w);
    }
    out << io::dump({{"format", io::kFormat}, {"valid", violations.empty()}, {"violations", violations_json(violations)}});
    if (!violations.empty()) status = kVerificationFailed;
  });

  // hamiltonian-major
  std::vector<VertexId> circuit;
  auto* hamiltonian = app.add_subcommand("hamiltonian-major", "Build a Hamiltonian plane major");
  hamiltonian->add_option("input", input_path, "Plane graph JSON")->required();
  hamiltonian->add_option("--circuit", circuit, "Non-separating circuit as vertex ids")->delimiter(',');
  hamiltonian->add_option("--out", out_path, "Output plane graph JSON");
  hamiltonian->add_option("--trace", trace_path, "Minor steps JSON");
  hamiltonian->callback([&] {
    const Json j = io::read_file(input_path);
    const PlaneGraph g = io::is_polygonal(j) ? io::polygonal_from_json(j).graph() : io::plane_graph_from_json(j);
    const HamiltonianMajor h = circuit.empty() ? hamiltonian_major(g) : hamiltonian_major(g, circuit);
    const bool ok = verify_hamiltonian(h.graph.skeleton(), h.cycle) && euler_characteristic_check(h.graph) == 0 &&
                    edge_sets_equal(replay(h.graph.skeleton(), h.steps), g.skeleton());
    if (!out_path.empty()) {
      Json doc = io::to_json(h.graph);
      doc["hamiltonian_cycle"] = h.cycle;
      io::write_file(out_path, doc);
    }
    if (!trace_path.empty()) io::write_file(trace_path, io::to_json(h.steps));
    out << io::dump({{"format", io::kFormat},
                     {"input_vertices", g.vertex_count()},
                     {"output_vertices", h.graph.vertex_count()},
                     {"hamiltonian_cycle", h.cycle},
                     {"verified", ok}});
    if (!ok) status = kVerificationFailed;
  });

  // gen-fixture
  std::string kind;
  std::uint64_t seed = fixtures::seed_from_env();
  std::size_t fixture_m = 3;
  std::size_t fixture_n = 4;
  auto* gen = app.add_subcommand("gen-fixture", "Write a generated polygonal embedding");
  gen->add_option("kind", kind, "Fixture kind")->required()->check(CLI::IsMember(fixtures::kinds()));
  gen->add_option("--seed", seed, "Random seed (default from MINOR_UNIVERSAL_SEED)");
  gen->add_option("--m", fixture_m, "Longest side for random kinds");
  gen->add_option("--n", fixture_n, "Internal vertices for random kinds");
  gen->add_option("--out", out_path, "Output JSON (standard output when absent)");
  gen->callback([&] {
    const Json doc = io::to_json(fixtures::by_kind(kind, seed, fixture_m, fixture_n));
    if (out_path.empty()) {
      out << io::dump(doc);
    } else {
      io::write_file(out_path, doc);
    }
  });

  // export
  std::string format;
  bool sewn = false;
  auto* exporter = app.add_subcommand("export", "Render a graph or polygon as DOT or SVG");
  exporter->add_option("input", input_path, "Graph or polygon JSON")->required();
  exporter->add_option("--format", format, "dot or svg")->required();
  exporter->add_option("--witness", witness_path, "Witness whose branch sets become clusters");
  exporter->add_flag("--sewn", sewn, "Draw the sewing of a polygon");
  exporter->add_option("--out", out_path, "Output file (standard output when absent)");
  exporter->callback([&] {
    const Json j = io::read_file(input_path);
    std::string text;
    if (format == "dot") {
      Graph g = io::graph_from_json(j);
      if (sewn && io::is_polygonal(j)) g = sew(io::polygonal_from_json(j)).graph;
      if (witness_path.empty()) {
        text = to_dot(g);
      } else {
        const Witness w = io::witness_from_json(io::read_file(witness_path));
        text = to_dot(g, &w);
      }
    } else if (format == "svg") {
      if (!io::is_polygonal(j)) throw Error(ErrorKind::kParse, "svg export needs a polygonal embedding");
      const io::GridCoords coords = io::coords_from_json(j);
      text = to_svg(io::polygonal_from_json(j), &coords);
    } else {
      throw Error(ErrorKind::kUnknownKind, "unknown export format '" + format + "'");
    }
    if (out_path.empty()) {
      out << text;
    } else {
      write_text(out_path, text);
    }
  });

  // pipeline
  std::string out_dir;
  auto* pipeline = app.add_subcommand("pipeline", "Run reduction, embedding and verification end to end");
  pipeline->add_option("input", input_path, "Polygonal embedding JSON")->required();
  pipeline->add_option("--out-dir", out_dir, "Directory for stage files and the manifest");
  pipeline->callback([&] {
    const PolygonalEmbedding p = io::polygonal_from_json(io::read_file(input_path));
    const RunManifest manifest = run_pipeline(p, input_path, out_dir);
    out << io::dump(manifest.to_json());
    if (!manifest.passed()) status = kVerificationFailed;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return status;
}

}  // namespace minoru::cli
