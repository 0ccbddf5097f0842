#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <ostream>

#include "compactum/error.hpp"
#include "compactum/geometry.hpp"
#include "compactum/io.hpp"
#include "compactum/slice.hpp"
#include "compactum/svg.hpp"
#include "compactum/verify.hpp"

namespace compactum::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return parts;
}

std::array<Axis, 2> parse_axes(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--axes takes two axes, e.g. x1,x2");
  return {parse_axis(parts[0]), parse_axis(parts[1])};
}

std::array<FixedCoord, 2> parse_fix(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::ParseError, "--fix takes two AXIS=VALUE pairs");
  std::array<FixedCoord, 2> out;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto kv = split(parts[i], '=');
    if (kv.size() != 2) throw Error(ErrorCode::ParseError, "bad --fix item \"" + parts[i] + "\"");
    out[i] = {parse_axis(kv[0]), parse_rational(kv[1])};
  }
  return out;
}

void emit(const std::string& path, const std::string& bytes, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << bytes;
  } else {
    write_file(path, bytes);
  }
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::HorizonExceeded: return kBudget;
    default: return kInvalidInput;
  }
}

Scene4 single_loop(std::uint64_t n) {
  Scene4 s;
  for (auto& e : loop_gn(n)) s.add(e);
  s.meta.generators = 1;
  s.meta.version = kToolVersion;
  s.finalize();
  return s;
}

}  // namespace

std::vector<std::pair<std::string, std::string>> figure_set() {
  constexpr std::uint64_t kLoops = 8;
  constexpr std::uint64_t kTrackLabel = 2;  // r_2 = g1 g2 over Z/2
  constexpr std::uint64_t kRelations = 7;
  const GroupPtr z2 = make_group({GroupKind::Cyclic, 2, {}, {}});

  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("loop_g1.svg", render_svg(project_scene(single_loop(1), Axis::X1, Axis::X2)));
  out.emplace_back("V.svg", render_svg(project_scene(build_V(kLoops), Axis::X1, Axis::X2)));

  const TrianglePresentation p = build_presentation(z2, kTrackLabel);
  const Scene4 track = build_relation_track(p, kTrackLabel);
  for (int k = 0; k <= 4; ++k) {
    const SliceResult s = slice_scene(track, {Axis::X3, q(1, kTrackLabel)}, {Axis::X4, q(k, 4)},
                                      std::array{Axis::X1, Axis::X2});
    out.emplace_back("R2_t" + std::to_string(k) + "of4.svg", render_svg(s));
  }

  const Scene4 k = build_K(z2, kRelations);
  const MFunction m = compute_m(z2, k.meta.generators);
  out.emplace_back("W_x3x4.svg", render_svg(project_scene(build_W(m, k.meta.generators), Axis::X3, Axis::X4)));
  out.emplace_back("M_x3x4.svg", render_svg(project_scene(build_M(m, k.meta.generators), Axis::X3, Axis::X4)));
  out.emplace_back("K_x3x4.svg", render_svg(project_scene(k, Axis::X3, Axis::X4)));
  return out;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Builds and checks 2-complexes in I^4 whose fundamental group is a given countable group"};
  app.require_subcommand(1);

  std::string group_file, output, scene_file, fix, axes;
  std::uint64_t rounds = 100, relations = 10;
  VerifyBudget budget;

  auto* present = app.add_subcommand("present", "Write the triangle presentation of a group");
  present->add_option("--group", group_file, "Group spec JSON")->required();
  present->add_option("--rounds", rounds, "Stream rounds")->check(CLI::PositiveNumber);
  present->add_option("-o,--output", output, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Certify that the presentation defines the group");
  verify->add_option("--group", group_file, "Group spec JSON")->required();
  verify->add_option("--max-cosets", budget.max_cosets, "Coset table limit")->check(CLI::PositiveNumber);
  verify->add_option("--max-rounds", budget.max_rounds, "Stream round limit")->check(CLI::PositiveNumber);

  auto* build = app.add_subcommand("build", "Build the scene K for the first R relations");
  build->add_option("--group", group_file, "Group spec JSON")->required();
  build->add_option("--relations", relations, "Number of relation tracks");
  build->add_option("-o,--output", output, "Scene JSON output (default stdout)");

  auto* slice = app.add_subcommand("slice", "Render a 2D section of a scene");
  slice->add_option("--scene", scene_file, "Scene JSON")->required();
  slice->add_option("--fix", fix, "Two fixed coordinates, e.g. x3=1/2,x4=7/8")->required();
  slice->add_option("--axes", axes, "Free axes, horizontal first, e.g. x1,x2");
  slice->add_option("-o,--output", output, "SVG output (default stdout)");

  auto* project = app.add_subcommand("project", "Render a projection of a scene");
  project->add_option("--scene", scene_file, "Scene JSON")->required();
  project->add_option("--axes", axes, "Target axes, horizontal first")->required();
  project->add_option("-o,--output", output, "SVG output (default stdout)");

  auto* figures = app.add_subcommand("figures", "Write every figure SVG into a directory");
  figures->add_option("-o,--output", output, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*present) {
      const GroupPtr g = make_group(load_group_file(group_file));
      emit(output, presentation_text(build_presentation(g, rounds), *g), out);
    } else if (*verify) {
      const GroupPtr g = make_group(load_group_file(group_file));
      const IsoCertificate c = verify_finite_iso(g, budget);
      out << "order " << (c.order_presented ? std::to_string(*c.order_presented) : "?") << " = "
          << c.order_target << ", " << to_string(c.verdict) << "\n";
      if (!c.note.empty()) err << c.note << "\n";
      return c.verdict == Verdict::Pass ? kOk : kFailed;
    } else if (*build) {
      const GroupSpec spec = load_group_file(group_file);
      Scene4 k = build_K(make_group(spec), relations);
      k.meta.group = group_spec_json(spec);
      k.meta.group_hash = fnv1a_hex(k.meta.group);
      emit(output, scene_json(k), out);
    } else if (*slice) {
      const Scene4 s = load_scene_file(scene_file);
      const auto fixed = parse_fix(fix);
      std::optional<std::array<Axis, 2>> free_axes;
      if (!axes.empty()) free_axes = parse_axes(axes);
      emit(output, render_svg(slice_scene(s, fixed[0], fixed[1], free_axes)), out);
    } else if (*project) {
      const Scene4 s = load_scene_file(scene_file);
      const auto a = parse_axes(axes);
      emit(output, render_svg(project_scene(s, a[0], a[1])), out);
    } else if (*figures) {
      std::filesystem::create_directories(output);
      for (const auto& [name, svg] : figure_set()) {
        write_file(std::filesystem::path(output) / name, svg);
        out << name << "\n";
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
  return kOk;
}

}  // namespace compactum::cli
