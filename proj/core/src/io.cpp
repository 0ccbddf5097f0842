#include "compactum/io.hpp"

#include <fstream>
#include "json.hpp"
#include <sstream>

#include "compactum/error.hpp"

namespace compactum {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorCode::ValidationError, msg); }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                           std::to_string(column) + ": " + e.what());
  }
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) invalid(where + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where + ": missing \"" + key + "\"");
  return *it;
}

std::uint64_t positive(const Json& v, const std::string& what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 1) invalid(what + " must be a positive integer");
  return v.get<std::uint64_t>();
}

GroupSpec spec_from(const Json& j, const std::string& where) {
  const Json& kind = field(j, "kind", where);
  if (!kind.is_string()) invalid(where + ": \"kind\" must be a string");
  const auto k = kind.get<std::string>();
  GroupSpec spec;
  if (k == "table") {
    spec.kind = GroupKind::Table;
    const std::uint64_t order = positive(field(j, "order", where), where + ".order");
    const Json& table = field(j, "table", where);
    if (!table.is_array() || table.size() != order) {
      invalid(where + ": \"table\" must have " + std::to_string(order) + " rows");
    }
    for (const auto& row : table) {
      if (!row.is_array() || row.size() != order) {
        invalid(where + ": every table row must have " + std::to_string(order) + " entries");
      }
      std::vector<std::int64_t> r;
      for (const auto& x : row) {
        if (!x.is_number_integer()) invalid(where + ": table entries must be integers");
        r.push_back(x.get<std::int64_t>());
      }
      spec.table.push_back(std::move(r));
    }
  } else if (k == "cyclic" || k == "symmetric" || k == "dihedral") {
    spec.kind = k == "cyclic" ? GroupKind::Cyclic : k == "symmetric" ? GroupKind::Symmetric : GroupKind::Dihedral;
    spec.n = positive(field(j, "n", where), where + ".n");
  } else if (k == "quaternion8") {
    spec.kind = GroupKind::Quaternion8;
  } else if (k == "integers") {
    spec.kind = GroupKind::Integers;
  } else if (k == "product") {
    spec.kind = GroupKind::Product;
    const Json& factors = field(j, "factors", where);
    if (!factors.is_array() || factors.empty()) invalid(where + ": \"factors\" must be a nonempty array");
    for (std::size_t i = 0; i < factors.size(); ++i) {
      spec.factors.push_back(spec_from(factors[i], where + ".factors[" + std::to_string(i) + "]"));
    }
  } else {
    throw Error(ErrorCode::UnknownGroupKind, where + ": unknown group kind \"" + k + "\"");
  }
  return spec;
}

Json spec_to(const GroupSpec& spec) {
  Json j;
  switch (spec.kind) {
    case GroupKind::Table:
      j["kind"] = "table";
      j["order"] = spec.table.size();
      j["table"] = spec.table;
      break;
    case GroupKind::Cyclic: j["kind"] = "cyclic"; j["n"] = spec.n; break;
    case GroupKind::Symmetric: j["kind"] = "symmetric"; j["n"] = spec.n; break;
    case GroupKind::Dihedral: j["kind"] = "dihedral"; j["n"] = spec.n; break;
    case GroupKind::Quaternion8: j["kind"] = "quaternion8"; break;
    case GroupKind::Integers: j["kind"] = "integers"; break;
    case GroupKind::Product: {
      j["kind"] = "product";
      Json factors = Json::array();
      for (const auto& f : spec.factors) factors.push_back(spec_to(f));
      j["factors"] = std::move(factors);
      break;
    }
  }
  return j;
}

[[noreturn]] void bad_line(std::size_t line, const std::string& msg) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_index(std::string_view s, std::size_t line) {
  if (s.empty() || s.size() > 19) bad_line(line, "bad index \"" + std::string(s) + "\"");
  std::uint64_t v = 0;
  for (const char c : s) {
    if (c < '0' || c > '9') bad_line(line, "bad index \"" + std::string(s) + "\"");
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (v == 0) bad_line(line, "indices start at 1");
  return v;
}

PrimitiveKind parse_kind(const std::string& s) {
  if (s == "segment") return PrimitiveKind::Segment;
  if (s == "patch") return PrimitiveKind::Patch;
  if (s == "tri") return PrimitiveKind::Triangle;
  invalid("unknown primitive kind \"" + s + "\"");
}

Json meta_to(const SceneMeta& m) {
  Json j;
  j["group"] = m.group.empty() ? Json(nullptr) : Json::parse(m.group);
  j["group_hash"] = m.group_hash;
  j["relations"] = m.relations;
  j["generators"] = m.generators;
  j["version"] = m.version;
  return j;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view json_text) {
  const GroupSpec spec = spec_from(parse_json(json_text), "group");
  make_group(spec);
  return spec;
}

GroupSpec load_group_file(const std::filesystem::path& path) { return parse_group_spec(read_file(path)); }

std::string group_spec_json(const GroupSpec& spec) { return spec_to(spec).dump(); }

std::string presentation_text(const TrianglePresentation& p, const GroupOracle& g) {
  std::string out;
  for (const auto& [n, value] : p.generator_values) {
    out += "gen " + std::to_string(n) + " = " + g.label(value) + "\n";
  }
  for (const auto& r : p.relations) {
    out += "rel " + std::to_string(r.label) + ":";
    for (const auto i : r.indices()) out += " g" + std::to_string(i);
    out += "\n";
  }
  return out;
}

TrianglePresentation parse_presentation(std::string_view text, const GroupOracle& g) {
  const GeneratorSequence seq(g);
  TrianglePresentation p;
  std::size_t line_no = 0;
  bool in_relations = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) bad_line(line_no + 1, "missing final newline");
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (line.starts_with("gen ")) {
      if (in_relations) bad_line(line_no, "generator after relations");
      const std::size_t eq = line.find(" = ");
      if (eq == std::string_view::npos) bad_line(line_no, "expected \"gen <n> = <label>\"");
      const std::uint64_t n = parse_index(line.substr(4, eq - 4), line_no);
      const std::string label(line.substr(eq + 3));
      const ElementId v = seq.value(n);
      if (g.label(v) != label) {
        throw Error(ErrorCode::ValidationError, "line " + std::to_string(line_no) + ": g" +
                                                    std::to_string(n) + " is " + g.label(v) +
                                                    ", not " + label);
      }
      if (!p.generator_values.emplace(n, v).second) bad_line(line_no, "duplicate generator");
    } else if (line.starts_with("rel ")) {
      in_relations = true;
      const std::size_t colon = line.find(':');
      if (colon == std::string_view::npos) bad_line(line_no, "expected \"rel <n>: ...\"");
      const std::uint64_t label = parse_index(line.substr(4, colon - 4), line_no);
      if (label != p.relations.size() + 1) bad_line(line_no, "relations must be numbered 1, 2, ...");
      std::vector<std::uint64_t> idx;
      std::string_view rest = line.substr(colon + 1);
      while (!rest.empty()) {
        if (!rest.starts_with(" g")) bad_line(line_no, "expected \" g<i>\"");
        rest.remove_prefix(2);
        const std::size_t end = std::min(rest.find(' '), rest.size());
        idx.push_back(parse_index(rest.substr(0, end), line_no));
        rest.remove_prefix(end);
      }
      if (idx.empty() || idx.size() > 3) bad_line(line_no, "relations have 1 to 3 letters");
      for (const auto i : idx) {
        if (!p.generator_values.contains(i)) bad_line(line_no, "g" + std::to_string(i) + " not declared");
      }
      Relation r = idx.size() == 1   ? Relation::unit(label, idx[0])
                   : idx.size() == 2 ? Relation::pair(label, idx[0], idx[1])
                                     : Relation::triple(label, idx[0], idx[1], idx[2]);
      if (r.kind == RelationKind::Triple) p.type3_used.insert(idx.begin(), idx.end());
      p.relations.push_back(r);
    } else {
      bad_line(line_no, "unrecognized line");
    }
  }
  return p;
}

std::string scene_json(const Scene4& s) {
  std::string out = "{\n  \"meta\": " + meta_to(s.meta).dump() + ",\n  \"primitives\": [";
  bool first = true;
  for (const auto& prim : s.primitives()) {
    Json j;
    j["kind"] = to_string(prim.kind);
    j["label"] = to_string(prim.label);
    j["oriented"] = prim.oriented;
    Json pts = Json::array();
    for (const auto& p : prim.points) {
      Json c = Json::array();
      for (const auto& x : p.x) c.push_back(to_text(x));
      pts.push_back(std::move(c));
    }
    j["points"] = std::move(pts);
    out += first ? "\n    " : ",\n    ";
    out += j.dump();
    first = false;
  }
  out += first ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

Scene4 parse_scene(std::string_view json_text) {
  const Json j = parse_json(json_text);
  Scene4 s;
  try {
    const Json& meta = field(j, "meta", "scene");
    const Json& group = field(meta, "group", "meta");
    s.meta.group = group.is_null() ? "" : group.dump();
    s.meta.group_hash = field(meta, "group_hash", "meta").get<std::string>();
    s.meta.relations = field(meta, "relations", "meta").get<std::uint64_t>();
    s.meta.generators = field(meta, "generators", "meta").get<std::uint64_t>();
    s.meta.version = field(meta, "version", "meta").get<std::string>();

    const Json& prims = field(j, "primitives", "scene");
    if (!prims.is_array()) invalid("\"primitives\" must be an array");
    for (const auto& pj : prims) {
      Primitive4 prim;
      prim.kind = parse_kind(field(pj, "kind", "primitive").get<std::string>());
      prim.label = parse_label(field(pj, "label", "primitive").get<std::string>());
      if (const auto it = pj.find("oriented"); it != pj.end()) prim.oriented = it->get<bool>();
      for (const auto& c : field(pj, "points", "primitive")) {
        if (!c.is_array() || c.size() != 4) invalid(to_string(prim.label) + ": points have 4 coordinates");
        Point4 p;
        for (std::size_t k = 0; k < 4; ++k) p.x[k] = parse_rational(c[k].get<std::string>());
        prim.points.push_back(std::move(p));
      }
      const std::size_t want = prim.kind == PrimitiveKind::Segment ? 2 : prim.kind == PrimitiveKind::Patch ? 4 : 3;
      if (prim.points.size() != want) {
        invalid(to_string(prim.label) + ": expected " + std::to_string(want) + " points");
      }
      s.add(std::move(prim));
    }
  } catch (const Json::exception& e) {
    invalid(std::string("scene: ") + e.what());
  }
  s.finalize();
  return s;
}

Scene4 load_scene_file(const std::filesystem::path& path) { return parse_scene(read_file(path)); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::ValidationError, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::ValidationError, "write failed for " + path.string());
}

}  // namespace compactum
