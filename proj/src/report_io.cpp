#include "bhk/report_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "bhk/error.hpp"

namespace bhk::io {

namespace {

const char* const kMatrixKey = "matrix";
const char* const kGroupKey = "group";
const char* const kCharKey = "characteristic";

[[noreturn]] void parse_fail(const std::string& message) { fail(ErrorCode::ParseError, message); }

Integer integer_field(const Json& v, const std::string& field) {
  if (v.is_number_integer()) {
    if (v.is_number_unsigned()) return Integer(std::to_string(v.get<std::uint64_t>()));
    return Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() > start &&
        std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                    [](char c) { return c >= '0' && c <= '9'; }))
      return Integer(s);
  }
  parse_fail("field " + field + ": expected an integer, got " + v.dump());
}

std::array<Integer, 4> vector4_field(const Json& v, const std::string& field) {
  if (!v.is_array() || v.size() != 4)
    parse_fail("field " + field + ": expected an array of 4 integers, got " + v.dump());
  std::array<Integer, 4> out;
  for (std::size_t i = 0; i < 4; ++i)
    out[i] = integer_field(v[i], field + "[" + std::to_string(i) + "]");
  return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < std::min(byte > 0 ? byte - 1 : 0, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

GroupElement reduce(const std::array<Integer, 4>& raw, std::int64_t d) {
  std::array<std::int64_t, 4> c{};
  for (int i = 0; i < 4; ++i) {
    Integer r = raw[i] % d;
    if (sgn(r) < 0) r += d;
    c[i] = r.get_si();
  }
  return GroupElement(d, c);
}

Json matrix_json(const IntMatrix4& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(to_json(x));
    rows.push_back(std::move(r));
  }
  return rows;
}

Json vector_json(const IntVector4& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json elements_json(const std::vector<GroupElement>& elements) {
  Json out = Json::array();
  for (const auto& g : elements) out.push_back(to_json(g));
  return out;
}

Json groups_json(const SymmetryData& sym, const SymmetrySubgroup& g) {
  return Json{{"aut_order", sym.aut.order()},
              {"sl_order", sym.sl.order()},
              {"j_order", sym.j_group.order()},
              {"j_element", to_json(sym.j)},
              {"g_order", g.order()},
              {"g_generators", elements_json(g.generators())},
              {"g_is_j", g == sym.j_group},
              {"g_is_sl", g == sym.sl}};
}

Json base_document(Command command) {
  return Json{{"command", command_name(command)}, {"tool_version", kToolVersion}};
}

void add_analysis(Json& doc, const ResolvedInput& r) {
  doc["delsarte"] = delsarte_json(r.matrix);
  doc["atoms"] = atoms_json(r.matrix);
  doc["groups"] = groups_json(r.symmetries, r.group);
  doc["adequacy"] = adequacy_json(matrix_adequacy(r.matrix, r.characteristic));
  doc["provenance"]["delsarte"] =
      "exact rational inverse; q scaled to coprime integers, d the least m with m A^-1 integral";
  doc["provenance"]["groups"] =
      "Aut enumerated from the columns of B mod d; SL by coordinate sum; J generated by (d/h) q";
}

void add_mirror(Json& doc, const MirrorPair& mp) {
  const BhkPair& m = mp.mirror;
  doc["mirror"] = Json{{"delsarte", delsarte_json(m.matrix)},
                       {"atoms", atoms_json(m.matrix)},
                       {"groups", groups_json(m.symmetries, m.group)},
                       {"adequacy", adequacy_json(m.adequacy)}};
  doc["provenance"]["mirror"] =
      "G^T is the annihilator of G in Aut(F_{A^T}) under <a,b> = a A b^T mod d^2";
}

BhkPair adequate_pair(const ResolvedInput& r) {
  BhkPair pair = make_bhk_pair(r.matrix, r.group, r.characteristic);
  if (!pair.adequacy.verdict) {
    std::string why;
    for (const auto& d : pair.adequacy.diagnostics)
      if (d.rfind("note:", 0) != 0 && d.rfind("quasi-smooth:", 0) != 0) why += "; " + d;
    fail(ErrorCode::PairNotAdequate, "the BHK pair is not adequate" + why);
  }
  return pair;
}

std::string methods_provenance(const PicardReport& rep) {
  std::string out;
  auto add = [&out](const char* name) { out += (out.empty() ? "" : ", ") + std::string(name); };
  if (rep.closed_form) add("closed form 22 - phi(h) / supersingular test p^l = -1");
  if (rep.kelly) add("Kelly count 22 - #(I_d(p) n G) from the definition");
  if (rep.orbit) add("orbit characterization of I_d(p)");
  return out + (rep.closed_form.has_value() + rep.kelly.has_value() + rep.orbit.has_value() > 1
                    ? " (cross-checked, all agree)"
                    : "");
}

Json run_resolved(Command command, const ResolvedInput& r, const CommandOptions& options,
                  int& exit_status) {
  Json doc = base_document(command);
  doc["input"] = echo(r.spec);
  switch (command) {
    case Command::Validate: {
      const AdequacyReport rep = adequacy(r.matrix, r.group, r.characteristic);
      doc["adequacy"] = adequacy_json(rep);
      if (!rep.verdict) exit_status = kExitInputError;
      break;
    }
    case Command::Analyze:
      add_analysis(doc, r);
      break;
    case Command::Mirror: {
      add_analysis(doc, r);
      add_mirror(doc, mirror_pair(adequate_pair(r)));
      break;
    }
    case Command::Subgroups: {
      add_analysis(doc, r);
      const DelsarteMatrix mt = transpose(r.matrix, r.characteristic);
      const SymmetryData sym_t = symmetry_data(mt);
      Json list = Json::array();
      for (const auto& g : enumerate_intermediate(r.symmetries.j_group, r.symmetries.sl)) {
        const SymmetrySubgroup dual = dual_group(r.matrix, sym_t.aut, g);
        list.push_back(Json{{"order", g.order()},
                            {"generators", elements_json(g.generators())},
                            {"is_j", g == r.symmetries.j_group},
                            {"is_sl", g == r.symmetries.sl},
                            {"dual", Json{{"order", dual.order()},
                                          {"generators", elements_json(dual.generators())},
                                          {"is_j", dual == sym_t.j_group},
                                          {"is_sl", dual == sym_t.sl}}}});
      }
      doc["subgroup_count"] = list.size();
      doc["subgroups"] = std::move(list);
      doc["mirror_adequacy"] = adequacy_json(matrix_adequacy(mt, r.characteristic));
      doc["provenance"]["subgroups"] =
          "every G with J <= G <= SL, grown from J one SL element at a time; duals by annihilator";
      break;
    }
    case Command::Picard: {
      add_analysis(doc, r);
      const MirrorPair mp = mirror_pair(adequate_pair(r));
      add_mirror(doc, mp);
      const PicardReport rep = picard_report(mp, options.method);
      doc["picard"] = picard_json(rep);
      doc["provenance"]["picard"] = methods_provenance(rep);
      break;
    }
    case Command::Scan: {
      add_analysis(doc, r);
      const MirrorPair mp = mirror_pair(adequate_pair(r));
      add_mirror(doc, mp);
      doc["scan"] = scan_json(prime_scan(mp, primes_up_to(options.primes_up_to)));
      doc["scan"]["primes_up_to"] = options.primes_up_to;
      doc["provenance"]["scan"] =
          "closed form per prime; residue rules list every unit class mod h_T and mod h";
      break;
    }
    case Command::Batch:
      fail(ErrorCode::InvalidArgument, "batch runs on a directory");
  }
  return doc;
}

Json failure_document(Command command, const BhkError& e, const std::optional<InputSpec>& spec) {
  Json doc = base_document(command);
  doc["error"] = error_json(e);
  if (spec) doc["input"] = echo(*spec);
  if (const auto* m = dynamic_cast<const MirrorNotAdequateError*>(&e))
    doc["mirror_adequacy"] = adequacy_json(m->report());
  return doc;
}

void render_text(const Json& v, const std::string& path, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items())
      render_text(value, path.empty() ? key : path + "." + key, os);
    return;
  }
  if (v.is_array() && std::any_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
    for (std::size_t i = 0; i < v.size(); ++i)
      render_text(v[i], path + "[" + std::to_string(i) + "]", os);
    return;
  }
  os << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
}

}  // namespace

Json to_json(const Integer& n) {
  if (n.fits_slong_p()) return Json(static_cast<std::int64_t>(n.get_si()));
  return Json(n.get_str());
}

Json to_json(const GroupElement& g) {
  return Json::array({g[0], g[1], g[2], g[3]});
}

Json to_json(const SymmetrySubgroup& g) {
  return Json{{"modulus", g.modulus()},
              {"order", g.order()},
              {"generators", elements_json(g.generators())}};
}

InputSpec parse_input_syntax(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte);
    parse_fail("malformed JSON at line " + std::to_string(line) + ", column " +
               std::to_string(column) + ": " + e.what());
  }
  if (!doc.is_object()) parse_fail("top level must be a JSON object");
  for (const auto& [key, value] : doc.items())
    if (key != kMatrixKey && key != kGroupKey && key != kCharKey)
      parse_fail("unknown key \"" + key + "\" (allowed: matrix, group, characteristic)");
  if (!doc.contains(kMatrixKey)) parse_fail("missing key \"matrix\"");
  if (!doc.contains(kGroupKey)) parse_fail("missing key \"group\"");

  InputSpec spec;
  const Json& m = doc[kMatrixKey];
  if (!m.is_array() || m.size() != 4)
    parse_fail("field matrix: expected 4 rows, got " + m.dump());
  for (std::size_t i = 0; i < 4; ++i)
    spec.matrix[i] = vector4_field(m[i], "matrix[" + std::to_string(i) + "]");

  const Json& g = doc[kGroupKey];
  if (g.is_string()) {
    const auto& s = g.get_ref<const std::string&>();
    if (s == "J")
      spec.group.kind = GroupSpec::Kind::J;
    else if (s == "SL")
      spec.group.kind = GroupSpec::Kind::SL;
    else
      parse_fail("field group: unknown keyword \"" + s + "\" (expected \"J\" or \"SL\")");
  } else if (g.is_object()) {
    for (const auto& [key, value] : g.items())
      if (key != "generators") parse_fail("field group: unknown key \"" + key + "\"");
    if (!g.contains("generators") || !g["generators"].is_array())
      parse_fail("field group: expected {\"generators\": [[a0,a1,a2,a3], ...]}");
    spec.group.kind = GroupSpec::Kind::Generators;
    const Json& gens = g["generators"];
    for (std::size_t i = 0; i < gens.size(); ++i)
      spec.group.generators.push_back(
          vector4_field(gens[i], "group.generators[" + std::to_string(i) + "]"));
  } else {
    parse_fail("field group: expected \"J\", \"SL\" or {\"generators\": [...]}, got " + g.dump());
  }

  if (doc.contains(kCharKey)) spec.characteristic = integer_field(doc[kCharKey], kCharKey);
  return spec;
}

ResolvedInput resolve(const InputSpec& spec) {
  try {
    const Characteristic ch(spec.characteristic);
    DelsarteMatrix m = build_delsarte(spec.matrix, ch);
    SymmetryData sym = symmetry_data(m);
    const std::int64_t d = sym.aut.modulus();

    std::optional<SymmetrySubgroup> g;
    switch (spec.group.kind) {
      case GroupSpec::Kind::J:
        g = sym.j_group;
        break;
      case GroupSpec::Kind::SL:
        g = sym.sl;
        break;
      case GroupSpec::Kind::Generators: {
        std::vector<GroupElement> gens;
        for (const auto& raw : spec.group.generators) {
          GroupElement e = reduce(raw, d);
          if (!sym.sl.contains(e))
            fail(ErrorCode::SemanticError, "generator " + e.to_string() + " (reduced mod d = " +
                                               std::to_string(d) + ") is not in SL(F_A)");
          gens.push_back(e);
        }
        g = subgroup_generated(d, gens);
        if (!sym.j_group.is_subgroup_of(*g))
          fail(ErrorCode::SemanticError,
               "the generated group does not contain J_{F_A} = <" + sym.j.to_string() + ">");
        break;
      }
    }
    return ResolvedInput{spec, std::move(m), ch, std::move(sym), std::move(*g)};
  } catch (const BhkError& e) {
    if (is_internal(e.code()) || e.code() == ErrorCode::SemanticError) throw;
    fail(ErrorCode::SemanticError, std::string(error_code_name(e.code())) + ": " + e.what());
  }
}

InputSpec parse_input(std::string_view text) {
  InputSpec spec = parse_input_syntax(text);
  resolve(spec);
  return spec;
}

Json echo(const InputSpec& spec) {
  Json group;
  switch (spec.group.kind) {
    case GroupSpec::Kind::J:
      group = "J";
      break;
    case GroupSpec::Kind::SL:
      group = "SL";
      break;
    case GroupSpec::Kind::Generators: {
      Json gens = Json::array();
      for (const auto& v : spec.group.generators) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(to_json(x));
        gens.push_back(std::move(row));
      }
      group = Json{{"generators", std::move(gens)}};
      break;
    }
  }
  return Json{{kMatrixKey, matrix_json(spec.matrix)},
              {kGroupKey, std::move(group)},
              {kCharKey, to_json(spec.characteristic)}};
}

Json delsarte_json(const DelsarteMatrix& m) {
  return Json{{"matrix", matrix_json(m.matrix())},
              {"det", to_json(m.det())},
              {"q", vector_json(m.weights())},
              {"h", to_json(m.degree_h())},
              {"d", to_json(m.exponent_d())},
              {"B", matrix_json(m.b_matrix())},
              {"calabi_yau", is_calabi_yau(m)}};
}

Json adequacy_json(const AdequacyReport& rep) {
  return Json{{"quasi_smooth", rep.quasi_smooth},
              {"well_formed", rep.well_formed},
              {"weight_triple_gcd_ok", rep.weight_triple_gcd_ok},
              {"char_ok", rep.char_ok},
              {"verdict", rep.verdict},
              {"diagnostics", rep.diagnostics}};
}

Json atoms_json(const DelsarteMatrix& m) {
  try {
    const AtomicDecomposition dec = atomic_decomposition(m);
    Json atoms = Json::array();
    for (const auto& a : dec.atoms) atoms.push_back(describe(a));
    return Json{{"invertible", true},
                {"atoms", std::move(atoms)},
                {"row_of_variable", dec.row_of_variable}};
  } catch (const BhkError& e) {
    if (e.code() != ErrorCode::NotInvertiblePotential) throw;
    return Json{{"invertible", false}, {"reason", e.what()}};
  }
}

Json picard_json(const PicardReport& rep) {
  Json methods = Json::object();
  auto put = [&methods](const char* name, const std::optional<RhoPair>& rho) {
    if (rho) methods[name] = Json{{"rho_primal", rho->primal}, {"rho_mirror", rho->mirror}};
  };
  put("closed", rep.closed_form);
  put("kelly", rep.kelly);
  put("orbit", rep.orbit);
  Json out{{"characteristic", to_json(rep.characteristic.value())},
           {"rho_primal", rep.rho_primal},
           {"rho_mirror", rep.rho_mirror},
           {"methods", std::move(methods)}};
  if (rep.count_in_dual) out["count_in_dual"] = *rep.count_in_dual;
  if (rep.count_in_group) out["count_in_group"] = *rep.count_in_group;
  return out;
}

Json scan_json(const ScanReport& rep) {
  auto integers = [](const std::vector<Integer>& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(to_json(x));
    return out;
  };
  auto rule = [&](const ResidueRule& r) {
    return Json{{"modulus", to_json(r.modulus)},
                {"supersingular_classes", integers(r.supersingular_classes)},
                {"supersingular_rho", kK3SecondBetti},
                {"ordinary_classes", integers(r.ordinary_classes)},
                {"ordinary_rho", r.ordinary_rho}};
  };
  Json rows = Json::array();
  for (const auto& row : rep.rows)
    rows.push_back(Json{{"p", to_json(row.prime)},
                        {"p_mod_h_t", to_json(row.residue_mod_h_t)},
                        {"p_mod_h", to_json(row.residue_mod_h)},
                        {"rho_primal", row.rho.primal},
                        {"rho_mirror", row.rho.mirror}});
  Json skipped = Json::array();
  for (const auto& [p, reason] : rep.skipped)
    skipped.push_back(Json{{"p", to_json(p)}, {"reason", reason}});
  return Json{{"rows", std::move(rows)},
              {"skipped", std::move(skipped)},
              {"primal_rule", rule(rep.primal_rule)},
              {"mirror_rule", rule(rep.mirror_rule)}};
}

Json error_json(const BhkError& e) {
  return Json{{"code", error_code_name(e.code())}, {"message", e.what()}};
}

std::optional<Command> parse_command(std::string_view name) {
  for (auto c : {Command::Validate, Command::Analyze, Command::Mirror, Command::Subgroups,
                 Command::Picard, Command::Scan, Command::Batch})
    if (command_name(c) == name) return c;
  return std::nullopt;
}

std::string_view command_name(Command c) {
  switch (c) {
    case Command::Validate: return "validate";
    case Command::Analyze: return "analyze";
    case Command::Mirror: return "mirror";
    case Command::Subgroups: return "subgroups";
    case Command::Picard: return "picard";
    case Command::Scan: return "scan";
    case Command::Batch: return "batch";
  }
  return "?";
}

CommandResult run_on_text(Command command, std::string_view text, const CommandOptions& options) {
  CommandResult result;
  std::optional<InputSpec> spec;
  try {
    spec = parse_input_syntax(text);
    const ResolvedInput r = resolve(*spec);
    result.documents.push_back(run_resolved(command, r, options, result.exit_status));
  } catch (const BhkError& e) {
    result.documents.push_back(failure_document(command, e, spec));
    result.exit_status = is_internal(e.code()) ? kExitInternalError : kExitInputError;
  } catch (const std::exception& e) {
    const BhkError wrapped(ErrorCode::InternalError, e.what());
    result.documents.push_back(failure_document(command, wrapped, spec));
    result.exit_status = kExitInternalError;
  }
  return result;
}

CommandResult run_command(Command command, const std::filesystem::path& target,
                          const CommandOptions& options) {
  namespace fs = std::filesystem;
  if (command == Command::Batch) {
    CommandResult result;
    std::error_code ec;
    if (!fs::is_directory(target, ec)) {
      result.documents.push_back(failure_document(
          command, BhkError(ErrorCode::ParseError, "not a directory: " + target.string()),
          std::nullopt));
      result.exit_status = kExitInputError;
      return result;
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(target))
      if (entry.is_regular_file() && entry.path().extension() == ".json")
        files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename() < b.filename(); });
    for (const auto& f : files) {
      CommandResult one = run_command(Command::Picard, f, options);
      for (auto& doc : one.documents) result.documents.push_back(std::move(doc));
      result.exit_status = std::max(result.exit_status, one.exit_status);
    }
    return result;
  }

  std::ifstream in(target, std::ios::binary);
  CommandResult result;
  if (!in) {
    result.documents.push_back(failure_document(
        command, BhkError(ErrorCode::ParseError, "cannot read " + target.string()), std::nullopt));
    result.exit_status = kExitInputError;
  } else {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    result = run_on_text(command, buffer.str(), options);
  }
  for (auto& doc : result.documents) doc["input_file"] = target.filename().string();
  return result;
}

std::string render(const Json& document, Format format) {
  if (format == Format::Json) return document.dump();
  std::ostringstream os;
  render_text(document, "", os);
  return os.str();
}

}  // namespace bhk::io
