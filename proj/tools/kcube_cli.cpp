// Command-line front end for the k-cube toolkit. Talks to the core library
// exclusively through the C API in kcube.h; JSON produced by the library is
// parsed here only to assemble the combined reports.
//
// Commands:
//   validate  check defining axioms of a structure (vh, f1, f2, rigidity,
//             factorization), exit 0 iff every requested axiom passes
//   pipeline  structure -> complex -> optional cover -> digraph -> matrices
//             -> spectra/lattice/factor type, with artifact files under --out
//   matrix    spectral report or exact integer power of a raw matrix file
//   preset    list embedded fixtures, or export one
//
// Exit codes: 0 success, 1 mathematical failure, 2 input error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kcube.h"

namespace {

using nlohmann::ordered_json;

struct CliError {
  int code;
  std::string message;
};

// Maps a C API status to a process exit code, with the library's last error.
void check(int status) {
  if (status == KCUBE_OK) return;
  throw CliError{status == KCUBE_ERR_INPUT ? 2 : 1, kc_last_error()};
}

// Adopts a malloc'ed string from the C API.
std::string take(char* s) {
  std::string out = s ? s : "";
  kc_string_free(s);
  return out;
}

template <typename T, void (*F)(T*)>
struct Deleter {
  void operator()(T* p) const { F(p); }
};
using StructurePtr =
    std::unique_ptr<kc_structure_t, Deleter<kc_structure_t, kc_structure_free>>;
using ComplexPtr =
    std::unique_ptr<kc_complex_t, Deleter<kc_complex_t, kc_complex_free>>;
using DigraphPtr =
    std::unique_ptr<kc_digraph_t, Deleter<kc_digraph_t, kc_digraph_free>>;
using MatricesPtr =
    std::unique_ptr<kc_matrices_t, Deleter<kc_matrices_t, kc_matrices_free>>;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError{2, "cannot read file: " + path};
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CliError{2, "cannot write file: " + path};
  out << content;
}

// Sends the command's primary artifact to --out when given, stdout otherwise.
void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_file(out_path, content);
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ','))
    if (!item.empty()) parts.push_back(item);
  return parts;
}

// Shared options; every command takes exactly one of --preset / --in where an
// input is needed at all.
struct CommonOpts {
  std::string preset;
  std::string in_file;
  std::string out_path;
  double tol = 1e-9;
  int max_degree_sum = 4;
  int seed = 0;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--preset", o.preset, "Embedded fixture name");
  cmd->add_option("--in", o.in_file, "Input file path");
  cmd->add_option("--out", o.out_path, "Output file or directory");
  cmd->add_option("--tol", o.tol, "Numerical tolerance")
      ->capture_default_str();
  cmd->add_option("--max-degree-sum", o.max_degree_sum,
                  "Path length bound for factorization and cycle searches")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Seed for randomized property checks")
      ->capture_default_str();
}

StructurePtr load_structure(const CommonOpts& o) {
  if (o.preset.empty() == o.in_file.empty())
    throw CliError{2, "provide exactly one of --preset or --in"};
  kc_structure_t* s = nullptr;
  if (!o.preset.empty())
    check(kc_structure_preset(o.preset.c_str(), &s));
  else
    check(kc_structure_from_json(read_file(o.in_file).c_str(), &s));
  return StructurePtr(s);
}

// validate: structure-level axiom "vh" plus digraph-level f1, f2, rigidity,
// factorization, merged into one report in the requested order.
int cmd_validate(const CommonOpts& o, const std::string& axioms_csv) {
  StructurePtr s = load_structure(o);
  std::vector<std::string> axioms = split_csv(axioms_csv);
  if (axioms.empty()) throw CliError{2, "no axioms requested"};

  ComplexPtr complex;
  DigraphPtr digraph;
  auto need_digraph = [&]() -> kc_digraph_t* {
    if (!digraph) {
      kc_complex_t* c = nullptr;
      check(kc_complex_build(s.get(), &c));
      complex.reset(c);
      kc_digraph_t* dg = nullptr;
      check(kc_digraph_from_complex(c, &dg));
      digraph.reset(dg);
    }
    return digraph.get();
  };

  ordered_json merged;
  merged["all_pass"] = true;
  merged["items"] = ordered_json::array();
  for (const std::string& axiom : axioms) {
    int pass = 0;
    char* rep = nullptr;
    if (axiom == "vh") {
      check(kc_structure_validate(s.get(), &pass, &rep));
    } else {
      check(kc_digraph_validate(need_digraph(), axiom.c_str(),
                                o.max_degree_sum, &pass, &rep));
    }
    ordered_json part = ordered_json::parse(take(rep));
    if (!pass) merged["all_pass"] = false;
    for (auto& item : part["items"]) merged["items"].push_back(item);
  }

  emit(o.out_path, merged.dump(2) + "\n");
  return merged["all_pass"].get<bool>() ? 0 : 1;
}

// Decodes --cover into a covering complex. The abelian form picks the first
// solution whose every alphabet generates the full quotient group.
ComplexPtr build_cover(const kc_structure_t* s, const kc_complex_t* base,
                       const std::string& spec, ordered_json& cover_info) {
  kc_complex_t* out = nullptr;
  if (spec == "double") {
    check(kc_complex_double_cover(base, &out));
    return ComplexPtr(out);
  }
  if (spec.rfind("hom:", 0) == 0) {
    std::string assignment = read_file(spec.substr(4));
    check(kc_complex_from_hom(s, assignment.c_str(), &out));
    cover_info["assignment"] = ordered_json::parse(assignment);
    return ComplexPtr(out);
  }
  if (spec.rfind("abelian:", 0) == 0) {
    int p = 0, rank = 0;
    char extra = 0;
    if (std::sscanf(spec.c_str() + 8, "%d,%d%c", &p, &rank, &extra) != 2)
      throw CliError{2, "cover spec must be abelian:P,RANK"};
    char* sols_text = nullptr;
    check(kc_solve_abelian(s, p, rank, &sols_text));
    ordered_json sols = ordered_json::parse(take(sols_text));
    const ordered_json* chosen = nullptr;
    for (const auto& sol : sols)
      if (sol["each_alphabet_generates"].get<bool>()) {
        chosen = &sol;
        break;
      }
    if (!chosen)
      throw CliError{1, "no abelian solution with every alphabet generating"};
    std::string assignment = (*chosen)["assignment"].dump();
    check(kc_complex_from_hom(s, assignment.c_str(), &out));
    cover_info["solutions"] = sols.size();
    cover_info["assignment"] = (*chosen)["assignment"];
    return ComplexPtr(out);
  }
  throw CliError{2, "cover spec must be double, hom:FILE, or abelian:P,RANK"};
}

// pipeline: full chain with deterministic artifacts. Verdicts are recorded in
// the report, not turned into exit codes; module errors still propagate.
int cmd_pipeline(const CommonOpts& o, const std::string& cover_spec,
                 const std::string& spectra_mode,
                 const std::string& report_kind) {
  StructurePtr s = load_structure(o);

  int structure_ok = 0;
  char* structure_report = nullptr;
  check(kc_structure_validate(s.get(), &structure_ok, &structure_report));
  ordered_json structure_items = ordered_json::parse(take(structure_report));
  if (!structure_ok)
    throw CliError{1, "structure axioms fail: " + structure_items.dump()};

  kc_complex_t* base_raw = nullptr;
  check(kc_complex_build(s.get(), &base_raw));
  ComplexPtr base(base_raw);

  ordered_json cover_info;
  ComplexPtr cover;
  const kc_complex_t* final_complex = base.get();
  if (!cover_spec.empty()) {
    cover_info["spec"] = cover_spec;
    cover = build_cover(s.get(), base.get(), cover_spec, cover_info);
    final_complex = cover.get();
  }

  long long cubes = 0;
  check(kc_complex_enumerate_cubes(const_cast<kc_complex_t*>(final_complex),
                                   &cubes));

  kc_digraph_t* dg_raw = nullptr;
  check(kc_digraph_from_complex(final_complex, &dg_raw));
  DigraphPtr dg(dg_raw);

  kc_matrices_t* ms_raw = nullptr;
  check(kc_matrices_from_digraph(dg.get(), &ms_raw));
  MatricesPtr ms(ms_raw);

  char* text = nullptr;
  check(kc_complex_to_json(final_complex, &text));
  std::string complex_json = take(text);
  check(kc_digraph_to_json(dg.get(), &text));
  std::string digraph_json = take(text);
  check(kc_matrices_to_text(ms.get(), &text));
  std::string matrices_text = take(text);
  check(kc_spectra_text(ms.get(), o.tol, &text));
  std::string spectrum_text = take(text);
  check(kc_digraph_structure_report(dg.get(), &text));
  ordered_json digraph_report = ordered_json::parse(take(text));
  check(kc_spectra_report(ms.get(), spectra_mode.c_str(), o.tol, &text));
  ordered_json spectral = ordered_json::parse(take(text));
  check(kc_spectral_radius(ms.get(), o.tol, &text));
  ordered_json radii = ordered_json::parse(take(text));
  check(kc_period_lattice(dg.get(), o.max_degree_sum, &text));
  ordered_json lattice = ordered_json::parse(take(text));
  double lambda = 0.0;
  check(kc_factor_type_lambda(dg.get(), o.max_degree_sum, o.tol, &lambda));

  ordered_json complex_doc = ordered_json::parse(complex_json);
  ordered_json report;
  report["source"] = o.preset.empty() ? o.in_file : o.preset;
  report["cover"] = cover_spec.empty() ? ordered_json() : cover_info;
  report["k"] = complex_doc["k"];
  report["num_vertices"] = complex_doc["num_vertices"];
  report["cubes"] = cubes;
  report["digraph"] = digraph_report;
  report["spectra_mode"] = spectra_mode;
  report["spectral"] = spectral;
  report["spectral_radius"] = radii;
  report["period_lattice"] = lattice;
  report["factor_type_lambda"] = lambda;
  std::string report_text = report.dump(2) + "\n";

  if (!o.out_path.empty()) {
    std::filesystem::create_directories(o.out_path);
    std::filesystem::path dir(o.out_path);
    write_file((dir / "complex.json").string(), complex_json);
    write_file((dir / "digraph.json").string(), digraph_json);
    write_file((dir / "matrices.txt").string(), matrices_text);
    write_file((dir / "spectrum.txt").string(), spectrum_text);
    write_file((dir / "report.json").string(), report_text);
  }

  if (report_kind == "summary") {
    std::cout << report_text;
  } else if (report_kind == "cubes") {
    std::cout << "cubes: " << cubes << "\n";
  } else if (report_kind == "factor-type") {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", lambda);
    std::cout << "factor-type: " << buf << "\n";
  } else {
    throw CliError{2, "report kind must be summary, cubes, or factor-type"};
  }
  return 0;
}

// matrix: --power prints an exact integer power (with --check-entries, its
// diagonal and off-diagonal value sets); otherwise a spectral report whose
// Ramanujan verdict drives the exit code.
int cmd_matrix(const CommonOpts& o, const std::string& mode, int power,
               bool check_entries) {
  if (o.preset.empty() == o.in_file.empty())
    throw CliError{2, "provide exactly one of --preset or --in"};
  kc_matrices_t* ms_raw = nullptr;
  if (!o.preset.empty()) {
    if (o.preset != "matrix25")
      throw CliError{2, "the only matrix preset is matrix25"};
    check(kc_matrices_preset25(&ms_raw));
  } else {
    check(kc_matrices_from_text(read_file(o.in_file).c_str(), &ms_raw));
  }
  MatricesPtr ms(ms_raw);

  if (power > 0) {
    char* text = nullptr;
    check(kc_matrix_power_to_text(ms.get(), 0, power, &text));
    std::string powered = take(text);
    if (!check_entries) {
      emit(o.out_path, powered);
      return 0;
    }
    std::istringstream in(powered);
    int n = 0, count = 0;
    in >> n >> count;
    std::set<long long> diagonal, off_diagonal;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long v = 0;
        in >> v;
        (i == j ? diagonal : off_diagonal).insert(v);
      }
    std::ostringstream out;
    out << "diagonal values:";
    for (long long v : diagonal) out << " " << v;
    out << "\noff-diagonal values:";
    for (long long v : off_diagonal) out << " " << v;
    out << "\n";
    emit(o.out_path, out.str());
    return 0;
  }

  char* text = nullptr;
  check(kc_spectra_report(ms.get(), mode.c_str(), o.tol, &text));
  ordered_json report = ordered_json::parse(take(text));
  emit(o.out_path, report.dump(2) + "\n");
  return report["ramanujan"].get<bool>() ? 0 : 1;
}

// preset: list fixture names, or export one (structure JSON, or matrix text
// for matrix25).
int cmd_preset(const CommonOpts& o, const std::string& action) {
  if (action == "list") {
    char* text = nullptr;
    check(kc_preset_names(&text));
    ordered_json names = ordered_json::parse(take(text));
    std::ostringstream out;
    for (const auto& name : names) out << name.get<std::string>() << "\n";
    emit(o.out_path, out.str());
    return 0;
  }
  if (o.preset.empty()) throw CliError{2, "preset export needs --preset"};
  char* text = nullptr;
  if (o.preset == "matrix25") {
    kc_matrices_t* ms_raw = nullptr;
    check(kc_matrices_preset25(&ms_raw));
    MatricesPtr ms(ms_raw);
    check(kc_matrices_to_text(ms.get(), &text));
  } else {
    kc_structure_t* s_raw = nullptr;
    check(kc_structure_preset(o.preset.c_str(), &s_raw));
    StructurePtr s(s_raw);
    check(kc_structure_to_json(s.get(), &text));
  }
  emit(o.out_path, take(text));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-cube structures, covers, and k-graph spectra"};
  app.require_subcommand(1);

  CommonOpts validate_opts;
  std::string axioms = "vh,f1,f2";
  CLI::App* validate = app.add_subcommand(
      "validate", "Check defining axioms of a structure");
  add_common(validate, validate_opts);
  validate->add_option(
      "--axioms", axioms,
      "Comma-separated: vh, f1, f2, rigidity, factorization")
      ->capture_default_str();

  CommonOpts pipeline_opts;
  std::string cover_spec;
  std::string spectra_mode = "kgraph";
  std::string report_kind = "summary";
  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "Build complex, cover, digraph, matrices, and spectra");
  add_common(pipeline, pipeline_opts);
  pipeline->add_option("--cover", cover_spec,
                       "double, hom:FILE, or abelian:P,RANK");
  pipeline->add_option("--spectra", spectra_mode, "cubical or kgraph")
      ->check(CLI::IsMember({"cubical", "kgraph"}))
      ->capture_default_str();
  pipeline->add_option("--report", report_kind,
                       "Stdout headline: summary, cubes, or factor-type")
      ->capture_default_str();

  CommonOpts matrix_opts;
  std::string matrix_mode = "cubical";
  int power = 0;
  bool check_entries = false;
  CLI::App* matrix = app.add_subcommand(
      "matrix", "Spectral report or exact power of a raw matrix file");
  add_common(matrix, matrix_opts);
  matrix->add_option("--mode", matrix_mode, "cubical or kgraph")
      ->check(CLI::IsMember({"cubical", "kgraph"}))
      ->capture_default_str();
  matrix->add_option("--power", power, "Exact integer power to compute");
  matrix->add_flag("--check-entries", check_entries,
                   "Report diagonal and off-diagonal value sets");

  CommonOpts preset_opts;
  std::string preset_action;
  CLI::App* preset =
      app.add_subcommand("preset", "List or export embedded fixtures");
  add_common(preset, preset_opts);
  preset->add_option("action", preset_action, "list or export")
      ->required()
      ->check(CLI::IsMember({"list", "export"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(validate_opts, axioms);
    if (pipeline->parsed())
      return cmd_pipeline(pipeline_opts, cover_spec, spectra_mode,
                          report_kind);
    if (matrix->parsed())
      return cmd_matrix(matrix_opts, matrix_mode, power, check_entries);
    if (preset->parsed()) return cmd_preset(preset_opts, preset_action);
  } catch (const CliError& e) {
    std::cerr << "error: " << e.message << "\n";
    return e.code;
  }
  return 2;
}
