// qga: analyze quiver algebra presentations from the command line.
//
// Subcommands: analyze (quotient + gradings), gradings (lattice and
// verdict only, no quotient construction unless degree checks ask for
// one), autos (automorphism enumeration over a finite field).
//
// Exit codes: 0 success, 1 unreadable or unparsable input, 2 quotient not
// finite dimensional within --max-len, 3 invalid flags or arguments,
// 4 search space above --cap.  stdout carries only the report.

#include "qga/algebra.hpp"
#include "qga/autos.hpp"
#include "qga/gradings.hpp"
#include "qga/parser.hpp"
#include "qga/presentation.hpp"
#include "qga/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace qga;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNotFinite = 2;
constexpr int kExitUsage = 3;
constexpr int kExitSearchSpace = 4;

// Bad input content (unreadable file): exit 1, like a parse error.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad flag values or combinations: exit 3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOpts {
  std::string file;
  std::string builtin_spec;
  std::string field_name;
  int max_len = 50;
  bool json = false;
  std::vector<std::string> checks;
};

void add_common(CLI::App* sub, CommonOpts& o, bool with_checks) {
  auto* file = sub->add_option("file", o.file, "presentation file");
  auto* bi = sub->add_option("--builtin", o.builtin_spec,
                             "built-in family, e.g. q1e:2 or two_loop:3");
  file->excludes(bi);
  bi->excludes(file);
  sub->add_option("--field", o.field_name,
                  "override the coefficient field (Q, F2, F3, F4, F5, F7)");
  sub->add_option("--max-len", o.max_len,
                  "path length bound for the quotient construction")
      ->check(CLI::Range(2, 1000000));
  sub->add_flag("--json", o.json, "emit qga_report_v1 JSON instead of text");
  if (with_checks) {
    sub->add_option("--check", o.checks,
                    "comma separated arrow degrees to test (repeatable)")
        ->allow_extra_args(false);
  }
}

Presentation reinterpret_over(const Presentation& p, const Field& f) {
  Presentation out = p;
  out.field = f;
  out.relations.clear();
  for (size_t i = 0; i < p.relations.size(); ++i) {
    Element rel;
    for (const auto& [path, c] : p.relations[i].terms) {
      Scalar converted;
      try {
        converted = f.from_rational(c.v);
      } catch (const std::invalid_argument&) {
        throw UsageError("relation " + std::to_string(i) +
                         " has a coefficient with no image in " + f.name());
      }
      rel.add_term(f, path, converted);
    }
    if (rel.is_zero()) {
      throw UsageError("relation " + std::to_string(i) + " vanishes over " +
                       f.name());
    }
    out.relations.push_back(std::move(rel));
  }
  try {
    validate_presentation(out);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return out;
}

Presentation load_presentation(const CommonOpts& o) {
  Presentation p;
  if (!o.builtin_spec.empty()) {
    try {
      p = builtin(o.builtin_spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else if (!o.file.empty()) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) {
      throw InputError("cannot read file '" + o.file + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    p = parse_presentation(buf.str());  // ParseError maps to exit 1
  } else {
    throw UsageError("an input file or --builtin is required");
  }
  if (!o.field_name.empty()) {
    Field f;
    try {
      f = Field::from_name(o.field_name);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (!(f == p.field)) {
      p = reinterpret_over(p, f);
    }
  }
  return p;
}

DegreeAssignment parse_degree_list(const std::string& s, int narrows) {
  DegreeAssignment g;
  std::string token;
  std::istringstream in(s);
  while (std::getline(in, token, ',')) {
    size_t a = token.find_first_not_of(" \t");
    size_t b = token.find_last_not_of(" \t");
    if (a == std::string::npos) {
      throw UsageError("empty entry in degree list '" + s + "'");
    }
    token = token.substr(a, b - a + 1);
    size_t digits = token[0] == '-' ? 1 : 0;
    if (digits == token.size() ||
        token.find_first_not_of("0123456789", digits) != std::string::npos) {
      throw UsageError("bad degree '" + token + "' in list '" + s + "'");
    }
    g.emplace_back(token);
  }
  if (static_cast<int>(g.size()) != narrows) {
    throw UsageError("degree list '" + s + "' needs exactly " +
                     std::to_string(narrows) + " entries");
  }
  return g;
}

void fill_header(AnalysisReport& r, const Presentation& p,
                 const std::string& command) {
  r.command = command;
  r.name = p.name;
  r.vertex_count = static_cast<int>(p.quiver.vertices.size());
  r.arrow_count = static_cast<int>(p.quiver.arrows.size());
  r.connected = is_connected(p.quiver);
  r.one_vertex = p.quiver.vertices.size() == 1;
}

QuotientSection quotient_section(const QuotientAlgebra& a) {
  return QuotientSection{a.dimension(), a.radical_dims(), a.certificate()};
}

GradingsSection gradings_section(const Presentation& p) {
  GradingsSection s;
  s.lattice = grading_lattice(p);
  RigidityReport rr = rigidity_from_lattice(p, s.lattice);
  s.verdict = verdict_name(rr.verdict);
  s.witness = rr.witness;
  return s;
}

CheckSection check_section(const QuotientAlgebra& a,
                           const DegreeAssignment& g) {
  CheckSection c;
  c.assignment = g;
  for (const Element& rel : a.presentation().relations) {
    c.relations_homogeneous.push_back(is_relation_homogeneous(rel, g));
  }
  c.ideal_homogeneous = ideal_is_homogeneous(a, g);
  if (c.ideal_homogeneous) {
    c.graded = grade_algebra(a, g);
  }
  return c;
}

AutosSection autos_section(const QuotientAlgebra& a,
                           const EnumerationResult& res) {
  AutosSection s;
  s.field_name = a.field().name();
  s.estimate = enumeration_estimate(a);
  s.count = res.report.count;
  s.all_unipotent = res.report.all_unipotent;
  const Quiver& q = a.quiver();
  for (int idx : res.report.non_unipotent) {
    std::vector<std::string> images;
    for (size_t i = 0; i < q.arrows.size(); ++i) {
      images.push_back(
          q.arrows[i].name + " -> " +
          element_to_string(q, a.field(), res.automorphisms[idx].images[i]));
    }
    s.witnesses.push_back(std::move(images));
  }
  return s;
}

void emit(const AnalysisReport& r, bool json) {
  std::cout << (json ? report_to_json(r) : report_to_text(r));
}

int run_analyze(const CommonOpts& o) {
  Presentation p = load_presentation(o);
  QuotientAlgebra a = build_quotient(p, o.max_len);
  AnalysisReport r;
  fill_header(r, p, "analyze");
  r.quotient = quotient_section(a);
  r.gradings = gradings_section(p);
  int narrows = static_cast<int>(p.quiver.arrows.size());
  for (const std::string& s : o.checks) {
    r.checks.push_back(check_section(a, parse_degree_list(s, narrows)));
  }
  emit(r, o.json);
  return kExitOk;
}

int run_gradings(const CommonOpts& o, bool check_witness) {
  Presentation p = load_presentation(o);
  AnalysisReport r;
  fill_header(r, p, "gradings");
  r.gradings = gradings_section(p);
  int narrows = static_cast<int>(p.quiver.arrows.size());
  std::vector<DegreeAssignment> to_check;
  for (const std::string& s : o.checks) {
    to_check.push_back(parse_degree_list(s, narrows));
  }
  if (check_witness && r.gradings->witness) {
    to_check.push_back(*r.gradings->witness);
  }
  // Degree checks run against the quotient, so only build it when asked.
  if (!to_check.empty()) {
    QuotientAlgebra a = build_quotient(p, o.max_len);
    r.quotient = quotient_section(a);
    for (const DegreeAssignment& g : to_check) {
      r.checks.push_back(check_section(a, g));
    }
  }
  emit(r, o.json);
  return kExitOk;
}

int run_autos(const CommonOpts& o, unsigned long long cap, int jobs) {
  Presentation p = load_presentation(o);
  if (!p.field.is_finite()) {
    throw UsageError(
        "automorphism enumeration needs a finite field (use --field)");
  }
  QuotientAlgebra a = build_quotient(p, o.max_len);
  EnumerationOptions eo;
  eo.cap = Int(cap);
  eo.jobs = jobs;
  EnumerationResult res = enumerate_automorphisms(a, eo);
  AnalysisReport r;
  fill_header(r, p, "autos");
  r.quotient = quotient_section(a);
  r.automorphisms = autos_section(a, res);
  emit(r, o.json);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "integer gradings and automorphisms of quiver algebra presentations"};
  app.require_subcommand(1);

  CommonOpts analyze_opts, gradings_opts, autos_opts;
  bool check_witness = false;
  unsigned long long cap = 1ULL << 24;
  int jobs = 1;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "build the quotient, then report gradings and checks");
  add_common(analyze, analyze_opts, true);

  CLI::App* gradings = app.add_subcommand(
      "gradings", "grading lattice, shift classes, and rigidity verdict");
  add_common(gradings, gradings_opts, true);
  gradings->add_flag("--witness", check_witness,
                     "also run the degree check for the discovered witness");

  CLI::App* autos = app.add_subcommand(
      "autos", "enumerate radical-compatible automorphisms");
  add_common(autos, autos_opts, false);
  autos->add_option("--cap", cap, "abort when the search space exceeds this");
  autos->add_option("--jobs", jobs, "worker threads for the enumeration")
      ->check(CLI::Range(1, 256));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (analyze->parsed()) return run_analyze(analyze_opts);
    if (gradings->parsed()) return run_gradings(gradings_opts, check_witness);
    if (autos->parsed()) return run_autos(autos_opts, cap, jobs);
    std::cerr << "error: no subcommand\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const NotFiniteWithinBound& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNotFinite;
  } catch (const SearchSpaceExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSearchSpace;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
