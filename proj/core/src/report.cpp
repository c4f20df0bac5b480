#include "qga/report.hpp"

#include <json.hpp>

#include <sstream>

namespace qga {

namespace {

using json = nlohmann::ordered_json;

long long to_ll(const Int& v) { return v.convert_to<long long>(); }

json int_list(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_ll(x));
  return a;
}

json assignment_list(const std::vector<DegreeAssignment>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(int_list(v));
  return a;
}

}  // namespace

std::string report_to_json(const AnalysisReport& r) {
  json j;
  j["version"] = kReportVersion;
  j["command"] = r.command;
  j["name"] = r.name;
  j["vertex_count"] = r.vertex_count;
  j["arrow_count"] = r.arrow_count;
  j["connected"] = r.connected;
  j["one_vertex"] = r.one_vertex;

  if (r.quotient) {
    json q;
    q["dimension"] = r.quotient->dimension;
    q["radical_dims"] = r.quotient->radical_dims;
    q["certificate"] = {
        {"stabilized_at", r.quotient->certificate.stabilized_at},
        {"verified_closure", r.quotient->certificate.verified_closure},
    };
    j["quotient"] = q;
  } else {
    j["quotient"] = nullptr;
  }

  if (r.gradings) {
    json g;
    g["lattice"] = {
        {"rank", r.gradings->lattice.rank},
        {"kernel_basis", assignment_list(r.gradings->lattice.kernel_basis)},
        {"shift_basis", assignment_list(r.gradings->lattice.shift_basis)},
        {"class_invariants",
         {{"rank", r.gradings->lattice.class_invariants.rank},
          {"torsion", int_list(r.gradings->lattice.class_invariants.torsion)}}},
    };
    g["verdict"] = r.gradings->verdict;
    if (r.gradings->witness) {
      g["witness"] = int_list(*r.gradings->witness);
    } else {
      g["witness"] = nullptr;
    }
    j["gradings"] = g;
  } else {
    j["gradings"] = nullptr;
  }

  json checks = json::array();
  for (const CheckSection& c : r.checks) {
    json jc;
    jc["assignment"] = int_list(c.assignment);
    jc["relations_homogeneous"] = c.relations_homogeneous;
    jc["ideal_homogeneous"] = c.ideal_homogeneous;
    if (c.graded) {
      json dims = json::array();
      for (const auto& [deg, count] : c.graded->graded_dims) {
        dims.push_back({to_ll(deg), count});
      }
      jc["graded"] = {
          {"degrees", int_list(c.graded->degrees)},
          {"graded_dims", dims},
      };
    } else {
      jc["graded"] = nullptr;
    }
    checks.push_back(jc);
  }
  j["checks"] = checks;

  if (r.automorphisms) {
    json au;
    au["field"] = r.automorphisms->field_name;
    au["estimate"] = r.automorphisms->estimate.str();
    au["count"] = r.automorphisms->count;
    au["all_unipotent"] = r.automorphisms->all_unipotent;
    json w = json::array();
    for (const auto& images : r.automorphisms->witnesses) {
      w.push_back(images);
    }
    au["non_unipotent_witnesses"] = w;
    j["automorphisms"] = au;
  } else {
    j["automorphisms"] = nullptr;
  }
  return j.dump(2) + "\n";
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << " ";
    os << v[i];
  }
  return os.str();
}

std::string assignment_str(const DegreeAssignment& g) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.size(); ++i) {
    if (i) os << ", ";
    os << g[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

std::string report_to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "algebra " << (r.name.empty() ? "(unnamed)" : r.name) << ": "
     << r.vertex_count << (r.vertex_count == 1 ? " vertex, " : " vertices, ")
     << r.arrow_count << (r.arrow_count == 1 ? " arrow" : " arrows") << ", "
     << (r.connected ? "connected" : "not connected") << "\n";

  if (r.quotient) {
    os << "quotient:\n";
    os << "  dimension: " << r.quotient->dimension << "\n";
    os << "  radical layer dims: "
       << (r.quotient->radical_dims.empty()
               ? "(semisimple)"
               : join_ints(r.quotient->radical_dims))
       << "\n";
    os << "  certificate: stabilized at truncation "
       << r.quotient->certificate.stabilized_at << ", closure "
       << (r.quotient->certificate.verified_closure ? "verified"
                                                    : "not verified")
       << "\n";
  }

  if (r.gradings) {
    const GradingLattice& lat = r.gradings->lattice;
    os << "gradings:\n";
    os << "  lattice rank: " << lat.rank << "\n";
    os << "  kernel basis:";
    if (lat.kernel_basis.empty()) os << " (trivial)";
    for (const auto& v : lat.kernel_basis) os << " " << assignment_str(v);
    os << "\n";
    os << "  shift basis:";
    if (lat.shift_basis.empty()) os << " (trivial)";
    for (const auto& v : lat.shift_basis) os << " " << assignment_str(v);
    os << "\n";
    os << "  classes modulo shift: rank " << lat.class_invariants.rank
       << ", torsion";
    if (lat.class_invariants.torsion.empty()) {
      os << " (none)";
    } else {
      for (const Int& t : lat.class_invariants.torsion) os << " " << t;
    }
    os << "\n";
    os << "  verdict: " << r.gradings->verdict << "\n";
    if (r.gradings->witness) {
      os << "  witness: " << assignment_str(*r.gradings->witness) << "\n";
    }
  }

  for (const CheckSection& c : r.checks) {
    os << "check " << assignment_str(c.assignment) << ":\n";
    os << "  relations homogeneous:";
    if (c.relations_homogeneous.empty()) os << " (no relations)";
    for (bool b : c.relations_homogeneous) os << " " << (b ? "yes" : "no");
    os << "\n";
    os << "  ideal homogeneous: " << (c.ideal_homogeneous ? "yes" : "no")
       << "\n";
    if (c.graded) {
      os << "  graded dims:";
      for (const auto& [deg, count] : c.graded->graded_dims) {
        os << " " << deg << ":" << count;
      }
      os << "\n";
    }
  }

  if (r.automorphisms) {
    os << "automorphisms over " << r.automorphisms->field_name << ":\n";
    os << "  search space: " << r.automorphisms->estimate.str() << "\n";
    os << "  found: " << r.automorphisms->count << "\n";
    os << "  all unipotent: "
       << (r.automorphisms->all_unipotent ? "yes" : "no") << "\n";
    for (const auto& images : r.automorphisms->witnesses) {
      os << "  non-unipotent witness:\n";
      for (const std::string& s : images) os << "    " << s << "\n";
    }
  }
  return os.str();
}

}  // namespace qga
