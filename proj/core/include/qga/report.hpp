// Report assembly shared by the command line tools: one structure
// covering the analyze, gradings, and autos views, rendered either as
// human-readable text or as "qga_report_v1" JSON with every field present.

#pragma once

#include "qga/autos.hpp"
#include "qga/gradings.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qga {

inline constexpr const char* kReportVersion = "qga_report_v1";

struct QuotientSection {
  int dimension = 0;
  std::vector<int> radical_dims;
  StabilizationCertificate certificate;
};

struct GradingsSection {
  GradingLattice lattice;
  std::string verdict;
  std::optional<DegreeAssignment> witness;
};

struct CheckSection {
  DegreeAssignment assignment;
  std::vector<bool> relations_homogeneous;
  bool ideal_homogeneous = false;
  // Present only when the assignment grades the ideal.
  std::optional<GradedStructure> graded;
};

struct AutosSection {
  std::string field_name;
  Int estimate = 0;
  int count = 0;
  bool all_unipotent = true;
  // Images of the non-unipotent witnesses, rendered per arrow.
  std::vector<std::vector<std::string>> witnesses;
};

struct AnalysisReport {
  std::string command;  // "analyze", "gradings", "autos"
  std::string name;
  int vertex_count = 0;
  int arrow_count = 0;
  bool connected = false;
  bool one_vertex = false;
  std::optional<QuotientSection> quotient;
  std::optional<GradingsSection> gradings;
  std::vector<CheckSection> checks;
  std::optional<AutosSection> automorphisms;
};

std::string report_to_json(const AnalysisReport& r);
std::string report_to_text(const AnalysisReport& r);

}  // namespace qga
