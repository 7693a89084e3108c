#pragma once

#include <string>

#include "glat/checks.hpp"
#include "glat/group.hpp"
#include "glat/lattice.hpp"

namespace glat {

enum class OutputFormat { Text, Json, Dot };

OutputFormat parse_output_format(const std::string& s);  // "text" | "json" | "dot"

enum class LatticeKind { Subgroups, Centralizers, NormalCentralizers };

LatticeKind parse_lattice_kind(const std::string& s);
const char* to_string(LatticeKind kind);

// All renderers produce the complete output, including the trailing newline;
// identical inputs give byte-identical strings.

std::string render_lattice_text(const GroupTable& g, const std::string& spec,
                                LatticeKind kind, const BoundedLattice& lat);
std::string render_lattice_json(const GroupTable& g, const std::string& spec,
                                LatticeKind kind, const BoundedLattice& lat);
std::string render_lattice_dot(const GroupTable& g, const std::string& spec,
                               LatticeKind kind, const BoundedLattice& lat);

// with_timings controls whether measured elapsed milliseconds are emitted;
// off by default so identical invocations stay byte-identical.
std::string render_check_text(const GroupTable& g, const std::string& spec,
                              const CheckReport& report, bool with_timings);
std::string render_check_json(const GroupTable& g, const std::string& spec,
                              const CheckReport& report, bool with_timings);

std::string render_capability_text(const CheckReport& report, const CatalogGroups& catalog,
                                   bool with_timings);
std::string render_capability_json(const CheckReport& report, const CatalogGroups& catalog,
                                   bool with_timings);

std::string render_open_problem_text(const OpenProblemResult& result,
                                     const CatalogGroups& catalog);
std::string render_open_problem_json(const OpenProblemResult& result,
                                     const CatalogGroups& catalog);

std::string render_suite_text(const SuiteReport& report, bool with_timings);
std::string render_suite_json(const SuiteReport& report, bool with_timings);

std::string render_info_text(const GroupTable& g, const std::string& spec);
std::string render_info_json(const GroupTable& g, const std::string& spec);

}  // namespace glat
