#include "cli.hpp"

#include <algorithm>
#include <fstream>

#include <CLI11.hpp>

#include "glat/checks.hpp"
#include "glat/errors.hpp"
#include "glat/render.hpp"
#include "glat/subgroups.hpp"
#include "glat/version.hpp"

namespace glat::cli {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInvalidInput = 3;
constexpr int kExitCapExceeded = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ClosureTooLarge:
    case ErrorKind::OrderCapExceeded:
      return kExitCapExceeded;
    default:
      return kExitInvalidInput;
  }
}

struct CommonOpts {
  std::string format = "text";
  std::string out_path;
  int jobs = 1;
  int cap_order = kDefaultElementCap;
  int cap_subgroup = kDefaultSubgroupOrderCap;
  bool timings = false;

  Caps caps() const { return Caps{cap_order, cap_subgroup}; }
};

void add_common(CLI::App* sub, CommonOpts* opts, bool dot_allowed) {
  sub->add_option("--format", opts->format, "Output format")
      ->check(dot_allowed ? CLI::IsMember({"text", "json", "dot"})
                          : CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  sub->add_option("--out", opts->out_path, "Write the report to a file instead of stdout");
  sub->add_option("--jobs", opts->jobs, "Worker threads for per-group work")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  sub->add_option("--cap-order", opts->cap_order, "Element cap for constructed groups")
      ->check(CLI::Range(1, 1000000))
      ->capture_default_str();
  sub->add_option("--cap-subgroup-order", opts->cap_subgroup,
                  "Order cap for full subgroup enumeration")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  sub->add_flag("--timings", opts->timings,
                "Include measured times in reports (off keeps output byte-stable)");
}

int emit(const CommonOpts& opts, const std::string& rendered, std::ostream& out,
         std::ostream& err) {
  if (!opts.out_path.empty()) {
    std::ofstream f(opts.out_path, std::ios::binary);
    if (!f) {
      err << "cannot open output file: " << opts.out_path << "\n";
      return kExitInvalidInput;
    }
    f << rendered;
    return kExitPass;
  }
  out << rendered;
  return kExitPass;
}

int run_lattice(const CommonOpts& opts, const std::string& group, const std::string& which,
                std::ostream& out, std::ostream& err) {
  const GroupSpec spec = parse_group_spec(group);
  const GroupTable g = realize_group(spec, opts.cap_order);
  const LatticeKind kind = parse_lattice_kind(which);

  std::vector<SubgroupSet> elements;
  switch (kind) {
    case LatticeKind::Subgroups:
      elements = all_subgroups(g, opts.cap_subgroup);
      break;
    case LatticeKind::Centralizers:
      elements = centralizer_lattice_elements(g);
      break;
    case LatticeKind::NormalCentralizers:
      elements = normal_centralizer_lattice_elements(g, opts.cap_subgroup);
      break;
  }
  const BoundedLattice lat = BoundedLattice::build(std::move(elements));

  std::string rendered;
  switch (parse_output_format(opts.format)) {
    case OutputFormat::Text:
      rendered = render_lattice_text(g, spec.canonical, kind, lat);
      break;
    case OutputFormat::Json:
      rendered = render_lattice_json(g, spec.canonical, kind, lat);
      break;
    case OutputFormat::Dot:
      rendered = render_lattice_dot(g, spec.canonical, kind, lat);
      break;
  }
  return emit(opts, rendered, out, err);
}

int run_check(const CommonOpts& opts, const std::string& group, const std::string& claim,
              std::ostream& out, std::ostream& err) {
  const GroupSpec spec = parse_group_spec(group);
  const GroupTable g = realize_group(spec, opts.cap_order);

  CheckReport report;
  if (claim == "theorem1")
    report = check_theorem1(g);
  else if (claim == "corollary2")
    report = check_corollary2(g);
  else if (claim == "corollary3")
    report = check_corollary3(g);
  else if (claim == "closure")
    report = check_closure_and_double_centralizer(g);
  else if (claim == "union-argument")
    report = check_union_argument(g, opts.cap_subgroup);
  else
    report = check_atoms_bound(g);

  const std::string rendered = parse_output_format(opts.format) == OutputFormat::Json
                                   ? render_check_json(g, spec.canonical, report, opts.timings)
                                   : render_check_text(g, spec.canonical, report, opts.timings);
  const int code = emit(opts, rendered, out, err);
  if (code != kExitPass) return code;
  return report.passed ? kExitPass : kExitCounterexample;
}

int run_search(const CommonOpts& opts, const std::string& kind, const std::string& target,
               int max_order, bool products, bool big_sn, std::ostream& out,
               std::ostream& err) {
  const Catalog catalog = default_catalog(max_order, products, big_sn);
  const CatalogGroups groups = realize_catalog(catalog, opts.caps(), opts.jobs);

  if (kind == "open-problem") {
    const OpenProblemResult result = open_problem_search(groups, opts.caps(), opts.jobs);
    const std::string rendered = parse_output_format(opts.format) == OutputFormat::Json
                                     ? render_open_problem_json(result, groups)
                                     : render_open_problem_text(result, groups);
    return emit(opts, rendered, out, err);
  }

  if (target.empty()) {
    err << "search capability requires --target\n";
    return kExitUsage;
  }
  const GroupSpec target_spec = parse_group_spec(target);
  const GroupTable target_group = realize_group(target_spec, opts.cap_order);
  const CheckReport report = capability_search(target_group, groups, opts.caps(), opts.jobs);
  const std::string rendered = parse_output_format(opts.format) == OutputFormat::Json
                                   ? render_capability_json(report, groups, opts.timings)
                                   : render_capability_text(report, groups, opts.timings);
  const int code = emit(opts, rendered, out, err);
  if (code != kExitPass) return code;
  return report.passed ? kExitPass : kExitCounterexample;
}

int run_suite_cmd(const CommonOpts& opts, int max_order, bool products, bool big_sn,
                  std::ostream& out, std::ostream& err) {
  const Catalog catalog = default_catalog(max_order, products, big_sn);
  const CatalogGroups groups = realize_catalog(catalog, opts.caps(), opts.jobs);
  const SuiteReport report = run_suite(groups, opts.caps(), opts.jobs);
  const std::string rendered = parse_output_format(opts.format) == OutputFormat::Json
                                   ? render_suite_json(report, opts.timings)
                                   : render_suite_text(report, opts.timings);
  const int code = emit(opts, rendered, out, err);
  if (code != kExitPass) return code;
  return report.all_passed() ? kExitPass : kExitCounterexample;
}

int run_info(const CommonOpts& opts, const std::string& group, std::ostream& out,
             std::ostream& err) {
  const GroupSpec spec = parse_group_spec(group);
  const GroupTable g = realize_group(spec, opts.cap_order);
  const std::string rendered = parse_output_format(opts.format) == OutputFormat::Json
                                   ? render_info_json(g, spec.canonical)
                                   : render_info_text(g, spec.canonical);
  return emit(opts, rendered, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{
      "finite-group lattice laboratory\n"
      "group specs: C<n>, D<m> (dihedral of order 2m), Q<2^n>, S<n>, A<n> (n<=6),\n"
      "E<p>^<k>, products with 'x' (C2 x C2), file:<path>"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  CommonOpts opts;
  std::string group;
  std::string which = "subgroups";
  std::string claim;
  std::string search_kind;
  std::string target;
  int max_order = 64;
  bool products = true;
  bool big_sn = false;

  CLI::App* lattice = app.add_subcommand(
      "lattice", "Subgroup / centralizer / normal-centralizer lattice of one group");
  lattice->add_option("--group", group, "Group spec (e.g. S3, Q8, C2 x C2, file:g.json)")
      ->required();
  lattice->add_option("--which", which, "Which lattice to build")
      ->check(CLI::IsMember({"subgroups", "centralizers", "normal-centralizers"}))
      ->capture_default_str();
  add_common(lattice, &opts, /*dot_allowed=*/true);

  CLI::App* check = app.add_subcommand("check", "Run one verifier on one group");
  check->add_option("--group", group, "Group spec")->required();
  check->add_option("--claim", claim, "Claim to check")
      ->check(CLI::IsMember({"theorem1", "corollary2", "corollary3", "closure",
                             "union-argument", "atoms-bound"}))
      ->required();
  add_common(check, &opts, /*dot_allowed=*/false);

  CLI::App* search = app.add_subcommand("search", "Catalog-wide searches");
  search->add_option("kind", search_kind, "open-problem | capability")
      ->check(CLI::IsMember({"open-problem", "capability"}))
      ->required();
  search->add_option("--target", target, "Target group spec (capability search)");
  search->add_option("--max-order", max_order, "Catalog order bound")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  search->add_flag("--products,!--no-products", products,
                   "Include two-factor direct products in the catalog");
  search->add_flag("--include-big-sn", big_sn, "Add S5/S6/A6 to the family pool");
  add_common(search, &opts, /*dot_allowed=*/false);

  CLI::App* suite = app.add_subcommand("suite", "Every verifier over the default catalog");
  suite->add_option("--max-order", max_order, "Catalog order bound")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  suite->add_flag("--products,!--no-products", products,
                  "Include two-factor direct products in the catalog");
  suite->add_flag("--include-big-sn", big_sn, "Add S5/S6/A6 to the family pool");
  add_common(suite, &opts, /*dot_allowed=*/false);

  CLI::App* info = app.add_subcommand("info", "Basic facts about one group");
  info->add_option("--group", group, "Group spec")->required();
  add_common(info, &opts, /*dot_allowed=*/false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (lattice->parsed()) return run_lattice(opts, group, which, out, err);
    if (check->parsed()) return run_check(opts, group, claim, out, err);
    if (search->parsed())
      return run_search(opts, search_kind, target, max_order, products, big_sn, out, err);
    if (suite->parsed()) return run_suite_cmd(opts, max_order, products, big_sn, out, err);
    if (info->parsed()) return run_info(opts, group, out, err);
    err << "no command given\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace glat::cli
