// cist: build, lift, verify and inspect completely independent spanning
// trees of hypercubes. Exit status: 0 success, 1 negative result, 2 usage
// or data error. Errors go to stderr as "error: <category>: <message>".

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "cist/cist.hpp"

namespace {

using cist::CistFamily;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

struct Failure {
  int code;
  std::string category;
  std::string message;
};

[[noreturn]] void fail(int code, std::string category, std::string message) {
  throw Failure{code, std::move(category), std::move(message)};
}

std::string join(const std::vector<cist::Vertex>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

bool looks_like_json(const std::string& text) {
  const auto at = text.find_first_not_of(" \t\r\n");
  return at != std::string::npos && text[at] == '{';
}

// One family JSON document, or one edge-list file per tree.
CistFamily load_family(const std::vector<std::string>& paths) {
  std::vector<cist::SpanningTree> trees;
  for (const auto& path : paths) {
    const auto text = cist::io::read_file(path);
    if (looks_like_json(text)) {
      if (paths.size() != 1) fail(kUsage, "usage", "a family document must be the only --in file");
      auto parsed = cist::io::parse_family_json(text);
      for (const auto& w : parsed.warnings) std::cerr << "warning: " << path << ": " << w << "\n";
      return std::move(parsed.family);
    }
    try {
      trees.push_back(cist::io::tree_from_edge_list(text));
    } catch (const cist::ParseError& e) {
      fail(kUsage, "parse", path + ":" + std::to_string(e.line()) + ": " + e.what());
    }
  }
  CistFamily f(std::move(trees));
  if (f.size() >= 2) f.certify();
  return f;
}

void require_verified(const CistFamily& f) {
  if (f.size() < 2) fail(kUsage, "usage", "need at least two trees");
  if (f.status() != CistFamily::Status::accepted) fail(kNegative, "rejected", f.witness()->describe());
}

void print_stats(const CistFamily& f, std::ostream& out) {
  const auto stats = cist::family_stats(f);
  for (std::size_t i = 0; i < stats.size(); ++i)
    out << "tree " << i + 1 << ": diameter " << stats[i].diameter << ", internal " << stats[i].internal_count
        << ", center " << join(stats[i].center, ",") << "\n";
}

json stats_json(const CistFamily& f) {
  json trees = json::array();
  for (const auto& s : cist::family_stats(f))
    trees.push_back({{"diameter", s.diameter}, {"internal_count", s.internal_count}, {"center", s.center}});
  json doc{{"dim", f.dim()}, {"k", f.size()}, {"trees", trees}};
  if (f.status() != CistFamily::Status::unchecked) doc["verified"] = f.status() == CistFamily::Status::accepted;
  return doc;
}

// "out.edges" -> "out_t2.edges"
std::string tree_file(const std::string& path, std::size_t i) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  const bool has_ext = dot != std::string::npos && (slash == std::string::npos || dot > slash);
  const auto stem = has_ext ? path.substr(0, dot) : path;
  const auto ext = has_ext ? path.substr(dot) : std::string();
  return stem + "_t" + std::to_string(i + 1) + ext;
}

template <class Int>
json report_json(const cist::ConditionReport<Int>& r) {
  return {{"variant", cist::to_string(r.variant)}, {"k", r.k}, {"vertices", r.nv},
          {"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}};
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Completely independent spanning trees of hypercubes"};
  app.require_subcommand(1);

  std::vector<std::string> in;
  std::string out_path;
  int target = 0;
  bool brute = false, bipartite = false, as_json = false;
  std::uint64_t dim = 0, k = 0, vertices = 0, limit = 0;
  std::uint32_t src = 0, dst = 0;
  std::vector<std::uint32_t> faults;
  std::string format;

  auto* q7 = app.add_subcommand("q7", "Validate and verify the embedded Q_7 family, print stats");
  q7->add_option("--out", out_path, "Write the family as JSON");

  auto* lift = app.add_subcommand("lift", "Lift a verified family to a higher dimension");
  lift->add_option("--to", target, "Target dimension")->required();
  lift->add_option("--in", in, "Family JSON or edge-list files (default: embedded Q_7)");
  lift->add_option("--out", out_path, "Write the lifted family as JSON");

  auto* verify = app.add_subcommand("verify", "Check a family with the linear criterion");
  verify->add_option("--in", in, "Family JSON or edge-list files")->required();
  verify->add_flag("--brute-force", brute, "Also check every vertex pair (dim <= 10)");

  auto* check = app.add_subcommand("check", "Evaluate the necessary condition for k CISTs");
  auto* dim_opt = check->add_option("--dim", dim, "Hypercube dimension (k = n, 2^n vertices)");
  auto* k_opt = check->add_option("--k", k, "Number of trees / degree");
  auto* v_opt = check->add_option("--vertices", vertices, "Vertex count");
  check->add_flag("--bipartite", bipartite, "Use the bipartite refinement");
  check->add_flag("--json", as_json, "JSON report");
  dim_opt->excludes(k_opt)->excludes(v_opt);
  k_opt->needs(v_opt);
  v_opt->needs(k_opt);

  auto* search = app.add_subcommand("search", "List even m whose half divides 2^(m-1) - 1");
  search->add_option("--limit", limit, "Upper bound on m")->required();
  search->add_flag("--json", as_json, "JSON report");

  auto* verdict = app.add_subcommand("verdict", "Classify an even dimension for n/2 CISTs");
  verdict->add_option("--dim", dim, "Hypercube dimension")->required();
  verdict->add_flag("--json", as_json, "JSON report");

  auto* route = app.add_subcommand("route", "Route around faulty vertices");
  route->add_option("--in", in, "Family JSON or edge-list files")->required();
  route->add_option("--src", src, "Source vertex")->required();
  route->add_option("--dst", dst, "Destination vertex")->required();
  route->add_option("--fault", faults, "Faulty vertex (repeatable)");

  auto* stats = app.add_subcommand("stats", "Per-tree diameter, internal count and center");
  stats->add_option("--in", in, "Family JSON or edge-list files")->required();
  stats->add_flag("--json", as_json, "JSON report");

  auto* exp = app.add_subcommand("export", "Write a family as DOT, JSON or edge lists");
  exp->add_option("--in", in, "Family JSON or edge-list files")->required();
  exp->add_option("--format", format, "dot | json | edges")->required()->check(CLI::IsMember({"dot", "json", "edges"}));
  exp->add_option("--out", out_path, "Output file (edges: one file per tree, suffixed _t<i>)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    std::cout << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::cout << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (q7->parsed()) {
      const auto f = cist::q7_family();
      std::cout << "q7: " << f.size() << " trees, " << f.tree(0).edge_count() << " edges each, accepted\n";
      print_stats(f, std::cout);
      if (!out_path.empty()) cist::io::write_file(out_path, cist::io::render_family_json(f));
      return kOk;
    }

    if (lift->parsed()) {
      const bool embedded = in.empty();
      const auto base = embedded ? cist::q7_family() : load_family(in);
      require_verified(base);
      const auto f = cist::lift_to(base, target);
      std::cout << "lift: Q" << base.dim() << " -> Q" << f.dim() << ", "
                << (f.status() == CistFamily::Status::accepted ? "accepted" : "rejected") << "\n";
      std::cout << "diameters: ";
      for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? ", " : "") << f.tree(i).diameter();
      int code = kOk;
      if (embedded) {
        const auto bounds = cist::diameter_bounds(target);
        bool within = true;
        for (std::size_t i = 0; i < 3; ++i) within = within && f.tree(i).diameter() <= bounds[i];
        std::cout << " bounds: " << bounds[0] << "/" << bounds[1] << "/" << bounds[2] << (within ? " OK" : " EXCEEDED");
        if (!within) code = kNegative;
      }
      std::cout << "\n";
      if (!out_path.empty()) cist::io::write_file(out_path, cist::io::render_family_json(f));
      return code;
    }

    if (verify->parsed()) {
      auto f = load_family(in);
      if (f.size() < 2) fail(kUsage, "usage", "need at least two trees");
      f.certify();
      const auto crit = cist::verify_criterion(f);
      std::cout << "criterion: " << (crit.accepted() ? "accepted" : "rejected " + crit.violation->describe()) << "\n";
      bool ok = crit.accepted();
      if (brute) {
        if (f.dim() > cist::kDefinitionMaxDim)
          fail(kUsage, "cost", "brute force is limited to dim <= " + std::to_string(cist::kDefinitionMaxDim));
        const auto def = cist::verify_definition(f);
        std::cout << "definition: " << (def.accepted() ? "accepted" : "rejected " + def.violation->describe()) << "\n";
        ok = ok && def.accepted();
      }
      return ok ? kOk : kNegative;
    }

    if (check->parsed()) {
      if (dim_opt->count() == 0 && k_opt->count() == 0) fail(kUsage, "usage", "check needs --dim or --k with --vertices");
      if (dim_opt->count()) {
        if (dim > 63) fail(kUsage, "domain", "--dim must be at most 63");
        k = dim;
        vertices = std::uint64_t{1} << dim;
      }
      const auto r = bipartite ? cist::condition_bipartite<std::uint64_t>(k, vertices)
                               : cist::condition_regular<std::uint64_t>(k, vertices);
      if (as_json)
        std::cout << report_json(r).dump() << "\n";
      else
        std::cout << "condition=" << cist::to_string(r.variant) << " k=" << r.k << " vertices=" << r.nv
                  << " lhs=" << r.lhs << " rhs=" << r.rhs << " holds=" << (r.holds ? "true" : "false") << "\n";
      return r.holds ? kOk : kNegative;
    }

    if (search->parsed()) {
      const auto found = cist::search_exceptions(limit);
      if (as_json)
        std::cout << json{{"limit", limit}, {"exceptions", found}}.dump() << "\n";
      else
        for (const auto m : found) std::cout << m << "\n";
      return kOk;
    }

    if (verdict->parsed()) {
      const auto v = cist::conjecture_verdict(dim);
      if (as_json)
        std::cout << json{{"n", v.n}, {"verdict", cist::to_string(v.cls)}, {"detail", v.detail}}.dump() << "\n";
      else
        std::cout << "n=" << v.n << " verdict=" << cist::to_string(v.cls) << " (" << v.detail << ")\n";
      return kOk;
    }

    if (route->parsed()) {
      const auto f = load_family(in);
      require_verified(f);
      const auto outcome = cist::fault_route(f, src, dst, cist::FaultSet(faults.begin(), faults.end()));
      if (outcome.reachable()) {
        std::cout << "route: tree " << *outcome.tree + 1 << " path " << join(outcome.path, " ") << "\n";
        return kOk;
      }
      std::cout << "unreachable:";
      for (std::size_t i = 0; i < outcome.blocked_by.size(); ++i)
        std::cout << (i ? "," : "") << " tree " << i + 1 << " blocked at " << *outcome.blocked_by[i];
      std::cout << "\n";
      return kNegative;
    }

    if (stats->parsed()) {
      const auto f = load_family(in);
      if (as_json)
        std::cout << stats_json(f).dump() << "\n";
      else
        print_stats(f, std::cout);
      return kOk;
    }

    if (exp->parsed()) {
      const auto f = load_family(in);
      if (format == "dot") {
        cist::io::write_file(out_path, cist::io::render_dot(f));
      } else if (format == "json") {
        cist::io::write_file(out_path, cist::io::render_family_json(f));
      } else if (f.size() == 1) {
        cist::io::write_file(out_path, cist::io::render_edge_list(f.tree(0)));
      } else {
        for (std::size_t i = 0; i < f.size(); ++i)
          cist::io::write_file(tree_file(out_path, i), cist::io::render_edge_list(f.tree(i)));
      }
      return kOk;
    }
  } catch (const Failure& e) {
    std::cerr << "error: " << e.category << ": " << e.message << "\n";
    return e.code;
  } catch (const cist::io::FamilyFormatError& e) {
    std::cerr << "error: parse: " << e.what() << "\n";
    return kUsage;
  } catch (const cist::InvalidTree& e) {
    std::cerr << "error: invalid-tree: " << e.what() << "\n";
    return kUsage;
  } catch (const cist::ParseError& e) {
    std::cerr << "error: parse: line " << e.line() << ": " << e.what() << "\n";
    return kUsage;
  } catch (const cist::Refusal& e) {
    std::cerr << "error: rejected: " << e.what() << "\n";
    return kNegative;
  } catch (const cist::CostGuard& e) {
    std::cerr << "error: cost: " << e.what() << "\n";
    return kUsage;
  } catch (const cist::DomainError& e) {
    std::cerr << "error: domain: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: io: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
