// pcalc: order-type terms, containment, and arrow deciders from the shell.
//
// Exit codes: 0 = holds / success, 1 = a valid negative decision, 2 = usage or
// contract error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pcalc/pcalc.hpp"

namespace {

using namespace pcalc;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_ast(const OrderTerm& t, int indent, std::uint32_t& leaf, std::ostream& os) {
  os << std::string(static_cast<std::size_t>(indent) * 2, ' ');
  switch (t.kind()) {
    case Kind::Fin: os << "Fin " << t.count() << "  #" << leaf++ << '\n'; return;
    case Kind::Omega: os << "Omega  #" << leaf++ << '\n'; return;
    case Kind::OmegaStar: os << "OmegaStar  #" << leaf++ << '\n'; return;
    case Kind::Sum: os << "Sum\n"; break;
    case Kind::Prod: os << "Prod\n"; break;
    case Kind::Rev: os << "Rev\n"; break;
  }
  for (const auto& c : t.children()) print_ast(c, indent + 1, leaf, os);
}

json ast_json(const OrderTerm& t) {
  json j = {{"kind", kind_name(t.kind())}};
  if (t.is_fin()) j["count"] = t.count();
  if (!t.is_leaf()) {
    json cs = json::array();
    for (const auto& c : t.children()) cs.push_back(ast_json(c));
    j["children"] = cs;
  }
  return j;
}

void write_file(const std::string& path, const json& record) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << record.dump(2) << '\n';
}

json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void print_sketch(const EmbeddingSketch& s, std::ostream& os) {
  os << "embedding of " << pattern_name(s.pattern) << ": " << s.note << '\n';
  for (const auto& a : s.assignments)
    os << "  " << a.component << " <- leaf #" << a.leaf.value << " (" << kind_name(a.leaf_kind)
       << (a.indexes_copies ? ", indexes copies" : "") << ")\n";
}

void print_witness(const PartitionWitness& w, std::ostream& os) {
  auto list = [](const std::vector<LeafId>& ids) {
    std::string s;
    for (auto id : ids) s += (s.empty() ? "#" : ", #") + std::to_string(id.value);
    return s.empty() ? std::string("-") : s;
  };
  os << "  A (no w):  " << render(w.a_term.term()) << "   leaves " << list(w.a_leaves) << '\n';
  os << "  B (no w*): " << render(w.b_term.term()) << "   leaves " << list(w.b_leaves) << '\n';
}

struct Options {
  std::string action, term, pattern, file, witness_out, format = "dot";
  unsigned depth = 3;
  bool depth_given = false;
  bool unicode = false, as_json = false;
  std::size_t n = 0, a = 0, b = 0, max_n = 0, limit = SearchOptions{}.max_vertices;
  std::uint64_t zn = 0;
  unsigned threads = 1;
  std::uint64_t pieces = 0;
};

int cmd_term(const Options& o) {
  auto t = parse(o.term);
  const auto fmt = o.unicode ? RenderFormat::Unicode : RenderFormat::Text;
  if (o.action == "parse") {
    if (o.as_json) {
      std::cout << ast_json(t).dump() << '\n';
    } else {
      std::uint32_t leaf = 0;
      print_ast(t, 0, leaf, std::cout);
    }
  } else if (o.action == "normalize") {
    auto nt = normalize(t);
    if (o.as_json)
      std::cout << json{{"kind", "normal-form"}, {"input", render(t)}, {"normal", render(nt.term())}}.dump() << '\n';
    else
      std::cout << render(nt.term(), fmt) << '\n';
  } else if (o.action == "realize") {
    auto r = realize(normalize(t), o.depth);
    if (o.as_json) {
      std::cout << to_json(r).dump() << '\n';
    } else {
      std::cout << render(r.source.term()) << " at depth " << r.depth << ": " << r.size() << " points\n";
      for (const auto& p : r.points) {
        std::cout << "  " << p.position << "  leaf #" << p.origin.value;
        if (!p.copy_path.empty()) {
          std::cout << "  copy";
          for (auto k : p.copy_path) std::cout << ' ' << k;
        }
        std::cout << '\n';
      }
    }
  } else if (o.action == "render") {
    std::cout << render(t, fmt) << '\n';
  } else {
    throw UsageError("unknown term action '" + o.action + "' (parse, normalize, realize, render)");
  }
  return kHolds;
}

int cmd_contains(const Options& o) {
  auto p = parse_pattern(o.pattern);
  if (!p) throw UsageError("unknown pattern '" + o.pattern + "' (w, w*, z, w.w*, w*.w, w.w, w*.w*)");
  auto t = normalize(parse(o.term));
  bool found = contains(*p, t);
  if (o.as_json) {
    json j = {{"kind", "containment"}, {"pattern", o.pattern}, {"term", render(t.term())}, {"contains", found}};
    if (found) j["sketch"] = to_json(embedding_sketch(*p, t));
    std::cout << j.dump() << '\n';
  } else if (found) {
    std::cout << render(t.term()) << " contains " << o.pattern << '\n';
    print_sketch(embedding_sketch(*p, t), std::cout);
  } else {
    std::cout << render(t.term()) << " does not contain " << o.pattern << '\n';
  }
  return found ? kHolds : kFails;
}

int cmd_arrow_finite(const Options& o) {
  SearchOptions so;
  so.max_vertices = o.limit;
  so.threads = o.threads;
  auto r = decide_arrow_finite(o.n, o.a, o.b, so);
  if (!o.witness_out.empty() && !holds(r)) write_file(o.witness_out, to_json(std::get<ArrowFails>(r).witness));
  if (o.as_json) {
    std::cout << to_json(r, o.n, o.a, o.b).dump() << '\n';
  } else if (const auto* h = std::get_if<ArrowHolds>(&r)) {
    std::cout << o.n << " -> (" << o.a << "," << o.b << ")^2 holds: " << h->proof_note << '\n';
  } else {
    const auto& w = std::get<ArrowFails>(r).witness;
    std::cout << o.n << " -/-> (" << o.a << "," << o.b << ")^2: coloring " << w.edge_string()
              << " has no red K_" << o.a << " and no blue K_" << o.b << '\n';
  }
  return holds(r) ? kHolds : kFails;
}

int cmd_arrow_z(const Options& o) {
  auto t = normalize(parse(o.term));
  auto d = decide_arrow_Z(t, o.zn);
  const auto* sep = std::get_if<SeparationCert>(&d.certificate);
  if (!o.witness_out.empty() && sep) {
    if (o.depth_given)
      write_file(o.witness_out, to_json(build_separation_coloring(realize(t, o.depth), sep->witness)));
    else
      write_file(o.witness_out, to_json(sep->witness));
  }
  if (o.as_json) {
    std::cout << to_json(d, o.depth_given ? o.depth : 0).dump() << '\n';
    return d.holds ? kHolds : kFails;
  }
  std::cout << render(t.term()) << (d.holds ? " -> " : " -/-> ") << "(Z," << o.zn << ")^2  ["
            << certificate_kind(d.certificate) << "]\n";
  std::visit(
      [&](const auto& c) {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, PatternCert>) {
          print_sketch(c.sketch, std::cout);
          if (o.zn >= 3) std::cout << "  the pattern arrows (Z,n)^2 for every n by Specker's theorem\n";
        } else if constexpr (std::is_same_v<T, TrivialCert>) {
          std::cout << "  " << c.label << '\n';
        } else if constexpr (std::is_same_v<T, NoZCert>) {
          std::cout << "  " << c.statement << '\n';
        } else {
          std::cout << "  coloring: " << c.recipe << '\n';
          print_witness(c.witness, std::cout);
          if (o.depth_given) {
            auto r = realize(t, o.depth);
            auto g = build_separation_coloring(r, c.witness);
            auto report = check_separation_properties(g, point_sides(r, c.witness));
            std::cout << "  depth " << o.depth << ": " << g.vertices() << " points, blue triangles "
                      << (report.no_blue_triangles ? "none" : "FOUND") << ", red edges "
                      << (report.red_edges_within_sides ? "within sides" : "CROSS SIDES") << '\n';
          }
        }
      },
      d.certificate);
  return d.holds ? kHolds : kFails;
}

int cmd_arrow_pigeonhole(const Options& o) {
  if (o.pieces < 1) throw UsageError("pieces must be at least 1");
  auto t = normalize(parse(o.term));
  auto d = decide_pigeonhole_Z(t, static_cast<int>(std::min<std::uint64_t>(o.pieces, 1u << 30)));
  std::optional<PartitionWitness> w;
  if (!d.holds && o.pieces >= 2) w = witness_partition(t);
  if (!o.witness_out.empty() && w) write_file(o.witness_out, to_json(*w));
  if (o.as_json) {
    json j = {{"kind", "pigeonhole-z"}, {"term", render(t.term())}, {"pieces", o.pieces}, {"holds", d.holds}};
    if (d.certificate) j["pattern"] = pattern_name(*d.certificate);
    if (w) j["witness"] = to_json(*w);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << render(t.term()) << (d.holds ? " -> " : " -/-> ") << "(Z x " << o.pieces << ")^1\n";
    if (d.certificate) std::cout << "  contains " << pattern_name(*d.certificate) << '\n';
    if (w) print_witness(*w, std::cout);
    if (!d.holds && o.pieces == 1) std::cout << "  " << render(t.term()) << " contains no copy of Z\n";
  }
  return d.holds ? kHolds : kFails;
}

int cmd_arrow_omega(const Options& o) {
  auto t = normalize(parse(o.term));
  bool h = decide_arrow_omega_omegastar_2(t);
  if (o.as_json)
    std::cout << json{{"kind", "omega-omegastar"}, {"term", render(t.term())}, {"holds", h}}.dump() << '\n';
  else
    std::cout << render(t.term()) << " -/-> (w, w*)^2: no order arrows (w, w*)^2 (Erdos-Rado)\n";
  return h ? kHolds : kFails;
}

int cmd_ramsey(const Options& o) {
  SearchOptions so;
  so.max_vertices = o.limit;
  so.threads = o.threads;
  auto max_n = o.max_n == 0 ? std::min(o.limit, kEngineHardLimit) : o.max_n;
  auto r = ramsey_number(o.a, o.b, max_n, so);
  if (!r.value) throw UsageError("R(" + std::to_string(o.a) + "," + std::to_string(o.b) + ") > " + std::to_string(max_n));
  if (!o.witness_out.empty() && r.witness_below) write_file(o.witness_out, to_json(*r.witness_below));
  if (o.as_json) {
    json j = {{"kind", "ramsey"}, {"a", o.a}, {"b", o.b}, {"value", *r.value}};
    if (r.witness_below) j["witnessBelow"] = to_json(*r.witness_below);
    std::cout << j.dump() << '\n';
  } else {
    std::cout << *r.value << '\n';
  }
  return kHolds;
}

int cmd_render(const Options& o) {
  auto j = read_file(o.file);
  if (o.format != "dot" && o.format != "tikz") throw UsageError("format must be dot or tikz");
  if (j.is_object() && j.value("kind", "") == "realization") {
    auto r = realization_from_json(j);
    // points as a chain in order
    std::ostringstream os;
    if (o.format == "dot") {
      os << "digraph realization {\n  rankdir=LR;\n";
      for (const auto& p : r.points) os << "  " << p.position << " [label=\"" << p.position << ":#" << p.origin.value << "\"];\n";
      for (std::size_t i = 1; i < r.size(); ++i) os << "  " << i - 1 << " -> " << i << ";\n";
      os << "}\n";
    } else {
      os << "\\begin{tikzpicture}\n";
      for (const auto& p : r.points)
        os << "  \\node (p" << p.position << ") at (" << p.position << ",0) {\\#" << p.origin.value << "};\n";
      os << "\\end{tikzpicture}\n";
    }
    std::cout << os.str();
    return kHolds;
  }
  auto g = coloring_from_json(j);
  std::cout << (o.format == "dot" ? to_dot(g) : to_tikz(g));
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pcalc: partition arrows for finite graphs and scattered linear orders"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> run;

  auto* term = app.add_subcommand("term", "parse, normalize, realize or render a term");
  term->add_option("action", o.action, "parse | normalize | realize | render")->required();
  term->add_option("term", o.term, "order-type term")->required();
  term->add_option("--depth", o.depth, "realization depth")->check(CLI::PositiveNumber);
  term->add_flag("--unicode", o.unicode, "render with w, w* as unicode symbols");
  term->add_flag("--json", o.as_json, "machine-readable output");
  term->callback([&] { run = cmd_term; });

  auto* cont = app.add_subcommand("contains", "does a term contain a pattern");
  cont->add_option("pattern", o.pattern, "w, w*, z, w.w*, w*.w, w.w, w*.w*")->required();
  cont->add_option("term", o.term, "order-type term")->required();
  cont->add_flag("--json", o.as_json, "machine-readable output");
  cont->callback([&] { run = cmd_contains; });

  auto* arrow = app.add_subcommand("arrow", "decide an arrow relation");
  arrow->require_subcommand(1);
  auto* fin = arrow->add_subcommand("finite", "N -> (a,b)^2");
  fin->add_option("N", o.n)->required()->check(CLI::PositiveNumber);
  fin->add_option("a", o.a)->required()->check(CLI::PositiveNumber);
  fin->add_option("b", o.b)->required()->check(CLI::PositiveNumber);
  fin->add_option("--threads", o.threads, "parallel workers (same answer as sequential)")->check(CLI::PositiveNumber);
  fin->add_option("--limit", o.limit, "vertex limit")->check(CLI::PositiveNumber);
  fin->add_option("--witness-out", o.witness_out, "write the failing coloring here");
  fin->add_flag("--json", o.as_json, "machine-readable output");
  fin->callback([&] { run = cmd_arrow_finite; });

  auto* z = arrow->add_subcommand("z", "L -> (Z,n)^2");
  z->add_option("term", o.term)->required();
  z->add_option("n", o.zn)->required();
  auto* zdepth = z->add_option("--depth", o.depth, "truncation depth for the separation coloring")->check(CLI::PositiveNumber);
  z->add_option("--witness-out", o.witness_out, "write the partition witness (or, with --depth, the coloring)");
  z->add_flag("--json", o.as_json, "machine-readable output");
  z->callback([&] {
    o.depth_given = zdepth->count() > 0;
    run = cmd_arrow_z;
  });

  auto* ph = arrow->add_subcommand("pigeonhole-z", "L -> (Z,..,Z)^1");
  ph->add_option("term", o.term)->required();
  ph->add_option("pieces", o.pieces)->required();
  ph->add_option("--witness-out", o.witness_out, "write the partition witness");
  ph->add_flag("--json", o.as_json, "machine-readable output");
  ph->callback([&] { run = cmd_arrow_pigeonhole; });

  auto* om = arrow->add_subcommand("omega-omegastar", "L -> (w, w*)^2");
  om->add_option("term", o.term)->required();
  om->add_flag("--json", o.as_json, "machine-readable output");
  om->callback([&] { run = cmd_arrow_omega; });

  auto* ram = app.add_subcommand("ramsey", "least N with N -> (a,b)^2");
  ram->add_option("a", o.a)->required()->check(CLI::PositiveNumber);
  ram->add_option("b", o.b)->required()->check(CLI::PositiveNumber);
  ram->add_option("--max", o.max_n, "largest N to try")->check(CLI::PositiveNumber);
  ram->add_option("--limit", o.limit, "vertex limit")->check(CLI::PositiveNumber);
  ram->add_option("--threads", o.threads, "parallel workers")->check(CLI::PositiveNumber);
  ram->add_option("--witness-out", o.witness_out, "write the coloring of K_{R-1}");
  ram->add_flag("--json", o.as_json, "machine-readable output");
  ram->callback([&] { run = cmd_ramsey; });

  auto* rend = app.add_subcommand("render", "DOT or TikZ for a coloring or realization file");
  rend->add_option("file", o.file)->required();
  rend->add_option("--format", o.format, "dot | tikz");
  rend->callback([&] { run = cmd_render; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    return run(o);
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error at byte " << e.offset() << ": " << e.what() << '\n';
  } catch (const InternalContradiction& e) {
    std::cerr << "internal contradiction: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return kError;
}
