#include "liewild/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "liewild/algebra_json.hpp"
#include "liewild/classifier.hpp"
#include "liewild/named.hpp"
#include "liewild/quiver.hpp"

namespace liewild::cli {

namespace {

using nlohmann::json;

rep::Weight parse_weight(const std::string& text, std::size_t rank) {
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')') s.push_back(c);
  rep::Weight w;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) throw ParseError("empty weight coordinate in '" + text + "'");
    try {
      w.push_back(std::stoi(part));
    } catch (const std::exception&) {
      throw ParseError("bad weight coordinate '" + part + "'");
    }
  }
  if (w.size() != rank)
    throw ParseError("weight '" + text + "' has " + std::to_string(w.size()) +
                     " coordinates, expected " + std::to_string(rank));
  return w;
}

rep::ModuleDesc parse_module(const std::string& text, std::size_t rank) {
  rep::ModuleDesc m;
  std::string current;
  int depth = 0;
  auto flush = [&]() {
    if (current.empty()) throw ParseError("empty module summand in '" + text + "'");
    m[parse_weight(current, rank)] += 1;
    current.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      flush();
      continue;
    }
    current.push_back(c);
  }
  flush();
  return m;
}

struct AlgebraInput {
  LieAlgebra algebra;
  json descriptor;
};

AlgebraInput load_algebra(const std::string& input_file, const std::string& named) {
  if (input_file.empty() == named.empty())
    throw ParseError("provide exactly one of --input or --named");
  if (!named.empty())
    return AlgebraInput{build_named(named), json{{"named", normalize_recipe(named)}}};
  std::ifstream in(input_file);
  if (!in) throw ParseError("cannot open '" + input_file + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  AlgebraDocument doc = parse_algebra(buf.str());
  return AlgebraInput{std::move(doc.algebra),
                      json{{"file", input_file}, {"name", doc.name}}};
}

json basis_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < s.ambient(); ++j) row.push_back(rat_str(s.basis().at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json verdict_json(const Verdict& v) {
  switch (v.kind) {
    case Verdict::Kind::Tame:
      return json{{"kind", "tame"}, {"class", v.tame_class}};
    case Verdict::Kind::Wild:
      return json{{"kind", "wild"},
                  {"rule", rule_id(v)},
                  {"controlled", v.controlled},
                  {"witness", v.witness}};
    case Verdict::Kind::Unsupported:
      return json{{"kind", "unsupported"}, {"cause", v.cause}};
  }
  return json{};
}

void emit(std::ostream& out, bool as_json, const std::string& command, const json& input,
          const json& result, const std::string& paper_rule, const std::string& human) {
  if (as_json) {
    json envelope{{"command", command},
                  {"input", input},
                  {"result", result},
                  {"paper_rule", paper_rule}};
    out << envelope.dump(2) << "\n";
  } else {
    out << human;
  }
}

std::string module_str(const rep::CartanDatum& d, const rep::ModuleDesc& m) {
  std::string s;
  bool first = true;
  for (const auto& [w, k] : m)
    for (long t = 0; t < k; ++t) {
      if (!first) s += " + ";
      s += rep::weight_str(d, w);
      first = false;
    }
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"tame/wild representation type of finite-dimensional Lie algebras over Q"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "machine-readable output");

  struct {
    std::string input, named;
  } src_classify, src_radical, src_levi;
  std::string type_text, a_text, b_text, module_text, seed_text, dot_file;
  int depth = 3, window = 8;

  auto* cmd_classify = app.add_subcommand("classify", "decide tame class or wildness");
  cmd_classify->add_option("--input", src_classify.input, "algebra document (JSON)");
  cmd_classify->add_option("--named", src_classify.named, "named construction recipe");

  auto* cmd_radical = app.add_subcommand("radical", "compute the solvable radical");
  cmd_radical->add_option("--input", src_radical.input, "algebra document (JSON)");
  cmd_radical->add_option("--named", src_radical.named, "named construction recipe");

  auto* cmd_levi = app.add_subcommand("levi", "compute a Levi complement");
  cmd_levi->add_option("--input", src_levi.input, "algebra document (JSON)");
  cmd_levi->add_option("--named", src_levi.named, "named construction recipe");

  auto* cmd_tensor = app.add_subcommand("tensor", "decompose a tensor product of irreducibles");
  cmd_tensor->add_option("--type", type_text, "Cartan type, e.g. A1 or A2xA1")->required();
  cmd_tensor->add_option("--a", a_text, "first highest weight")->required();
  cmd_tensor->add_option("--b", b_text, "second highest weight")->required();

  auto* cmd_quiver = app.add_subcommand("quiver", "build a finite window of the module quiver");
  cmd_quiver->add_option("--type", type_text, "Cartan type")->required();
  cmd_quiver->add_option("--module", module_text, "module, e.g. 1 or 0+0 or (1,0)+(0,1)")->required();
  cmd_quiver->add_option("--seed", seed_text, "seed highest weight")->required();
  cmd_quiver->add_option("--depth", depth, "breadth-first depth");
  cmd_quiver->add_option("--dot", dot_file, "write Graphviz output to this file");

  auto* cmd_detect = app.add_subcommand("detect-wild", "run the wildness detectors");
  cmd_detect->add_option("--type", type_text, "Cartan type")->required();
  cmd_detect->add_option("--module", module_text, "module description")->required();
  cmd_detect->add_option("--window", window, "dominant-weight search bound");

  std::vector<std::string> argv_storage = args;
  std::vector<char*> argv;
  for (auto& s : argv_storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n" << app.help();
    return 3;
  }

  try {
    if (cmd_classify->parsed()) {
      const AlgebraInput in = load_algebra(src_classify.input, src_classify.named);
      const Verdict v = classify(in.algebra);
      std::ostringstream human;
      switch (v.kind) {
        case Verdict::Kind::Tame:
          human << "verdict: tame (class " << v.tame_class << ")\n";
          break;
        case Verdict::Kind::Wild:
          human << "verdict: controlled wild [" << rule_id(v) << "]\n";
          break;
        case Verdict::Kind::Unsupported:
          human << "verdict: unsupported\n";
          break;
      }
      human << explain(v) << "\n";
      emit(out, as_json, "classify", in.descriptor, verdict_json(v), rule_id(v), human.str());
      return v.kind == Verdict::Kind::Unsupported ? 2 : 0;
    }

    if (cmd_radical->parsed()) {
      const AlgebraInput in = load_algebra(src_radical.input, src_radical.named);
      const Subspace r = radical(in.algebra);
      std::ostringstream human;
      human << "radical dimension: " << r.dim() << " of " << in.algebra.dim() << "\n";
      for (std::size_t i = 0; i < r.dim(); ++i) human << "  " << vec_str(r.basis_vector(i)) << "\n";
      emit(out, as_json, "radical", in.descriptor,
           json{{"dim", r.dim()}, {"basis", basis_json(r)}}, "cartan_criterion", human.str());
      return 0;
    }

    if (cmd_levi->parsed()) {
      const AlgebraInput in = load_algebra(src_levi.input, src_levi.named);
      const Subspace s = levi_subalgebra(in.algebra);
      std::ostringstream human;
      human << "levi dimension: " << s.dim() << " of " << in.algebra.dim() << "\n";
      for (std::size_t i = 0; i < s.dim(); ++i) human << "  " << vec_str(s.basis_vector(i)) << "\n";
      emit(out, as_json, "levi", in.descriptor,
           json{{"dim", s.dim()}, {"basis", basis_json(s)}}, "levi_decomposition", human.str());
      return 0;
    }

    if (cmd_tensor->parsed()) {
      const rep::CartanDatum d = rep::CartanDatum::parse(type_text);
      const rep::Weight a = parse_weight(a_text, d.total_rank());
      const rep::Weight b = parse_weight(b_text, d.total_rank());
      const rep::ModuleDesc res = rep::tensor_decompose(d, a, b);
      json comps = json::array();
      std::ostringstream human;
      human << rep::weight_str(d, a) << " (x) " << rep::weight_str(d, b) << " =";
      for (auto it = res.rbegin(); it != res.rend(); ++it) {
        comps.push_back(json{{"hw", it->first}, {"mult", it->second}});
        human << " " << rep::weight_str(d, it->first) << ":" << it->second;
      }
      human << "\n";
      emit(out, as_json, "tensor",
           json{{"type", d.name()}, {"a", a}, {"b", b}},
           json{{"components", comps},
                {"dim_product", Int(rep::weyl_dim(d, a) * rep::weyl_dim(d, b)).get_str()}},
           "tensor_product_multiplicity", human.str());
      return 0;
    }

    if (cmd_quiver->parsed()) {
      const rep::CartanDatum d = rep::CartanDatum::parse(type_text);
      const rep::ModuleDesc mod = parse_module(module_text, d.total_rank());
      const rep::Weight seed = parse_weight(seed_text, d.total_rank());
      const quiver::QuiverWindow q = quiver::build_quiver(d, mod, {seed}, depth);
      const std::string dot = quiver::emit_dot(q);
      if (!dot_file.empty()) {
        std::ofstream f(dot_file);
        if (!f) throw ParseError("cannot write '" + dot_file + "'");
        f << dot;
      }
      json arrows = json::array();
      for (const auto& [key, mult] : q.arrows)
        arrows.push_back(json{{"from", key.first}, {"to", key.second}, {"mult", mult}});
      json relations = json::array();
      for (const auto& [tgt, list] : q.relations)
        for (const auto& [src, count] : list)
          relations.push_back(json{{"target", tgt}, {"source", src}, {"count", count}});
      std::ostringstream human;
      human << "quiver window over " << d.name() << ", I = " << module_str(d, mod) << "\n";
      human << "vertices:";
      for (const auto& v : q.vertices) human << " " << rep::weight_str(d, v);
      human << "\narrows: " << q.arrows.size() << ", boundary vertices: " << q.boundary.size()
            << "\n";
      if (!dot_file.empty()) human << "DOT written to " << dot_file << "\n";
      json verts = json::array();
      for (const auto& v : q.vertices) verts.push_back(v);
      emit(out, as_json, "quiver",
           json{{"type", d.name()}, {"module", module_text}, {"seed", seed}, {"depth", depth}},
           json{{"vertices", verts},
                {"arrows", arrows},
                {"relations", relations},
                {"boundary", std::vector<std::size_t>(q.boundary.begin(), q.boundary.end())}},
           "quiver_of_module", human.str());
      return 0;
    }

    if (cmd_detect->parsed()) {
      const rep::CartanDatum d = rep::CartanDatum::parse(type_text);
      const rep::ModuleDesc mod = parse_module(module_text, d.total_rank());
      const auto witness = quiver::detect_wild(d, mod, window);
      std::ostringstream human;
      json result;
      std::string rule = "none_fired";
      if (witness) {
        rule = quiver::wild_rule_name(witness->rule);
        human << "wild: rule " << rule << " at " << rep::weight_str(d, witness->at_vertex)
              << "\n  " << witness->detail << "\n";
        result = json{{"wild", true},
                      {"rule", rule},
                      {"at", witness->at_vertex},
                      {"detail", witness->detail}};
      } else {
        human << "no wildness rule fired within window " << window
              << " (not a tameness certificate)\n";
        result = json{{"wild", false}, {"window", window}};
      }
      emit(out, as_json, "detect-wild",
           json{{"type", d.name()}, {"module", module_text}, {"window", window}}, result, rule,
           human.str());
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  err << "no command executed\n" << app.help();
  return 3;
}

}  // namespace liewild::cli
