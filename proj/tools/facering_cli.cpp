// facering: command-line front end for the Stanley–Reisner toolkit.
//
// Exit status: 0 success, 1 verification failure, 2 parse error,
// 3 precondition failure, 4 resource guard.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "facering/alexander.hpp"
#include "facering/betti.hpp"
#include "facering/complex.hpp"
#include "facering/errors.hpp"
#include "facering/formulas.hpp"
#include "facering/generators.hpp"
#include "facering/graph.hpp"
#include "facering/hilbert.hpp"
#include "facering/io.hpp"

namespace {

using namespace facering;
using json = nlohmann::ordered_json;

enum Status { kOk = 0, kFailed = 1, kParse = 2, kPrecondition = 3, kResource = 4 };

struct Options {
  std::string input;
  std::string field = "q";
  std::string method = "oracle";
  std::optional<std::uint64_t> seed;
  int n = 8;
  std::string density = "1/2";
  std::string format = "human";
  bool assume_pure = false;
  std::string gen;
};

std::string read_input(const std::string& input) {
  if (input.empty()) throw ParseError("no input document given");
  if (input == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  if (input.front() == '{') return input;
  std::ifstream in(input);
  if (!in) throw ParseError("cannot open '" + input + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

Graph generate_graph(const Options& opt) {
  if (!opt.seed) throw PreconditionError("generation needs --seed");
  return random_chordal(opt.n, Density::parse(opt.density), *opt.seed);
}

SimplicialComplex generate_complex(const std::string& kind, const Options& opt) {
  if (!opt.seed) throw PreconditionError("generation needs --seed");
  Rng rng(*opt.seed);
  if (kind == "complex") return random_complex(opt.n, rng, opt.n);
  if (kind == "quasiforest") return random_quasi_forest(opt.n, rng);
  throw PreconditionError("unknown generator '" + kind + "'");
}

Instance load(const Options& opt) {
  if (!opt.gen.empty()) {
    if (!opt.input.empty()) throw PreconditionError("give either an input or --gen, not both");
    if (opt.gen == "chordal") return generate_graph(opt);
    return generate_complex(opt.gen, opt);
  }
  return parse_document(read_input(opt.input));
}

SimplicialComplex as_complex(const Instance& instance) {
  if (const auto* g = std::get_if<Graph>(&instance)) return clique_complex(*g);
  return std::get<SimplicialComplex>(instance);
}

Graph as_graph(const Instance& instance) {
  if (const auto* c = std::get_if<SimplicialComplex>(&instance)) return one_skeleton(*c);
  return std::get<Graph>(instance);
}

std::string faces_string(const std::vector<Face>& faces) {
  std::string out = "[";
  for (std::size_t i = 0; i < faces.size(); ++i) {
    out += (i ? "," : "") + face_to_string(faces[i]);
  }
  return out + "]";
}

json faces_json(const std::vector<Face>& faces) {
  json out = json::array();
  for (Face f : faces) out.push_back(vertices_of(f));
  return out;
}

json integers_json(const std::vector<Integer>& values) {
  // Strings keep arbitrary precision.
  json out = json::array();
  for (const auto& v : values) out.push_back(v.get_str());
  return out;
}

class Runner {
 public:
  explicit Runner(Options opt) : opt_(std::move(opt)) {}

  bool structured() const { return opt_.format == "structured"; }

  void emit(const json& doc, const std::string& human) const {
    if (structured()) {
      std::cout << doc.dump() << '\n';
    } else {
      std::cout << human << '\n';
    }
  }

  int fvector() const {
    const FVector f = f_vector(as_complex(load(opt_)));
    emit({{"f", integers_json(f.entries)}}, "f = " + to_string(f.entries));
    return kOk;
  }

  int hvector() const {
    const HVector h = h_from_f(f_vector(as_complex(load(opt_))));
    emit({{"h", integers_json(h.entries)}}, "h = " + to_string(h.entries));
    return kOk;
  }

  int dual() const {
    const SimplicialComplex complex = as_complex(load(opt_));
    const SimplicialComplex d = alexander_dual(complex);
    const FVector f = f_vector(complex);
    const auto k = k_star(f, complex.n());
    json doc = json::parse(to_document(d));
    doc["k_star"] = k ? json(*k) : json(nullptr);
    doc["f"] = integers_json(f_vector(d).entries);
    std::string human = to_document(d) + "\nf* = " + to_string(f_vector(d).entries) +
                        "\nk* = " + (k ? std::to_string(*k) : "undefined (full simplex)");
    emit(doc, human);
    return kOk;
  }

  int hilbert() const {
    const SimplicialComplex complex = as_complex(load(opt_));
    const FieldSpec field = FieldSpec::parse(opt_.field);
    json doc;
    std::string human;
    std::optional<HilbertSeries> from_complex;
    std::optional<HilbertSeries> from_table;
    if (opt_.method != "formula") {
      from_complex = series_from_complex(complex);
      doc["series"] = from_complex->to_string();
      human += "H(z) = " + from_complex->to_string();
    }
    if (opt_.method != "oracle") {
      from_table = series_from_resolution(hochster_betti(complex, field));
      doc["series_from_resolution"] = from_table->to_string();
      human += std::string(human.empty() ? "" : "\n") +
               "from resolution: " + from_table->to_string();
    }
    doc["multiplicity"] = multiplicity(complex).get_str();
    human += "\ne = " + multiplicity(complex).get_str();
    int status = kOk;
    if (from_complex && from_table) {
      const bool agree = *from_complex == *from_table;
      doc["verdict"] = agree ? "pass" : "fail";
      human += std::string("\nverdict: ") + (agree ? "pass" : "fail");
      if (!agree) status = kFailed;
    }
    emit(doc, human);
    return status;
  }

  int betti() const {
    const SimplicialComplex complex = as_complex(load(opt_));
    const FieldSpec field = FieldSpec::parse(opt_.field);
    json doc;
    std::string human;
    std::optional<GradedBettiTable> table;
    if (opt_.method != "formula" || !opt_.assume_pure) table = hochster_betti(complex, field);
    if (opt_.method != "formula") {
      doc["table"] = json::parse(table_to_document(*table));
      human += table->diagram();
    }
    if (opt_.method == "oracle") {
      emit(doc, human);
      return kOk;
    }

    const FVector f = f_vector(complex);
    const HVector h = h_from_f(f);
    const int codim = complex.n() - f.d();
    std::vector<int> degrees;
    if (table) {
      const ResolutionShape shape = classify_resolution(*table);
      if (!shape.is_pure()) {
        if (opt_.method == "formula") {
          throw PreconditionError("resolution is not pure; pass --assume-pure to force");
        }
        doc["formula"] = nullptr;
        doc["verdict"] = "skip";
        emit(doc, human + "formula: skipped, resolution is not pure");
        return kOk;
      }
      degrees = shape.degrees;
    } else {
      degrees = pure_degrees_from_h(h, codim);
    }
    const auto formula = betti_from_h_pure({h, complex.n(), f.d(), degrees});
    doc["degrees"] = degrees;
    doc["formula"] = integers_json(formula);
    human += "degrees = " + to_string(degrees) + "\nformula = " + to_string(formula);
    int status = kOk;
    if (opt_.method == "both") {
      const auto oracle = betti_sequence(*table);
      const bool agree = oracle == formula;
      doc["verdict"] = agree ? "pass" : "fail";
      human += std::string("\nverdict: ") + (agree ? "pass" : "fail");
      if (!agree) status = kFailed;
    }
    emit(doc, human);
    return status;
  }

  int chordal() const {
    const Graph g = as_graph(load(opt_));
    const auto result = is_chordal(g);
    json doc{{"chordal", result.chordal}};
    std::string human = result.chordal ? "true" : "false";
    if (result.chordal) {
      doc["elimination_order"] = result.elimination_order;
      human += "\nelimination order: " + to_string(result.elimination_order);
    } else {
      doc["chordless_cycle"] = result.chordless_cycle;
      human += "\nchordless cycle: " + to_string(result.chordless_cycle);
    }
    emit(doc, human);
    return kOk;
  }

  int clique() const {
    const SimplicialComplex complex = clique_complex(as_graph(load(opt_)));
    std::cout << to_document(complex) << '\n';
    return kOk;
  }

  int quasiforest() const {
    const auto result = is_quasi_forest(as_complex(load(opt_)));
    json doc{{"quasi_forest", result.is_quasi_forest}};
    std::string human = result.is_quasi_forest ? "true" : "false";
    if (result.is_quasi_forest) {
      doc["leaf_order"] = faces_json(result.leaf_order);
      human += "\nleaf order: " + faces_string(result.leaf_order);
    }
    emit(doc, human);
    return kOk;
  }

  int verify() const {
    const Instance instance = load(opt_);
    const FieldSpec field = FieldSpec::parse(opt_.field);
    const VerificationReport report =
        std::holds_alternative<Graph>(instance)
            ? verify_graph(std::get<Graph>(instance), field)
            : verify_complex(std::get<SimplicialComplex>(instance), field);
    std::cout << (structured() ? report.to_structured() : report.to_human());
    return report.passed() ? kOk : kFailed;
  }

  int gen(const std::string& kind) const {
    if (kind == "chordal") {
      std::cout << to_document(generate_graph(opt_)) << '\n';
    } else {
      std::cout << to_document(generate_complex(kind, opt_)) << '\n';
    }
    return kOk;
  }

 private:
  Options opt_;
};

void add_common(CLI::App* sub, Options& opt, bool with_input = true) {
  if (with_input) {
    sub->add_option("input", opt.input, "document path, '-' for stdin, or inline JSON");
  }
  sub->add_option("--field", opt.field, "q or a prime")->capture_default_str();
  sub->add_option("--method", opt.method)
      ->check(CLI::IsMember({"oracle", "formula", "both"}))
      ->capture_default_str();
  sub->add_option("--seed", opt.seed);
  sub->add_option("--n", opt.n)->check(CLI::Range(1, static_cast<int>(kMaxVertices)))
      ->capture_default_str();
  sub->add_option("--density", opt.density, "p/q or decimal")->capture_default_str();
  sub->add_option("--format", opt.format)
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  sub->add_flag("--assume-pure", opt.assume_pure,
                "infer resolution degrees from h instead of the oracle table");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations and identity checks for Stanley-Reisner rings"};
  app.require_subcommand(1);

  Options opt;
  std::string gen_kind;
  const char* verbs[] = {"fvector", "hvector", "dual",        "hilbert", "betti",
                         "chordal", "clique",  "quasiforest", "verify"};
  for (const char* verb : verbs) {
    CLI::App* sub = app.add_subcommand(verb);
    add_common(sub, opt);
    if (std::string(verb) == "verify") {
      sub->add_option("--gen", opt.gen, "verify a generated instance instead of an input")
          ->check(CLI::IsMember({"chordal", "complex", "quasiforest"}));
    }
  }
  CLI::App* gen = app.add_subcommand("gen", "print a seeded random instance");
  add_common(gen, opt, false);
  gen->add_option("kind", gen_kind)
      ->required()
      ->check(CLI::IsMember({"chordal", "complex", "quasiforest"}));
  gen->get_option("--seed")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kParse;
  }

  const Runner runner(opt);
  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "fvector") return runner.fvector();
    if (verb == "hvector") return runner.hvector();
    if (verb == "dual") return runner.dual();
    if (verb == "hilbert") return runner.hilbert();
    if (verb == "betti") return runner.betti();
    if (verb == "chordal") return runner.chordal();
    if (verb == "clique") return runner.clique();
    if (verb == "quasiforest") return runner.quasiforest();
    if (verb == "verify") return runner.verify();
    return runner.gen(gen_kind);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResource;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << '\n';
    return kFailed;
  }
}
