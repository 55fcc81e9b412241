// heapforge: verify, convert and generate structure files.
//
// Exit codes: 0 success, 1 a law fails, 2 bad input.

#include <filesystem>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "heapforge/functors.hpp"
#include "heapforge/heaps.hpp"
#include "heapforge/proterm.hpp"
#include "heapforge/reps.hpp"
#include "heapforge/structure_file.hpp"
#include "heapforge/zoo.hpp"

namespace {

using namespace heapforge;
using json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kLawFailure = 1;
constexpr int kInputError = 2;

struct Options {
  std::string format = "text";
  std::string output;
};

json report_json(const VerificationReport& rep) {
  json axioms = json::array();
  for (const auto& c : rep.checks()) {
    json w = c.witness ? json(*c.witness) : json(nullptr);
    axioms.push_back({{"id", c.id}, {"passed", c.passed}, {"witness", w}, {"detail", c.detail}});
  }
  return {{"structure", rep.subject()}, {"passed", rep.passed()}, {"axioms", axioms}};
}

void print_report(const Options& o, const VerificationReport& rep) {
  if (o.format == "json") {
    std::cout << report_json(rep).dump(2) << "\n";
    return;
  }
  std::cout << rep.subject() << ": " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : rep.checks()) {
    std::cout << "  " << (c.passed ? "pass " : "FAIL ") << c.id;
    if (c.witness) {
      std::cout << "  witness [";
      for (std::size_t i = 0; i < c.witness->size(); ++i)
        std::cout << (i ? ", " : "") << (*c.witness)[i];
      std::cout << "]";
    }
    if (!c.detail.empty()) std::cout << "  " << c.detail;
    std::cout << "\n";
  }
}

int finish(const Options& o, const VerificationReport& rep) {
  print_report(o, rep);
  return rep.passed() ? kOk : kLawFailure;
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
  } else {
    io::write_atomic(o.output, text);
    std::cerr << "wrote " << o.output << "\n";
  }
}

void emit(const Options& o, const io::Document& doc) { emit(o, io::serialize(doc)); }

template <class T>
const T& expect_kind(const io::Document& doc, const std::string& what) {
  if (!std::holds_alternative<T>(doc.value))
    throw InputError("expected a " + what + " file, got kind '" + io::kind_name(doc.value) + "'");
  return std::get<T>(doc.value);
}

VerificationReport verify_document(const io::Document& doc) {
  struct V {
    const io::Document& doc;
    VerificationReport operator()(const heaps::FiniteGroup& g) const {
      return heaps::verify_group(g);
    }
    VerificationReport operator()(const heaps::FiniteHeap& h) const {
      return heaps::verify_heap(h);
    }
    VerificationReport operator()(const alg::Algebra& a) const { return alg::verify_algebra(a); }
    VerificationReport operator()(const alg::HopfAlgebra& h) const { return alg::verify_hopf(h); }
    VerificationReport operator()(const alg::QuantumHeap& q) const {
      auto rep = alg::verify_quantum_heap(q);
      if (doc.character) rep.merge(alg::verify_character(q.alg, *doc.character), "character");
      return rep;
    }
    VerificationReport operator()(const reps::Module& m) const { return reps::verify_module(m); }
  };
  return std::visit(V{doc}, doc.value);
}

int cmd_verify(const Options& o, const std::string& path) {
  return finish(o, verify_document(io::load_document(path)));
}

int cmd_to_qheap(const Options& o, const std::string& path) {
  const auto doc = io::load_document(path);
  const auto& h = expect_kind<alg::HopfAlgebra>(doc, "hopf");
  const auto rep = alg::verify_hopf(h);
  if (!rep.passed()) return finish(o, rep);
  emit(o, io::Document{functors::qheap_from_hopf(h), std::nullopt});
  return kOk;
}

alg::Character resolve_character(const io::Document& doc, const alg::Algebra& a,
                                 const std::string& flag) {
  if (flag.empty()) throw InputError("a character is required (--character <entries>|from-file)");
  if (flag == "from-file") {
    if (!doc.character) throw InputError("the file has no character section");
    return *doc.character;
  }
  return io::parse_character(flag, a);
}

int cmd_to_hopf(const Options& o, const std::string& path, const std::string& character) {
  const auto doc = io::load_document(path);
  const auto& q = expect_kind<alg::QuantumHeap>(doc, "qheap");
  const auto eps = resolve_character(doc, q.alg, character);
  const auto qrep = alg::verify_quantum_heap(q);
  if (!qrep.passed()) return finish(o, qrep);
  const auto crep = alg::verify_character(q.alg, eps);
  if (!crep.passed()) return finish(o, crep);
  emit(o, io::Document{functors::hopf_from_copointed_qheap({q, eps}), std::nullopt});
  return kOk;
}

// Compares canonical bytes of both round trips through the other category.
int cmd_roundtrip(const Options& o, const std::string& path, const std::string& character) {
  const auto doc = io::load_document(path);
  alg::HopfAlgebra hopf;
  functors::CopointedQuantumHeap copointed;
  if (std::holds_alternative<alg::HopfAlgebra>(doc.value)) {
    hopf = std::get<alg::HopfAlgebra>(doc.value);
    const auto rep = alg::verify_hopf(hopf);
    if (!rep.passed()) return finish(o, rep);
    copointed = functors::forget_to_copointed(hopf);
  } else {
    const auto& q = expect_kind<alg::QuantumHeap>(doc, "hopf or qheap");
    const auto eps = resolve_character(doc, q.alg, character.empty() ? "from-file" : character);
    auto rep = alg::verify_quantum_heap(q);
    rep.merge(alg::verify_character(q.alg, eps), "character");
    if (!rep.passed()) return finish(o, rep);
    copointed = {q, eps};
    hopf = functors::hopf_from_copointed_qheap(copointed);
  }
  VerificationReport rep("roundtrip");
  const auto hopf_text = io::serialize(io::Structure{hopf});
  const auto hopf_back = functors::hopf_from_copointed_qheap(functors::forget_to_copointed(hopf));
  if (io::serialize(io::Structure{hopf_back}) == hopf_text)
    rep.pass("hopf->qheap->hopf", "bit-identical");
  else
    rep.fail("hopf->qheap->hopf", {}, "canonical files differ");
  const io::Document start{copointed.heap, copointed.eps};
  const auto back_hopf = functors::hopf_from_copointed_qheap(copointed);
  const io::Document back{functors::qheap_from_hopf(back_hopf), alg::Character{back_hopf.coalg.epsilon}};
  if (io::serialize(back) == io::serialize(start))
    rep.pass("qheap->hopf->qheap", "bit-identical");
  else
    rep.fail("qheap->hopf->qheap", {}, "canonical files differ");
  return finish(o, rep);
}

int cmd_zoo(const Options& o, const std::string& name, const std::vector<std::string>& params,
            const std::map<std::string, std::string>& shorthand, bool with_counit) {
  zoo::Params p = shorthand;
  for (const auto& kv : params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got " + kv);
    p[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  const auto entry = zoo::make_entry(name, p);
  io::Document doc{heaps::FiniteGroup{}, std::nullopt};
  std::visit([&](const auto& s) { doc.value = s; }, entry.structure);
  if (with_counit) {
    if (!std::holds_alternative<alg::QuantumHeap>(doc.value))
      throw InputError("--with-counit applies to qheap-* entries");
    const auto base = zoo::make_entry(name.substr(std::string("qheap-").size()), p);
    doc.character = alg::Character{std::get<alg::HopfAlgebra>(base.structure).coalg.epsilon};
  }
  emit(o, doc);
  return kOk;
}

heaps::FiniteHeap load_valid_heap(const std::string& path, VerificationReport& rep) {
  const auto doc = io::load_document(path);
  const auto h = expect_kind<heaps::FiniteHeap>(doc, "heap");
  rep = heaps::verify_heap(h);
  return h;
}

int cmd_heap_from_group(const Options& o, const std::string& path) {
  const auto doc = io::load_document(path);
  const auto& g = expect_kind<heaps::FiniteGroup>(doc, "group");
  const auto rep = heaps::verify_group(g);
  if (!rep.passed()) return finish(o, rep);
  emit(o, io::Document{heaps::heap_from_group(g), std::nullopt});
  return kOk;
}

int cmd_heap_aut(const Options& o, const std::string& path) {
  VerificationReport rep("heap");
  const auto h = load_valid_heap(path, rep);
  if (!rep.passed()) return finish(o, rep);
  emit(o, io::Document{heaps::aut_group(h).group, std::nullopt});
  return kOk;
}

int cmd_heap_point(const Options& o, const std::string& path, std::size_t at) {
  VerificationReport rep("heap");
  const auto h = load_valid_heap(path, rep);
  if (!rep.passed()) return finish(o, rep);
  if (at >= h.n) throw InputError("basepoint " + std::to_string(at) + " out of range");
  emit(o, io::Document{heaps::group_from_pointed_heap(h, at), std::nullopt});
  return kOk;
}

int cmd_heap_enumerate(const Options& o, std::size_t n) {
  const auto heaps_found = heaps::enumerate_heaps(n);
  if (o.output.empty()) {
    for (const auto& h : heaps_found) std::cout << io::serialize(io::Structure{h});
  } else {
    std::filesystem::create_directories(o.output);
    for (std::size_t i = 0; i < heaps_found.size(); ++i) {
      const auto file = (std::filesystem::path(o.output) /
                         ("heap-n" + std::to_string(n) + "-" + std::to_string(i) + ".json"))
                            .string();
      io::write_atomic(file, io::serialize(io::Structure{heaps_found[i]}));
      std::cerr << "wrote " << file << "\n";
    }
  }
  std::cerr << heaps_found.size() << " heap(s) on " << n << " elements\n";
  return kOk;
}

int cmd_pro_eval(const Options& o, const std::string& src, const std::string& path,
                 const std::string& model) {
  const auto term = pro::parse_term(src);
  const auto doc = io::load_document(path);
  json out{{"term", pro::to_string(term)},
           {"source", term->source},
           {"target", term->target},
           {"model", model}};
  std::string text;
  if (model == "vect") {
    alg::QuantumHeap q;
    if (std::holds_alternative<alg::HopfAlgebra>(doc.value))
      q = functors::qheap_from_hopf(std::get<alg::HopfAlgebra>(doc.value));
    else
      q = expect_kind<alg::QuantumHeap>(doc, "qheap or hopf");
    alg::check_shapes(q);
    const auto m = pro::eval_vect(term, q);
    json entries = json::array();
    for (const auto& t : m.triplets()) entries.push_back({t.row, t.col, t.value.to_string()});
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["entries"] = entries;
    text = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix\n";
    for (const auto& t : m.triplets())
      text += "  [" + std::to_string(t.row) + ", " + std::to_string(t.col) + "] " +
              t.value.to_string() + "\n";
  } else if (model == "set") {
    heaps::FiniteHeap h;
    if (std::holds_alternative<heaps::FiniteGroup>(doc.value)) {
      const auto& g = std::get<heaps::FiniteGroup>(doc.value);
      heaps::require_valid(g);
      h = heaps::heap_from_group(g);
    } else {
      h = expect_kind<heaps::FiniteHeap>(doc, "heap or group");
    }
    const auto m = pro::eval_set(term, h);
    out["in"] = m.in;
    out["out"] = m.out;
    out["table"] = m.table;
    text = "H^" + std::to_string(m.in) + " -> H^" + std::to_string(m.out) + "\n";
    const lin::Dims dims(m.in, m.n);
    for (std::size_t x = 0; x < m.table.size(); ++x) {
      text += "  (";
      const auto ix = lin::unflatten(dims, x);
      for (std::size_t i = 0; i < ix.size(); ++i) text += (i ? "," : "") + std::to_string(ix[i]);
      text += ") -> (";
      for (std::size_t i = 0; i < m.table[x].size(); ++i)
        text += (i ? "," : "") + std::to_string(m.table[x][i]);
      text += ")\n";
    }
  } else {
    throw InputError("--model must be vect or set");
  }
  emit(o, o.format == "json" ? out.dump(2) + "\n" : text);
  return kOk;
}

int cmd_pro_check(const Options& o, const std::string& path) {
  const auto doc = io::load_document(path);
  if (std::holds_alternative<alg::QuantumHeap>(doc.value))
    return finish(o, pro::check_pro_relations(std::get<alg::QuantumHeap>(doc.value)));
  if (std::holds_alternative<alg::HopfAlgebra>(doc.value))
    return finish(o, pro::check_pro_relations(
                         functors::qheap_from_hopf(std::get<alg::HopfAlgebra>(doc.value))));
  if (std::holds_alternative<heaps::FiniteGroup>(doc.value)) {
    const auto& g = std::get<heaps::FiniteGroup>(doc.value);
    heaps::require_valid(g);
    return finish(o, pro::check_pro_relations(heaps::heap_from_group(g)));
  }
  const auto& h = expect_kind<heaps::FiniteHeap>(doc, "heap, group, qheap or hopf");
  const auto rep = heaps::verify_heap(h);
  if (!rep.passed()) return finish(o, rep);
  return finish(o, pro::check_pro_relations(h));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite heaps, Hopf algebras and quantum heaps as exact structure constants"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Report format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", o.output, "Write the produced file here");

  std::string path, character, name, term, model = "vect";
  std::vector<std::string> params;
  std::map<std::string, std::string> shorthand;
  std::string sh_n, sh_p, sh_q, sh_group;
  std::size_t at = 0, count_n = 0;
  bool with_counit = false;
  int code = kOk;
  std::function<int()> run;

  auto* verify = app.add_subcommand("verify", "Check every law of a structure file");
  verify->add_option("file", path)->required();
  verify->callback([&] { run = [&] { return cmd_verify(o, path); }; });

  auto* to_qheap = app.add_subcommand("to-qheap", "Hopf algebra -> quantum heap");
  to_qheap->add_option("file", path)->required();
  to_qheap->callback([&] { run = [&] { return cmd_to_qheap(o, path); }; });

  auto* to_hopf = app.add_subcommand("to-hopf", "Quantum heap with a character -> Hopf algebra");
  to_hopf->add_option("file", path)->required();
  to_hopf->add_option("--character", character,
                      "Entry list such as [[0,\"1\"]], or from-file");
  to_hopf->callback([&] { run = [&] { return cmd_to_hopf(o, path, character); }; });

  auto* roundtrip = app.add_subcommand("roundtrip", "Both round trips, compared byte for byte");
  roundtrip->add_option("file", path)->required();
  roundtrip->add_option("--character", character, "For qheap files without a character section");
  roundtrip->callback([&] { run = [&] { return cmd_roundtrip(o, path, character); }; });

  auto* zoo_cmd = app.add_subcommand("zoo", "Emit a built-in structure");
  zoo_cmd->add_option("name", name)->required();
  zoo_cmd->add_option("--param", params, "key=value, repeatable");
  zoo_cmd->add_option("--n", sh_n);
  zoo_cmd->add_option("--p", sh_p);
  zoo_cmd->add_option("--q", sh_q);
  zoo_cmd->add_option("--group", sh_group);
  zoo_cmd->add_flag("--with-counit", with_counit, "Attach the counit to a qheap-* entry");
  zoo_cmd->callback([&] {
    for (auto [k, v] : {std::pair{"n", &sh_n}, {"p", &sh_p}, {"q", &sh_q}, {"group", &sh_group}})
      if (!v->empty()) shorthand[k] = *v;
    run = [&] { return cmd_zoo(o, name, params, shorthand, with_counit); };
  });

  auto* heap = app.add_subcommand("heap", "Heap utilities");
  heap->require_subcommand(1);
  auto* from_group = heap->add_subcommand("from-group", "t(a,b,c) = a b^-1 c");
  from_group->add_option("file", path)->required();
  from_group->callback([&] { run = [&] { return cmd_heap_from_group(o, path); }; });
  auto* aut = heap->add_subcommand("aut", "Group of translations of a heap");
  aut->add_option("file", path)->required();
  aut->callback([&] { run = [&] { return cmd_heap_aut(o, path); }; });
  auto* point = heap->add_subcommand("point", "Group of a heap with a basepoint");
  point->add_option("file", path)->required();
  point->add_option("--at", at)->required();
  point->callback([&] { run = [&] { return cmd_heap_point(o, path, at); }; });
  auto* enumerate = heap->add_subcommand("enumerate", "All heaps on n labeled elements");
  enumerate->add_option("--n", count_n)->required();
  enumerate->callback([&] { run = [&] { return cmd_heap_enumerate(o, count_n); }; });

  auto* pro_eval = app.add_subcommand("pro-eval", "Evaluate a term");
  pro_eval->add_option("term", term)->required();
  pro_eval->add_option("--in", path)->required();
  pro_eval->add_option("--model", model)->check(CLI::IsMember({"vect", "set"}));
  pro_eval->callback([&] { run = [&] { return cmd_pro_eval(o, term, path, model); }; });

  auto* pro_check = app.add_subcommand("pro-check", "Check the seven defining relations");
  pro_check->add_option("file", path)->required();
  pro_check->callback([&] { run = [&] { return cmd_pro_check(o, path); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }
  try {
    code = run ? run() : kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return code;
}
