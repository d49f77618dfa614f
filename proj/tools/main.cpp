#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json_io.hpp"
#include "verify.hpp"

#include "schubert/balanced.hpp"
#include "schubert/crystals.hpp"
#include "schubert/divided_difference.hpp"
#include "schubert/error.hpp"
#include "schubert/keys.hpp"
#include "schubert/kohnert.hpp"
#include "schubert/rc_graph.hpp"
#include "schubert/splitting.hpp"

namespace {

using namespace schubert;
using io::json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

const std::vector<std::string> kMethods{"rcgraph", "oracle", "kohnert", "balanced", "keys"};

Polynomial polynomialBy(const std::string& method, const Permutation& w) {
  if (method == "rcgraph") return schubertSum(w);
  if (method == "oracle") return schubertOracle(w);
  Polynomial total;
  if (method == "kohnert") {
    for (const Diagram& d : kohnertClosure(w)) total += d.monomial();
  } else if (method == "balanced") {
    for (const Labeling& b : allBalancedLabelings(w)) total += labelingMonomial(b);
  } else if (method == "keys") {
    for (const KeyTerm& t : schubertKeyDecomposition(w)) total += t.key;
  } else {
    throw InvalidInput("unknown method " + method);
  }
  return total;
}

// Prints j as one line after checking that it parses back to itself.
template <typename Parse>
void emit(const json& j, Parse parse) {
  if (io::toJson(parse(j)) != j) throw InternalError("JSON round trip failed for " + j.dump());
  std::cout << j.dump() << '\n';
}

CutPoints parseCuts(const std::string& text) {
  CutPoints a;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoi(item, &used));
      if (used != item.size()) throw InvalidInput("");
    } catch (const std::exception&) {
      throw InvalidInput("bad cut point '" + item + "'");
    }
  }
  return a;
}

std::string renderLabeling(const Labeling& b, int n) {
  std::ostringstream os;
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      const auto it = b.find({i, j});
      os << (j > 1 ? " " : "") << (it == b.end() ? std::string(".") : std::to_string(it->second));
    }
    os << '\n';
  }
  return os.str();
}

int runSchubert(const Permutation& w, const std::string& method, bool asJson) {
  if (method != "all") {
    const Polynomial p = polynomialBy(method, w);
    if (asJson) {
      emit(json{{"permutation", io::toJson(w)}, {"method", method}, {"polynomial", io::toJson(p)}},
           [](const json& j) { return io::polynomialFromJson(j.at("polynomial")); });
    } else {
      std::cout << p.toString() << '\n';
    }
    return kOk;
  }
  std::map<std::string, Polynomial> results;
  for (const std::string& m : kMethods) results[m] = polynomialBy(m, w);
  bool agree = true;
  for (const std::string& m : kMethods) {
    agree = agree && results[m] == results["oracle"];
    if (asJson) {
      emit(json{{"method", m}, {"polynomial", io::toJson(results[m])}},
           [](const json& j) { return io::polynomialFromJson(j.at("polynomial")); });
    } else {
      std::cout << m << ": " << results[m].toString() << '\n';
    }
  }
  if (!agree) {
    std::cerr << "methods disagree for " << w.toString() << '\n';
    return kCheckFailed;
  }
  if (!asJson) std::cout << "all methods agree\n";
  return kOk;
}

int runObjects(const Permutation& w, const std::string& kind, bool dot, const std::string& at) {
  if (kind == "rcgraphs") {
    for (const RcGraph& g : enumerateAll(w)) emit(io::toJson(g), io::rcGraphFromJson);
  } else if (kind == "kohnert") {
    for (const Diagram& d : kohnertClosure(w)) emit(io::toJson(d), io::diagramFromJson);
  } else if (kind == "balanced") {
    for (const Labeling& b : allBalancedLabelings(w)) emit(io::toJson(b), io::labelingFromJson);
  } else if (kind == "crystals") {
    for (const Crystal& c : crystalPartition(w)) {
      if (dot) {
        std::cout << crystalDot(c);
      } else {
        emit(io::toJson(c), io::crystalFromJson);
      }
    }
  } else if (kind == "split") {
    if (at.empty()) throw InvalidInput("--kind split needs --at");
    for (const auto& [lambda, c] : splitCoefficients(w, parseCuts(at))) {
      if (c != 0) std::cout << io::splitTermJson(lambda, c).dump() << '\n';
    }
  } else {
    throw InvalidInput("unknown kind " + kind);
  }
  return kOk;
}

int runSplit(const Permutation& w, const std::string& at, bool check, bool asJson) {
  const CutPoints a = parseCuts(at);
  requireCompatible(w, a);
  Polynomial assembled;
  for (const auto& [lambda, c] : splitCoefficients(w, a)) {
    if (c == 0) continue;
    assembled += schurProduct(lambda, a) * c;
    if (asJson) {
      std::cout << io::splitTermJson(lambda, c).dump() << '\n';
      continue;
    }
    std::cout << c;
    for (const Partition& part : lambda) std::cout << " (" << joinWord(part) << ")";
    std::cout << '\n';
  }
  if (asJson) {
    emit(json{{"polynomial", io::toJson(assembled)}},
         [](const json& j) { return io::polynomialFromJson(j.at("polynomial")); });
  } else {
    std::cout << "sum: " << assembled.toString() << '\n';
  }
  if (!check) return kOk;
  const bool ok = assembled == schubertOracle(w);
  std::cout << (ok ? "matches the divided-difference polynomial" : "DIFFERS from the divided-difference polynomial")
            << '\n';
  return ok ? kOk : kCheckFailed;
}

int runKohnert(const Permutation& w, bool asJson) {
  Polynomial total;
  for (const Diagram& d : kohnertClosure(w)) {
    total += d.monomial();
    if (asJson) {
      emit(io::toJson(d), io::diagramFromJson);
    } else {
      std::cout << d.toString() << '\n';
    }
  }
  if (!asJson) std::cout << "sum: " << total.toString() << '\n';
  return kOk;
}

int runBalanced(const Permutation& w, bool asJson) {
  Polynomial total;
  for (const Labeling& b : allBalancedLabelings(w)) {
    total += labelingMonomial(b);
    if (asJson) {
      emit(io::toJson(b), io::labelingFromJson);
    } else {
      std::cout << renderLabeling(b, w.size()) << '\n';
    }
  }
  if (!asJson) std::cout << "sum: " << total.toString() << '\n';
  return kOk;
}

int runDraw(const Permutation& w) {
  for (const RcGraph& g : enumerateAll(w)) std::cout << renderLineDiagram(g) << '\n';
  return kOk;
}

int runVerify(int n, const std::string& suite, int threads) {
  const auto selected = verify::selectCriteria(suite);
  if (selected.empty()) throw InvalidInput("unknown suite " + suite);
  verify::Options opts;
  opts.n = n;
  opts.threads = threads;
  bool ok = true;
  for (const verify::Criterion& c : selected) {
    const verify::Result r = c.run(opts);
    ok = ok && r.passed();
    std::cout << verify::formatResult(r) << std::endl;
  }
  return ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schubert polynomials from rc-graphs, crystals, Kohnert diagrams and balanced labelings"};
  app.require_subcommand(1);

  std::string perm;
  std::string method = "rcgraph";
  std::string kind = "rcgraphs";
  std::string at;
  std::string suite = "all";
  bool asJson = false;
  bool dot = false;
  bool check = false;
  int n = 5;
  int threads = 0;

  auto* schubertCmd = app.add_subcommand("schubert", "Print the Schubert polynomial of w");
  schubertCmd->add_option("w", perm, "permutation, e.g. 2143 or 2,1,4,3")->required();
  schubertCmd->add_option("--method", method)
      ->check(CLI::IsMember({"rcgraph", "oracle", "kohnert", "balanced", "keys", "all"}));
  schubertCmd->add_flag("--json", asJson);

  auto* objectsCmd = app.add_subcommand("objects", "Emit the combinatorial objects of w as JSON lines");
  objectsCmd->add_option("w", perm)->required();
  objectsCmd->add_option("--kind", kind)->check(CLI::IsMember({"rcgraphs", "kohnert", "balanced", "crystals", "split"}));
  objectsCmd->add_flag("--dot", dot, "crystals as DOT graphs");
  objectsCmd->add_option("--at", at, "cut points for --kind split");

  auto* splitCmd = app.add_subcommand("split", "Expand w along cut points into Schur products");
  splitCmd->add_option("w", perm)->required();
  splitCmd->add_option("--at", at, "comma-separated cut points")->required();
  splitCmd->add_flag("--verify", check);
  splitCmd->add_flag("--json", asJson);

  auto* kohnertCmd = app.add_subcommand("kohnert", "List the Kohnert diagrams of w");
  kohnertCmd->add_option("w", perm)->required();
  kohnertCmd->add_flag("--json", asJson);

  auto* balancedCmd = app.add_subcommand("balanced", "List the balanced labelings of D(w)");
  balancedCmd->add_option("w", perm)->required();
  balancedCmd->add_flag("--json", asJson);

  auto* drawCmd = app.add_subcommand("draw", "Draw the line diagram of every rc-graph of w");
  drawCmd->add_option("w", perm)->required();

  auto* verifyCmd = app.add_subcommand("verify", "Run the cross-verification criteria");
  verifyCmd->add_option("--n", n)->check(CLI::Range(2, 6));
  verifyCmd->add_option("--suite", suite)->check(CLI::IsMember(verify::suiteNames()));
  verifyCmd->add_option("--threads", threads, "worker threads (default: SCHUBERT_THREADS or all cores)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verifyCmd) return runVerify(n, suite, threads);
    const Permutation w = Permutation::parse(perm);
    if (*schubertCmd) return runSchubert(w, method, asJson);
    if (*objectsCmd) return runObjects(w, kind, dot, at);
    if (*splitCmd) return runSplit(w, at, check, asJson);
    if (*kohnertCmd) return runKohnert(w, asJson);
    if (*balancedCmd) return runBalanced(w, asJson);
    if (*drawCmd) return runDraw(w);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
