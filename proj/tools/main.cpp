// Copyright 2026 The metasylv Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "metasylv/chain.hpp"
#include "metasylv/decreasing_tree.hpp"
#include "metasylv/errors.hpp"
#include "metasylv/lattice.hpp"
#include "metasylv/limits.hpp"
#include "metasylv/metasylvester.hpp"
#include "metasylv/serialization.hpp"
#include "metasylv/tamari.hpp"
#include "metasylv/verify.hpp"

namespace {

using metasylv::json::Json;

enum Exit : int {
  kOk = 0,
  kPropertyFailure = 1,
  kSizeLimit = 2,
  kBadPayload = 3,
  kBadFlags = 4,
};

struct BadFlags : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadPayload : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 0;
  int m = 0;
  std::optional<int> max_nm;
  std::string object;
  std::string method = "formula";
  std::string from;
  std::string to;
  std::string lattice;
  std::string format = "json";
  bool verify = false;
  std::string suite;
};

// Effective cap: --max-nm wins over METASYLV_MAX_NM, which wins over the
// built-in default.
int cap(const Options& opt, int environment_cap) {
  if (!opt.max_nm) return environment_cap;
  if (*opt.max_nm > environment_cap) {
    std::cerr << "warning: --max-nm " << *opt.max_nm
              << " raises the size cap above " << environment_cap << "\n";
  }
  return *opt.max_nm;
}

void require_shape(const Options& opt) {
  if (opt.n < 1 || opt.m < 1) throw BadFlags("--n and --m must be positive");
}

void require_within(const Options& opt, int limit) {
  if (opt.n * opt.m > limit) {
    throw metasylv::SizeLimit("n*m = " + std::to_string(opt.n * opt.m) +
                              " exceeds the cap " + std::to_string(limit) +
                              " (use --max-nm or METASYLV_MAX_NM)");
  }
}

std::uint64_t count_by_formula(const Options& opt) {
  if (opt.object == "mperms") {
    return metasylv::count_mpermutations(opt.n, opt.m);
  }
  if (opt.object == "classes" || opt.object == "trees" ||
      opt.object == "chains") {
    return metasylv::count_classes(opt.n, opt.m);
  }
  return metasylv::count_ballot_paths(opt.n, opt.m);
}

std::uint64_t count_by_enumeration(const Options& opt) {
  std::uint64_t total = 0;
  if (opt.object == "mperms") {
    auto stream = metasylv::enumerate_mpermutations(opt.n, opt.m);
    while (stream.next()) ++total;
  } else if (opt.object == "classes") {
    auto stream = metasylv::enumerate_classes(opt.n, opt.m);
    while (stream.next()) ++total;
  } else if (opt.object == "trees") {
    auto stream = metasylv::enumerate_trees(opt.n, opt.m + 1);
    while (stream.next()) ++total;
  } else if (opt.object == "chains") {
    total = metasylv::enumerate_chains(opt.n, opt.m,
                                       metasylv::ChainEnumeration::kFilterTuples)
                .size();
  } else {
    total = metasylv::enumerate_ballot_paths(opt.n, opt.m).size();
  }
  return total;
}

int cmd_count(const Options& opt) {
  require_shape(opt);
  const auto caps = metasylv::SizeCaps::from_environment();
  if (opt.method == "enumerate") require_within(opt, cap(opt, caps.enumeration));
  const std::uint64_t value =
      opt.method == "formula" ? count_by_formula(opt) : count_by_enumeration(opt);
  std::cout << value << "\n";
  return kOk;
}

Json read_payload() {
  const std::string text{std::istreambuf_iterator<char>(std::cin),
                         std::istreambuf_iterator<char>()};
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw BadPayload("empty payload");
  const auto last = text.find_last_not_of(" \t\r\n");
  const std::string body = text.substr(first, last - first + 1);
  // A bare digit string is an m-permutation, not a JSON number.
  if (body.find_first_not_of("0123456789.") == std::string::npos) {
    return Json(body);
  }
  try {
    return Json::parse(body);
  } catch (const Json::parse_error& e) {
    throw BadPayload(std::string("invalid JSON: ") + e.what());
  }
}

metasylv::MetasylvesterClass class_from(const std::string& rep,
                                        const Json& payload,
                                        const Options& opt) {
  using namespace metasylv;
  if (rep == "mperm") {
    return MetasylvesterClass::of(json::mpermutation_from_json(payload));
  }
  if (rep == "maxclass") {
    const auto sigma = json::mpermutation_from_json(payload);
    if (!is_max_element(sigma)) {
      throw BadPayload(sigma.to_string() +
                       " is not the maximal element of its class");
    }
    return MetasylvesterClass::of(sigma);
  }
  if (rep == "tree") {
    return MetasylvesterClass::of(reading_word(json::tree_from_json(payload)));
  }
  if (rep == "inversions") {
    return MetasylvesterClass::from_inversions(
        json::tree_inversions_from_json(payload));
  }
  if (rep == "code") {
    return from_tree_code(json::tree_code_from_json(payload, opt.m));
  }
  return psi(json::chain_from_json(payload));
}

Json render(const std::string& rep, const metasylv::MetasylvesterClass& cls) {
  using namespace metasylv;
  if (rep == "mperm" || rep == "maxclass") return json::to_json(cls.canonical());
  if (rep == "tree") return json::to_json(dt(cls.canonical()));
  if (rep == "inversions") return json::to_json(cls.inversions());
  if (rep == "code") return json::to_json(tree_code(cls));
  if (rep == "chain") return json::to_json(psi_inverse(cls));
  return json::to_json(dyck_chain_of_class(cls));
}

bool is_source(const std::string& rep) {
  return rep == "mperm" || rep == "maxclass" || rep == "tree" ||
         rep == "inversions" || rep == "code" || rep == "chain";
}

int cmd_convert(const Options& opt) {
  if (!is_source(opt.from)) {
    throw BadFlags("--from must be one of mperm, maxclass, tree, inversions, "
                   "code, chain");
  }
  if (!is_source(opt.to) && opt.to != "dyck-chain") {
    throw BadFlags("--to must be one of mperm, maxclass, tree, inversions, "
                   "code, chain, dyck-chain");
  }
  const Json payload = read_payload();
  metasylv::MetasylvesterClass cls;
  try {
    cls = class_from(opt.from, payload, opt);
  } catch (const metasylv::SizeLimit&) {
    throw;
  } catch (const metasylv::Error& e) {
    throw BadPayload(e.what());
  } catch (const Json::exception& e) {
    throw BadPayload(e.what());
  }
  std::cout << render(opt.to, cls).dump() << "\n";
  return kOk;
}

int cmd_hasse(const Options& opt) {
  require_shape(opt);
  metasylv::LatticeKind kind;
  try {
    kind = metasylv::lattice_kind_from_string(opt.lattice);
  } catch (const std::invalid_argument& e) {
    throw BadFlags(e.what());
  }
  if (opt.format != "dot" && opt.format != "json") {
    throw BadFlags("--format must be dot or json");
  }
  require_within(opt, cap(opt, metasylv::SizeCaps::from_environment().lattice));
  metasylv::LatticeDiagram diagram;
  switch (kind) {
    case metasylv::LatticeKind::kWeak:
      diagram = metasylv::weak_diagram(opt.n, opt.m);
      break;
    case metasylv::LatticeKind::kMetasylvester:
      diagram = metasylv::metasylvester_diagram(opt.n, opt.m);
      break;
    case metasylv::LatticeKind::kMTamari:
      diagram = metasylv::mtamari_diagram(opt.n, opt.m);
      break;
  }
  if (opt.verify) {
    const auto check = metasylv::verify_diagram(diagram);
    if (!check.ok) {
      std::cerr << "diagram check failed: " << check.counterexample << "\n";
      return kPropertyFailure;
    }
  }
  if (opt.format == "dot") {
    std::cout << metasylv::to_dot(diagram);
  } else {
    std::cout << metasylv::json::to_json(diagram).dump() << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& opt) {
  metasylv::Suite suite;
  try {
    suite = metasylv::suite_from_string(opt.suite);
  } catch (const std::invalid_argument& e) {
    throw BadFlags(e.what());
  }
  metasylv::VerifyOptions options;
  options.max_nm = opt.max_nm.value_or(6);
  if (options.max_nm < 1) throw BadFlags("--max-nm must be positive");
  const int limit = metasylv::SizeCaps::from_environment().enumeration;
  if (options.max_nm > limit) {
    throw metasylv::SizeLimit("--max-nm " + std::to_string(options.max_nm) +
                              " exceeds the cap " + std::to_string(limit));
  }
  options.progress = &std::cerr;
  const auto report = metasylv::run_verification(suite, options);
  std::cout << report.to_text();
  std::cerr << "elapsed " << report.seconds << " s\n";
  return report.passed() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"metasylv: metasylvester lattices, decreasing trees, chains "
               "and m-Tamari lattices"};
  app.require_subcommand(1);

  auto* count = app.add_subcommand("count", "Count objects of size (n, m)");
  count->add_option("object", opt.object, "What to count")
      ->required()
      ->check(CLI::IsMember({"mperms", "classes", "trees", "chains",
                             "ballot-paths"}));
  count->add_option("--n", opt.n, "Alphabet size")->required();
  count->add_option("--m", opt.m, "Multiplicity")->required();
  count->add_option("--method", opt.method, "formula or enumerate")
      ->check(CLI::IsMember({"formula", "enumerate"}));
  count->add_option("--max-nm", opt.max_nm, "Override the size cap");

  auto* convert = app.add_subcommand(
      "convert", "Convert a JSON payload on stdin between representations");
  convert->add_option("--from", opt.from, "Source representation")->required();
  convert->add_option("--to", opt.to, "Target representation")->required();
  convert->add_option("--m", opt.m, "Multiplicity for code payloads");

  auto* hasse = app.add_subcommand("hasse", "Export a Hasse diagram");
  hasse->add_option("--n", opt.n, "Alphabet size")->required();
  hasse->add_option("--m", opt.m, "Multiplicity")->required();
  hasse->add_option("--lattice", opt.lattice, "weak, metasylvester or mtamari")
      ->required();
  hasse->add_option("--format", opt.format, "dot or json");
  hasse->add_option("--max-nm", opt.max_nm, "Override the size cap");
  hasse->add_flag("--verify", opt.verify, "Check the diagram is a lattice");

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", opt.suite,
                     "weak-lattice, intervals, semi-quotient, bijections, "
                     "tamari or all")
      ->required();
  verify->add_option("--max-nm", opt.max_nm, "Largest n*m checked");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadFlags;
  }

  try {
    if (count->parsed()) return cmd_count(opt);
    if (convert->parsed()) return cmd_convert(opt);
    if (hasse->parsed()) return cmd_hasse(opt);
    return cmd_verify(opt);
  } catch (const BadFlags& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadFlags;
  } catch (const metasylv::SizeLimit& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kSizeLimit;
  } catch (const BadPayload& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadPayload;
  } catch (const metasylv::InvariantViolation& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kPropertyFailure;
  } catch (const metasylv::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadFlags;
  }
}
