// Copyright 2026 The lambek-delta Authors.
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

// lambek: derive readings of a phrase, print them in index notation,
// evaluate them on lexicon tensors and cross-check the two semantics.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lambek/errors.hpp"
#include "lambek/lexicon.hpp"
#include "lambek/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUnderivable = 2;
constexpr int kExitInput = 3;
constexpr int kExitCheckFailed = 4;

struct Common {
  std::string lexicon;
  std::string goal;
  std::vector<std::string> words;
  std::string postulates = "left";
  std::string bracketing = "right";
  std::size_t max_depth = 40;
  std::optional<std::size_t> max_proofs;
  std::uint64_t seed_override = 0;
  std::string format = "text";
  std::string dims;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--lexicon", c.lexicon, "Lexicon file")->required();
  cmd->add_option("--goal", c.goal, "Goal type, usually an atom")->required();
  cmd->add_option("words", c.words, "The phrase, one word per argument")->required();
  cmd->add_option("--postulates", c.postulates, "Extraction postulates")
      ->check(CLI::IsMember({"left", "right", "both", "none"}))
      ->capture_default_str();
  cmd->add_option("--bracketing", c.bracketing, "right, all or explicit:<tree>")
      ->capture_default_str();
  cmd->add_option("--max-depth", c.max_depth, "Maximum proof height")->capture_default_str();
  cmd->add_option("--max-proofs", c.max_proofs, "Stop after this many proofs per sequent");
  cmd->add_option("--seed-override", c.seed_override, "Added to every lexicon seed");
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();
  cmd->add_option("--dims", c.dims, "Space dimension overrides, e.g. N=2,S=2");
}

std::map<std::string, std::size_t> parse_dims(const std::string& text) {
  std::map<std::string, std::size_t> out;
  std::size_t start = 0;
  while (start < text.size()) {
    auto comma = text.find(',', start);
    std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw lambek::Error("bad --dims entry '" + item + "'");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item.substr(eq + 1), &used);
    } catch (const std::exception&) {
      throw lambek::Error("bad --dims entry '" + item + "'");
    }
    if (used != item.size() - eq - 1) throw lambek::Error("bad --dims entry '" + item + "'");
    out[item.substr(0, eq)] = v;
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

lambek::Lexicon load(const Common& c) {
  lambek::Lexicon lex = lambek::load_lexicon(c.lexicon);
  if (c.seed_override != 0) lex = lex.with_seed_offset(c.seed_override);
  if (!c.dims.empty()) lex = lex.with_dims(parse_dims(c.dims));
  return lex;
}

lambek::PipelineOptions options(const Common& c) {
  lambek::PipelineOptions o;
  o.search.postulates = lambek::SearchConfig::postulate_set(c.postulates);
  o.search.max_depth = c.max_depth;
  o.search.max_proofs = c.max_proofs;
  o.bracketing = lambek::Bracketing::parse(c.bracketing);
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof search and tensor semantics for the modal Lambek calculus"};
  app.require_subcommand(1);

  Common derive_args, check_args, compare_args;
  auto* derive = app.add_subcommand("derive", "Find the readings of a phrase and evaluate them");
  add_common(derive, derive_args);

  auto* check = app.add_subcommand("check", "Compare categorical and delta semantics per proof");
  add_common(check, check_args);
  lambek::EquivalenceOptions eq;
  check->add_option("--tolerance", eq.tolerance, "Maximum allowed deviation")->capture_default_str();
  check->add_option("--cap", eq.cap, "Largest intermediate space for the categorical path")
      ->capture_default_str();
  check->add_flag("--basis", eq.basis, "Also compare full matrices on all basis inputs");
  check->add_flag("--corrupt-proof", eq.corrupt, "Test hook")->group("");

  auto* compare = app.add_subcommand("compare", "Cosine similarity between readings");
  add_common(compare, compare_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (derive->parsed()) {
      auto report = lambek::cmd_derive(load(derive_args), derive_args.words, derive_args.goal,
                                       options(derive_args));
      std::cout << (derive_args.format == "text" ? lambek::format_text(report)
                                                 : lambek::format_json(report));
      return kExitOk;
    }
    if (check->parsed()) {
      auto report = lambek::cmd_check_equivalence(load(check_args), check_args.words,
                                                  check_args.goal, options(check_args), eq);
      std::cout << (check_args.format == "text" ? lambek::format_text(report)
                                                : lambek::format_json(report));
      return report.passed ? kExitOk : kExitCheckFailed;
    }
    auto report = lambek::cmd_compare(load(compare_args), compare_args.words, compare_args.goal,
                                      options(compare_args));
    std::cout << (compare_args.format == "text" ? lambek::format_text(report)
                                                : lambek::format_json(report));
    return kExitOk;
  } catch (const lambek::UnderivableError& e) {
    std::cerr << "lambek: " << e.what() << "\n";
    return kExitUnderivable;
  } catch (const lambek::Error& e) {
    std::cerr << "lambek: " << e.what() << "\n";
    return kExitInput;
  }
}
