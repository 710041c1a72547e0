// Copyright 2026 The simt Authors
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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include "simt/corpus.hpp"
#include "simt/evaluate.hpp"
#include "simt/http_translator.hpp"
#include "simt/metrics.hpp"
#include "simt/policy.hpp"
#include "simt/policy_io.hpp"
#include "simt/session.hpp"
#include "simt/sft.hpp"
#include "simt/trace_io.hpp"
#include "simt/translator.hpp"

namespace {

using namespace simt;

struct RunOptions {
  std::string source_path;
  std::string output_path;
  std::string policy_spec = "waitk:3";
  std::string translator_spec = "mock";
  std::string template_path;
  std::string lexicon_path;
  std::string instruction;
  std::string source_language = "German";
  std::string target_language = "English";
  std::string protocol = "minimal";
  int boundary_min = 1;
  int boundary_max = 3;
  bool no_boundary = false;
  int mock_cap = 1 << 20;
  int timeout_ms = 10000;
  int max_new_tokens = 16;
  int parallelism = 1;
  int max_target_words = 0;
  std::int64_t arrival_interval_ms = 0;
  bool abort_on_error = false;
};

std::string default_instruction(const RunOptions& options) {
  if (!options.instruction.empty()) {
    return options.instruction;
  }
  return "Translate the following sentence from " + options.source_language +
         " to " + options.target_language + ".";
}

PromptTemplate load_template(const std::string& path) {
  return path.empty() ? PromptTemplate::default_template()
                      : PromptTemplate::load(path);
}

std::map<std::string, std::string> load_lexicon(const std::string& path) {
  std::map<std::string, std::string> lexicon;
  if (path.empty()) {
    return lexicon;
  }
  for (const std::string& line : read_lines(path)) {
    if (line.empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      raise(ErrorKind::kParseError,
            "lexicon line is not tab-separated: " + line);
    }
    lexicon[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return lexicon;
}

// "waitk:3" | "scripted:file" | "tokenfile:file"
PolicyFactory make_policy_factory(
    const RunOptions& options,
    const std::vector<std::vector<std::string>>& sources) {
  const std::string& spec = options.policy_spec;
  std::size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    raise(ErrorKind::kInvalidParameter,
          "policy must look like waitk:K, scripted:FILE or tokenfile:FILE");
  }
  const std::string kind = spec.substr(0, colon);
  const std::string argument = spec.substr(colon + 1);

  if (kind == "waitk") {
    int k = 0;
    try {
      k = std::stoi(argument);
    } catch (const std::exception&) {
      raise(ErrorKind::kInvalidParameter, "bad wait-k value: " + argument);
    }
    waitk_agent(k);  // validate eagerly
    return [k](std::size_t) { return waitk_agent(k); };
  }

  if (kind == "scripted") {
    auto policies = std::make_shared<std::vector<WordLevelPolicy>>(
        read_word_policy_file(argument));
    if (policies->size() != sources.size()) {
      raise(ErrorKind::kShapeMismatch,
            "policy file has " + std::to_string(policies->size()) +
                " lines, corpus has " + std::to_string(sources.size()));
    }
    auto lengths = std::make_shared<std::vector<int>>();
    for (const auto& source : sources) {
      lengths->push_back(static_cast<int>(source.size()));
    }
    return [policies, lengths](std::size_t line) {
      return scripted_agent((*policies)[line], (*lengths)[line]);
    };
  }

  if (kind == "tokenfile") {
    auto records = read_token_policy_file(argument);
    if (records.size() != sources.size()) {
      raise(ErrorKind::kShapeMismatch,
            "token policy file has " + std::to_string(records.size()) +
                " lines, corpus has " + std::to_string(sources.size()));
    }
    BoundaryConfig boundary{options.boundary_min, options.boundary_max};
    auto policies = std::make_shared<std::vector<WordLevelPolicy>>();
    auto lengths = std::make_shared<std::vector<int>>();
    for (std::size_t line = 0; line < records.size(); ++line) {
      const TokenPolicyRecord& record = records[line];
      if (record.pair.source_len() !=
          static_cast<int>(sources[line].size())) {
        raise(ErrorKind::kShapeMismatch,
              "line " + std::to_string(line + 1) + ": token policy covers " +
                  std::to_string(record.pair.source_len()) +
                  " source words, corpus line has " +
                  std::to_string(sources[line].size()));
      }
      WordLevelPolicy policy = token_to_word_policy(record.pair, record.policy);
      if (!options.no_boundary) {
        policy = apply_boundary(policy, boundary, record.pair.source_len());
      }
      policies->push_back(std::move(policy));
      lengths->push_back(record.pair.source_len());
    }
    return [policies, lengths](std::size_t line) {
      return scripted_agent((*policies)[line], (*lengths)[line]);
    };
  }

  raise(ErrorKind::kInvalidParameter, "unknown policy kind: " + kind);
}

std::unique_ptr<TranslationAgent> make_translator(const RunOptions& options) {
  const std::string& spec = options.translator_spec;
  if (spec == "mock") {
    return mock_translator(load_lexicon(options.lexicon_path),
                           options.mock_cap);
  }
  if (spec.rfind("http:", 0) == 0 || spec.rfind("https:", 0) == 0) {
    HttpTranslatorConfig config;
    config.endpoint = spec;
    config.prompt_template = load_template(options.template_path);
    config.timeout_ms = options.timeout_ms;
    config.max_new_tokens = options.max_new_tokens;
    config.protocol = options.protocol == "completions"
                          ? WireProtocol::kCompletions
                          : WireProtocol::kMinimal;
    return http_translator(std::move(config));
  }
  raise(ErrorKind::kInvalidParameter,
        "translator must be 'mock' or an http(s) endpoint URL");
}

int command_run(const RunOptions& options) {
  std::vector<std::vector<std::string>> sources;
  for (const std::string& line : read_lines(options.source_path)) {
    sources.push_back(split_words(line));
    if (sources.back().empty()) {
      raise(ErrorKind::kEmptyInput,
            "line " + std::to_string(sources.size()) + " of " +
                options.source_path + " is empty");
    }
  }

  PolicyFactory factory = make_policy_factory(options, sources);
  std::unique_ptr<TranslationAgent> translator = make_translator(options);

  SessionConfig config;
  config.max_target_words = options.max_target_words;
  config.source_arrival_interval_ms = options.arrival_interval_ms;
  config.abort_on_agent_error = options.abort_on_error;

  std::vector<LineResult> results =
      run_corpus(sources, factory, *translator, default_instruction(options),
                 config, options.parallelism);

  if (options.output_path.empty() || options.output_path == "-") {
    write_traces_jsonl(std::cout, results);
  } else {
    write_traces_jsonl(options.output_path, results);
  }

  std::size_t failed = 0;
  for (const LineResult& result : results) {
    if (!result.ok()) ++failed;
  }
  std::cerr << results.size() << " sessions, " << failed << " failed\n";
  return failed == 0 ? 0 : 2;
}

struct EvaluateOptions {
  std::string traces_path;
  std::string references_path;
  std::string alignments_path;
  std::string ref_alignments_path;
  std::string output_path;
};

int command_evaluate(const EvaluateOptions& options) {
  EvaluationInputs inputs;
  inputs.traces = read_traces_jsonl(options.traces_path);
  for (const std::string& line : read_lines(options.references_path)) {
    inputs.references.push_back(split_words(line));
  }
  if (!options.alignments_path.empty()) {
    inputs.hypothesis_alignments = read_pharaoh_file(options.alignments_path);
  }
  if (!options.ref_alignments_path.empty()) {
    inputs.reference_alignments =
        read_pharaoh_file(options.ref_alignments_path);
  }
  const std::string tsv = render_tsv(evaluate_corpus(inputs));
  if (options.output_path.empty() || options.output_path == "-") {
    std::cout << tsv;
  } else {
    std::ofstream out(options.output_path);
    if (!out) {
      raise(ErrorKind::kIoError, "cannot write " + options.output_path);
    }
    out << tsv;
  }
  return 0;
}

struct SftCliOptions {
  std::string source_path;
  std::string target_path;
  std::string output_path;
  std::string mode = "full-sentence";
  std::string template_path;
  std::string instruction;
  std::string source_language = "German";
  std::string target_language = "English";
  int k = 5;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
};

int command_build_sft_data(const SftCliOptions& options) {
  IdentityTokenizer identity;
  std::vector<SentencePair> corpus =
      read_parallel_corpus(options.source_path, options.target_path, identity);

  SftOptions sft;
  if (options.mode == "full-sentence") {
    sft.mode = SftMode::kFullSentence;
  } else if (options.mode == "waitk-prefix") {
    sft.mode = SftMode::kWaitkPrefix;
  } else {
    raise(ErrorKind::kInvalidParameter,
          "mode must be full-sentence or waitk-prefix");
  }
  sft.prefix_k = options.k;
  sft.sample_count = options.samples;
  sft.seed = options.seed;
  sft.instruction =
      options.instruction.empty()
          ? "Translate the following sentence from " +
                options.source_language + " to " + options.target_language + "."
          : options.instruction;

  std::vector<std::string> records =
      emit_sft_dataset(corpus, load_template(options.template_path), sft);
  if (options.output_path.empty() || options.output_path == "-") {
    for (const std::string& record : records) {
      std::cout << record << '\n';
    }
  } else {
    write_sft_dataset(options.output_path, records);
  }
  std::cerr << records.size() << " records\n";
  return 0;
}

struct ConvertOptions {
  std::string tokenfile_path;
  std::string output_path;
  int boundary_min = 1;
  int boundary_max = 3;
  bool no_boundary = false;
};

int command_convert_policy(const ConvertOptions& options) {
  std::vector<TokenPolicyRecord> records =
      read_token_policy_file(options.tokenfile_path);
  BoundaryConfig boundary{options.boundary_min, options.boundary_max};
  std::vector<WordLevelPolicy> policies;
  policies.reserve(records.size());
  for (const TokenPolicyRecord& record : records) {
    WordLevelPolicy policy = token_to_word_policy(record.pair, record.policy);
    if (!options.no_boundary) {
      policy = apply_boundary(policy, boundary, record.pair.source_len());
    }
    policies.push_back(std::move(policy));
  }
  if (options.output_path.empty() || options.output_path == "-") {
    for (const WordLevelPolicy& policy : policies) {
      std::cout << word_policy_to_json_line(policy) << '\n';
    }
  } else {
    write_word_policy_file(options.output_path, policies);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous translation sessions, metrics and data tools"};
  app.require_subcommand(1);

  RunOptions run_options;
  CLI::App* run = app.add_subcommand(
      "run", "Run simultaneous sessions over a corpus and write traces");
  run->add_option("--source", run_options.source_path,
                  "Source corpus, one sentence per line")
      ->required();
  run->add_option("--output,-o", run_options.output_path,
                  "Trace JSONL path ('-' for stdout)");
  run->add_option("--policy", run_options.policy_spec,
                  "waitk:K | scripted:FILE | tokenfile:FILE");
  run->add_option("--translator", run_options.translator_spec,
                  "mock | http://host:port/path");
  run->add_option("--protocol", run_options.protocol,
                  "HTTP wire protocol: minimal | completions");
  run->add_option("--template", run_options.template_path,
                  "Prompt template file");
  run->add_option("--lexicon", run_options.lexicon_path,
                  "Tab-separated word lexicon for the mock translator");
  run->add_option("--mock-cap", run_options.mock_cap,
                  "Mock translator length cap");
  run->add_option("--instruction", run_options.instruction,
                  "Instruction text (overrides the language pair)");
  run->add_option("--src-lang", run_options.source_language, "Source language");
  run->add_option("--tgt-lang", run_options.target_language, "Target language");
  run->add_option("--boundary-b", run_options.boundary_min,
                  "Minimum source words for the first target word");
  run->add_option("--boundary-t", run_options.boundary_max,
                  "Maximum source words for the first target word");
  run->add_flag("--no-boundary", run_options.no_boundary,
                "Skip boundary restriction for tokenfile policies");
  run->add_option("--timeout-ms", run_options.timeout_ms,
                  "HTTP request timeout");
  run->add_option("--max-new-tokens", run_options.max_new_tokens,
                  "Completion budget per word");
  run->add_option("--arrival-interval-ms", run_options.arrival_interval_ms,
                  "Simulated source word arrival interval");
  run->add_option("--parallelism", run_options.parallelism,
                  "Concurrent sessions");
  run->add_option("--max-target-words", run_options.max_target_words,
                  "Per-session output cap (0 = 2*source+10)");
  run->add_flag("--abort-on-error", run_options.abort_on_error,
                "Abort the whole corpus on the first failing session");

  EvaluateOptions evaluate_options;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Score trace files: AL, AL-CA, BLEU, hallucination rate");
  evaluate->add_option("--traces", evaluate_options.traces_path,
                       "Trace JSONL from 'run'")
      ->required();
  evaluate->add_option("--references", evaluate_options.references_path,
                       "Reference translations, one per line")
      ->required();
  evaluate->add_option("--alignments", evaluate_options.alignments_path,
                       "Pharaoh source-translation alignments (hallucination)");
  evaluate->add_option("--ref-alignments",
                       evaluate_options.ref_alignments_path,
                       "Pharaoh source-reference alignments (difficulty)");
  evaluate->add_option("--output,-o", evaluate_options.output_path,
                       "TSV report path ('-' for stdout)");

  SftCliOptions sft_options;
  CLI::App* sft = app.add_subcommand(
      "build-sft-data", "Emit fine-tuning records from a parallel corpus");
  sft->add_option("--source", sft_options.source_path, "Source corpus")
      ->required();
  sft->add_option("--target", sft_options.target_path, "Target corpus")
      ->required();
  sft->add_option("--output,-o", sft_options.output_path,
                  "JSONL path ('-' for stdout)");
  sft->add_option("--mode", sft_options.mode,
                  "full-sentence | waitk-prefix");
  sft->add_option("--k", sft_options.k, "Wait-k for prefix mode");
  sft->add_option("--samples", sft_options.samples,
                  "Sample size (without replacement)")
      ->required();
  sft->add_option("--seed", sft_options.seed, "RNG seed");
  sft->add_option("--template", sft_options.template_path,
                  "Prompt template file");
  sft->add_option("--instruction", sft_options.instruction,
                  "Instruction text (overrides the language pair)");
  sft->add_option("--src-lang", sft_options.source_language, "Source language");
  sft->add_option("--tgt-lang", sft_options.target_language, "Target language");

  ConvertOptions convert_options;
  CLI::App* convert = app.add_subcommand(
      "convert-policy",
      "Convert token-level policies to restricted word-level policies");
  convert->add_option("--tokenfile", convert_options.tokenfile_path,
                      "Token-level policy JSONL")
      ->required();
  convert->add_option("--output,-o", convert_options.output_path,
                      "Word-level policy JSONL ('-' for stdout)");
  convert->add_option("--boundary-b", convert_options.boundary_min,
                      "Minimum source words for the first target word");
  convert->add_option("--boundary-t", convert_options.boundary_max,
                      "Maximum source words for the first target word");
  convert->add_flag("--no-boundary", convert_options.no_boundary,
                    "Skip the boundary restriction");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return command_run(run_options);
    if (evaluate->parsed()) return command_evaluate(evaluate_options);
    if (sft->parsed()) return command_build_sft_data(sft_options);
    if (convert->parsed()) return command_convert_policy(convert_options);
  } catch (const simt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
