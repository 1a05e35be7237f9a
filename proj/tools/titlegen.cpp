// titlegen: command-line front end for training, generation, evaluation
// and the session server.

#include <algorithm>
#include <csignal>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "httplib.h"
#include "titlegen/arranger.hpp"
#include "titlegen/corpus.hpp"
#include "titlegen/error.hpp"
#include "titlegen/grammar.hpp"
#include "titlegen/metrics.hpp"
#include "titlegen/models.hpp"
#include "titlegen/scorer.hpp"
#include "titlegen/service.hpp"
#include "titlegen/shallow_parser.hpp"
#include "titlegen/tagger.hpp"
#include "titlegen/text.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace titlegen;

namespace {

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

std::string read_text(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// One title per line; blank lines skipped; system-name prefixes dropped.
std::vector<std::string> read_titles(const fs::path& path) {
  std::vector<std::string> titles;
  std::istringstream in(read_text(path));
  std::string line;
  while (std::getline(in, line)) {
    std::string t = strip_system_name(text::collapse_whitespace(line));
    if (!t.empty()) titles.push_back(std::move(t));
  }
  return titles;
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
}

struct ModelFlags {
  std::string dir;
  std::string tagger_cmd;
  std::string scorer_cmd;
  std::string parser_cmd;
  std::string tree_file;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--models", dir, "Model directory")->required()->envname("TITLEGEN_MODELS");
    cmd->add_option("--tagger-cmd", tagger_cmd, "External keyword scorer command");
    cmd->add_option("--scorer-cmd", scorer_cmd, "External title scorer command");
    cmd->add_option("--parser-cmd", parser_cmd, "External constituency parser command")
        ->envname("TITLEGEN_PARSER_CMD");
    cmd->add_option("--tree-file", tree_file, "Pre-parsed trees, one per candidate line");
  }

  ModelBundle load() const {
    return load_models({dir, tagger_cmd, scorer_cmd, parser_cmd, tree_file});
  }
};

struct GenerationFlags {
  std::size_t max_parts = 8;
  double eval_threshold = 0.5;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--max-parts", max_parts, "Cap on title parts per permutation run")
        ->envname("TITLEGEN_MAX_PARTS");
    cmd->add_option("--eval-threshold", eval_threshold, "Minimum appropriateness score")
        ->envname("TITLEGEN_EVAL_THRESHOLD");
  }

  GenerationConfig config() const {
    GenerationConfig c;
    c.max_parts = max_parts;
    c.eval_threshold = eval_threshold;
    c.validate();
    return c;
  }
};

void run_train_tagger(const std::string& corpus, const std::string& out, std::size_t vocab_size,
                      double alpha) {
  const auto records = load_corpus(corpus);
  if (records.empty()) throw ValidationError("corpus is empty");
  const Vocab vocab = build_vocab(records, vocab_size);
  std::vector<LabeledTokenSeq> pairs;
  pairs.reserve(records.size());
  for (const auto& r : records) pairs.push_back(make_training_pairs(r, vocab));
  const TaggerModel model = train_tagger(pairs, alpha);
  ensure_dir(out);
  vocab.save(fs::path(out) / kVocabFile);
  model.save(fs::path(out) / kTaggerFile);
  std::cout << "trained tagger on " << records.size() << " records, vocab " << vocab.size()
            << ", " << model.distinct_tokens() << " token types\n";
}

void run_train_scorer(const std::string& corpus, const std::string& titles_file,
                      const std::string& out, std::uint64_t seed, double lambda) {
  std::vector<LabeledTitle> items;
  if (!corpus.empty()) items = build_training_set(load_corpus(corpus), seed);
  if (!titles_file.empty()) {
    auto extra = title_items(read_titles(titles_file), seed);
    items.insert(items.end(), extra.begin(), extra.end());
  }
  const TitleScorerModel model = train_scorer(items, lambda);
  ensure_dir(out);
  model.save(fs::path(out) / kScorerFile);
  std::cout << "trained scorer on " << items.size() << " items, calibration a=" << model.calib_a
            << " b=" << model.calib_b << '\n';
}

void run_build_bank(const std::string& trees_file, const std::string& corpus,
                    const std::string& titles_file, const std::string& parser_cmd,
                    const std::string& out) {
  std::vector<ParseTree> trees;
  std::size_t skipped = 0;
  if (!trees_file.empty()) {
    trees = load_tree_file(trees_file, &skipped);
  } else {
    std::vector<std::string> titles;
    if (!corpus.empty()) {
      for (const auto& r : load_corpus(corpus)) titles.push_back(r.title);
    }
    if (!titles_file.empty()) {
      auto extra = read_titles(titles_file);
      titles.insert(titles.end(), extra.begin(), extra.end());
    }
    if (titles.empty()) throw ValidationError("build-bank needs --trees, --corpus or --titles");
    const auto parser = make_parser(parser_cmd, {});
    for (auto& t : parser->parse_each(titles)) {
      if (t) {
        trees.push_back(std::move(*t));
      } else {
        ++skipped;
      }
    }
  }
  const PatternBank bank = build_bank(trees, penn_pos_tags());
  const fs::path out_path(out);
  if (out_path.has_parent_path()) ensure_dir(out_path.parent_path());
  bank.save(out_path);
  std::cout << bank.size() << " patterns from " << bank.source_count() << " trees";
  if (skipped > 0) std::cout << " (" << skipped << " unparseable skipped)";
  std::cout << '\n';
}

void run_generate(const ModelFlags& mf, const GenerationFlags& gf, const std::string& abstract_file,
                  const std::vector<std::string>& user_parts, std::size_t top) {
  const ModelBundle models = mf.load();
  const std::string abstract = text::trim(read_text(abstract_file));
  std::optional<std::vector<TitlePart>> parts;
  if (!user_parts.empty()) {
    parts.emplace();
    for (const auto& p : user_parts) parts->push_back(make_user_part(p));
  }
  const GenerationResult r = generate_from_abstract(abstract, models.view(), gf.config(), parts);
  json out;
  out["parts"] = json::array();
  for (const auto& p : r.parts) out["parts"].push_back(service::part_to_json(p));
  out["candidates"] = json::array();
  for (std::size_t i = 0; i < r.candidates.size() && i < top; ++i) {
    out["candidates"].push_back(service::candidate_to_json(r.candidates[i]));
  }
  out["used_fallback"] = r.used_fallback;
  out["examined"] = r.examined;
  std::cout << out.dump(2) << '\n';
}

void run_bench(const std::string& corpus, const std::string& systems_arg, const std::string& out,
               const ModelFlags& mf, const GenerationFlags& gf) {
  const auto records = load_corpus(corpus);
  std::optional<ModelBundle> models;
  const GenerationConfig config = gf.config();
  std::vector<metrics::NamedSystem> systems;
  std::string names = systems_arg;
  std::replace(names.begin(), names.end(), ',', ' ');
  for (const auto& name : text::split_whitespace(names)) {
    if (name == "ours") {
      if (mf.dir.empty()) throw ValidationError("system 'ours' needs --models");
      if (!models) models = mf.load();
      const GenerationModels view = models->view();
      systems.push_back({name, [view, config](const PaperRecord& r) {
                           return best_title(r.abstract_text(), view, config);
                         }});
    } else if (name == "lexrank") {
      systems.push_back({name, [](const PaperRecord& r) {
                           return metrics::lexrank_summary(r.abstract_sentences, 1);
                         }});
    } else if (name == "textrank") {
      systems.push_back({name, [](const PaperRecord& r) {
                           return metrics::textrank_summary(r.abstract_sentences, 1);
                         }});
    } else {
      throw ValidationError("unknown system '" + name + "' (expected ours, lexrank, textrank)");
    }
  }
  if (systems.empty()) throw ValidationError("no systems selected");
  const auto reports = metrics::benchmark(records, systems, &std::cerr);
  if (!out.empty()) {
    std::ofstream csv(out);
    if (!csv) throw IoError("cannot write " + out);
    metrics::write_csv(csv, reports);
  }
  metrics::write_table(std::cout, reports);
}

void run_eval_ratio(const ModelFlags& mf, const std::string& titles_file, bool shuffle,
                    std::uint64_t seed, double threshold) {
  const auto models = mf.load();
  auto titles = read_titles(titles_file);
  if (shuffle) {
    std::vector<std::string> shuffled;
    for (std::size_t i = 0; i < titles.size(); ++i) {
      if (text::split_whitespace(titles[i]).size() < 2) continue;
      try {
        shuffled.push_back(shuffle_title_words(titles[i], seed + i));
      } catch (const ValidationError&) {
      }
    }
    titles = std::move(shuffled);
  }
  std::cout << std::fixed << std::setprecision(4)
            << appropriateness_ratio(*models.scorer, titles, threshold) << '\n';
}

void run_shallow_parse() {
  const ShallowParser parser;
  std::string line;
  while (std::getline(std::cin, line)) {
    if (text::trim(line).empty()) {
      std::cout << "(ROOT (FRAG (-NONE- *)))\n";
    } else {
      std::cout << to_bracketed(parser.parse(line)) << '\n';
    }
    std::cout.flush();
  }
}

int run_serve(const ModelFlags& mf, const GenerationFlags& gf, const std::string& listen,
              int timeout_s, const std::string& snapshot, const std::string& static_dir) {
  const auto colon = listen.rfind(':');
  if (colon == std::string::npos) throw ValidationError("--listen must be host:port");
  const std::string host = listen.substr(0, colon);
  const int port = std::stoi(listen.substr(colon + 1));

  const ModelBundle models = mf.load();
  service::ServiceConfig config;
  config.generation = gf.config();
  config.generation.time_budget = std::chrono::seconds(timeout_s);
  service::TitleService svc(models.view(), config);
  if (!snapshot.empty() && fs::exists(snapshot)) svc.load_snapshot(snapshot);

  httplib::Server server;
  server.set_read_timeout(timeout_s, 0);
  server.set_write_timeout(timeout_s, 0);
  service::register_routes(server, svc);
  if (!static_dir.empty() && !server.set_mount_point("/", static_dir)) {
    throw IoError("static directory " + static_dir + " does not exist");
  }

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);
  std::thread waiter([&] {
    int sig = 0;
    sigwait(&signals, &sig);
    server.stop();
  });

  std::cerr << "listening on " << host << ':' << port << '\n';
  const bool ok = server.listen(host, port);
  if (!ok) {
    pthread_kill(waiter.native_handle(), SIGTERM);
    waiter.join();
    throw IoError("cannot listen on " + listen);
  }
  waiter.join();
  if (!snapshot.empty()) svc.save_snapshot(snapshot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extractive paper-title generation toolkit", "titlegen"};
  app.require_subcommand(1);

  std::string corpus, out, titles_file, trees_file, parser_cmd, abstract_file, systems = "ours,lexrank,textrank";
  std::size_t vocab_size = 8000, top = 5;
  double alpha = 1.0, lambda = 0.7, threshold = 0.5;
  std::uint64_t seed = 7;
  bool shuffle = false;
  std::vector<std::string> user_parts;
  std::string listen = "127.0.0.1:8080", snapshot, static_dir;
  int timeout_s = 60;
  ModelFlags mf;
  GenerationFlags gf;

  auto* tt = app.add_subcommand("train-tagger", "Train the keyword tagger and vocabulary");
  tt->add_option("--corpus", corpus, "JSON-lines corpus")->required();
  tt->add_option("--out", out, "Model directory")->required();
  tt->add_option("--vocab-size", vocab_size, "Maximum vocabulary entries");
  tt->add_option("--alpha", alpha, "Additive smoothing");

  auto* ts = app.add_subcommand("train-scorer", "Train the title appropriateness scorer");
  ts->add_option("--corpus", corpus, "JSON-lines corpus (titles + first sentences)");
  ts->add_option("--titles", titles_file, "Extra titles, one per line");
  ts->add_option("--out", out, "Model directory")->required();
  ts->add_option("--seed", seed, "Shuffle seed");
  ts->add_option("--lambda", lambda, "Bigram interpolation weight");

  auto* bb = app.add_subcommand("build-bank", "Collect grammar patterns from title parses");
  bb->add_option("--trees", trees_file, "Bracketed trees, one per line");
  bb->add_option("--corpus", corpus, "Parse the titles of this corpus");
  bb->add_option("--titles", titles_file, "Parse these titles, one per line");
  bb->add_option("--parser-cmd", parser_cmd, "External parser (default: built-in)");
  bb->add_option("--out", out, "Bank file")->required();

  auto* gen = app.add_subcommand("generate", "Generate title candidates for one abstract");
  gen->add_option("--abstract-file", abstract_file, "Abstract text file")->required();
  gen->add_option("--top", top, "Number of candidates to print");
  gen->add_option("--part", user_parts, "User-edited title part (repeatable)");
  mf.add_to(gen);
  gf.add_to(gen);

  auto* bench = app.add_subcommand("bench", "Compare against sentence-extraction baselines");
  bench->add_option("--corpus", corpus, "Evaluation corpus")->required();
  bench->add_option("--systems", systems, "Comma-separated: ours,lexrank,textrank");
  bench->add_option("--out", out, "CSV report path");
  bench->add_option("--models", mf.dir, "Model directory (for 'ours')")->envname("TITLEGEN_MODELS");
  bench->add_option("--parser-cmd", mf.parser_cmd, "External constituency parser command");
  gf.add_to(bench);

  auto* cov = app.add_subcommand("coverage", "Fraction of title words found in abstracts");
  cov->add_option("--corpus", corpus, "JSON-lines corpus")->required();

  auto* er = app.add_subcommand("eval-ratio", "Share of titles the scorer deems appropriate");
  mf.add_to(er);
  er->add_option("--titles", titles_file, "Titles, one per line")->required();
  er->add_flag("--shuffle", shuffle, "Score word-shuffled versions instead");
  er->add_option("--seed", seed, "Shuffle seed");
  er->add_option("--threshold", threshold, "Appropriateness threshold");

  auto* serve = app.add_subcommand("serve", "Run the HTTP session service");
  mf.add_to(serve);
  gf.add_to(serve);
  serve->add_option("--listen", listen, "host:port")->envname("TITLEGEN_LISTEN");
  serve->add_option("--timeout", timeout_s, "Request timeout in seconds");
  serve->add_option("--snapshot", snapshot, "Session snapshot file (loaded at start, saved at exit)");
  serve->add_option("--static", static_dir, "Directory of web client files to serve at /");

  app.add_subcommand("shallow-parse", "Bracket sentences from stdin with the built-in parser");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    // Message plus the usage of the subcommand being invoked.
    std::cerr << "error: " << e.what() << "\n\n";
    const auto given = app.get_subcommands();
    std::cerr << (given.empty() ? app.help() : given.front()->help(app.get_name()));
    return kExitValidation;
  }

  try {
    if (*tt) run_train_tagger(corpus, out, vocab_size, alpha);
    if (*ts) run_train_scorer(corpus, titles_file, out, seed, lambda);
    if (*bb) run_build_bank(trees_file, corpus, titles_file, parser_cmd, out);
    if (*gen) run_generate(mf, gf, abstract_file, user_parts, top);
    if (*bench) run_bench(corpus, systems, out, mf, gf);
    if (*cov) std::cout << std::fixed << std::setprecision(4) << title_coverage(load_corpus(corpus)) << '\n';
    if (*er) run_eval_ratio(mf, titles_file, shuffle, seed, threshold);
    if (*serve) return run_serve(mf, gf, listen, timeout_s, snapshot, static_dir);
    if (app.got_subcommand("shallow-parse")) run_shallow_parse();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ExternalError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  return 0;
}
