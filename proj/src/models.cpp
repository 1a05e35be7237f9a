#include "titlegen/models.hpp"

#include "titlegen/error.hpp"
#include "titlegen/shallow_parser.hpp"

namespace titlegen {

std::unique_ptr<ParserAdapter> make_parser(const std::string& command,
                                           const std::filesystem::path& tree_file) {
  if (!command.empty() && !tree_file.empty()) {
    throw ValidationError("choose either a parser command or a tree file, not both");
  }
  if (!command.empty()) return std::make_unique<CommandParser>(command);
  if (!tree_file.empty()) return std::make_unique<TreeFileParser>(tree_file);
  return std::make_unique<ShallowParser>();
}

ModelBundle load_models(const ModelOptions& opt) {
  ModelBundle b;
  b.vocab = Vocab::load(opt.dir / kVocabFile);
  if (opt.tagger_command.empty()) {
    b.tagger = std::make_unique<ReferenceTokenScorer>(TaggerModel::load(opt.dir / kTaggerFile));
  } else {
    b.tagger = std::make_unique<ExternalTokenScorer>(opt.tagger_command);
  }
  if (opt.scorer_command.empty()) {
    b.scorer = std::make_unique<ReferenceTitleScorer>(TitleScorerModel::load(opt.dir / kScorerFile));
  } else {
    b.scorer = std::make_unique<ExternalTitleScorer>(opt.scorer_command);
  }
  b.bank = PatternBank::load(opt.dir / kBankFile);
  b.parser = make_parser(opt.parser_command, opt.tree_file);
  return b;
}

}  // namespace titlegen
