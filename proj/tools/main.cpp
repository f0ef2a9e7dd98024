#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "tonesum/pipeline.hpp"

namespace {

// 0 success, 1 usage/config error, 2 data error
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tone-biased extractive multi-document summarizer"};
    app.require_subcommand(1);
    app.allow_config_extras(CLI::config_extras_mode::error);
    app.set_config("--config", "", "flat key = value file; command-line flags win");

    tonesum::RunConfig cfg;
    std::string corpus, refs, stopwords, lexicon, abbrev, sweep;

    app.add_option("--corpus", corpus, "corpus directory, one subdirectory per cluster")
        ->required()
        ->check(CLI::ExistingDirectory);
    app.add_option("--refs", refs, "reference summaries: refs/<cluster>/<length>.txt")
        ->check(CLI::ExistingDirectory);
    app.add_option("--stopwords", stopwords, "stopword file, one lowercase token per line")
        ->check(CLI::ExistingFile);
    app.add_option("--lexicon", lexicon, "polarity lexicon, term<TAB>score per line")
        ->check(CLI::ExistingFile);
    app.add_option("--abbrev", abbrev, "abbreviation file for sentence segmentation")
        ->check(CLI::ExistingFile);
    app.add_option("--lambda", cfg.lambda, "MMR relevance/diversity trade-off")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app.add_option("--length", cfg.budget_words, "summary budget in words")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--pool", cfg.pool_size, "candidate pool size fed to MMR")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--query-terms", cfg.query_terms, "number of frequent terms in the query")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--bias", cfg.bias, "tone bias applied to the candidate pool")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, tonesum::BiasDirection>{
                {"none", tonesum::BiasDirection::None},
                {"positive", tonesum::BiasDirection::Positive},
                {"negative", tonesum::BiasDirection::Negative}},
            CLI::ignore_case))
        ->default_str("none");
    app.add_flag("--stem-rouge", cfg.stem_rouge, "stem both sides before unigram matching");
    app.add_flag("--duc-mode", cfg.duc_mode, "keep only the contents of body-text elements");
    app.add_option("--body-tag", cfg.body_tags, "body element tag names for --duc-mode")
        ->capture_default_str();
    app.add_option("--min-sentence-tokens", cfg.min_sentence_tokens,
                   "drop sentences with fewer content tokens")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--neutral-band", cfg.neutral_band,
                   "polarity magnitude treated as neutral")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--format", cfg.format, "output format")
        ->transform(CLI::CheckedTransformer(
            std::map<std::string, tonesum::OutputFormat>{
                {"text", tonesum::OutputFormat::Text},
                {"json", tonesum::OutputFormat::Json},
                {"csv", tonesum::OutputFormat::Csv}},
            CLI::ignore_case))
        ->default_str("text");
    app.add_option("--lambda-sweep", sweep, "run evaluate for each lambda in FROM:TO:STEP");
    app.add_option("--threads", cfg.threads, "clusters processed in parallel")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    CLI::App* summarize = app.add_subcommand("summarize", "emit one summary per cluster");
    CLI::App* evaluate = app.add_subcommand("evaluate", "score summaries against references");
    CLI::App* polarity =
        app.add_subcommand("polarity-report", "compare summary polarity against the baseline");
    for (CLI::App* sub : {summarize, evaluate, polarity}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    cfg.corpus_dir = corpus;
    if (!refs.empty()) cfg.refs_dir = refs;
    if (!stopwords.empty()) cfg.stopwords_path = stopwords;
    if (!lexicon.empty()) cfg.lexicon_path = lexicon;
    if (!abbrev.empty()) cfg.abbrev_path = abbrev;

    try {
        if (!sweep.empty() && !evaluate->parsed())
            throw tonesum::ConfigError("--lambda-sweep is only valid with evaluate");
        if (summarize->parsed()) {
            std::cout << tonesum::cmd_summarize(cfg);
            return 0;
        }
        if (evaluate->parsed()) {
            tonesum::CommandOutput out =
                sweep.empty() ? tonesum::cmd_evaluate(cfg)
                              : tonesum::cmd_lambda_sweep(cfg, tonesum::parse_sweep_spec(sweep));
            std::cout << out.text;
            if (out.missing_refs) {
                std::cerr << "error: some clusters have no reference at length "
                          << cfg.budget_words << "\n";
                return kExitData;
            }
            return 0;
        }
        std::cout << tonesum::cmd_polarity_report(cfg);
        return 0;
    } catch (const tonesum::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
