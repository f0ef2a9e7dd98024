#pragma once

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"

#include "tonesum/corpus.hpp"
#include "tonesum/error.hpp"
#include "tonesum/mmr.hpp"
#include "tonesum/ranking.hpp"
#include "tonesum/rouge.hpp"
#include "tonesum/tone.hpp"

namespace tonesum {

enum class OutputFormat { Text, Json, Csv };

struct RunConfig {
    std::filesystem::path corpus_dir;
    std::optional<std::filesystem::path> refs_dir;
    std::optional<std::filesystem::path> stopwords_path;
    std::optional<std::filesystem::path> lexicon_path;
    std::optional<std::filesystem::path> abbrev_path;
    double lambda = 0.7;
    int budget_words = 400;
    int pool_size = 30;
    int query_terms = 10;
    BiasDirection bias = BiasDirection::None;
    bool stem_rouge = false;
    bool duc_mode = false;
    std::vector<std::string> body_tags = {"TEXT"};
    int min_sentence_tokens = 2;
    double neutral_band = 0.0;
    OutputFormat format = OutputFormat::Text;
    int threads = 1;
};

inline void validate_config(const RunConfig& cfg) {
    if (cfg.lambda < 0.0 || cfg.lambda > 1.0)
        throw ConfigError("--lambda must be within [0, 1]");
    if (cfg.budget_words < 1) throw ConfigError("--length must be >= 1");
    if (cfg.pool_size < 1) throw ConfigError("--pool must be >= 1");
    if (cfg.query_terms < 1) throw ConfigError("--query-terms must be >= 1");
    if (cfg.min_sentence_tokens < 0) throw ConfigError("--min-sentence-tokens must be >= 0");
    if (cfg.neutral_band < 0.0) throw ConfigError("--neutral-band must be >= 0");
    if (cfg.threads < 1) throw ConfigError("--threads must be >= 1");
    if (!std::filesystem::is_directory(cfg.corpus_dir))
        throw ConfigError("--corpus: not a directory: " + cfg.corpus_dir.string());
    if (cfg.refs_dir && !std::filesystem::is_directory(*cfg.refs_dir))
        throw ConfigError("--refs: not a directory: " + cfg.refs_dir->string());
    for (const auto& [flag, path] :
         {std::pair{"--stopwords", cfg.stopwords_path}, {"--lexicon", cfg.lexicon_path},
          {"--abbrev", cfg.abbrev_path}})
        if (path && !std::filesystem::is_regular_file(*path))
            throw ConfigError(std::string(flag) + ": no such file: " + path->string());
}

struct Resources {
    PreprocessConfig pre;
    PolarityLexicon lexicon;
};

inline Resources load_resources(const RunConfig& cfg) {
    Resources res;
    if (cfg.stopwords_path) res.pre.stopwords = load_wordlist(*cfg.stopwords_path);
    if (cfg.abbrev_path) res.pre.abbreviations = load_wordlist(*cfg.abbrev_path);
    res.pre.body_tags = cfg.body_tags;
    res.pre.duc_mode = cfg.duc_mode;
    res.pre.min_sentence_tokens = cfg.min_sentence_tokens;
    res.lexicon = cfg.lexicon_path ? PolarityLexicon::load(*cfg.lexicon_path) : default_lexicon();
    return res;
}

struct ClusterRun {
    std::string cluster_id;
    DocumentCluster cluster;
    SummarySelection selection;
    std::vector<Sentence> summary;  // document order
    std::string summary_text;       // one sentence per line
};

/// preprocess -> rank everything -> bias-filter to the top-n pool ->
/// greedy MMR -> restore document order.
inline ClusterRun run_cluster(const ClusterFiles& files, const Resources& res,
                              const RunConfig& cfg, BiasDirection bias) {
    ClusterRun run;
    run.cluster_id = files.cluster_id;
    run.cluster = preprocess_cluster(files.cluster_id, files.docs, res.pre);
    TermStats stats = compute_term_stats(run.cluster);
    QueryVector query = build_query_vector(run.cluster, cfg.query_terms);
    RankedList full =
        rank_sentences(run.cluster, stats, query, static_cast<int>(run.cluster.sentences.size()));
    RankedList pool_ranking =
        apply_bias_filter(full, run.cluster, res.lexicon, bias, cfg.pool_size, cfg.neutral_band);
    std::vector<Candidate> pool = build_candidate_pool(run.cluster, stats, pool_ranking);
    run.selection =
        select_summary(pool, query, MmrConfig{cfg.lambda, cfg.budget_words, cfg.pool_size});
    run.summary = order_for_output(run.selection, run.cluster);
    std::string text;
    for (const Sentence& s : run.summary) {
        text += s.original_text;
        text += '\n';
    }
    run.summary_text = std::move(text);
    return run;
}

/// Sentence-segments plain text (reference summaries) through the same
/// tokenize/stopword/stem pipeline, keeping every sentence.
inline std::vector<Sentence> preprocess_text(const std::string& text, const PreprocessConfig& pre,
                                             const std::string& doc_id = "ref") {
    std::vector<Sentence> out;
    std::vector<std::string> segments =
        segment_sentences(detail::collapse_whitespace(text), pre.abbreviations);
    for (size_t i = 0; i < segments.size(); ++i) {
        Sentence s;
        s.doc_id = doc_id;
        s.index = static_cast<int>(i);
        s.original_text = segments[i];
        s.word_count = count_words(segments[i]);
        for (const auto& tok : remove_stopwords(tokenize(segments[i]), pre.stopwords))
            s.content_tokens.push_back(porter_stem(tok));
        out.push_back(std::move(s));
    }
    return out;
}

namespace detail {

// Runs fn(i) for i in [0, count) on up to `threads` workers; results come
// back in index order and the first failure (by index) is rethrown, so
// output is independent of scheduling.
template <typename T, typename F>
std::vector<T> map_in_order(size_t count, int threads, F&& fn) {
    std::vector<std::optional<T>> slots(count);
    std::vector<std::exception_ptr> errors(count);
    if (threads <= 1 || count <= 1) {
        for (size_t i = 0; i < count; ++i) {
            try {
                slots[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    slots[i] = fn(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        size_t n_workers = std::min(static_cast<size_t>(threads), count);
        pool.reserve(n_workers);
        for (size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    std::vector<T> out;
    out.reserve(count);
    for (size_t i = 0; i < count; ++i) {
        if (errors[i]) std::rethrow_exception(errors[i]);
        out.push_back(std::move(*slots[i]));
    }
    return out;
}

inline std::string fmt4(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

inline std::string fmt_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline const char* bias_name(BiasDirection bias) {
    switch (bias) {
        case BiasDirection::Positive: return "positive";
        case BiasDirection::Negative: return "negative";
        default: return "none";
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// summarize

inline std::vector<ClusterRun> run_all_clusters(const RunConfig& cfg) {
    validate_config(cfg);
    Resources res = load_resources(cfg);
    std::vector<ClusterFiles> clusters = load_corpus_dir(cfg.corpus_dir);
    return detail::map_in_order<ClusterRun>(
        clusters.size(), cfg.threads,
        [&](size_t i) { return run_cluster(clusters[i], res, cfg, cfg.bias); });
}

inline std::string render_summaries(const std::vector<ClusterRun>& runs, OutputFormat format) {
    if (format == OutputFormat::Json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& run : runs) {
            nlohmann::json item;
            item["cluster"] = run.cluster_id;
            item["word_count"] = run.selection.total_words;
            nlohmann::json sentences = nlohmann::json::array();
            for (const Sentence& s : run.summary) sentences.push_back(s.original_text);
            item["sentences"] = std::move(sentences);
            out.push_back(std::move(item));
        }
        return out.dump(2) + "\n";
    }
    if (format == OutputFormat::Csv) {
        std::string out = "cluster_id,word_count,summary\n";
        for (const auto& run : runs) {
            std::string joined;
            for (const Sentence& s : run.summary) {
                if (!joined.empty()) joined += ' ';
                joined += s.original_text;
            }
            out += detail::csv_field(run.cluster_id) + "," +
                   std::to_string(run.selection.total_words) + "," + detail::csv_field(joined) +
                   "\n";
        }
        return out;
    }
    std::string out;
    for (size_t i = 0; i < runs.size(); ++i) {
        if (i > 0) out += '\n';
        out += "== " + runs[i].cluster_id + " (" +
               std::to_string(runs[i].selection.total_words) + " words)\n";
        out += runs[i].summary_text;
    }
    return out;
}

inline std::string cmd_summarize(const RunConfig& cfg) {
    return render_summaries(run_all_clusters(cfg), cfg.format);
}

// ---------------------------------------------------------------------------
// evaluate

struct EvaluateRow {
    std::string cluster_id;
    bool missing = false;  // no reference at this length
    RougeScore score;
};

struct EvaluateTable {
    double lambda = 0.0;
    std::vector<EvaluateRow> rows;
    RougeScore average;  // over non-missing rows
    int counted = 0;     // rows contributing to the average
    bool any_missing = false;
};

inline EvaluateTable evaluate_clusters(const RunConfig& cfg) {
    if (!cfg.refs_dir) throw ConfigError("--refs is required for evaluate");
    std::vector<ClusterRun> runs = run_all_clusters(cfg);
    EvaluateTable table;
    table.lambda = cfg.lambda;
    int counted = 0;
    for (const auto& run : runs) {
        EvaluateRow row;
        row.cluster_id = run.cluster_id;
        std::vector<ReferenceSummary> refs =
            load_references(*cfg.refs_dir, run.cluster_id, cfg.budget_words);
        if (refs.empty()) {
            row.missing = true;
            table.any_missing = true;
        } else {
            row.score = best_rouge(run.summary_text, refs, cfg.stem_rouge);
            table.average.recall += row.score.recall;
            table.average.precision += row.score.precision;
            table.average.f_score += row.score.f_score;
            ++counted;
        }
        table.rows.push_back(std::move(row));
    }
    if (counted > 0) {
        table.average.recall /= counted;
        table.average.precision /= counted;
        table.average.f_score /= counted;
    }
    table.counted = counted;
    return table;
}

namespace detail {

inline void append_evaluate_text(std::string& out, const EvaluateTable& table,
                                 const RunConfig& cfg) {
    out += "# evaluate lambda=" + fmt_num(table.lambda) +
           " length=" + std::to_string(cfg.budget_words) +
           " pool=" + std::to_string(cfg.pool_size) +
           " query-terms=" + std::to_string(cfg.query_terms) + " bias=" + bias_name(cfg.bias) +
           " stem-rouge=" + (cfg.stem_rouge ? "on" : "off") + "\n";
    out += "# average row is the arithmetic mean over clusters with a reference\n";
    char line[160];
    std::snprintf(line, sizeof(line), "%-24s %10s %10s %10s\n", "cluster_id", "recall",
                  "precision", "f_score");
    out += line;
    auto append_row = [&](const std::string& id, bool missing, const RougeScore& s) {
        if (missing)
            std::snprintf(line, sizeof(line), "%-24s %10s %10s %10s\n", id.c_str(), "NA", "NA",
                          "NA");
        else
            std::snprintf(line, sizeof(line), "%-24s %10.4f %10.4f %10.4f\n", id.c_str(), s.recall,
                          s.precision, s.f_score);
        out += line;
    };
    for (const auto& row : table.rows) append_row(row.cluster_id, row.missing, row.score);
    append_row("AVERAGE", table.counted == 0, table.average);
}

inline nlohmann::json evaluate_table_json(const EvaluateTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json item;
        item["cluster"] = row.cluster_id;
        if (row.missing) {
            item["missing"] = true;
        } else {
            item["recall"] = row.score.recall;
            item["precision"] = row.score.precision;
            item["f_score"] = row.score.f_score;
        }
        rows.push_back(std::move(item));
    }
    nlohmann::json avg;
    avg["cluster"] = "AVERAGE";
    if (table.counted == 0) {
        avg["missing"] = true;
    } else {
        avg["recall"] = table.average.recall;
        avg["precision"] = table.average.precision;
        avg["f_score"] = table.average.f_score;
    }
    rows.push_back(std::move(avg));
    return rows;
}

inline void append_evaluate_csv(std::string& out, const EvaluateTable& table, bool lambda_column) {
    auto row_text = [&](const std::string& id, bool missing, const RougeScore& sc) {
        std::string s;
        if (lambda_column) s += fmt_num(table.lambda) + ",";
        s += csv_field(id) + ",";
        if (missing)
            s += "NA,NA,NA";
        else
            s += fmt4(sc.recall) + "," + fmt4(sc.precision) + "," + fmt4(sc.f_score);
        return s + "\n";
    };
    for (const auto& row : table.rows) out += row_text(row.cluster_id, row.missing, row.score);
    out += row_text("AVERAGE", table.counted == 0, table.average);
}

}  // namespace detail

struct CommandOutput {
    std::string text;
    bool missing_refs = false;
};

inline CommandOutput render_evaluate(const std::vector<EvaluateTable>& tables,
                                     const RunConfig& cfg) {
    CommandOutput out;
    for (const auto& t : tables) out.missing_refs = out.missing_refs || t.any_missing;
    bool sweep = tables.size() > 1;
    if (cfg.format == OutputFormat::Json) {
        if (!sweep) {
            out.text = detail::evaluate_table_json(tables.front()).dump(2) + "\n";
        } else {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& t : tables) {
                nlohmann::json item;
                item["lambda"] = t.lambda;
                item["clusters"] = detail::evaluate_table_json(t);
                arr.push_back(std::move(item));
            }
            out.text = arr.dump(2) + "\n";
        }
        return out;
    }
    if (cfg.format == OutputFormat::Csv) {
        out.text = sweep ? "lambda,cluster_id,recall,precision,f_score\n"
                         : "cluster_id,recall,precision,f_score\n";
        for (const auto& t : tables) detail::append_evaluate_csv(out.text, t, sweep);
        return out;
    }
    for (size_t i = 0; i < tables.size(); ++i) {
        if (i > 0) out.text += '\n';
        detail::append_evaluate_text(out.text, tables[i], cfg);
    }
    return out;
}

inline CommandOutput cmd_evaluate(const RunConfig& cfg) {
    return render_evaluate({evaluate_clusters(cfg)}, cfg);
}

struct SweepSpec {
    double from = 0.0;
    double to = 0.0;
    double step = 0.0;
};

/// Parses "A:B:STEP" with 0 <= A <= B <= 1 and STEP > 0.
inline SweepSpec parse_sweep_spec(const std::string& spec) {
    SweepSpec s;
    char trailing = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf%c", &s.from, &s.to, &s.step, &trailing) != 3)
        throw ConfigError("--lambda-sweep: expected FROM:TO:STEP, got '" + spec + "'");
    if (s.from < 0.0 || s.to > 1.0 || s.from > s.to || s.step <= 0.0)
        throw ConfigError("--lambda-sweep: need 0 <= FROM <= TO <= 1 and STEP > 0");
    return s;
}

inline CommandOutput cmd_lambda_sweep(const RunConfig& cfg, const SweepSpec& sweep) {
    std::vector<EvaluateTable> tables;
    for (double lambda = sweep.from; lambda <= sweep.to + 1e-9; lambda += sweep.step) {
        RunConfig step_cfg = cfg;
        step_cfg.lambda = std::min(lambda, 1.0);
        tables.push_back(evaluate_clusters(step_cfg));
    }
    return render_evaluate(tables, cfg);
}

// ---------------------------------------------------------------------------
// polarity-report

struct ClusterReport {
    std::string cluster_id;
    int summary_word_count = 0;
    PolarityProfile profile_biased;
    PolarityProfile profile_reference;  // reference summary, or unbiased run as fallback
    TagCounts per_tag_counts;           // over the biased summary's sentences
};

inline std::vector<ClusterReport> polarity_reports(const RunConfig& cfg) {
    validate_config(cfg);
    Resources res = load_resources(cfg);
    std::vector<ClusterFiles> clusters = load_corpus_dir(cfg.corpus_dir);
    return detail::map_in_order<ClusterReport>(
        clusters.size(), cfg.threads, [&](size_t i) {
            ClusterRun run = run_cluster(clusters[i], res, cfg, cfg.bias);
            ClusterReport report;
            report.cluster_id = run.cluster_id;
            report.summary_word_count = run.selection.total_words;
            report.profile_biased = polarity_profile(run.summary, res.lexicon);
            report.per_tag_counts = count_tags(run.summary, res.lexicon, cfg.neutral_band);
            std::vector<ReferenceSummary> refs;
            if (cfg.refs_dir)
                refs = load_references(*cfg.refs_dir, run.cluster_id, cfg.budget_words);
            if (!refs.empty()) {
                std::vector<Sentence> ref_sentences = preprocess_text(refs.front().text, res.pre);
                report.profile_reference = polarity_profile(ref_sentences, res.lexicon);
            } else {
                ClusterRun unbiased = run_cluster(clusters[i], res, cfg, BiasDirection::None);
                report.profile_reference = polarity_profile(unbiased.summary, res.lexicon);
            }
            return report;
        });
}

inline std::string render_polarity(const std::vector<ClusterReport>& reports,
                                   const RunConfig& cfg) {
    if (cfg.format == OutputFormat::Json) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& r : reports) {
            nlohmann::json item;
            item["cluster"] = r.cluster_id;
            item["biased_pos"] = r.profile_biased.positive_mass;
            item["biased_neg"] = r.profile_biased.negative_mass;
            item["baseline_pos"] = r.profile_reference.positive_mass;
            item["baseline_neg"] = r.profile_reference.negative_mass;
            item["n_pos"] = r.per_tag_counts.n_pos;
            item["n_neg"] = r.per_tag_counts.n_neg;
            item["n_neu"] = r.per_tag_counts.n_neu;
            out.push_back(std::move(item));
        }
        return out.dump(2) + "\n";
    }
    if (cfg.format == OutputFormat::Csv) {
        std::string out =
            "cluster_id,biased_pos,biased_neg,baseline_pos,baseline_neg,n_pos,n_neg,n_neu\n";
        for (const auto& r : reports) {
            out += detail::csv_field(r.cluster_id) + "," + detail::fmt4(r.profile_biased.positive_mass) +
                   "," + detail::fmt4(r.profile_biased.negative_mass) + "," +
                   detail::fmt4(r.profile_reference.positive_mass) + "," +
                   detail::fmt4(r.profile_reference.negative_mass) + "," +
                   std::to_string(r.per_tag_counts.n_pos) + "," +
                   std::to_string(r.per_tag_counts.n_neg) + "," +
                   std::to_string(r.per_tag_counts.n_neu) + "\n";
        }
        return out;
    }
    std::string out = "# polarity-report bias=" + std::string(detail::bias_name(cfg.bias)) +
                      " lambda=" + detail::fmt_num(cfg.lambda) +
                      " length=" + std::to_string(cfg.budget_words) + "\n";
    char line[200];
    std::snprintf(line, sizeof(line), "%-24s %11s %11s %12s %12s %6s %6s %6s\n", "cluster_id",
                  "biased_pos", "biased_neg", "baseline_pos", "baseline_neg", "n_pos", "n_neg",
                  "n_neu");
    out += line;
    for (const auto& r : reports) {
        std::snprintf(line, sizeof(line), "%-24s %11.4f %11.4f %12.4f %12.4f %6d %6d %6d\n",
                      r.cluster_id.c_str(), r.profile_biased.positive_mass,
                      r.profile_biased.negative_mass, r.profile_reference.positive_mass,
                      r.profile_reference.negative_mass, r.per_tag_counts.n_pos,
                      r.per_tag_counts.n_neg, r.per_tag_counts.n_neu);
        out += line;
    }
    return out;
}

inline std::string cmd_polarity_report(const RunConfig& cfg) {
    return render_polarity(polarity_reports(cfg), cfg);
}

}  // namespace tonesum
