#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tonesum/corpus.hpp"
#include "tonesum/error.hpp"
#include "tonesum/porter.hpp"

namespace tonesum {

struct RougeScore {
    double recall = 0.0;
    double precision = 0.0;
    double f_score = 0.0;
};

struct ReferenceSummary {
    std::string cluster_id;
    int target_length = 0;           // words, from the filename
    std::vector<std::string> tokens; // lowercased, punctuation-stripped
    std::string text;                // raw file contents
};

/// Unigram overlap with clipped (multiset-min) counts. F is the balanced
/// harmonic mean, 0 when recall + precision is 0.
inline RougeScore rouge1(const std::vector<std::string>& candidate_tokens,
                         const std::vector<std::string>& reference_tokens) {
    if (reference_tokens.empty()) throw DataError("empty reference summary");
    std::map<std::string, int> cand_counts;
    for (const auto& t : candidate_tokens) ++cand_counts[t];
    std::map<std::string, int> ref_counts;
    for (const auto& t : reference_tokens) ++ref_counts[t];
    long overlap = 0;
    for (const auto& [term, count] : ref_counts) {
        auto it = cand_counts.find(term);
        if (it != cand_counts.end()) overlap += std::min(count, it->second);
    }
    RougeScore score;
    score.recall = static_cast<double>(overlap) / static_cast<double>(reference_tokens.size());
    score.precision = candidate_tokens.empty()
                          ? 0.0
                          : static_cast<double>(overlap) / static_cast<double>(candidate_tokens.size());
    if (score.recall + score.precision > 0.0)
        score.f_score = 2.0 * score.recall * score.precision / (score.recall + score.precision);
    return score;
}

/// Tokenizes the summary with the corpus tokenizer; with stem_tokens, both
/// sides go through the Porter stemmer before counting.
inline RougeScore evaluate_summary(std::string_view summary_text, const ReferenceSummary& reference,
                                   bool stem_tokens = false) {
    std::vector<std::string> cand = tokenize(summary_text);
    std::vector<std::string> ref = reference.tokens;
    if (stem_tokens) {
        for (auto& t : cand) t = porter_stem(t);
        for (auto& t : ref) t = porter_stem(t);
    }
    return rouge1(cand, ref);
}

/// Best score over several references by F (then recall) — a no-op for the
/// usual single-reference case.
inline RougeScore best_rouge(std::string_view summary_text,
                             const std::vector<ReferenceSummary>& references, bool stem_tokens) {
    if (references.empty()) throw DataError("no reference summaries");
    RougeScore best;
    bool first = true;
    for (const auto& ref : references) {
        RougeScore s = evaluate_summary(summary_text, ref, stem_tokens);
        if (first || s.f_score > best.f_score ||
            (s.f_score == best.f_score && s.recall > best.recall)) {
            best = s;
            first = false;
        }
    }
    return best;
}

inline ReferenceSummary load_reference(const std::filesystem::path& path, std::string cluster_id,
                                       int target_length) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open reference summary: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    ReferenceSummary ref{std::move(cluster_id), target_length, tokenize(buf.str()), buf.str()};
    if (ref.tokens.empty()) throw DataError("empty reference summary: " + path.string());
    return ref;
}

/// References live at refs/<cluster_id>/<length>.txt; alternates such as
/// 400.a.txt are additional references for the same length. The primary
/// <length>.txt comes first, alternates follow by filename; empty when the
/// cluster has none at this length.
inline std::vector<ReferenceSummary> load_references(const std::filesystem::path& refs_dir,
                                                     const std::string& cluster_id,
                                                     int target_length) {
    std::filesystem::path dir = refs_dir / cluster_id;
    std::vector<ReferenceSummary> refs;
    if (!std::filesystem::is_directory(dir)) return refs;
    std::vector<std::filesystem::path> files;
    std::string primary = std::to_string(target_length) + ".txt";
    std::string prefix = std::to_string(target_length) + ".";
    for (const auto& entry : std::filesystem::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        std::string name = entry.path().filename().string();
        if (name == primary || (name.starts_with(prefix) && name.ends_with(".txt") &&
                                name.size() > prefix.size() + 4))
            files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [&](const std::filesystem::path& a, const std::filesystem::path& b) {
                  bool pa = a.filename().string() == primary;
                  bool pb = b.filename().string() == primary;
                  if (pa != pb) return pa;
                  return a.filename().string() < b.filename().string();
              });
    for (const auto& f : files) refs.push_back(load_reference(f, cluster_id, target_length));
    return refs;
}

}  // namespace tonesum
