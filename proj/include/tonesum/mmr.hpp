#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <vector>

#include "tonesum/corpus.hpp"
#include "tonesum/error.hpp"
#include "tonesum/ranking.hpp"

namespace tonesum {

struct MmrConfig {
    double lambda = 0.7;    // 1 = pure relevance, 0 = pure diversity
    int budget_words = 400;
    int pool_size = 30;
};

struct MmrScore {
    double score = 0.0;
    double sim1 = 0.0;      // relevance to the query
    double max_sim2 = 0.0;  // redundancy against already-selected sentences
};

struct MmrStep {
    SentenceRef ref;
    double sim1 = 0.0;
    double max_sim2 = 0.0;
    double score = 0.0;
};

struct SummarySelection {
    std::vector<SentenceRef> selected;  // in selection order
    std::vector<MmrStep> steps;
    int total_words = 0;
};

struct Candidate {
    SentenceRef ref;
    SparseVector vec;
    int word_count = 0;
};

/// lambda * sim1 - (1 - lambda) * max over selected of cosine(candidate, s).
/// The max over an empty selection is 0.
inline MmrScore mmr_score(const SparseVector& candidate, const QueryVector& query,
                          std::span<const SparseVector> selected, double lambda) {
    MmrScore r;
    r.sim1 = cosine_similarity(candidate, query.weights);
    for (const SparseVector& s : selected)
        r.max_sim2 = std::max(r.max_sim2, cosine_similarity(candidate, s));
    r.score = lambda * r.sim1 - (1.0 - lambda) * r.max_sim2;
    return r;
}

/// Candidate pool in ranked order, carrying the vectors and word counts the
/// greedy loop needs.
inline std::vector<Candidate> build_candidate_pool(const DocumentCluster& cluster,
                                                   const TermStats& stats,
                                                   const RankedList& ranked) {
    std::map<SentenceRef, const Sentence*> by_ref;
    for (const Sentence& s : cluster.sentences) by_ref[s.ref()] = &s;
    std::vector<Candidate> pool;
    pool.reserve(ranked.entries.size());
    for (const RankedEntry& e : ranked.entries) {
        auto it = by_ref.find(e.ref);
        if (it == by_ref.end())
            throw InternalError("ranked entry refers to unknown sentence '" + e.ref.doc_id + "#" +
                                std::to_string(e.ref.index) + "'");
        pool.push_back({e.ref, tfidf_vector(*it->second, stats).weights,
                        it->second->word_count});
    }
    return pool;
}

/// Greedy MMR selection. Each step scores every unselected candidate and
/// takes the maximum (ties: higher sim1, then (doc_id, index) ascending).
/// A best score below zero stops the loop; a best candidate that would
/// blow the word budget becomes permanently ineligible and the next-best
/// is considered instead.
inline SummarySelection select_summary(const std::vector<Candidate>& pool,
                                       const QueryVector& query, const MmrConfig& config) {
    if (config.lambda < 0.0 || config.lambda > 1.0)
        throw ConfigError("lambda must be within [0, 1]");
    if (config.budget_words < 1) throw ConfigError("word budget must be >= 1");
    const size_t n = pool.size();
    std::vector<char> selected(n, 0);
    std::vector<char> eligible(n, 1);
    std::vector<SparseVector> chosen_vecs;
    SummarySelection result;
    size_t remaining = n;
    while (remaining > 0) {
        std::vector<MmrScore> scores(n);
        for (size_t i = 0; i < n; ++i)
            if (!selected[i] && eligible[i])
                scores[i] = mmr_score(pool[i].vec, query, chosen_vecs, config.lambda);
        while (true) {
            int best = -1;
            for (size_t i = 0; i < n; ++i) {
                if (selected[i] || !eligible[i]) continue;
                if (best < 0 || scores[i].score > scores[best].score ||
                    (scores[i].score == scores[best].score &&
                     (scores[i].sim1 > scores[best].sim1 ||
                      (scores[i].sim1 == scores[best].sim1 &&
                       pool[i].ref < pool[static_cast<size_t>(best)].ref))))
                    best = static_cast<int>(i);
            }
            if (best < 0) return result;
            const auto b = static_cast<size_t>(best);
            if (scores[b].score < 0.0) return result;
            if (result.total_words + pool[b].word_count > config.budget_words) {
                eligible[b] = 0;
                --remaining;
                continue;
            }
            selected[b] = 1;
            --remaining;
            chosen_vecs.push_back(pool[b].vec);
            result.selected.push_back(pool[b].ref);
            result.steps.push_back({pool[b].ref, scores[b].sim1, scores[b].max_sim2, scores[b].score});
            result.total_words += pool[b].word_count;
            break;
        }
    }
    return result;
}

/// Selected sentences restored to document order for rendering.
inline std::vector<Sentence> order_for_output(const SummarySelection& selection,
                                              const DocumentCluster& cluster) {
    std::map<SentenceRef, const Sentence*> by_ref;
    for (const Sentence& s : cluster.sentences) by_ref[s.ref()] = &s;
    std::vector<Sentence> out;
    out.reserve(selection.selected.size());
    for (const SentenceRef& ref : selection.selected) {
        auto it = by_ref.find(ref);
        if (it == by_ref.end())
            throw InternalError("selection refers to unknown sentence '" + ref.doc_id + "#" +
                                std::to_string(ref.index) + "'");
        out.push_back(*it->second);
    }
    std::sort(out.begin(), out.end(),
              [](const Sentence& a, const Sentence& b) { return a.ref() < b.ref(); });
    return out;
}

}  // namespace tonesum
