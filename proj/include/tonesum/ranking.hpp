#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "tonesum/corpus.hpp"
#include "tonesum/error.hpp"

namespace tonesum {

/// Sparse term -> weight map. Zero-weight terms are simply absent.
using SparseVector = std::map<std::string, double>;

struct TermStats {
    int n_sentences = 0;
    std::map<std::string, int> doc_freq;  // term -> number of sentences containing it
};

struct SentenceVector {
    SentenceRef sentence_ref;
    SparseVector weights;
};

struct QueryVector {
    SparseVector weights;
    std::vector<std::string> terms;  // by frequency desc, then lexicographic
};

struct RankedEntry {
    SentenceRef ref;
    double score = 0.0;
};

struct RankedList {
    std::vector<RankedEntry> entries;  // score desc, ties by (doc_id, index) asc
};

inline TermStats compute_term_stats(const DocumentCluster& cluster) {
    if (cluster.sentences.empty())
        throw DataError("cluster '" + cluster.cluster_id + "': empty cluster");
    TermStats stats;
    stats.n_sentences = static_cast<int>(cluster.sentences.size());
    for (const Sentence& s : cluster.sentences) {
        std::vector<std::string> terms = s.content_tokens;
        std::sort(terms.begin(), terms.end());
        terms.erase(std::unique(terms.begin(), terms.end()), terms.end());
        for (const auto& t : terms) ++stats.doc_freq[t];
    }
    return stats;
}

/// weight = tf * ln(N / df). Terms present in every sentence get weight 0
/// and are omitted from the vector.
inline SentenceVector tfidf_vector(const Sentence& sentence, const TermStats& stats) {
    std::map<std::string, int> tf;
    for (const auto& t : sentence.content_tokens) ++tf[t];
    SentenceVector vec;
    vec.sentence_ref = sentence.ref();
    for (const auto& [term, count] : tf) {
        auto it = stats.doc_freq.find(term);
        if (it == stats.doc_freq.end())
            throw InternalError("term '" + term + "' missing from term stats");
        if (it->second == stats.n_sentences) continue;
        vec.weights[term] =
            count * std::log(static_cast<double>(stats.n_sentences) / it->second);
    }
    return vec;
}

/// Pseudo-query from the m most frequent content terms of the cluster,
/// weighted by their total raw frequency. Frequency ties break
/// lexicographically ascending.
inline QueryVector build_query_vector(const DocumentCluster& cluster, int m) {
    if (m < 1) throw ConfigError("query term count must be >= 1");
    std::map<std::string, int> freq;
    for (const Sentence& s : cluster.sentences)
        for (const auto& t : s.content_tokens) ++freq[t];
    if (freq.empty())
        throw DataError("cluster '" + cluster.cluster_id + "': empty vocabulary");
    std::vector<std::pair<std::string, int>> by_freq(freq.begin(), freq.end());
    std::sort(by_freq.begin(), by_freq.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    QueryVector query;
    for (const auto& [term, count] : by_freq) {
        if (static_cast<int>(query.terms.size()) >= m) break;
        query.terms.push_back(term);
        query.weights[term] = static_cast<double>(count);
    }
    return query;
}

/// dot(u,v) / (|u||v|), 0 when either norm is 0. Clamped into [0,1]
/// (weights are non-negative, so only rounding can stray outside).
inline double cosine_similarity(const SparseVector& u, const SparseVector& v) {
    double dot = 0.0;
    auto iu = u.begin();
    auto iv = v.begin();
    while (iu != u.end() && iv != v.end()) {
        if (iu->first < iv->first) {
            ++iu;
        } else if (iv->first < iu->first) {
            ++iv;
        } else {
            dot += iu->second * iv->second;
            ++iu;
            ++iv;
        }
    }
    double nu = 0.0;
    for (const auto& [_, w] : u) nu += w * w;
    double nv = 0.0;
    for (const auto& [_, w] : v) nv += w * w;
    if (nu == 0.0 || nv == 0.0) return 0.0;
    return std::clamp(dot / (std::sqrt(nu) * std::sqrt(nv)), 0.0, 1.0);
}

/// Every sentence scored against the query; top-n kept, score descending,
/// ties by (doc_id, index) ascending.
inline RankedList rank_sentences(const DocumentCluster& cluster, const TermStats& stats,
                                 const QueryVector& query, int n) {
    if (n < 1) throw ConfigError("ranked list size must be >= 1");
    RankedList ranked;
    ranked.entries.reserve(cluster.sentences.size());
    for (const Sentence& s : cluster.sentences)
        ranked.entries.push_back({s.ref(), cosine_similarity(tfidf_vector(s, stats).weights,
                                                             query.weights)});
    std::stable_sort(ranked.entries.begin(), ranked.entries.end(),
                     [](const RankedEntry& a, const RankedEntry& b) { return a.score > b.score; });
    if (static_cast<int>(ranked.entries.size()) > n) ranked.entries.resize(static_cast<size_t>(n));
    return ranked;
}

}  // namespace tonesum
