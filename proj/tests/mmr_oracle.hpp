// Test-only brute-force greedy oracle. Recomputes every similarity from
// scratch at every step with its own arithmetic; deliberately independent
// of the library's ranking/mmr code paths.
#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace mmr_oracle {

struct Candidate {
    std::string doc_id;
    int index = 0;
    std::map<std::string, double> vec;
    int word_count = 0;
};

struct Step {
    size_t pool_index = 0;
    double sim1 = 0.0;
    double max_sim2 = 0.0;
    double score = 0.0;
};

struct Result {
    std::vector<Step> steps;
    int total_words = 0;
};

inline double dot(const std::map<std::string, double>& a, const std::map<std::string, double>& b) {
    double sum = 0.0;
    for (const auto& [term, w] : a) {
        auto it = b.find(term);
        if (it != b.end()) sum += w * it->second;
    }
    return sum;
}

inline double norm(const std::map<std::string, double>& a) {
    return std::sqrt(dot(a, a));
}

inline double cos_sim(const std::map<std::string, double>& a,
                      const std::map<std::string, double>& b) {
    double na = norm(a);
    double nb = norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b) / (na * nb);
}

// Greedy loop: argmax of lambda*sim1 - (1-lambda)*max_sim2 over unselected
// candidates (ties: higher sim1, then (doc_id, index) ascending); stop when
// the best score is negative; a best candidate that would exceed the budget
// becomes permanently ineligible and the next-best is taken instead.
inline Result run(const std::vector<Candidate>& pool, const std::map<std::string, double>& query,
                  double lambda, int budget_words) {
    Result result;
    std::vector<bool> selected(pool.size(), false);
    std::vector<bool> banned(pool.size(), false);
    while (true) {
        double best_score = 0.0;
        double best_sim1 = 0.0;
        size_t best = pool.size();
        for (size_t i = 0; i < pool.size(); ++i) {
            if (selected[i] || banned[i]) continue;
            double sim1 = cos_sim(pool[i].vec, query);
            double sim2 = 0.0;
            for (size_t j = 0; j < pool.size(); ++j) {
                if (!selected[j]) continue;
                double s = cos_sim(pool[i].vec, pool[j].vec);
                if (s > sim2) sim2 = s;
            }
            double score = lambda * sim1 - (1.0 - lambda) * sim2;
            bool better = false;
            if (best == pool.size())
                better = true;
            else if (score > best_score)
                better = true;
            else if (score == best_score && sim1 > best_sim1)
                better = true;
            else if (score == best_score && sim1 == best_sim1) {
                const Candidate& a = pool[i];
                const Candidate& b = pool[best];
                better = a.doc_id < b.doc_id || (a.doc_id == b.doc_id && a.index < b.index);
            }
            if (better) {
                best = i;
                best_score = score;
                best_sim1 = sim1;
            }
        }
        if (best == pool.size()) break;
        if (best_score < 0.0) break;
        if (result.total_words + pool[best].word_count > budget_words) {
            banned[best] = true;
            continue;
        }
        double sim2 = 0.0;
        for (size_t j = 0; j < pool.size(); ++j)
            if (selected[j]) sim2 = std::max(sim2, cos_sim(pool[best].vec, pool[j].vec));
        selected[best] = true;
        result.steps.push_back({best, best_sim1, sim2, best_score});
        result.total_words += pool[best].word_count;
    }
    return result;
}

}  // namespace mmr_oracle
