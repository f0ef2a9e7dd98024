#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tonesum/corpus.hpp"
#include "tonesum/error.hpp"
#include "tonesum/porter.hpp"
#include "tonesum/ranking.hpp"

namespace tonesum {

enum class PolarityTag { Positive, Negative, Neutral };

enum class BiasDirection { None, Positive, Negative };

/// Per-term polarity scores in [-1, 1], keyed by stem. Terms are lowercased
/// and stemmed at load time; stems that collide keep the mean score.
class PolarityLexicon {
public:
    PolarityLexicon() = default;

    static PolarityLexicon from_pairs(std::span<const std::pair<std::string, double>> pairs) {
        std::map<std::string, std::pair<double, int>> acc;  // stem -> (sum, count)
        for (const auto& [term, score] : pairs) {
            if (score < -1.0 || score > 1.0)
                throw ConfigError("lexicon score out of range [-1, 1] for term '" + term + "'");
            auto& slot = acc[porter_stem(detail::to_lower(term))];
            slot.first += score;
            slot.second += 1;
        }
        PolarityLexicon lex;
        for (const auto& [stem, sum_count] : acc)
            lex.entries_[stem] = sum_count.first / sum_count.second;
        return lex;
    }

    /// File format: one `term<TAB>score` per line; blank lines and '#'
    /// comments ignored. Spaces are accepted in place of the tab.
    static PolarityLexicon load(const std::filesystem::path& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open lexicon: " + path.string());
        std::vector<std::pair<std::string, double>> pairs;
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            size_t b = line.find_first_not_of(" \t");
            if (b == std::string::npos || line[b] == '#') continue;
            size_t sep = line.find_first_of(" \t", b);
            if (sep == std::string::npos)
                throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                                  ": expected `term<TAB>score`");
            std::string term = line.substr(b, sep - b);
            size_t vb = line.find_first_not_of(" \t", sep);
            if (vb == std::string::npos)
                throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                                  ": expected `term<TAB>score`");
            size_t consumed = 0;
            double score = 0.0;
            try {
                score = std::stod(line.substr(vb), &consumed);
            } catch (const std::exception&) {
                throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                                  ": invalid score");
            }
            if (line.find_first_not_of(" \t", vb + consumed) != std::string::npos)
                throw ConfigError(path.string() + ":" + std::to_string(lineno) +
                                  ": trailing characters after score");
            pairs.emplace_back(std::move(term), score);
        }
        try {
            return from_pairs(pairs);
        } catch (const ConfigError& e) {
            throw ConfigError(path.string() + ": " + e.what());
        }
    }

    /// Score of a stemmed term; 0 for unknown terms.
    double score(const std::string& stemmed_term) const {
        auto it = entries_.find(stemmed_term);
        return it == entries_.end() ? 0.0 : it->second;
    }

    size_t size() const { return entries_.size(); }
    const std::map<std::string, double>& entries() const { return entries_; }

private:
    std::map<std::string, double> entries_;
};

/// Sum of lexicon scores over the sentence's content tokens, with
/// multiplicity; unknown tokens contribute 0.
inline double sentence_polarity(const Sentence& sentence, const PolarityLexicon& lexicon) {
    double total = 0.0;
    for (const auto& t : sentence.content_tokens) total += lexicon.score(t);
    return total;
}

/// Sign-based tagging; scores within [-neutral_band, neutral_band] are Neutral.
inline PolarityTag tag_polarity(double score, double neutral_band = 0.0) {
    if (score > neutral_band) return PolarityTag::Positive;
    if (score < -neutral_band) return PolarityTag::Negative;
    return PolarityTag::Neutral;
}

/// Drops sentences of the unwanted polarity from the full ranking, then
/// keeps the top-n survivors in rank order. `ranked` must be the complete
/// cluster ranking so the pool refills to n where survivors allow.
inline RankedList apply_bias_filter(const RankedList& ranked, const DocumentCluster& cluster,
                                    const PolarityLexicon& lexicon, BiasDirection bias, int n,
                                    double neutral_band = 0.0) {
    if (n < 1) throw ConfigError("candidate pool size must be >= 1");
    std::map<SentenceRef, const Sentence*> by_ref;
    for (const Sentence& s : cluster.sentences) by_ref[s.ref()] = &s;
    RankedList out;
    for (const RankedEntry& e : ranked.entries) {
        if (static_cast<int>(out.entries.size()) >= n) break;
        auto it = by_ref.find(e.ref);
        if (it == by_ref.end())
            throw InternalError("ranked entry refers to unknown sentence '" + e.ref.doc_id +
                                "#" + std::to_string(e.ref.index) + "'");
        PolarityTag tag = tag_polarity(sentence_polarity(*it->second, lexicon), neutral_band);
        if (bias == BiasDirection::Positive && tag == PolarityTag::Negative) continue;
        if (bias == BiasDirection::Negative && tag == PolarityTag::Positive) continue;
        out.entries.push_back(e);
    }
    if (out.entries.empty())
        throw DataError("cluster '" + cluster.cluster_id + "': empty pool after bias filter");
    return out;
}

struct PolarityProfile {
    double positive_mass = 0.0;  // sum of positive sentence scores
    double negative_mass = 0.0;  // absolute sum of negative sentence scores

    double net() const { return positive_mass - negative_mass; }
};

inline PolarityProfile polarity_profile(std::span<const Sentence> sentences,
                                        const PolarityLexicon& lexicon) {
    PolarityProfile profile;
    for (const Sentence& s : sentences) {
        double score = sentence_polarity(s, lexicon);
        if (score > 0.0)
            profile.positive_mass += score;
        else
            profile.negative_mass += -score;
    }
    return profile;
}

struct TagCounts {
    int n_pos = 0;
    int n_neg = 0;
    int n_neu = 0;
};

inline TagCounts count_tags(std::span<const Sentence> sentences, const PolarityLexicon& lexicon,
                            double neutral_band = 0.0) {
    TagCounts counts;
    for (const Sentence& s : sentences) {
        switch (tag_polarity(sentence_polarity(s, lexicon), neutral_band)) {
            case PolarityTag::Positive: ++counts.n_pos; break;
            case PolarityTag::Negative: ++counts.n_neg; break;
            case PolarityTag::Neutral: ++counts.n_neu; break;
        }
    }
    return counts;
}

/// Seed lexicon used when no lexicon file is supplied; data/lexicon.txt
/// ships the same entries.
const PolarityLexicon& default_lexicon();

namespace detail {
std::span<const std::pair<std::string, double>> default_lexicon_pairs();
}

inline const PolarityLexicon& default_lexicon() {
    static const PolarityLexicon lex = PolarityLexicon::from_pairs(detail::default_lexicon_pairs());
    return lex;
}

}  // namespace tonesum

#include "tonesum/lexicon_data.hpp"
