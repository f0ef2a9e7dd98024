#include "tonesum/tone.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

using namespace tonesum;

namespace {

Sentence with_tokens(std::vector<std::string> tokens, int index = 0) {
    Sentence s;
    s.doc_id = "d";
    s.index = index;
    s.content_tokens = std::move(tokens);
    s.word_count = static_cast<int>(s.content_tokens.size());
    return s;
}

PolarityLexicon tiny_lexicon() {
    std::vector<std::pair<std::string, double>> pairs = {
        {"good", 0.5}, {"happy", 0.6}, {"bad", -0.5}, {"awful", -0.6}};
    return PolarityLexicon::from_pairs(pairs);
}

}  // namespace

TEST(SentencePolarity, SumsWithMultiplicity) {
    std::vector<std::pair<std::string, double>> pairs = {{"good", 0.5}};
    PolarityLexicon lex = PolarityLexicon::from_pairs(pairs);
    EXPECT_DOUBLE_EQ(sentence_polarity(with_tokens({"good", "good"}), lex), 1.0);
    EXPECT_DOUBLE_EQ(sentence_polarity(with_tokens({"unknown", "words"}), lex), 0.0);
}

TEST(SentencePolarity, SymmetricCancellation) {
    std::vector<std::pair<std::string, double>> pairs = {{"good", 0.7}, {"bad", -0.7}};
    PolarityLexicon lex = PolarityLexicon::from_pairs(pairs);
    EXPECT_DOUBLE_EQ(sentence_polarity(with_tokens({"good", "bad"}), lex), 0.0);
}

TEST(SentencePolarity, AdditiveOverConcatenation) {
    PolarityLexicon lex = tiny_lexicon();
    std::vector<std::string> a = {"good", "happi"};
    std::vector<std::string> b = {"bad", "unknown", "aw"};
    std::vector<std::string> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    EXPECT_NEAR(sentence_polarity(with_tokens(ab), lex),
                sentence_polarity(with_tokens(a), lex) + sentence_polarity(with_tokens(b), lex),
                1e-12);
}

TEST(TagPolarity, SignRule) {
    EXPECT_EQ(tag_polarity(0.0), PolarityTag::Neutral);
    EXPECT_EQ(tag_polarity(0.3), PolarityTag::Positive);
    EXPECT_EQ(tag_polarity(-0.01), PolarityTag::Negative);
}

TEST(TagPolarity, NeutralBand) {
    EXPECT_EQ(tag_polarity(0.05, 0.1), PolarityTag::Neutral);
    EXPECT_EQ(tag_polarity(-0.05, 0.1), PolarityTag::Neutral);
    EXPECT_EQ(tag_polarity(0.2, 0.1), PolarityTag::Positive);
}

TEST(Lexicon, StemsKeysAndAveragesCollisions) {
    // goodness and good share the stem "good": mean of 0.8 and 0.6
    std::vector<std::pair<std::string, double>> pairs = {{"goodness", 0.8}, {"good", 0.6}};
    PolarityLexicon lex = PolarityLexicon::from_pairs(pairs);
    EXPECT_EQ(lex.size(), 1u);
    EXPECT_DOUBLE_EQ(lex.score("good"), 0.7);
    EXPECT_DOUBLE_EQ(lex.score("goodness"), 0.0);  // lookups are by stem
}

TEST(Lexicon, RejectsOutOfRangeScores) {
    std::vector<std::pair<std::string, double>> pairs = {{"good", 1.5}};
    EXPECT_THROW(PolarityLexicon::from_pairs(pairs), ConfigError);
}

TEST(Lexicon, LoadsFileFormat) {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "tonesum_lex.txt";
    {
        std::ofstream out(tmp);
        out << "# comment\nGood\t0.5\nAWFUL\t-0.6\n";
    }
    PolarityLexicon lex = PolarityLexicon::load(tmp);
    EXPECT_DOUBLE_EQ(lex.score("good"), 0.5);
    EXPECT_DOUBLE_EQ(lex.score("aw"), -0.6);  // awful stems to aw
    std::filesystem::remove(tmp);
}

TEST(Lexicon, MalformedLineRejected) {
    std::filesystem::path tmp = std::filesystem::temp_directory_path() / "tonesum_badlex.txt";
    {
        std::ofstream out(tmp);
        out << "lonely\n";
    }
    EXPECT_THROW(PolarityLexicon::load(tmp), ConfigError);
    {
        std::ofstream out(tmp);
        out << "word\tnotanumber\n";
    }
    EXPECT_THROW(PolarityLexicon::load(tmp), ConfigError);
    std::filesystem::remove(tmp);
}

TEST(Lexicon, DataFileMatchesEmbeddedDefault) {
    PolarityLexicon from_file =
        PolarityLexicon::load(std::filesystem::path(TONESUM_DATA_DIR) / "lexicon.txt");
    EXPECT_EQ(from_file.entries(), default_lexicon().entries());
    EXPECT_GE(default_lexicon().size(), 200u);
}

namespace {

// cluster of tagged sentences: +good, -awful, neutral, -bad
DocumentCluster tagged_cluster() {
    DocumentCluster cluster;
    cluster.cluster_id = "c";
    cluster.documents = {"d"};
    cluster.sentences = {with_tokens({"good", "news", "report"}, 0),
                         with_tokens({"aw", "crash", "report"}, 1),
                         with_tokens({"plain", "facts", "report"}, 2),
                         with_tokens({"bad", "news", "report"}, 3)};
    return cluster;
}

RankedList ranking_for(const DocumentCluster& cluster) {
    RankedList ranked;
    double score = 1.0;
    for (const Sentence& s : cluster.sentences) {
        ranked.entries.push_back({s.ref(), score});
        score -= 0.1;
    }
    return ranked;
}

}  // namespace

TEST(BiasFilter, PositiveBiasDropsNegativesThenTruncates) {
    DocumentCluster cluster = tagged_cluster();
    RankedList ranked = ranking_for(cluster);
    PolarityLexicon lex = tiny_lexicon();
    RankedList out = apply_bias_filter(ranked, cluster, lex, BiasDirection::Positive, 3);
    ASSERT_EQ(out.entries.size(), 2u);  // pos and neutral survive
    EXPECT_EQ(out.entries[0].ref, (SentenceRef{"d", 0}));
    EXPECT_EQ(out.entries[1].ref, (SentenceRef{"d", 2}));
}

TEST(BiasFilter, NoBiasIsTopNIdentity) {
    DocumentCluster cluster = tagged_cluster();
    RankedList ranked = ranking_for(cluster);
    PolarityLexicon lex = tiny_lexicon();
    RankedList out = apply_bias_filter(ranked, cluster, lex, BiasDirection::None, 3);
    ASSERT_EQ(out.entries.size(), 3u);
    for (size_t i = 0; i < 3; ++i) EXPECT_EQ(out.entries[i].ref, ranked.entries[i].ref);
}

TEST(BiasFilter, NegativeBiasOnAllPositiveClusterIsError) {
    DocumentCluster cluster;
    cluster.cluster_id = "sunny";
    cluster.documents = {"d"};
    cluster.sentences = {with_tokens({"good", "happi"}, 0), with_tokens({"good", "good"}, 1)};
    RankedList ranked = ranking_for(cluster);
    PolarityLexicon lex = tiny_lexicon();
    try {
        apply_bias_filter(ranked, cluster, lex, BiasDirection::Negative, 3);
        FAIL() << "expected DataError";
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("sunny"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("empty pool after bias filter"),
                  std::string::npos);
    }
}

TEST(BiasFilter, IdempotentAndOrderPreserving) {
    DocumentCluster cluster = tagged_cluster();
    RankedList ranked = ranking_for(cluster);
    PolarityLexicon lex = tiny_lexicon();
    RankedList once = apply_bias_filter(ranked, cluster, lex, BiasDirection::Positive, 10);
    RankedList twice = apply_bias_filter(once, cluster, lex, BiasDirection::Positive, 10);
    ASSERT_EQ(once.entries.size(), twice.entries.size());
    for (size_t i = 0; i < once.entries.size(); ++i)
        EXPECT_EQ(once.entries[i].ref, twice.entries[i].ref);
    // survivors keep their relative rank order
    for (size_t i = 1; i < once.entries.size(); ++i)
        EXPECT_GE(once.entries[i - 1].score, once.entries[i].score);
}

TEST(PolarityProfile, HandSums) {
    PolarityLexicon lex = tiny_lexicon();
    // scores +1 (good good) and -0.5 (bad unknown)
    std::vector<Sentence> sentences = {with_tokens({"good", "good"}, 0),
                                       with_tokens({"bad", "unknown"}, 1)};
    PolarityProfile p = polarity_profile(sentences, lex);
    EXPECT_DOUBLE_EQ(p.positive_mass, 1.0);
    EXPECT_DOUBLE_EQ(p.negative_mass, 0.5);
    EXPECT_DOUBLE_EQ(p.net(), 0.5);
}

TEST(PolarityProfile, EmptyAndNeutral) {
    PolarityLexicon lex = tiny_lexicon();
    PolarityProfile empty = polarity_profile({}, lex);
    EXPECT_DOUBLE_EQ(empty.positive_mass, 0.0);
    EXPECT_DOUBLE_EQ(empty.negative_mass, 0.0);
    std::vector<Sentence> neutral = {with_tokens({"plain", "facts"}, 0)};
    PolarityProfile p = polarity_profile(neutral, lex);
    EXPECT_DOUBLE_EQ(p.positive_mass, 0.0);
    EXPECT_DOUBLE_EQ(p.negative_mass, 0.0);
}

TEST(TagCountsOverSentences, Counts) {
    PolarityLexicon lex = tiny_lexicon();
    DocumentCluster cluster = tagged_cluster();
    TagCounts counts = count_tags(cluster.sentences, lex);
    EXPECT_EQ(counts.n_pos, 1);
    EXPECT_EQ(counts.n_neg, 2);
    EXPECT_EQ(counts.n_neu, 1);
}
