#include "tonesum/porter.hpp"

#include <gtest/gtest.h>

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "porter_reference.hpp"

using tonesum::porter_stem;

namespace {

const std::vector<std::pair<std::string, std::string>>& fixture_pairs() {
    static const std::vector<std::pair<std::string, std::string>> pairs = {
#include "porter_pairs.inc"
    };
    return pairs;
}

}  // namespace

TEST(Porter, ShortTokensUnchanged) {
    EXPECT_EQ(porter_stem("a"), "a");
    EXPECT_EQ(porter_stem("at"), "at");
    EXPECT_EQ(porter_stem("is"), "is");
    EXPECT_EQ(porter_stem(""), "");
}

TEST(Porter, NonAlphaTokensUnchanged) {
    EXPECT_EQ(porter_stem("888"), "888");
    EXPECT_EQ(porter_stem("abc123"), "abc123");
    EXPECT_EQ(porter_stem("u.s"), "u.s");
}

TEST(Porter, KnownStems) {
    EXPECT_EQ(porter_stem("caresses"), "caress");
    EXPECT_EQ(porter_stem("relational"), "relat");
}

TEST(Porter, FixturePairs) {
    ASSERT_GE(fixture_pairs().size(), 100u);
    for (const auto& [word, stem] : fixture_pairs())
        EXPECT_EQ(porter_stem(word), stem) << "word: " << word;
}

TEST(Porter, MatchesReferencePortOnFixtures) {
    for (const auto& [word, stem] : fixture_pairs())
        EXPECT_EQ(porter_reference::stem(word), stem) << "word: " << word;
}

// Random lowercase words, vowel-rich so the interesting rules fire.
TEST(Porter, MatchesReferencePortOnRandomWords) {
    std::mt19937 rng(20240817);
    const std::string alphabet = "abcdefghijklmnopqrstuvwxyz";
    const std::string common = "aeiouylnrst";
    std::uniform_int_distribution<int> len_dist(1, 14);
    std::uniform_int_distribution<int> pick(0, 1);
    std::uniform_int_distribution<size_t> any_dist(0, alphabet.size() - 1);
    std::uniform_int_distribution<size_t> common_dist(0, common.size() - 1);
    const std::vector<std::string> suffixes = {"",      "s",    "es",   "ed",    "ing",  "ies",
                                               "ation", "ment", "ness", "ously", "izer", "ional",
                                               "iti",   "ful",  "e",    "able",  "ion",  "al"};
    std::uniform_int_distribution<size_t> suffix_dist(0, suffixes.size() - 1);
    for (int i = 0; i < 20000; ++i) {
        std::string word;
        int len = len_dist(rng);
        for (int k = 0; k < len; ++k)
            word += pick(rng) ? common[common_dist(rng)] : alphabet[any_dist(rng)];
        word += suffixes[suffix_dist(rng)];
        ASSERT_EQ(porter_stem(word), porter_reference::stem(word)) << "word: " << word;
    }
}
