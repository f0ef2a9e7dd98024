#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tonesum::detail {

// Matches data/lexicon.txt entry for entry.
inline std::span<const std::pair<std::string, double>> default_lexicon_pairs() {
    static const std::vector<std::pair<std::string, double>> pairs = {
        {"admire", 0.5},
        {"adore", 0.7},
        {"amazing", 0.8},
        {"appreciate", 0.5},
        {"awesome", 0.8},
        {"beautiful", 0.7},
        {"benefit", 0.4},
        {"best", 0.8},
        {"blessed", 0.6},
        {"brave", 0.5},
        {"bright", 0.4},
        {"brilliant", 0.8},
        {"calm", 0.3},
        {"celebrate", 0.6},
        {"charming", 0.6},
        {"cheerful", 0.7},
        {"clean", 0.3},
        {"clever", 0.5},
        {"comfort", 0.4},
        {"confident", 0.5},
        {"courage", 0.5},
        {"creative", 0.5},
        {"delight", 0.7},
        {"excellent", 0.9},
        {"excite", 0.6},
        {"fabulous", 0.8},
        {"fair", 0.3},
        {"faithful", 0.5},
        {"fantastic", 0.8},
        {"favorite", 0.5},
        {"flourish", 0.6},
        {"fortunate", 0.6},
        {"fresh", 0.4},
        {"friendly", 0.6},
        {"fun", 0.6},
        {"generous", 0.6},
        {"gentle", 0.4},
        {"genuine", 0.4},
        {"glad", 0.6},
        {"glorious", 0.8},
        {"good", 0.5},
        {"gorgeous", 0.8},
        {"grace", 0.5},
        {"grateful", 0.6},
        {"great", 0.7},
        {"happy", 0.6},
        {"harmony", 0.5},
        {"heal", 0.4},
        {"healthy", 0.5},
        {"helpful", 0.5},
        {"hero", 0.6},
        {"honest", 0.5},
        {"hope", 0.4},
        {"ideal", 0.6},
        {"impress", 0.5},
        {"improve", 0.4},
        {"inspire", 0.6},
        {"joy", 0.8},
        {"kind", 0.5},
        {"laugh", 0.5},
        {"love", 0.8},
        {"loyal", 0.5},
        {"lucky", 0.6},
        {"magnificent", 0.8},
        {"marvelous", 0.8},
        {"miracle", 0.7},
        {"nice", 0.5},
        {"noble", 0.5},
        {"optimistic", 0.6},
        {"outstanding", 0.8},
        {"paradise", 0.8},
        {"peace", 0.6},
        {"perfect", 0.9},
        {"pleasant", 0.6},
        {"please", 0.5},
        {"positive", 0.5},
        {"praise", 0.4},
        {"precious", 0.6},
        {"prosper", 0.6},
        {"protect", 0.3},
        {"proud", 0.5},
        {"recover", 0.4},
        {"relief", 0.4},
        {"remarkable", 0.6},
        {"rescue", 0.5},
        {"reward", 0.5},
        {"safe", 0.4},
        {"satisfy", 0.5},
        {"secure", 0.4},
        {"smile", 0.5},
        {"splendid", 0.8},
        {"strong", 0.3},
        {"succeed", 0.6},
        {"success", 0.6},
        {"superb", 0.8},
        {"support", 0.3},
        {"terrific", 0.8},
        {"thank", 0.5},
        {"thrive", 0.6},
        {"triumph", 0.7},
        {"trust", 0.5},
        {"valuable", 0.5},
        {"vibrant", 0.5},
        {"victory", 0.7},
        {"warm", 0.4},
        {"wealth", 0.4},
        {"welcome", 0.4},
        {"win", 0.6},
        {"wisdom", 0.5},
        {"wise", 0.5},
        {"wonderful", 0.8},
        {"worthy", 0.5},
        {"abuse", -0.7},
        {"afraid", -0.5},
        {"anger", -0.6},
        {"angry", -0.6},
        {"annoy", -0.5},
        {"anxious", -0.5},
        {"ashamed", -0.5},
        {"attack", -0.5},
        {"awful", -0.6},
        {"bad", -0.5},
        {"betray", -0.7},
        {"bitter", -0.5},
        {"blame", -0.4},
        {"bleak", -0.5},
        {"broken", -0.4},
        {"brutal", -0.8},
        {"catastrophe", -0.9},
        {"chaos", -0.6},
        {"cheat", -0.6},
        {"collapse", -0.5},
        {"corrupt", -0.7},
        {"crash", -0.5},
        {"crime", -0.6},
        {"crisis", -0.6},
        {"cruel", -0.8},
        {"damage", -0.4},
        {"danger", -0.5},
        {"dead", -0.6},
        {"death", -0.6},
        {"defeat", -0.5},
        {"despair", -0.7},
        {"destroy", -0.7},
        {"devastate", -0.8},
        {"dirty", -0.4},
        {"disaster", -0.8},
        {"disease", -0.5},
        {"disgust", -0.7},
        {"dishonest", -0.6},
        {"dismal", -0.5},
        {"distress", -0.5},
        {"dread", -0.6},
        {"evil", -0.8},
        {"fail", -0.5},
        {"failure", -0.6},
        {"fake", -0.4},
        {"fear", -0.5},
        {"filthy", -0.6},
        {"flaw", -0.4},
        {"fraud", -0.7},
        {"frighten", -0.6},
        {"gloom", -0.5},
        {"greed", -0.5},
        {"grief", -0.7},
        {"grim", -0.5},
        {"harm", -0.5},
        {"harsh", -0.5},
        {"hate", -0.8},
        {"hazard", -0.5},
        {"horrible", -0.8},
        {"horror", -0.8},
        {"hostile", -0.6},
        {"hurt", -0.5},
        {"illegal", -0.5},
        {"injure", -0.5},
        {"insult", -0.6},
        {"jealous", -0.5},
        {"kill", -0.7},
        {"miserable", -0.7},
        {"misery", -0.7},
        {"mistake", -0.4},
        {"murder", -0.9},
        {"nasty", -0.6},
        {"negative", -0.5},
        {"neglect", -0.5},
        {"nightmare", -0.7},
        {"pain", -0.5},
        {"panic", -0.6},
        {"pathetic", -0.6},
        {"poach", -0.6},
        {"poison", -0.6},
        {"pollute", -0.5},
        {"poverty", -0.6},
        {"punish", -0.5},
        {"rage", -0.6},
        {"rotten", -0.6},
        {"rude", -0.5},
        {"ruin", -0.6},
        {"sad", -0.6},
        {"scandal", -0.6},
        {"scare", -0.5},
        {"shame", -0.5},
        {"sick", -0.4},
        {"sorrow", -0.6},
        {"steal", -0.6},
        {"struggle", -0.4},
        {"stupid", -0.6},
        {"suffer", -0.6},
        {"terrible", -0.8},
        {"terror", -0.8},
        {"threat", -0.5},
        {"toxic", -0.7},
        {"tragedy", -0.7},
        {"trouble", -0.4},
        {"ugly", -0.6},
        {"unfair", -0.5},
        {"unhappy", -0.6},
        {"violent", -0.7},
        {"wicked", -0.7},
        {"worry", -0.5},
        {"worst", -0.8},
        {"wound", -0.5},
        {"wrong", -0.5},
    };
    return pairs;
}

}  // namespace tonesum::detail
